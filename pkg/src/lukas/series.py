"""Exact truncated power series and the coefficient sequences for every
relation, each produced by independent methods (closed form, recurrence or
direct formula, and functional-equation fixpoint).

Coefficients are Fractions internally because the closed forms divide by
units like 2x^2 and (1-x)^2; exported coefficients are asserted integral.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from . import quotient

Q = Fraction


class SeriesError(ValueError):
    pass


class NonUnitConstantTerm(SeriesError):
    pass


class ValuationError(SeriesError):
    pass


class NoClosedForm(SeriesError):
    pass


class UnsupportedTag(SeriesError):
    pass


class NonConvergence(RuntimeError):
    pass


class Series:
    """Power series truncated at a fixed order, with exact coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int]):
        self.coeffs = tuple(Q(c) for c in coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @staticmethod
    def from_poly(poly: Sequence[int], order: int) -> "Series":
        cs = list(poly[: order + 1]) + [0] * (order + 1 - len(poly))
        return Series(cs)

    @staticmethod
    def zero(order: int) -> "Series":
        return Series.from_poly([], order)

    @staticmethod
    def one(order: int) -> "Series":
        return Series.from_poly([1], order)

    @staticmethod
    def x(order: int) -> "Series":
        return Series.from_poly([0, 1], order)

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs])

    def __mul__(self, other: "Series") -> "Series":
        n = self.order
        out = [Q(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(out)

    def scale(self, c) -> "Series":
        c = Q(c)
        return Series([a * c for a in self.coeffs])

    def valuation(self) -> int | None:
        for i, a in enumerate(self.coeffs):
            if a != 0:
                return i
        return None

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise SeriesError("cannot extend a truncated series")
        return Series(self.coeffs[: order + 1])

    def shift(self, m: int) -> "Series":
        """Multiply by x^m."""
        return Series(([Q(0)] * m + list(self.coeffs))[: self.order + 1])

    def divx(self, m: int) -> "Series":
        """Divide by x^m; the first m coefficients must vanish.

        The quotient is only reliable through order - m; the tail is padded
        with zeros, so request enough working precision upstream.
        """
        for i in range(m):
            if self.coeffs[i] != 0:
                raise ValuationError(f"coefficient {i} is {self.coeffs[i]}, expected 0")
        return Series(list(self.coeffs[m:]) + [Q(0)] * m)

    def inverse(self) -> "Series":
        a0 = self.coeffs[0]
        if a0 == 0:
            raise NonUnitConstantTerm("cannot invert a series with zero constant term")
        n = self.order
        out = [Q(0)] * (n + 1)
        out[0] = 1 / a0
        for k in range(1, n + 1):
            s = sum(self.coeffs[j] * out[k - j] for j in range(1, k + 1))
            out[k] = -s / a0
        return Series(out)

    def __truediv__(self, other: "Series") -> "Series":
        v = other.valuation()
        if v is None:
            raise ZeroDivisionError("division by the zero series")
        if v == 0:
            return self * other.inverse()
        return self.divx(v) * other.divx(v).inverse()

    def sqrt(self) -> "Series":
        """Square root of a series with constant term 1 (Newton iteration)."""
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm("square root needs constant term 1")
        n = self.order
        y = Series.one(n)
        rounds = max(1, math.ceil(math.log2(n + 1)) + 1) if n > 0 else 1
        for _ in range(rounds):
            y = (y + self * y.inverse()).scale(Q(1, 2))
        return y

    def integer_coeffs(self) -> list[int]:
        out = []
        for i, a in enumerate(self.coeffs):
            if a.denominator != 1:
                raise SeriesError(f"coefficient {i} is non-integral: {a}")
            out.append(int(a))
        return out


def series_sqrt(u: Series, order: int | None = None) -> Series:
    s = u if order is None else u.truncate(order)
    return s.sqrt()


def _poly(order: int, *coeffs: int) -> Series:
    return Series.from_poly(coeffs, order)


# ---------------------------------------------------------------------------
# closed forms

# Radicands appearing in the closed forms.
RADICANDS = {
    "catalan": (1, -4),
    "motzkin": (1, -2, -3),
    "central": (1, 0, -4),
    "uu": (1, 0, -2, 0, -3),  # (x^2+1)(1-3x^2)
    "uf": (1, 0, 0, -4),
    "ukf": (1, -2, 1, -4),
    "ukd": (1, -2, -1, -2, 1),
}


def _sqrt_of(name: str, n: int) -> Series:
    return Series.from_poly(RADICANDS[name], n).sqrt()


def _closed_u(n: int) -> Series:
    num = _poly(n, -1, 2) + _sqrt_of("central", n)
    den = _poly(n, 0, 2, -4)  # 2x(1-2x)
    return num / den


def _closed_uu(n: int) -> Series:
    num = _poly(n, 1, -2, 1) - _sqrt_of("uu", n)
    den = _poly(n, 0, -2, 4, -2, 2)  # 2x(-1+2x-x^2+x^3)
    return num / den


def _closed_uf(n: int) -> Series:
    # Branch with + before the radical; the - branch has a pole at 0.
    den = _poly(n, 1, -2) + _sqrt_of("uf", n)
    return _poly(n, 2) / den


def _closed_uk(n: int) -> Series:
    num = _poly(n, 1, -1) - _sqrt_of("motzkin", n)
    return num / _poly(n, 0, 0, 2)


def _closed_ukf(n: int) -> Series:
    # Root of x^3 y^2 + (x-1) y + 1 = 0 with y(0) = 1.
    num = _poly(n, 1, -1) - _sqrt_of("ukf", n)
    return num / _poly(n, 0, 0, 0, 2)


def _closed_ukd(n: int) -> Series:
    r = _sqrt_of("ukd", n)
    num = _poly(n, 1, -1, 1) + r
    den = _poly(n, 1, -2, 0, -1) + _poly(n, 1, -1) * r
    return num / den


def _closed_duk(n: int) -> Series:
    r = _sqrt_of("ukd", n)
    num = _poly(n, 1, -1, -1, -2) + r
    den = _poly(n, 1, -2, 0, -1) + _poly(n, 1, -1) * r
    return num / den


FF_NUM = (1, -3, 4, -5, 7, -7, 6, -3, 1)
FF_DEN = (1, -4, 6, -5, 3, -1)  # (1-2x+x^2-x^3)(1-x)^2


def _closed_ff(n: int) -> Series:
    return Series.from_poly(FF_NUM, n) / Series.from_poly(FF_DEN, n)


def ff_product_form(n: int) -> Series:
    """The FF generating function as the unexpanded product of part series."""
    one = Series.one(n)
    inv1x = _poly(n, 1, -1).inverse()  # 1/(1-x)
    filler = one + _poly(n, 0, 0, 1) * inv1x  # 1 + x^2/(1-x)
    middle = (one - _poly(n, 0, 0, 0, 1) * inv1x * inv1x).inverse()
    return filler * filler * filler * _poly(n, 0, 0, 1) * inv1x * middle + inv1x


_CLOSED: dict[str, Callable[[int], Series]] = {
    "U": _closed_u,
    "UU": _closed_uu,
    "UD": lambda n: Series.one(n) / _poly(n, 1, -1, -1),
    "UF": _closed_uf,
    "FU": _closed_uf,
    "DU": lambda n: _poly(n, 1, 0, -1, -1) / _poly(n, 1, -1, -1),
    "F": lambda n: _poly(n, 1, -2).inverse() - _poly(n, 0, 1) / (_poly(n, 1, -1) * _poly(n, 1, -1)),
    "D": lambda n: _poly(n, 1, -1) / _poly(n, 1, -2),
    "FD": lambda n: _poly(n, 1, 0, -1) / _poly(n, 1, -1, -1),
    "DF": lambda n: _poly(n, 1, 0, -1) / _poly(n, 1, -1, -1),
    "DD": lambda n: _poly(n, 1, -1) / _poly(n, 1, -2, 1, -1),
    "Uk": _closed_uk,
    "FF": _closed_ff,
    "UkF": _closed_ukf,
    "FUk": _closed_ukf,
    "UkD": _closed_ukd,
    "DUk": _closed_duk,
}


def expand_closed(tag: str, n: int) -> Series:
    """Closed-form expansion to order n (extra working precision is used so
    radical/valuation shifts do not truncate the tail)."""
    if tag not in _CLOSED:
        raise NoClosedForm(f"no closed form for tag {tag!r}")
    work = n + 8
    return _CLOSED[tag](work).truncate(n)


# ---------------------------------------------------------------------------
# recurrences and direct formulas


def _ukd_base(n: int) -> list[int]:
    # s_0 = 1, s_{m+1} = s_m + sum_{k=1}^{m-1} s_k s_{m-1-k}
    s = [1]
    for m in range(n):
        s.append(s[m] + sum(s[k] * s[m - 1 - k] for k in range(1, m)))
    return s


def _ukf_base(n: int) -> list[int]:
    # h_0 = 1, h_{m+1} = h_m + sum_{k=0}^{m-2} h_k h_{m-2-k}
    h = [1]
    for m in range(n):
        h.append(h[m] + sum(h[k] * h[m - 2 - k] for k in range(0, m - 1)))
    return h


def _rec_u(n: int) -> list[int]:
    return [math.comb(m, m // 2) for m in range(n + 1)]


def _rec_linear(n: int, init: list[int]) -> list[int]:
    out = list(init[: n + 1])
    while len(out) < n + 1:
        out.append(out[-1] + out[-2])
    return out


def _rec_dd(n: int) -> list[int]:
    out = [1, 1, 1, 2][: n + 1]
    while len(out) < n + 1:
        m = len(out)
        out.append(out[m - 1] + out[m - 2] + out[m - 4])
    return out


def _rec_ff(n: int) -> list[int]:
    out: list[int] = []
    for m in range(n + 1):
        v = FF_NUM[m] if m < len(FF_NUM) else 0
        for k in range(1, min(m, 5) + 1):
            v -= FF_DEN[k] * out[m - k]
        out.append(v)
    return out


def _rec_duk(n: int) -> list[int]:
    s = _ukd_base(n)
    return [1 if m < 3 else s[m - 1] for m in range(n + 1)]


_RECURRENCE: dict[str, Callable[[int], list[int]]] = {
    "U": _rec_u,
    "UD": lambda n: _rec_linear(n, [1, 1]),
    "DU": lambda n: _rec_linear(n, [1, 1, 1, 1]),
    "F": lambda n: [2**m - m for m in range(n + 1)],
    "D": lambda n: [1] + [2 ** (m - 1) for m in range(1, n + 1)],
    "FD": lambda n: _rec_linear(n, [1, 1, 1]),
    "DF": lambda n: _rec_linear(n, [1, 1, 1]),
    "DD": _rec_dd,
    "FF": _rec_ff,
    "UkD": lambda n: _ukd_base(n + 1)[1:],
    "UkF": lambda n: _ukf_base(n)[: n + 1],
    "FUk": lambda n: _ukf_base(n)[: n + 1],
    "DUk": _rec_duk,
}


def expand_recurrence(tag: str, n: int) -> list[int]:
    if tag not in _RECURRENCE:
        raise UnsupportedTag(f"no recurrence or direct formula for tag {tag!r}")
    return _RECURRENCE[tag](n)


# ---------------------------------------------------------------------------
# functional-equation fixpoints


def _iterate(eq: Callable[[Series], Series], n: int) -> Series:
    s = Series.one(n)
    for _ in range(n + 2):
        nxt = eq(s)
        if nxt == s:
            return s
        s = nxt
    raise NonConvergence("fixpoint iteration did not stabilize")


def _geom(s: Series) -> Series:
    """1/(1 - s) for s with positive valuation."""
    return (Series.one(s.order) - s).inverse()


def _fix_l(n: int) -> Series:
    x = Series.x(n)
    return _iterate(lambda s: _geom(x * s), n)


def _fix_bbar(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    return _iterate(lambda s: one + (x * s) * (x * s) * _geom(x * s), n)


def _fix_b(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    bbar = _fix_bbar(n)
    tail = (x * bbar) * _geom(x * bbar)
    return _iterate(lambda s: one + x * s + x * s * tail, n)


def _fix_cbar(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    x2 = x * x
    return _iterate(lambda s: one + x2 * s * _geom(x * s), n)


def _fix_c(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    x2 = x * x
    tail = _geom(x * _fix_cbar(n))
    return _iterate(lambda s: one + x * s + x2 * s * tail, n)


def _fix_ebar(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    x3 = x * x * x
    return _iterate(lambda s: one + x3 * s * s * _geom(x * s), n)


def _fix_e(n: int) -> Series:
    one, x = Series.one(n), Series.x(n)
    x3 = x * x * x
    ebar = _fix_ebar(n)
    tail = ebar * _geom(x * ebar)
    return _iterate(lambda s: one + x * s + x3 * s * tail, n)


_FIXPOINT_SETS: dict[str, Callable[[int], Series]] = {
    "L": _fix_l,
    "B": _fix_b,
    "Bbar": _fix_bbar,
    "C": _fix_c,
    "Cbar": _fix_cbar,
    "E": _fix_e,
    "Ebar": _fix_ebar,
}


def solve_fixpoint(tag: str, n: int) -> Series:
    """Solve the functional equation for a path family by iterated substitution."""
    if tag not in _FIXPOINT_SETS:
        raise UnsupportedTag(f"no functional equation for tag {tag!r}")
    return _FIXPOINT_SETS[tag](n)


def _alg_fix_uu(n: int) -> Series:
    # y = (A^2 - R + C^2 y^2) / (2AC), the radical-free form of the UU GF.
    work = n + 8
    a = _poly(work, 1, -2, 1)
    r = Series.from_poly(RADICANDS["uu"], work)
    c = _poly(work, 0, -2, 4, -2, 2)
    p0 = a * a - r
    p2 = c * c
    q = a * c * _poly(work, 2)
    return _iterate(lambda y: (p0 + p2 * y * y) / q, work).truncate(n)


def _alg_fix_uf(n: int) -> Series:
    # y = (4 + ((1-2x)^2 - R) y^2) / (4(1-2x)), radical-free UF/FU form.
    work = n + 8
    b = _poly(work, 1, -2)
    r = Series.from_poly(RADICANDS["uf"], work)
    p2 = b * b - r
    four = _poly(work, 4)
    q = b * four
    return _iterate(lambda y: (four + p2 * y * y) / q, work).truncate(n)


def _fix_duk(n: int) -> Series:
    c = _fix_c(n).integer_coeffs()
    return Series.from_poly([1, 1, 1] + c[1 : n - 2 + 1], n)


_FIXPOINT_RELATIONS: dict[str, Callable[[int], Series]] = {
    "Uk": _fix_b,
    "UkD": _fix_c,
    "UkF": _fix_e,
    "FUk": _fix_e,
    "DUk": _fix_duk,
    "UU": _alg_fix_uu,
    "UF": _alg_fix_uf,
    "FU": _alg_fix_uf,
}


# ---------------------------------------------------------------------------
# unified access

METHODS = ("closed", "recurrence", "fixpoint")


def available_methods(relation: str) -> tuple[str, ...]:
    out = []
    if relation in _CLOSED:
        out.append("closed")
    if relation in _RECURRENCE:
        out.append("recurrence")
    if relation in _FIXPOINT_RELATIONS:
        out.append("fixpoint")
    return tuple(out)


def sequence_values(relation: str, method: str, n: int) -> list[int]:
    """Coefficients 0..n of a relation's class-count sequence by one method."""
    if method == "closed":
        return expand_closed(relation, n).integer_coeffs()
    if method == "recurrence":
        return expand_recurrence(relation, n)
    if method == "fixpoint":
        if relation not in _FIXPOINT_RELATIONS:
            raise UnsupportedTag(f"no fixpoint method for relation {relation!r}")
        return _FIXPOINT_RELATIONS[relation](n).integer_coeffs()
    raise UnsupportedTag(f"unknown method {method!r}")


def family_series(tag: str, n: int) -> list[int]:
    """Coefficients 0..n for a path-family tag (L, B, Bbar, C, Cbar, E, Ebar)."""
    return solve_fixpoint(tag, n).integer_coeffs()


def compare(relation: str, n: int, oracle_limit: int | None = None) -> list[dict]:
    """Per-length comparison of every available method plus the oracle.

    Returns one row dict per (length, method); disagreement shows up as
    ok=False, never as an exception.
    """
    limit = quotient.oracle_bound() if oracle_limit is None else oracle_limit
    methods = {m: sequence_values(relation, m, n) for m in available_methods(relation)}
    oracle_max = min(n, limit)
    oracle = {
        m: quotient.count_classes_oracle(m, relation).count for m in range(oracle_max + 1)
    }
    rows = []
    for m in range(n + 1):
        ref = oracle.get(m)
        if ref is None:
            ref = next(iter(methods.values()))[m]
        for name, values in methods.items():
            rows.append(
                {
                    "n": m,
                    "relation": relation,
                    "method": name,
                    "value": values[m],
                    "reference": ref,
                    "ok": values[m] == ref,
                }
            )
        if m in oracle:
            rows.append(
                {
                    "n": m,
                    "relation": relation,
                    "method": "oracle",
                    "value": oracle[m],
                    "reference": ref,
                    "ok": oracle[m] == ref,
                }
            )
    return rows
