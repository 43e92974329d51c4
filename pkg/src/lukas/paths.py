"""Steps, paths and path families.

A path is stored as a tuple of integer rises: D = -1, F = 0, U = U1 = +1 and
U_k = +k for k >= 2.  A valid path starts and ends on the x-axis and never
goes below it.  The empty tuple is the valid empty path.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

Path = tuple[int, ...]

LUKASIEWICZ = "lukasiewicz"
MOTZKIN = "motzkin"
DYCK = "dyck"
FAMILIES = (LUKASIEWICZ, MOTZKIN, DYCK)

# Canonical subsets used by the representative constructions.
SUBSET_TAGS = ("B", "Bbar", "C", "Cbar", "E", "Ebar", "Fset")

EMPTY: Path = ()


class PathError(ValueError):
    pass


class PrefixBelowAxis(PathError):
    """Some prefix of the rise sequence sums to a negative ordinate."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"path dips below the x-axis after step {position}")


class NonzeroEndHeight(PathError):
    def __init__(self, height: int):
        self.height = height
        super().__init__(f"path ends at ordinate {height}, expected 0")


class StepOutsideFamily(PathError):
    def __init__(self, position: int, rise: int, family: str):
        self.position = position
        self.rise = rise
        self.family = family
        super().__init__(f"step {position} (rise {rise}) not allowed in {family} paths")


def _family_allows(rise: int, family: str) -> bool:
    if family == DYCK:
        return rise in (-1, 1)
    if family == MOTZKIN:
        return rise in (-1, 0, 1)
    if family == LUKASIEWICZ:
        return rise >= -1
    raise ValueError(f"unknown family: {family!r}")


def validate(steps: Iterable[int], family: str = LUKASIEWICZ) -> Path:
    """Check the family invariants and return the path as a tuple of rises."""
    p = tuple(steps)
    h = 0
    for i, rise in enumerate(p, start=1):
        if not _family_allows(rise, family):
            raise StepOutsideFamily(i, rise, family)
        h += rise
        if h < 0:
            raise PrefixBelowAxis(i)
    if h != 0:
        raise NonzeroEndHeight(h)
    return p


def is_valid(steps: Iterable[int], family: str = LUKASIEWICZ) -> bool:
    try:
        validate(steps, family)
    except PathError:
        return False
    return True


def heights(p: Path) -> list[int]:
    """Ordinates of the n+1 lattice points visited by the path."""
    out = [0]
    h = 0
    for rise in p:
        h += rise
        out.append(h)
    return out


def enumerate_paths(n: int, family: str = LUKASIEWICZ) -> Iterator[Path]:
    """Yield every valid path of length n in lexicographic rise order.

    Rises compare as plain integers, so the order is D < F < U < U2 < ...
    A step at height h with r steps remaining may rise at most r - 1 - h,
    which keeps the recursion finite for the unbounded family.
    """
    if n < 0:
        raise ValueError("length must be >= 0")
    if family not in FAMILIES:
        raise ValueError(f"unknown family: {family!r}")
    acc: list[int] = []

    def rec(h: int, r: int) -> Iterator[Path]:
        if r == 0:
            if h == 0:
                yield tuple(acc)
            return
        lo = -1 if h > 0 else (1 if family == DYCK else 0)
        hi = r - 1 - h
        if family != LUKASIEWICZ:
            hi = min(hi, 1)
        for rise in range(lo, hi + 1):
            if family == DYCK and rise == 0:
                continue
            acc.append(rise)
            yield from rec(h + rise, r - 1)
            acc.pop()

    return rec(0, n)


def in_subset(p: Path, tag: str) -> bool:
    """Membership test for the canonical subsets B, Bbar, C, Cbar, E, Ebar, Fset."""
    hs = heights(p)
    n = len(p)
    if tag == "B":
        return all(not (p[i] == 0 and hs[i] > 0) for i in range(n))
    if tag == "Bbar":
        return 0 not in p
    if tag == "C":
        if not in_subset(p, "B"):
            return False
        return all(not (p[i] >= 1 and (i + 1 == n or p[i + 1] != -1)) for i in range(n))
    if tag == "Cbar":
        return in_subset(p, "C") and 0 not in p
    if tag == "E":
        for i in range(n):
            if p[i] >= 1 and (i + 1 == n or p[i + 1] != 0):
                return False
            if p[i] == 0 and hs[i] > 0 and (i == 0 or p[i - 1] < 1):
                return False
        return True
    if tag == "Ebar":
        if not in_subset(p, "E"):
            return False
        return all(not (p[i] == 0 and hs[i] == 0) for i in range(n))
    if tag == "Fset":
        if p in (EMPTY, (0,)):
            return True
        if sum(1 for rise in p if rise >= 1) > 1:
            return False
        for i in range(n):
            if p[i] == 0:
                before = i > 0 and p[i - 1] == 0
                after = i + 1 < n and p[i + 1] == 0
                if not (before or after):
                    return False
        return True
    raise ValueError(f"unknown subset tag: {tag!r}")


_TOKEN = re.compile(r"U(\d+)|U|D|F")


def parse_path(text: str) -> Path:
    """Parse a token string over D, F, U, U<k> into a rise tuple."""
    pos = 0
    rises: list[int] = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PathError(f"bad path token at offset {pos}: {text[pos:]!r}")
        if m.group(1) is not None:
            k = int(m.group(1))
            if k < 1:
                raise PathError(f"bad up-step multiplicity at offset {pos}")
            rises.append(k)
        elif m.group(0) == "U":
            rises.append(1)
        elif m.group(0) == "D":
            rises.append(-1)
        else:
            rises.append(0)
        pos = m.end()
    return tuple(rises)


def format_path(p: Path) -> str:
    out = []
    for rise in p:
        if rise == -1:
            out.append("D")
        elif rise == 0:
            out.append("F")
        elif rise == 1:
            out.append("U")
        else:
            out.append(f"U{rise}")
    return "".join(out)
