"""Constructive maps: Motzkinizations, canonical-subset projections,
witness-path builders and the rewriting bijections.

Every map consumes and produces plain rise tuples and preserves the relevant
occurrence signature; outputs are validated before being returned so a
transcription bug surfaces as an exception rather than a wrong count.
"""

from __future__ import annotations

from .paths import (
    EMPTY,
    LUKASIEWICZ,
    MOTZKIN,
    Path,
    PathError,
    validate,
)

D, F, U = -1, 0, 1


class InvalidPositionSet(ValueError):
    pass


class DecompositionError(RuntimeError):
    """A structural assumption of a construction failed for the given path."""


def _split_up_block(p: Path) -> tuple[int, list[Path], Path]:
    """Split U_k L1 D L2 D ... Lk D L' into (k, [L1..Lk], L')."""
    k = p[0]
    parts: list[Path] = []
    h = k
    start = 1
    for i in range(1, len(p)):
        h += p[i]
        if p[i] == D and h == k - len(parts) - 1:
            parts.append(p[start:i])
            start = i + 1
            if len(parts) == k:
                return k, parts, p[start:]
    raise DecompositionError("up-step block never returns to the axis")


def phi(p: Path) -> Path:
    """Motzkinization preserving the positions of U, UU and UD.

    Recursion: a flat prefix is kept; a U...D block with k = 1 is kept with
    its parts rewritten; a U_k block with k >= 2 becomes flats interleaved
    with the rewritten parts.
    """
    out: list[int] = []
    _phi_into(p, out)
    return validate(out, MOTZKIN)


def _phi_into(p: Path, out: list[int]) -> None:
    while p:
        if p[0] == F:
            out.append(F)
            p = p[1:]
            continue
        k, parts, rest = _split_up_block(p)
        if k == 1:
            out.append(U)
            _phi_into(parts[0], out)
            out.append(D)
        else:
            for part in parts:
                out.append(F)
                _phi_into(part, out)
            out.append(F)
        p = rest


def _occurrence_runs(positions: tuple[int, ...]) -> list[tuple[int, int]]:
    """Group 1-based occurrence positions into maximal runs at distance 2.

    Returns (start position, occurrence count) per run.
    """
    runs: list[tuple[int, int]] = []
    for pos in positions:
        if runs and pos == runs[-1][0] + 2 * runs[-1][1]:
            runs[-1] = (runs[-1][0], runs[-1][1] + 1)
        else:
            runs.append((pos, 1))
    return runs


def _pair_occurrences(p: Path, first: int, second: int) -> tuple[int, ...]:
    return tuple(
        i + 1 for i in range(len(p) - 1) if p[i] == first and p[i + 1] == second
    )


def motzkinize_du(p: Path) -> Path:
    """Motzkin representative with the same DU positions as p.

    Shape: U F^{b0-1} (DU)^{a_1} F^{b_1} ... (DU)^{a_r} D F^{b_r-1}, where the
    b_i are the lengths of the maximal DU-free parts.  A DU-free path maps to
    F^n.
    """
    runs = _occurrence_runs(_pair_occurrences(p, D, U))
    n = len(p)
    if not runs:
        return validate([F] * n, MOTZKIN)
    # Segment lengths around the runs; the first and last are nonempty
    # because a path can neither start with D nor end with U.
    bounds = [0] + [x for start, count in runs for x in (start - 1, start - 1 + 2 * count)] + [n]
    segs = [bounds[2 * i + 1] - bounds[2 * i] for i in range(len(runs) + 1)]
    if segs[0] < 1 or segs[-1] < 1:
        raise DecompositionError("DU-free prefix or suffix is empty")
    out = [U] + [F] * (segs[0] - 1)
    for i, (_, count) in enumerate(runs):
        out += [D, U] * count
        if i + 1 < len(runs):
            out += [F] * segs[i + 1]
    out += [D] + [F] * (segs[-1] - 1)
    return validate(out, MOTZKIN)


def motzkinize_runs(p: Path, alpha: str) -> Path:
    """Motzkin representative with the same FU (or UF) positions as p.

    Shape: F^{b0} prod alpha^{a_i} D^{c_i} F^{b_i - c_i} with each c_i the
    maximal number of down steps that keeps the result a lattice path.
    """
    if alpha == "FU":
        pair, block = (F, U), [F, U]
    elif alpha == "UF":
        pair, block = (U, F), [U, F]
    else:
        raise ValueError("alpha must be 'FU' or 'UF'")
    runs = _occurrence_runs(_pair_occurrences(p, *pair))
    n = len(p)
    if not runs:
        return validate([F] * n, MOTZKIN)
    bounds = [0] + [x for start, count in runs for x in (start - 1, start - 1 + 2 * count)] + [n]
    segs = [bounds[2 * i + 1] - bounds[2 * i] for i in range(len(runs) + 1)]
    out = [F] * segs[0]
    surplus = 0  # rises not yet matched by down steps
    for i, (_, count) in enumerate(runs):
        out += block * count
        b = segs[i + 1]
        c = min(b, count + surplus)
        surplus += count - c
        out += [D] * c + [F] * (b - c)
    return validate(out, MOTZKIN)


def _greedy_rebuild(
    segments: list[Path], blocks: list[list[int]], rises: list[int]
) -> Path:
    """Common skeleton of the subset projections.

    segments: the parts K_0..K_r between extracted blocks; blocks: the kept
    step groups; rises[i]: the net rise of block i+1.  Each K_i (i >= 1) is
    replaced by D^{c_i} F^{|K_i| - c_i} with greedy maximal c_i, and K_0 by
    flats.
    """
    out = [F] * len(segments[0])
    surplus = 0
    for i, block in enumerate(blocks):
        out += block
        b = len(segments[i + 1])
        c = min(b, rises[i] + surplus)
        surplus += rises[i] - c
        out += [D] * c + [F] * (b - c)
    return validate(out, LUKASIEWICZ)


def to_b(p: Path) -> Path:
    """Projection onto B: unique same-class path without flats at positive height."""
    segments: list[Path] = []
    blocks: list[list[int]] = []
    rises: list[int] = []
    start = 0
    for i in range(len(p)):
        if p[i] >= 1:
            segments.append(p[start:i])
            blocks.append([p[i]])
            rises.append(p[i])
            start = i + 1
    segments.append(p[start:])
    return _greedy_rebuild(segments, blocks, rises)


def _extract_pairs(p: Path, second: int) -> tuple[list[Path], list[int]]:
    """Split p around its U_k-then-`second` occurrences (they never overlap)."""
    segments: list[Path] = []
    ks: list[int] = []
    start = 0
    i = 0
    while i < len(p) - 1:
        if p[i] >= 1 and p[i + 1] == second:
            segments.append(p[start:i])
            ks.append(p[i])
            start = i + 2
            i += 2
        else:
            i += 1
    segments.append(p[start:])
    return segments, ks


def to_c(p: Path) -> Path:
    """Projection onto C: same UkD signature, ups only in U_kD pairs."""
    segments, ks = _extract_pairs(p, D)
    blocks = [[k, D] for k in ks]
    rises = [k - 1 for k in ks]
    return _greedy_rebuild(segments, blocks, rises)


def to_e(p: Path) -> Path:
    """Projection onto E: same UkF signature, ups only in U_kF pairs."""
    segments, ks = _extract_pairs(p, F)
    blocks = [[k, F] for k in ks]
    rises = list(ks)
    return _greedy_rebuild(segments, blocks, rises)


def to_f(p: Path) -> Path:
    """Projection onto the FF canonical set.

    The maximal flat runs of length >= 2 stay in place; everything between
    them collapses to down steps balanced by a single initial up step.
    """
    n = len(p)
    if all(s == F for s in p):
        return p
    # maximal runs of >= 2 consecutive flats
    runs: list[tuple[int, int]] = []  # (start index, length)
    i = 0
    while i < n:
        if p[i] == F:
            j = i
            while j < n and p[j] == F:
                j += 1
            if j - i >= 2:
                runs.append((i, j - i))
            i = j
        else:
            i += 1
    bounds = [0] + [x for s, ln in runs for x in (s, s + ln)] + [n]
    segs = [bounds[2 * i + 1] - bounds[2 * i] for i in range(len(runs) + 1)]
    flats = [ln for _, ln in runs]
    if segs[0] > 0:
        b = sum(segs) - 1
        out = [b] + [D] * (segs[0] - 1)
        rest = segs[1:]
    else:
        b = sum(segs) - 1
        out = [F] * flats[0]
        out += [b] + [D] * (segs[1] - 1)
        flats = flats[1:]
        rest = segs[2:]
    for ln, seg in zip(flats, rest):
        out += [F] * ln + [D] * seg
    return validate(out, LUKASIEWICZ)


def witness_f(n: int, positions: tuple[int, ...]) -> Path:
    """Path of length n whose flats sit exactly at the given positions."""
    pos = set(positions)
    ell = len(pos)
    if len(pos) != len(positions) or not all(1 <= i <= n for i in pos) or ell == n - 1:
        raise InvalidPositionSet(f"invalid flat position set for length {n}")
    m = n - ell
    if m == 0:
        scaffold: list[int] = []
    elif m % 2 == 1:
        scaffold = [2, D, D] + [U, D] * ((m - 3) // 2)
    else:
        scaffold = [U, D] * (m // 2)
    it = iter(scaffold)
    out = [F if i in pos else next(it) for i in range(1, n + 1)]
    return validate(out, LUKASIEWICZ)


def witness_d(n: int, positions: tuple[int, ...]) -> Path:
    """Path of length n whose down steps sit exactly at the given positions."""
    pos = sorted(set(positions))
    ell = len(pos)
    if len(pos) != len(positions) or not all(2 <= i <= n for i in pos):
        raise InvalidPositionSet(f"invalid down-step position set for length {n}")
    if ell == 0:
        return validate([F] * n, LUKASIEWICZ)
    ext = pos + [n + 1]
    out = [ell] + [F] * (ext[0] - 2)
    for j in range(ell):
        out += [D] + [F] * (ext[j + 1] - ext[j] - 1)
    return validate(out, LUKASIEWICZ)


def witness_adj(n: int, positions: tuple[int, ...], pattern: str) -> Path:
    """Path of length n realizing the given FD (or DF) position set."""
    if pattern == "FD":
        block = [F, D]
    elif pattern == "DF":
        block = [D, F]
    else:
        raise ValueError("pattern must be 'FD' or 'DF'")
    pos = sorted(set(positions))
    ell = len(pos)
    ok = (
        len(pos) == len(positions)
        and all(2 <= i <= n - 1 for i in pos)
        and all(pos[j + 1] - pos[j] > 1 for j in range(ell - 1))
    )
    if not ok:
        raise InvalidPositionSet(f"invalid {pattern} position set for length {n}")
    if ell == 0:
        return validate([F] * n, LUKASIEWICZ)
    ext = pos + [n + 1]
    out = [ell] + [F] * (ext[0] - 2)
    for j in range(ell):
        out += block + [F] * (ext[j + 1] - ext[j] - 2)
    return validate(out, LUKASIEWICZ)


def witness_dd(n: int, positions: tuple[int, ...]) -> Path:
    """Path of length n realizing the given DD position set.

    Down steps go on the positions and their successors, one up step carrying
    the whole balance goes first, flats fill the rest.
    """
    pos = sorted(set(positions))
    ok = (
        len(pos) == len(positions)
        and all(2 <= i <= n - 1 for i in pos)
        and all(pos[j + 1] - pos[j] != 2 for j in range(len(pos) - 1))
    )
    if not ok:
        raise InvalidPositionSet(f"invalid DD position set for length {n}")
    if not pos:
        return validate([F] * n, LUKASIEWICZ)
    downs = set(pos) | {i + 1 for i in pos}
    b = len(downs)
    out = []
    for i in range(1, n + 1):
        if i == 1:
            out.append(b)
        elif i in downs:
            out.append(D)
        else:
            out.append(F)
    return validate(out, LUKASIEWICZ)


def psi(p: Path) -> Path:
    """Block-by-block map onto Motzkin paths: U_k L1 D ... Lk D L' becomes
    U psi(L1) F psi(L2) F ... psi(Lk) D psi(L')."""
    out: list[int] = []
    _psi_into(p, out)
    return validate(out, MOTZKIN)


def _psi_into(p: Path, out: list[int]) -> None:
    while p:
        if p[0] == F:
            out.append(F)
            p = p[1:]
            continue
        _, parts, rest = _split_up_block(p)
        out.append(U)
        for i, part in enumerate(parts):
            if i > 0:
                out.append(F)
            _psi_into(part, out)
        out.append(D)
        p = rest


def xi(p: Path) -> Path:
    """Rewrite every U_kF occurrence as FU_k (left to right; rewrites cannot
    overlap since the consumed F cannot begin another occurrence)."""
    out: list[int] = []
    i = 0
    while i < len(p):
        if p[i] >= 1 and i + 1 < len(p) and p[i + 1] == F:
            out += [F, p[i]]
            i += 2
        else:
            out.append(p[i])
            i += 1
    return validate(out, LUKASIEWICZ)


def theta(p: Path) -> Path:
    """Rewrite every U_kD occurrence as DU_k, then wrap the result in U...D."""
    out: list[int] = [U]
    i = 0
    while i < len(p):
        if p[i] >= 1 and i + 1 < len(p) and p[i + 1] == D:
            out += [D, p[i]]
            i += 2
        else:
            out.append(p[i])
            i += 1
    out.append(D)
    return validate(out, LUKASIEWICZ)


# Signature each projection/Motzkinization preserves, used by the
# verification sweeps and the CLI.
PRESERVED = {
    "phi": ("U", "UU", "UD"),
    "du": ("DU",),
    "runs-FU": ("FU",),
    "runs-UF": ("UF",),
    "toB": ("Uk",),
    "toC": ("UkD",),
    "toE": ("UkF",),
    "toF": ("FF",),
}

MAPS = {
    "phi": phi,
    "du": motzkinize_du,
    "runs-FU": lambda p: motzkinize_runs(p, "FU"),
    "runs-UF": lambda p: motzkinize_runs(p, "UF"),
    "toB": to_b,
    "toC": to_c,
    "toE": to_e,
    "toF": to_f,
    "psi": psi,
    "xi": xi,
    "theta": theta,
}
