"""Brute-force quotient oracle and direct position-set counting.

The oracle enumerates every path of a given length, groups them by signature
and counts the groups.  The position-set counters implement the closed
characterizations for the patterns F, D, FD, DF and DD, giving a second,
enumeration-free method for those relations.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from . import paths, patterns

DEFAULT_ORACLE_BOUND = 13

POSITION_SET_PATTERNS = ("F", "D", "FD", "DF", "DD")


class ResourceLimit(RuntimeError):
    pass


class UnsupportedPattern(ValueError):
    pass


@dataclass(frozen=True)
class ClassCount:
    n: int
    relation: str
    count: int
    method: str


def oracle_bound() -> int:
    env = os.environ.get("LUKAS_ORACLE_BOUND")
    return int(env) if env else DEFAULT_ORACLE_BOUND


def _check_bound(n: int, bound: int | None) -> None:
    limit = oracle_bound() if bound is None else bound
    if n > limit:
        raise ResourceLimit(f"length {n} exceeds the oracle bound {limit}")


def class_counts_all(n: int, relations=patterns.RELATIONS, bound: int | None = None) -> dict[str, int]:
    """Signature-class counts for several relations in one enumeration sweep."""
    _check_bound(n, bound)
    seen: dict[str, set] = {r: set() for r in relations}
    for p in paths.enumerate_paths(n):
        bundle = patterns.signature_bundle(p)
        for r in relations:
            seen[r].add(bundle[r])
    return {r: len(s) for r, s in seen.items()}


def count_classes_oracle(n: int, relation: str, bound: int | None = None) -> ClassCount:
    """Number of distinct signatures over all paths of length n."""
    if relation not in patterns.RELATIONS:
        raise UnsupportedPattern(f"unknown relation: {relation!r}")
    count = class_counts_all(n, (relation,), bound)[relation]
    return ClassCount(n, relation, count, "oracle")


def count_classes_motzkin_oracle(n: int, relation: str, bound: int | None = None) -> int:
    """Class count restricted to Motzkin paths (equal to the full count for
    the relations whose classes always contain a Motzkin representative)."""
    _check_bound(n, bound)
    return len({patterns.occurrences(p, relation) for p in paths.enumerate_paths(n, paths.MOTZKIN)})


@lru_cache(maxsize=None)
def _fib_adjacent(n: int) -> int:
    # f_0 = f_1 = f_2 = 1, f_n = f_{n-1} + f_{n-2}
    if n <= 2:
        return 1
    return _fib_adjacent(n - 1) + _fib_adjacent(n - 2)


@lru_cache(maxsize=None)
def _dd_spaced(n: int) -> int:
    # g_0 = g_1 = g_2 = 1, g_3 = 2, g_n = g_{n-1} + g_{n-2} + g_{n-4}
    if n <= 2:
        return 1
    if n == 3:
        return 2
    return _dd_spaced(n - 1) + _dd_spaced(n - 2) + _dd_spaced(n - 4)


def count_valid_position_sets(n: int, pattern: str) -> ClassCount:
    """Number of position sets a path of length n can realize for the pattern."""
    if pattern not in POSITION_SET_PATTERNS:
        raise UnsupportedPattern(f"no position-set characterization for {pattern!r}")
    if n < 0:
        raise ValueError("length must be >= 0")
    if n == 0:
        count = 1
    elif pattern == "F":
        count = 2**n - n
    elif pattern == "D":
        count = 2 ** (n - 1)
    elif pattern in ("FD", "DF"):
        count = _fib_adjacent(n)
    else:  # DD
        count = _dd_spaced(n)
    return ClassCount(n, pattern, count, "characterization")


def position_set_ok(n: int, pattern: str, positions: tuple[int, ...]) -> bool:
    """Whether a strictly increasing position list is realizable for the pattern."""
    if pattern not in POSITION_SET_PATTERNS:
        raise UnsupportedPattern(f"no position-set characterization for {pattern!r}")
    if any(positions[i] >= positions[i + 1] for i in range(len(positions) - 1)):
        return False
    ell = len(positions)
    if pattern == "F":
        return all(1 <= i <= n for i in positions) and ell != n - 1
    if pattern == "D":
        return all(2 <= i <= n for i in positions)
    gaps = [positions[i + 1] - positions[i] for i in range(ell - 1)]
    if pattern in ("FD", "DF"):
        return all(2 <= i <= n - 1 for i in positions) and all(g > 1 for g in gaps)
    return all(2 <= i <= n - 1 for i in positions) and all(g != 2 for g in gaps)


def class_size_histogram(n: int, relation: str, bound: int | None = None) -> dict[int, int]:
    """Map from equivalence-class size to the number of classes of that size."""
    if relation not in patterns.RELATIONS:
        raise UnsupportedPattern(f"unknown relation: {relation!r}")
    _check_bound(n, bound)
    sizes: dict[tuple, int] = {}
    for p in paths.enumerate_paths(n):
        sig = patterns.occurrences(p, relation)
        sizes[sig] = sizes.get(sig, 0) + 1
    hist: dict[int, int] = {}
    for size in sizes.values():
        hist[size] = hist.get(size, 0) + 1
    return hist
