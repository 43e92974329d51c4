"""Occurrence positions of length <= 2 patterns and the induced equivalence.

Fixed relations read U as a rise of exactly +1; the family relations
(Uk, UkD, UkF, FUk, DUk) match any up step and record its rise k, and two
paths are family-equivalent only when the positions agree for every k.
Positions are 1-based and overlapping occurrences are all reported.
"""

from __future__ import annotations

from .paths import Path

FIXED_RELATIONS = ("U", "UU", "UD", "UF", "DU", "FU", "F", "D", "FD", "DF", "DD", "FF")
FAMILY_RELATIONS = ("Uk", "UkD", "UkF", "FUk", "DUk")
RELATIONS = FIXED_RELATIONS + FAMILY_RELATIONS

# Signature of a path under a relation: tuple of positions, or of (position, k)
# pairs for the family relations.
Signature = tuple


class LengthMismatch(ValueError):
    pass


_STEP = {"U": 1, "D": -1, "F": 0}


def occurrences(p: Path, relation: str) -> Signature:
    """Positions (1-based) where the pattern begins; (position, k) for families."""
    n = len(p)
    if relation in FIXED_RELATIONS:
        if len(relation) == 1:
            want = _STEP[relation]
            return tuple(i + 1 for i in range(n) if p[i] == want)
        a, b = _STEP[relation[0]], _STEP[relation[1]]
        return tuple(i + 1 for i in range(n - 1) if p[i] == a and p[i + 1] == b)
    if relation == "Uk":
        return tuple((i + 1, p[i]) for i in range(n) if p[i] >= 1)
    if relation == "UkD":
        return tuple((i + 1, p[i]) for i in range(n - 1) if p[i] >= 1 and p[i + 1] == -1)
    if relation == "UkF":
        return tuple((i + 1, p[i]) for i in range(n - 1) if p[i] >= 1 and p[i + 1] == 0)
    if relation == "FUk":
        return tuple((i + 1, p[i + 1]) for i in range(n - 1) if p[i] == 0 and p[i + 1] >= 1)
    if relation == "DUk":
        return tuple((i + 1, p[i + 1]) for i in range(n - 1) if p[i] == -1 and p[i + 1] >= 1)
    raise ValueError(f"unknown relation: {relation!r}")


def equivalent(p: Path, q: Path, relation: str) -> bool:
    if len(p) != len(q):
        raise LengthMismatch(f"paths have lengths {len(p)} and {len(q)}")
    return occurrences(p, relation) == occurrences(q, relation)


def signature_bundle(p: Path) -> dict[str, Signature]:
    """All 17 signatures of a path in a single scan (oracle hot path)."""
    n = len(p)
    sig: dict[str, list] = {r: [] for r in RELATIONS}
    for i in range(n):
        s = p[i]
        pos = i + 1
        if s == 1:
            sig["U"].append(pos)
        elif s == 0:
            sig["F"].append(pos)
        elif s == -1:
            sig["D"].append(pos)
        if s >= 1:
            sig["Uk"].append((pos, s))
        if i + 1 < n:
            t = p[i + 1]
            if s == 1:
                if t == 1:
                    sig["UU"].append(pos)
                elif t == -1:
                    sig["UD"].append(pos)
                elif t == 0:
                    sig["UF"].append(pos)
            elif s == -1:
                if t == 1:
                    sig["DU"].append(pos)
                elif t == -1:
                    sig["DD"].append(pos)
                elif t == 0:
                    sig["DF"].append(pos)
            elif s == 0:
                if t == 1:
                    sig["FU"].append(pos)
                elif t == -1:
                    sig["FD"].append(pos)
                elif t == 0:
                    sig["FF"].append(pos)
            if s >= 1:
                if t == -1:
                    sig["UkD"].append((pos, s))
                elif t == 0:
                    sig["UkF"].append((pos, s))
            if t >= 1:
                if s == 0:
                    sig["FUk"].append((pos, t))
                elif s == -1:
                    sig["DUk"].append((pos, t))
    return {r: tuple(v) for r, v in sig.items()}
