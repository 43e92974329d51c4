import pytest
from hypothesis import given, strategies as st

from lukas import paths, patterns


def test_relation_inventory():
    assert len(patterns.RELATIONS) == 17
    assert set(patterns.FIXED_RELATIONS).isdisjoint(patterns.FAMILY_RELATIONS)


def test_single_occurrence_example():
    # FD occurs exactly once, at position 5, in this path.
    c = paths.parse_path("U5DDFFDU2DDDDU2FU2DDDD")
    assert patterns.occurrences(c, "FD") == (5,)
    other = paths.parse_path("UFFFFDUDUDFFFFUDFF")
    assert len(other) == len(c) == 18
    assert patterns.equivalent(c, other, "FD")


def test_overlapping_occurrences_all_reported():
    p = paths.validate((0, 0, 0))
    assert patterns.occurrences(p, "FF") == (1, 2)
    assert patterns.occurrences(p, "F") == (1, 2, 3)


def test_family_signatures_record_rise():
    p = paths.parse_path("U3DUDFD")
    assert patterns.occurrences(p, "Uk") == ((1, 3), (3, 1))
    assert patterns.occurrences(p, "UkD") == ((1, 3), (3, 1))
    # same positions, different rise: distinct family signatures
    q = paths.parse_path("U2DUDFDFD")[:7]
    assert patterns.occurrences(p, "Uk") != patterns.occurrences(q, "Uk")


def test_fixed_u_means_rise_exactly_one():
    p = paths.parse_path("U2DD")
    assert patterns.occurrences(p, "U") == ()
    assert patterns.occurrences(p, "UD") == ()
    assert patterns.occurrences(p, "Uk") == ((1, 2),)


def test_equivalent_rejects_length_mismatch():
    with pytest.raises(patterns.LengthMismatch):
        patterns.equivalent((0,), (0, 0), "F")


def test_bundle_matches_individual_scans():
    for n in range(8):
        for p in paths.enumerate_paths(n):
            bundle = patterns.signature_bundle(p)
            for r in patterns.RELATIONS:
                assert bundle[r] == patterns.occurrences(p, r)


@given(st.integers(0, 7), st.randoms(use_true_random=False))
def test_equivalence_is_reflexive_and_signature_driven(n, rng):
    pool = list(paths.enumerate_paths(n))
    p = pool[rng.randrange(len(pool))]
    q = pool[rng.randrange(len(pool))]
    for r in patterns.RELATIONS:
        assert patterns.equivalent(p, p, r)
        assert patterns.equivalent(p, q, r) == (
            patterns.occurrences(p, r) == patterns.occurrences(q, r)
        )
