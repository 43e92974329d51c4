import itertools
import math

import pytest

from lukas import paths, patterns, quotient, reference


def test_oracle_matches_reference_small(oracle_counts):
    for n in range(1, 9):
        for rel in patterns.RELATIONS:
            assert oracle_counts[n][rel] == reference.table1_value(rel, n), (n, rel)


def test_count_classes_oracle_single():
    cc = quotient.count_classes_oracle(4, "FF")
    assert cc == quotient.ClassCount(4, "FF", 5, "oracle")


def test_unknown_relation_rejected():
    with pytest.raises(quotient.UnsupportedPattern):
        quotient.count_classes_oracle(3, "XY")
    with pytest.raises(quotient.UnsupportedPattern):
        quotient.count_valid_position_sets(3, "UU")


def test_resource_limit():
    with pytest.raises(quotient.ResourceLimit):
        quotient.count_classes_oracle(20, "F")
    with pytest.raises(quotient.ResourceLimit):
        quotient.class_counts_all(5, bound=4)


def test_oracle_bound_env(monkeypatch):
    monkeypatch.setenv("LUKAS_ORACLE_BOUND", "3")
    assert quotient.oracle_bound() == 3
    with pytest.raises(quotient.ResourceLimit):
        quotient.count_classes_oracle(4, "F")
    monkeypatch.delenv("LUKAS_ORACLE_BOUND")
    assert quotient.oracle_bound() == quotient.DEFAULT_ORACLE_BOUND


def test_position_set_examples():
    assert quotient.count_valid_position_sets(4, "F").count == 12
    assert quotient.count_valid_position_sets(5, "D").count == 16
    assert quotient.count_valid_position_sets(5, "DD").count == 7


def test_position_set_count_matches_predicate():
    for pat in quotient.POSITION_SET_PATTERNS:
        for n in range(0, 9):
            brute = sum(
                1
                for r in range(n + 1)
                for pos in itertools.combinations(range(1, n + 1), r)
                if quotient.position_set_ok(n, pat, pos)
            )
            assert brute == quotient.count_valid_position_sets(n, pat).count, (pat, n)


def test_position_sets_are_exactly_realized_signatures():
    for pat in quotient.POSITION_SET_PATTERNS:
        for n in range(0, 9):
            realized = {patterns.occurrences(p, pat) for p in paths.enumerate_paths(n)}
            assert realized == {
                pos
                for r in range(n + 1)
                for pos in itertools.combinations(range(1, n + 1), r)
                if quotient.position_set_ok(n, pat, pos)
            }, (pat, n)


def test_motzkin_oracle_agrees_for_small_rise_patterns(oracle_counts):
    for n in range(1, 9):
        for rel in ("U", "UU", "UD", "UF", "FU", "DU"):
            assert quotient.count_classes_motzkin_oracle(n, rel) == oracle_counts[n][rel]


def test_class_size_histogram():
    assert quotient.class_size_histogram(1, "F") == {1: 1}
    assert quotient.class_size_histogram(2, "FF") == {1: 2}
    hist = quotient.class_size_histogram(4, "D")
    assert sum(size * mult for size, mult in hist.items()) == math.comb(8, 4) // 5
    assert sum(hist.values()) == 8
