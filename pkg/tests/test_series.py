import math
from fractions import Fraction

import pytest

from lukas import patterns, quotient, reference, series
from lukas.series import Series


def test_basic_arithmetic_exact():
    n = 16
    a = Series.from_poly([1, 2, 3], n)
    b = Series.from_poly([1, -1], n)
    assert (a * b).coeffs[:4] == (Fraction(1), Fraction(1), Fraction(1), Fraction(-3))
    assert (a - a) == Series.zero(n)
    assert (b * b.inverse()) == Series.one(n)


def test_inverse_requires_unit():
    with pytest.raises(series.NonUnitConstantTerm):
        Series.from_poly([0, 1], 8).inverse()


def test_divx_checks_valuation():
    with pytest.raises(series.ValuationError):
        Series.from_poly([1, 1], 8).divx(1)
    assert Series.from_poly([0, 0, 1], 8).divx(2).coeffs[0] == 1


def test_sqrt_squares_back():
    n = 64
    for radicand in series.RADICANDS.values():
        s = Series.from_poly(radicand, n)
        r = s.sqrt()
        assert r * r == s, radicand


def test_sqrt_requires_unit_constant():
    with pytest.raises(series.NonUnitConstantTerm):
        Series.from_poly([2, 1], 8).sqrt()


def test_catalan_from_radical():
    n = 32
    num = Series.one(n) - Series.from_poly([1, -4], n).sqrt()
    cat = (num / Series.from_poly([0, 2], n)).truncate(30).integer_coeffs()
    assert cat == [math.comb(2 * k, k) // (k + 1) for k in range(31)]


def test_integer_export_rejects_fractions():
    with pytest.raises(series.SeriesError):
        Series([Fraction(1, 2)]).integer_coeffs()


def test_all_methods_match_reference():
    for rel in patterns.RELATIONS:
        methods = series.available_methods(rel)
        assert len(methods) >= 2, rel
        for m in methods:
            vals = series.sequence_values(rel, m, 10)
            assert vals[0] == 1
            assert tuple(vals[1:]) == reference.TABLE1[rel], (rel, m)


def test_methods_agree_to_degree_30():
    for rel in patterns.RELATIONS:
        columns = [series.sequence_values(rel, m, 30) for m in series.available_methods(rel)]
        for col in columns[1:]:
            assert col == columns[0], rel


def test_truncation_consistency():
    for rel in ("U", "UU", "UkD", "FF"):
        long = series.expand_closed(rel, 40)
        short = series.expand_closed(rel, 20)
        assert long.truncate(20) == short


def test_no_closed_form_for_family_tags():
    with pytest.raises(series.NoClosedForm):
        series.expand_closed("B", 10)
    with pytest.raises(series.UnsupportedTag):
        series.expand_recurrence("UU", 10)
    with pytest.raises(series.UnsupportedTag):
        series.solve_fixpoint("XY", 10)
    with pytest.raises(series.UnsupportedTag):
        series.sequence_values("U", "fixpoint", 10)


def test_fixpoints_satisfy_their_equations():
    n = 24
    x = Series.x(n)
    one = Series.one(n)

    def geom(s):
        return (one - s).inverse()

    l = series.solve_fixpoint("L", n)
    assert l == (one - x * l).inverse()
    bbar = series.solve_fixpoint("Bbar", n)
    assert bbar == one + (x * bbar) * (x * bbar) * geom(x * bbar)
    b = series.solve_fixpoint("B", n)
    assert b == one + x * b + x * b * (x * bbar) * geom(x * bbar)
    cbar = series.solve_fixpoint("Cbar", n)
    assert cbar == one + x * x * cbar * geom(x * cbar)
    c = series.solve_fixpoint("C", n)
    assert c == one + x * c + x * x * c * geom(x * cbar)
    ebar = series.solve_fixpoint("Ebar", n)
    x3 = x * x * x
    assert ebar == one + x3 * ebar * ebar * geom(x * ebar)
    e = series.solve_fixpoint("E", n)
    assert e == one + x * e + x3 * e * ebar * geom(x * ebar)


def test_family_series_known_values():
    assert series.family_series("L", 7) == [1, 1, 2, 5, 14, 42, 132, 429]
    assert series.family_series("B", 7) == [1, 1, 2, 4, 9, 21, 51, 127]
    assert series.family_series("C", 7)[1:] == list(reference.TABLE1["UkD"][:7])
    assert series.family_series("E", 7)[1:] == list(reference.TABLE1["UkF"][:7])


def test_family_series_count_subsets():
    from lukas import paths

    for tag in paths.SUBSET_TAGS:
        if tag == "Fset":
            continue
        counts = series.family_series(tag, 8)
        for n in range(9):
            assert counts[n] == sum(
                1 for p in paths.enumerate_paths(n) if paths.in_subset(p, tag)
            ), (tag, n)


def test_ff_product_form_matches_rational():
    n = 30
    assert series.ff_product_form(n) == series.expand_closed("FF", n)


def test_compare_reports_agreement(oracle_counts):
    for rel in ("F", "UkD", "UU"):
        rows = series.compare(rel, 12, oracle_limit=10)
        assert rows and all(r["ok"] for r in rows)
        methods = {r["method"] for r in rows}
        assert "oracle" in methods and len(methods) >= 3
