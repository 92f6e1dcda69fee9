"""Extremal families: builds are free, counts match, errors are informative."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rainbow_stars.bounds import coefficient_min, coefficient_sum
from rainbow_stars.constructions import (
    ApplicabilityError,
    ConstructionFamily,
    applicability_error,
    build,
    catalog,
    colex_subsets,
    predicted_value,
    proportional_sizes,
)
from rainbow_stars.detector import find_rainbow_star
from rainbow_stars.model import StarPattern, edge_counts

F = ConstructionFamily


def test_colex_order():
    assert list(colex_subsets(3, 2)) == [(1, 2), (1, 3), (2, 3)]
    assert list(colex_subsets(4, 1)) == [(1,), (2,), (3,), (4,)]
    assert list(colex_subsets(2, 0)) == [()]
    subsets = list(colex_subsets(5, 3))
    assert len(subsets) == math.comb(5, 3)
    assert subsets[0] == (1, 2, 3) and subsets[-1] == (3, 4, 5)


def test_proportional_sizes_largest_remainder():
    # equal thirds of 10: remainders tie, lower index wins the extra
    assert proportional_sizes(10, [Fraction(1, 3)] * 3) == [4, 3, 3]
    assert proportional_sizes(9, [Fraction(1, 3)] * 3) == [3, 3, 3]
    assert proportional_sizes(7, [Fraction(1, 2), Fraction(1, 2)]) == [4, 3]
    sizes = proportional_sizes(11, [Fraction(5, 8), Fraction(3, 8)])
    assert sizes == [7, 4]  # 6.875 rounds up before 4.125
    assert sum(proportional_sizes(100, [Fraction(1, 7)] * 7)) == 100


def test_bipartite_s11_counts():
    out = build(F.BIPARTITE_S11, 4, 4, 1, 1)
    assert out.predicted_counts.per_color == (4, 4, 4, 4)
    assert out.certified_free


def test_cyclic_remainder_counts():
    out = build(F.CYCLIC_REMAINDER, 4, 3, 0, 2)
    assert out.predicted_counts.per_color == (4, 4, 4)
    assert edge_counts(out.collection) == out.predicted_counts


def test_b_only_counts():
    out = build(F.B_ONLY, 6, 3, 1, 2)
    assert out.predicted_counts.per_color == (12, 12, 12)


def test_complete_prefix_counts():
    out = build(F.COMPLETE_PREFIX, 5, 4, 0, 3)
    assert out.predicted_counts.total == 40
    # exactly the first p+q-1 = 2 colors carry edges
    assert out.predicted_counts.per_color == (20, 20, 0, 0)


def test_predicted_value_examples():
    assert predicted_value(F.CYCLIC_REMAINDER, 5, 3, 0, 2, "min") == 6
    assert predicted_value(F.AC_MIN, 400, 4, 1, 2, "min") == Fraction(1, 3)
    assert predicted_value(F.AC_SPLIT_SUM, 200, 8, 1, 2, "sum") == Fraction(16, 7)
    with pytest.raises(ValueError):
        predicted_value(F.AC_SPLIT_SUM, 200, 8, 1, 2, "min")  # no min claim


def test_predicted_coefficients_match_closed_forms():
    # the families built for a regime must predict that regime's coefficient
    assert predicted_value(F.AC_SPLIT_SUM, 200, 8, 1, 2, "sum") == coefficient_sum(1, 2, 8)
    assert predicted_value(F.AC_MIN, 400, 4, 1, 2, "min") == coefficient_min(1, 2, 4)
    assert predicted_value(F.AB_MIX, 600, 3, 1, 2, "min") == coefficient_min(1, 2, 3)


def test_applicability_error_messages_name_thresholds():
    # middle-regime family past its upper threshold t2 = 6
    reason = applicability_error(F.AB_MIX, 1000, 7, 1, 3)
    assert reason is not None and "t2" in reason
    with pytest.raises(ApplicabilityError):
        build(F.AB_MIX, 1000, 7, 1, 3)
    # top-regime family below its lower threshold t4 = 8
    reason = applicability_error(F.AC_MIN, 1000, 7, 1, 5)
    assert reason is not None and "t4" in reason
    # fine at the threshold itself
    assert applicability_error(F.AC_MIN, 1000, 8, 1, 5) is None


def test_applicability_error_rejects_bad_patterns():
    assert applicability_error(F.B_ONLY, 30, 5, 2, 1) is not None  # needs p <= q
    assert applicability_error(F.ASSIGNED_OUT, 30, 5, 1, 2) is not None  # needs p = 0
    assert applicability_error(F.TRIANGLE_N3, 4, 2, 1, 1) is not None  # n = 3 only
    with pytest.raises(ApplicabilityError):
        build(F.S11_COMPLETE1, 30, 2, 1, 2)


def test_catalog_covers_every_family():
    entries = catalog()
    assert [e.family for e in entries] == list(F)
    assert len(entries) == 13
    for entry in entries:
        assert entry.applicability and entry.prediction


@pytest.mark.parametrize(
    "family,n,c,p,q",
    [
        (F.COMPLETE_PREFIX, 20, 5, 1, 2),
        (F.ASSIGNED_OUT, 20, 4, 0, 2),
        (F.CYCLIC_REMAINDER, 20, 4, 0, 3),
        (F.AC_SPLIT_SUM, 20, 12, 1, 2),
        (F.B_ONLY, 24, 4, 1, 2),
        (F.AB_MIX, 24, 3, 1, 2),
        (F.A_ONLY, 35, 7, 1, 5),
        (F.AC_MIN, 24, 4, 1, 2),
        (F.S11_COMPLETE1, 10, 3, 1, 1),
        (F.BIPARTITE_S11, 10, 4, 1, 1),
        (F.REMARK_CN, 6, 8, 0, 3),
        (F.REMARK_NQ, 3, 5, 0, 4),
        (F.TRIANGLE_N3, 3, 2, 1, 1),
    ],
)
def test_every_family_builds_free(family, n, c, p, q):
    out = build(family, n, c, p, q)
    assert out.certified_free
    assert find_rainbow_star(out.collection, StarPattern(p, q)) is None
    assert edge_counts(out.collection) == out.predicted_counts
    sizes = [len(g.vertices) for g in out.parts.groups]
    if sizes:
        assert sum(sizes) == n
        covered = sorted(v for g in out.parts.groups for v in g.vertices)
        assert covered == list(range(1, n + 1))


def test_exact_families_predict_their_builds():
    for (family, n, c, p, q) in [
        (F.COMPLETE_PREFIX, 17, 6, 1, 2),
        (F.ASSIGNED_OUT, 18, 4, 0, 3),
        (F.CYCLIC_REMAINDER, 19, 5, 0, 2),
        (F.S11_COMPLETE1, 9, 4, 1, 1),
        (F.BIPARTITE_S11, 9, 3, 1, 1),
        (F.REMARK_CN, 7, 9, 0, 4),
        (F.REMARK_NQ, 4, 6, 0, 4),
        (F.TRIANGLE_N3, 3, 2, 1, 1),
    ]:
        out = build(family, n, c, p, q)
        for objective, picker in (("sum", "total"), ("min", "minimum")):
            try:
                claim = predicted_value(family, n, c, p, q, objective)
            except ValueError:
                continue
            if isinstance(claim, int):
                assert getattr(out.predicted_counts, picker) == claim, (family, objective)


def test_divisible_b_only_prediction_is_exact():
    # 24 splits evenly into binom(4,2) = 6 parts and 4 | 24*2
    claim = predicted_value(F.B_ONLY, 24, 4, 1, 2, "min")
    assert isinstance(claim, int)
    out = build(F.B_ONLY, 24, 4, 1, 2)
    assert out.predicted_counts.minimum == claim


def test_linear_regime_attainment():
    # FIRST-chain pair in its linear regime: coefficient (q-1)/c = 4/7
    p, q, c = 1, 5, 7
    parts = math.comb(c, q - 1)
    n = 60 * parts
    out = build(F.A_ONLY, n, c, p, q)
    coefficient = coefficient_min(p, q, c)
    assert coefficient == Fraction(q - 1, c)
    deviation = abs(Fraction(out.predicted_counts.minimum, n * n) - coefficient)
    assert deviation <= Fraction(5 * parts, n)


@given(st.integers(2, 9), st.integers(0, 3), st.integers(1, 3), st.integers(20, 40))
@settings(max_examples=60, deadline=None)
def test_random_domain_points_build_or_refuse(c, p, q, n):
    # applicability_error is the single gate: build succeeds iff it is None
    if p > q:
        p, q = q, p
    for family in F:
        reason = applicability_error(family, n, c, p, q)
        if reason is None:
            out = build(family, n, c, p, q)
            assert out.certified_free
        else:
            with pytest.raises(ApplicabilityError):
                build(family, n, c, p, q)
