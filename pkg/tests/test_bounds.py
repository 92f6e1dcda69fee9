"""Closed forms: thresholds, coefficients, exact values, exact arithmetic."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rainbow_stars.bounds import (
    CHAIN_FIRST,
    CHAIN_SECOND,
    INFINITY,
    SurdValue,
    coefficient_min,
    coefficient_sum,
    compare_fraction_surd,
    compare_int_surd,
    compare_surds,
    exact_bound,
    fraction_str,
    threshold_json,
    thresholds,
)
from rainbow_stars.model import StarPattern


def test_surd_comparisons_are_exact():
    root2 = SurdValue(0, 2)
    assert compare_int_surd(1, root2) < 0
    assert compare_int_surd(2, root2) > 0
    assert compare_int_surd(3, SurdValue(0, 9)) == 0
    assert compare_fraction_surd(Fraction(141421356, 10**8), root2) < 0
    assert compare_fraction_surd(Fraction(141421357, 10**8), root2) > 0
    assert compare_surds(SurdValue(1, 2), SurdValue(0, 6)) < 0  # 2.414 vs 2.449
    assert compare_surds(SurdValue(2, 2), SurdValue(1, 6)) < 0  # 3.414 vs 3.449
    assert compare_surds(SurdValue(0, 8), SurdValue(0, 8)) == 0


def test_threshold_values_for_small_patterns():
    ts = thresholds(1, 2)
    assert ts.t1 == 3
    assert ts.t2 is INFINITY  # q <= p+1 leaves the middle regime unbounded
    assert ts.t3 == SurdValue(2, 2)
    assert ts.t4 == SurdValue(1, 1)  # 1 + sqrt((q-1)(q-p)) = 2
    assert ts.chain == CHAIN_SECOND

    ts = thresholds(1, 3)
    assert ts.t1 == 4
    assert ts.t2 == Fraction(6)
    assert ts.t3 == SurdValue(3, 3)
    assert ts.t4 == SurdValue(2, 4)
    assert ts.chain == CHAIN_SECOND  # 3(q-p-1)^2 = 3 < 9 = p(p+q-1)^2

    ts = thresholds(1, 4)
    # all three upper thresholds coincide at 6; the sign form vanishes
    assert ts.t2 == Fraction(6)
    assert ts.t3 == SurdValue(4, 4)
    assert ts.t4 == SurdValue(3, 9)
    assert ts.chain == CHAIN_FIRST


def test_chain_rule_handles_equal_sign_with_small_q():
    # the sign form q(q-p-1)^2 - p(p+q-1)^2 vanishes at (1,1), but t2 is
    # unbounded there, so the ordering must be SECOND
    assert thresholds(1, 1).chain == CHAIN_SECOND
    sign = lambda p, q: q * (q - p - 1) ** 2 - p * (p + q - 1) ** 2
    assert sign(1, 1) == 0


@given(st.integers(1, 12), st.integers(1, 12))
@settings(max_examples=144, deadline=None)
def test_threshold_orderings(p, q):
    if p > q:
        p, q = q, p
    ts = thresholds(p, q)
    assert compare_int_surd(ts.t1, ts.t3) <= 0
    if ts.t2 is not INFINITY:
        assert Fraction(ts.t1) <= ts.t2
    if ts.chain == CHAIN_FIRST:
        assert ts.t2 is not INFINITY
        assert compare_fraction_surd(ts.t2, ts.t3) <= 0
        assert compare_surds(ts.t3, ts.t4) <= 0
    else:
        assert compare_surds(ts.t4, ts.t3) <= 0
        if ts.t2 is not INFINITY:
            assert compare_fraction_surd(ts.t2, ts.t3) >= 0


def test_sum_coefficient_examples():
    assert coefficient_sum(1, 2, 8) == Fraction(16, 7)
    # below the split the coefficient is flat at p+q-1
    assert coefficient_sum(1, 2, 3) == 2
    assert coefficient_sum(1, 2, 5) == 2
    # (1,1): flat 1 through c = 4, then c/4
    assert coefficient_sum(1, 1, 2) == 1
    assert coefficient_sum(1, 1, 4) == 1
    assert coefficient_sum(1, 1, 8) == 2


def test_min_coefficient_examples():
    assert coefficient_min(1, 2, 3) == Fraction(4, 9)
    assert coefficient_min(1, 2, 4) == Fraction(1, 3)
    # (1,1) collapses to 1/4 in every regime
    for c in range(2, 12):
        assert coefficient_min(1, 1, c) == Fraction(1, 4)
    # FIRST-chain linear regime: (q-1)/c between t2 and t4
    ts = thresholds(1, 5)
    assert ts.chain == CHAIN_FIRST
    c = 8  # t2 = 20/3 <= 8 <= t4 = 4 + sqrt(16) = 8
    assert coefficient_min(1, 5, c) == Fraction(4, c)


def test_coefficient_domain():
    with pytest.raises(ValueError):
        coefficient_sum(1, 2, 2)
    with pytest.raises(ValueError):
        coefficient_min(0, 2, 5)
    with pytest.raises(ValueError):
        coefficient_min(3, 2, 9)  # needs p <= q


@given(st.integers(1, 6), st.integers(1, 6))
@settings(max_examples=36, deadline=None)
def test_coefficient_monotonicity_in_c(p, q):
    if p > q:
        p, q = q, p
    values_min = [coefficient_min(p, q, c) for c in range(p + q, 50)]
    values_sum = [coefficient_sum(p, q, c) for c in range(p + q, 50)]
    assert all(a >= b for a, b in zip(values_min, values_min[1:]))
    assert all(a <= b for a, b in zip(values_sum, values_sum[1:]))
    # per-color average never beats the sum
    for coef_min, coef_sum, c in zip(values_min, values_sum, range(p + q, 50)):
        assert coef_min * c <= coef_sum


@given(st.integers(1, 9), st.integers(1, 9))
@settings(max_examples=81, deadline=None)
def test_piecewise_continuity(p, q):
    if p > q:
        p, q = q, p
    split = p + 2 * q - 1 + 2 * math.sqrt(p * q)
    high = (split - p + 1) ** 2 / (4 * (split - q + 1)) + (p - 1)
    assert abs(high - (p + q - 1)) < 1e-9
    ts = thresholds(p, q)
    t1 = ts.t1
    base = (p + q - 1) ** 2 / t1**2
    mid = (t1 - q + 1) ** 2 * (p + q - 1) ** 2 / (4 * t1 * t1 * p * (t1 - p - q + 1))
    assert abs(base - mid) < 1e-9


def test_exact_bound_out_star_splits():
    # many vertices: extremal range
    res = exact_bound(StarPattern(0, 2), 5, 3, "min")
    assert (res.kind, res.value) == ("EXACT", 6)
    res = exact_bound(StarPattern(0, 2), 5, 3, "sum")
    assert (res.kind, res.value) == ("EXACT", 20)
    # many colors: per-vertex fixed targets
    res = exact_bound(StarPattern(0, 2), 4, 7, "sum")
    assert (res.kind, res.value) == ("EXACT", 28)
    res = exact_bound(StarPattern(0, 2), 4, 7, "min")
    assert (res.kind, res.value) == ("EXACT", 4)
    # so few vertices the star cannot exist at all
    res = exact_bound(StarPattern(0, 5), 4, 3, "sum")
    assert res.kind == "EXACT" and res.value == 3 * 4 * 3
    # fewer colors than star edges
    res = exact_bound(StarPattern(0, 3), 9, 2, "min")
    assert res.kind == "UNCONSTRAINED" and res.value == 9 * 8


def test_exact_bound_two_path():
    assert exact_bound(StarPattern(1, 1), 4, 2, "sum").value == 12
    assert exact_bound(StarPattern(1, 1), 4, 5, "sum").value == 5 * 4
    assert exact_bound(StarPattern(1, 1), 4, 2, "min").value == 4
    assert exact_bound(StarPattern(1, 1), 7, 3, "min").value == 12
    with pytest.raises(ValueError):
        exact_bound(StarPattern(1, 1), 3, 2, "min")  # n = 3 has no closed form


def test_exact_bound_normalizes_by_reversal():
    fwd = exact_bound(StarPattern(0, 2), 5, 3, "min")
    rev = exact_bound(StarPattern(2, 0), 5, 3, "min")
    assert rev.value == fwd.value
    assert rev.normalized and not fwd.normalized


def test_exact_bound_asymptotic_fallback():
    res = exact_bound(StarPattern(1, 2), 100, 8, "sum")
    assert res.kind == "ASYMPTOTIC"
    assert res.value == Fraction(16, 7)


def test_exact_bound_trivial_ranges():
    res = exact_bound(StarPattern(1, 2), 3, 5, "sum")
    assert res.kind == "UNCONSTRAINED" and res.value == 5 * 3 * 2
    res = exact_bound(StarPattern(2, 2), 9, 3, "min")
    assert res.kind == "UNCONSTRAINED" and res.value == 9 * 8


def test_fraction_str_and_threshold_json():
    assert fraction_str(Fraction(16, 7)) == "16/7"
    assert fraction_str(Fraction(4, 2)) == "2"
    assert fraction_str(7) == "7"
    assert fraction_str(INFINITY) == "inf"
    blob = threshold_json(thresholds(1, 2))
    assert blob["t2"] == {"exact": "inf", "decimal": "inf"}
    assert blob["t3"]["exact"] == "2+sqrt(2)"
    assert blob["chain"] == CHAIN_SECOND
    blob = threshold_json(thresholds(1, 3))
    assert blob["t2"] == {"exact": "6", "decimal": "6.000000000000"}
    assert blob["t4"]["exact"] == "4"  # 2 + sqrt(4) collapses to an integer
