"""Closed-form extremal values: exact small-pattern formulas, asymptotic
coefficients of n², and the regime thresholds that select between them.

Objectives: "sum" maximizes the total edge count over the collection, "min"
maximizes the smallest per-color edge count, both over collections with no
rainbow star of the given pattern.

Every regime comparison against an irrational threshold is decided in exact
integer arithmetic by squaring (each helper documents its reduction); floats
appear only in reporting.  At a boundary both adjacent formulas are evaluated
and must agree, otherwise a RuntimeError signals an internal inconsistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .model import StarPattern

EXACT = "EXACT"
ASYMPTOTIC = "ASYMPTOTIC"
UNCONSTRAINED = "UNCONSTRAINED"

CHAIN_FIRST = "FIRST"
CHAIN_SECOND = "SECOND"

OBJECTIVES = ("sum", "min")


class _InfiniteThreshold:
    """Marker for an unbounded threshold; compares above every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _InfiniteThreshold)

    def __hash__(self) -> int:
        return hash("_InfiniteThreshold")

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return isinstance(other, _InfiniteThreshold)

    def __gt__(self, other) -> bool:
        return not isinstance(other, _InfiniteThreshold)

    def __ge__(self, other) -> bool:
        return True


INFINITY = _InfiniteThreshold()


@dataclass(frozen=True)
class SurdValue:
    """Exact value base + sqrt(radicand) with integer base, radicand >= 0."""

    base: int
    radicand: int

    def __post_init__(self) -> None:
        if self.radicand < 0:
            raise ValueError(f"radicand must be >= 0, got {self.radicand}")

    def float_value(self) -> float:
        return self.base + math.sqrt(self.radicand)

    def is_integer(self) -> bool:
        return math.isqrt(self.radicand) ** 2 == self.radicand

    def descriptor(self) -> str:
        root = math.isqrt(self.radicand)
        if root * root == self.radicand:
            return str(self.base + root)
        if self.base == 0:
            return f"sqrt({self.radicand})"
        return f"{self.base}+sqrt({self.radicand})"


def compare_int_surd(c: int, surd: SurdValue) -> int:
    """Sign of c - (base + sqrt(r)).

    Reduction: c >= base + sqrt(r) iff c - base >= 0 and (c - base)^2 >= r
    (both sides of c - base >= sqrt(r) are nonnegative, so squaring is exact).
    """
    d = c - surd.base
    if d < 0:
        return -1
    dd = d * d
    if dd > surd.radicand:
        return 1
    if dd < surd.radicand:
        return -1
    return 0


def compare_fraction_surd(x: Fraction, surd: SurdValue) -> int:
    """Sign of x - (base + sqrt(r)); same squaring reduction over rationals."""
    d = x - surd.base
    if d < 0:
        return -1
    dd = d * d
    if dd > surd.radicand:
        return 1
    if dd < surd.radicand:
        return -1
    return 0


def compare_surds(s1: SurdValue, s2: SurdValue) -> int:
    """Sign of (a1 + sqrt(b1)) - (a2 + sqrt(b2)), exactly.

    For t = a1 - a2 >= 0 the question t + sqrt(b1) ? sqrt(b2) squares once to
    2t*sqrt(b1) ? b2 - t^2 - b1 =: u; a negative u settles it (left side is
    nonnegative), otherwise both sides are nonnegative and squaring again
    gives the integer comparison 4 t^2 b1 ? u^2.  For t < 0 swap the operands.
    """
    t = s1.base - s2.base
    if t < 0:
        return -compare_surds(s2, s1)
    u = s2.radicand - t * t - s1.radicand
    if u < 0:
        return 1
    lhs = 4 * t * t * s1.radicand
    rhs = u * u
    if lhs > rhs:
        return 1
    if lhs < rhs:
        return -1
    return 0


def compare_fraction_or_inf_surd(x: Union[Fraction, _InfiniteThreshold], surd: SurdValue) -> int:
    if isinstance(x, _InfiniteThreshold):
        return 1
    return compare_fraction_surd(x, surd)


@dataclass(frozen=True)
class ThresholdSet:
    """Regime thresholds for a star with 1 <= p <= q.

    t1 = 2p+q-1, t2 = (q-1)(p+q-1)/(q-p-1) for q >= p+2 (else unbounded),
    t3 = p+q-1+sqrt(pq), t4 = q-1+sqrt((q-1)(q-p)).  `chain` records which
    ordering of t2, t3, t4 holds; FIRST means t2 <= t3 <= t4, SECOND means
    t4 <= t3 <= t2.
    """

    p: int
    q: int
    t1: int
    t2: Union[Fraction, _InfiniteThreshold]
    t3: SurdValue
    t4: SurdValue
    chain: str


def thresholds(p: int, q: int) -> ThresholdSet:
    """Exact threshold values; chain decided by an integer predicate.

    Chain FIRST iff q >= p+2 and q(q-p-1)^2 >= p(p+q-1)^2.  For q <= p+1 the
    value t2 is unbounded, which forces the SECOND ordering; the integer
    predicate alone would misclassify (p, q) = (1, 1), the only pair with
    q <= p+1 where it holds with equality.
    """
    if p < 1:
        raise ValueError(f"thresholds need p >= 1, got p={p} (use the p=0 exact path)")
    if p > q:
        raise ValueError(f"thresholds need p <= q, got ({p}, {q}); normalize by reversal")
    t1 = 2 * p + q - 1
    t2: Union[Fraction, _InfiniteThreshold]
    if q >= p + 2:
        t2 = Fraction((q - 1) * (p + q - 1), q - p - 1)
    else:
        t2 = INFINITY
    t3 = SurdValue(p + q - 1, p * q)
    t4 = SurdValue(q - 1, (q - 1) * (q - p))
    first = q >= p + 2 and q * (q - p - 1) ** 2 >= p * (p + q - 1) ** 2
    return ThresholdSet(p, q, t1, t2, t3, t4, CHAIN_FIRST if first else CHAIN_SECOND)


def _continuity(label: str, left: Fraction, right: Fraction) -> Fraction:
    if left != right:
        raise RuntimeError(
            f"internal error: adjacent formulas disagree at {label}: {left} != {right}"
        )
    return left


def _check_coefficient_domain(p: int, q: int, c: int) -> None:
    if p < 1:
        raise ValueError(f"coefficients need p >= 1, got p={p} (use the p=0 exact path)")
    if p > q:
        raise ValueError(f"coefficients need p <= q, got ({p}, {q}); normalize by reversal")
    if c < p + q:
        raise ValueError(f"coefficients need c >= p+q, got c={c} < {p + q}")


def coefficient_sum(p: int, q: int, c: int) -> Fraction:
    """Coefficient of n^2 in the largest total edge count.

    (p+q-1) for c below the threshold p+2q-1+2*sqrt(pq), else
    (c-p+1)^2/(4(c-q+1)) + p-1.  Membership is exact: with
    d = c-(p+2q-1), c is below iff d <= 0, at the threshold iff d^2 = 4pq,
    above iff d > 0 and d^2 > 4pq.
    """
    _check_coefficient_domain(p, q, c)
    low = Fraction(p + q - 1)
    high = Fraction((c - p + 1) ** 2, 4 * (c - q + 1)) + (p - 1)
    d = c - (p + 2 * q - 1)
    if d < 0:
        return low
    dd = d * d
    if dd < 4 * p * q:
        return low
    if dd == 4 * p * q:
        return _continuity(f"sum threshold (p={p}, q={q}, c={c})", low, high)
    return high


def coefficient_min(p: int, q: int, c: int) -> Fraction:
    """Coefficient of n^2 in the largest minimum per-color edge count.

    Piecewise along the threshold chain; boundary integers evaluate both
    adjacent formulas and return their common value.
    """
    _check_coefficient_domain(p, q, c)
    ts = thresholds(p, q)

    def base() -> Fraction:
        return Fraction((p + q - 1) ** 2, c * c)

    def mid() -> Fraction:
        return Fraction((c - q + 1) ** 2 * (p + q - 1) ** 2, 4 * c * c * p * (c - p - q + 1))

    def linear() -> Fraction:
        return Fraction(q - 1, c)

    def top() -> Fraction:
        return Fraction(
            (c * c - (p - 1) * (q - 1)) ** 2, 4 * c * c * (c - p + 1) * (c - q + 1)
        )

    if c < ts.t1:
        return base()
    if c == ts.t1:
        return _continuity(f"t1 (p={p}, q={q}, c={c})", base(), mid())

    if ts.chain == CHAIN_SECOND:
        pos = compare_int_surd(c, ts.t3)
        if pos < 0:
            return mid()
        if pos == 0:
            return _continuity(f"t3 (p={p}, q={q}, c={c})", mid(), top())
        return top()

    # FIRST chain: t2 is finite here (q >= p+2)
    assert isinstance(ts.t2, Fraction)
    if c < ts.t2:
        return mid()
    if c == ts.t2:
        return _continuity(f"t2 (p={p}, q={q}, c={c})", mid(), linear())
    pos = compare_int_surd(c, ts.t4)
    if pos < 0:
        return linear()
    if pos == 0:
        return _continuity(f"t4 (p={p}, q={q}, c={c})", linear(), top())
    return top()


@dataclass(frozen=True)
class BoundResult:
    """Outcome of a bound query.

    kind EXACT carries an integer value; ASYMPTOTIC carries the rational
    coefficient of n^2; UNCONSTRAINED means no rainbow star of the pattern
    fits at all (too few colors or vertices), so the complete collection is
    free and gives the value.  `normalized` records that (p, q) was swapped
    to p <= q via reversal symmetry.
    """

    kind: str
    objective: str
    value: Union[int, Fraction]
    regime: str
    domain_note: str
    pattern: StarPattern
    n: int
    c: int
    normalized: bool


def exact_bound(pat: StarPattern, n: int, c: int, objective: str) -> BoundResult:
    """Dispatch to the applicable closed form.

    Exact values exist for p = 0 (all n, c splits below) and for
    (p, q) = (1, 1); other patterns fall back to the asymptotic coefficient.
    Raises ValueError for (1, 1) with objective "min" at n = 3, where the
    closed form fails and callers should use the exact oracle.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")
    if n < 1 or c < 1:
        raise ValueError(f"need n >= 1 and c >= 1, got n={n}, c={c}")
    norm, swapped = pat.normalized()
    p, q = norm.p, norm.q

    def result(kind, value, regime, note):
        return BoundResult(kind, objective, value, regime, note, norm, n, c, swapped)

    if p == 0:
        if n <= q:
            value = c * n * (n - 1) if objective == "sum" else n * (n - 1)
            return result(
                EXACT, value, "out-star/all-complete",
                f"n <= q: an out-star needs q distinct targets, so every collection "
                f"on {n} vertices is free; complete collection is optimal",
            )
        if c < q:
            value = c * n * (n - 1) if objective == "sum" else n * (n - 1)
            return result(
                UNCONSTRAINED, value, "trivial/too-few-colors",
                "c < q: fewer colors than star edges; complete collection is free",
            )
        if n > c:
            if objective == "sum":
                return result(
                    EXACT, (q - 1) * (n * n - n), "out-star/extremal-sum",
                    "valid for n > c >= q >= 1",
                )
            quotient, remainder = divmod(n * (q - 1), c)
            return result(
                EXACT, quotient * (n - 1) + remainder, "out-star/extremal-min",
                "valid for n > c >= q >= 1",
            )
        # q <= n <= c: fixed-target construction (q-1 common targets per
        # vertex, every color) is optimal in this range
        value = (q - 1) * c * n if objective == "sum" else n * (q - 1)
        return result(
            EXACT, value, "out-star/many-colors",
            "c >= n >= q: per-vertex fixed-target collections are optimal",
        )

    if c < p + q:
        value = c * n * (n - 1) if objective == "sum" else n * (n - 1)
        return result(
            UNCONSTRAINED, value, "trivial/too-few-colors",
            "c < p+q: fewer colors than star edges; complete collection is free",
        )
    if n <= p + q:
        value = c * n * (n - 1) if objective == "sum" else n * (n - 1)
        return result(
            UNCONSTRAINED, value, "trivial/too-few-vertices",
            "n <= p+q: fewer vertices than the star needs; complete collection is free",
        )

    if p == 1 and q == 1:
        if objective == "sum":
            if c <= 3:
                return result(
                    EXACT, n * n - n, "two-path/sum-few-colors",
                    "valid for 2 <= c <= 3, n >= 3",
                )
            return result(
                EXACT, c * (n * n // 4), "two-path/sum-many-colors",
                "valid for c >= 4, n >= 3",
            )
        if n == 3:
            raise ValueError(
                "min objective for pattern (1,1) at n=3 has no closed form "
                "(opposite triangle orientations reach 3); use the exact oracle"
            )
        return result(
            EXACT, n * n // 4, "two-path/min",
            "valid for c >= 2, n >= 4",
        )

    coefficient = (
        coefficient_sum(p, q, c) if objective == "sum" else coefficient_min(p, q, c)
    )
    return result(
        ASYMPTOTIC, coefficient, f"asymptotic/{objective}",
        "coefficient of n^2, exact up to o(n^2); valid for c >= p+q",
    )


def fraction_str(value: Union[int, Fraction, _InfiniteThreshold]) -> str:
    """Canonical text for rational outputs; integers print without /1."""
    if isinstance(value, _InfiniteThreshold):
        return "inf"
    return str(Fraction(value))


def threshold_json(ts: ThresholdSet) -> dict:
    """Serialization with exact descriptors plus 12-digit decimals."""

    def surd_entry(s: SurdValue) -> dict:
        return {"exact": s.descriptor(), "decimal": f"{s.float_value():.12f}"}

    if isinstance(ts.t2, _InfiniteThreshold):
        t2_entry = {"exact": "inf", "decimal": "inf"}
    else:
        t2_entry = {"exact": fraction_str(ts.t2), "decimal": f"{float(ts.t2):.12f}"}
    return {
        "p": ts.p,
        "q": ts.q,
        "t1": ts.t1,
        "t2": t2_entry,
        "t3": surd_entry(ts.t3),
        "t4": surd_entry(ts.t4),
        "chain": ts.chain,
    }
