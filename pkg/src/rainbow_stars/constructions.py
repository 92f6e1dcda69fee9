"""Extremal construction families: collections that avoid a rainbow star.

Each family is a deterministic generator parameterized by (n, c, p, q) with an
explicit applicability domain.  A build returns the collection, the partition
data actually used, per-color edge counts derived from the partition
arithmetic (asserted against the materialized collection), and the rational
n^2 coefficients the family is designed to attain.  Every build is certified
rainbow-star-free by the detector before it is returned.

Conventions shared by the partitioned families: parts are sized with the
largest-remainder method over exact rational targets (ties broken by lower
part index), color subsets are assigned to parts in colexicographic order,
and vertices 1..n fill the parts consecutively.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Union

from . import bounds as _bounds
from .detector import find_rainbow_star
from .model import DigraphCollection, EdgeCountSummary, StarPattern, edge_counts


class ConstructionFamily(Enum):
    COMPLETE_PREFIX = "COMPLETE_PREFIX"
    ASSIGNED_OUT = "ASSIGNED_OUT"
    CYCLIC_REMAINDER = "CYCLIC_REMAINDER"
    AC_SPLIT_SUM = "AC_SPLIT_SUM"
    B_ONLY = "B_ONLY"
    AB_MIX = "AB_MIX"
    A_ONLY = "A_ONLY"
    AC_MIN = "AC_MIN"
    S11_COMPLETE1 = "S11_COMPLETE1"
    BIPARTITE_S11 = "BIPARTITE_S11"
    REMARK_CN = "REMARK_CN"
    REMARK_NQ = "REMARK_NQ"
    TRIANGLE_N3 = "TRIANGLE_N3"


class ApplicabilityError(ValueError):
    """Parameters outside a family's domain; message names the failed check."""


@dataclass(frozen=True)
class PartGroup:
    """One part: a label, its assigned color subset, and its vertices."""

    label: str
    colors: tuple[int, ...]
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class PartsInfo:
    """Partition data of a build.

    vertex_colors[v-1] is the color subset assigned to vertex v (empty for
    families without per-vertex color assignment).
    """

    groups: tuple[PartGroup, ...]
    vertex_colors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConstructionOutput:
    family: ConstructionFamily
    n: int
    c: int
    p: int
    q: int
    collection: DigraphCollection
    predicted_counts: EdgeCountSummary
    predicted_coefficients: dict[str, Fraction]
    parts: PartsInfo
    certified_free: bool


def colex_subsets(c: int, k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of {1..c} in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k, c + 1):
        for rest in colex_subsets(top - 1, k - 1):
            yield rest + (top,)


def proportional_sizes(n: int, weights: list[Fraction]) -> list[int]:
    """Integer sizes summing to n, near n*weight, by largest remainder.

    Weights must be nonnegative rationals summing to 1.  Ties in the
    remainder go to the lower index, making the split deterministic.
    """
    if any(w < 0 for w in weights):
        raise ValueError(f"negative weight in {weights}")
    if sum(weights) != 1:
        raise ValueError(f"weights must sum to 1, got {sum(weights)}")
    targets = [n * w for w in weights]
    sizes = [int(t) for t in targets]  # floor: targets are nonnegative
    leftover = n - sum(sizes)
    order = sorted(range(len(weights)), key=lambda j: (-(targets[j] - sizes[j]), j))
    for j in order[:leftover]:
        sizes[j] += 1
    return sizes


def _mask(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def _require(condition: bool, family: ConstructionFamily, message: str) -> None:
    if not condition:
        raise ApplicabilityError(f"{family.value}: {message}")


def _consecutive_parts(n: int, sizes: list[int], start: int = 1) -> list[tuple[int, ...]]:
    parts = []
    at = start
    for s in sizes:
        parts.append(tuple(range(at, at + s)))
        at += s
    return parts


def _summary(per_color: list[int]) -> EdgeCountSummary:
    return EdgeCountSummary(tuple(per_color), sum(per_color), min(per_color))


# -- family builders ---------------------------------------------------------
# Each returns (rows, predicted per-color counts, coefficients, parts info).


def _build_complete_prefix(n, c, p, q):
    k = p + q - 1
    full = (1 << n) - 1
    rows = [
        [(full & ~(1 << (u - 1))) if i < k else 0 for u in range(1, n + 1)]
        for i in range(c)
    ]
    per_color = [n * (n - 1)] * k + [0] * (c - k)
    coefficients = {"sum": Fraction(max(k, 0))}
    parts = PartsInfo((), ((),) * n)
    return rows, per_color, coefficients, parts


def _assigned_out_rows(n, c, q, label):
    """Shared core of ASSIGNED_OUT and A_ONLY: parts own (q-1)-subsets and
    their vertices send edges to everyone in exactly those colors."""
    count = math.comb(c, q - 1)
    subsets = list(colex_subsets(c, q - 1))
    sizes = proportional_sizes(n, [Fraction(1, count)] * count)
    parts = _consecutive_parts(n, sizes)
    full = (1 << n) - 1
    rows = [[0] * n for _ in range(c)]
    vertex_colors = [()] * n
    for subset, vertices in zip(subsets, parts):
        for u in vertices:
            vertex_colors[u - 1] = subset
            for i in subset:
                rows[i - 1][u - 1] = full & ~(1 << (u - 1))
    assigned = [0] * (c + 1)
    for subset, vertices in zip(subsets, parts):
        for i in subset:
            assigned[i] += len(vertices)
    per_color = [assigned[i] * (n - 1) for i in range(1, c + 1)]
    groups = tuple(
        PartGroup(f"{label}{j + 1}", subsets[j], parts[j]) for j in range(count)
    )
    return rows, per_color, PartsInfo(groups, tuple(vertex_colors))


def _build_assigned_out(n, c, p, q):
    rows, per_color, parts = _assigned_out_rows(n, c, q, "A")
    return rows, per_color, {"min": Fraction(q - 1, c)}, parts


def _build_a_only(n, c, p, q):
    rows, per_color, parts = _assigned_out_rows(n, c, q, "A")
    return rows, per_color, {"min": Fraction(q - 1, c)}, parts


def _build_cyclic_remainder(n, c, p, q):
    total = n * (q - 1)
    r = total % c
    kept = total - r
    # the assignment sequence walks colors 0,1,...,c-1 cyclically (0-based),
    # q-1 consecutive colors per vertex; drop the last r assignments
    vertex_colors: list[tuple[int, ...]] = []
    position = 0
    for v in range(1, n + 1):
        own = []
        for _ in range(q - 1):
            if position < kept:
                own.append(position % c + 1)
            position += 1
        vertex_colors.append(tuple(sorted(own)))
    full = (1 << n) - 1
    rows = [[0] * n for _ in range(c)]
    readded_per_color = [0] * (c + 1)
    for v in range(1, n + 1):
        own = set(vertex_colors[v - 1])
        for i in own:
            rows[i - 1][v - 1] = full & ~(1 << (v - 1))
        missing = (q - 1) - len(own)
        if missing:
            targets = [u for u in range(1, n + 1) if u != v][:missing]
            tmask = _mask(targets)
            for i in range(1, c + 1):
                if i not in own:
                    rows[i - 1][v - 1] |= tmask
                    readded_per_color[i] += len(targets)
    per_assign = kept // c
    per_color = [per_assign * (n - 1) + readded_per_color[i] for i in range(1, c + 1)]
    parts = PartsInfo((), tuple(vertex_colors))
    return rows, per_color, {}, parts


def _build_ac_split_sum(n, c, p, q):
    denominator = 2 * (c - q + 1)
    weight_a = Fraction(c - p + 1, denominator)
    weight_c = Fraction(c + p - 2 * q + 1, denominator)
    size_a, size_c = proportional_sizes(n, [weight_a, weight_c])
    a_vertices = tuple(range(1, size_a + 1))
    c_vertices = tuple(range(size_a + 1, n + 1))
    mask_a = _mask(a_vertices)
    full = (1 << n) - 1
    rows = [[0] * n for _ in range(c)]
    for i in range(1, c + 1):
        if i <= p - 1:
            for u in range(1, n + 1):
                rows[i - 1][u - 1] = full & ~(1 << (u - 1))
        elif i <= q - 1:
            for u in a_vertices:
                rows[i - 1][u - 1] = mask_a & ~(1 << (u - 1))
            for u in c_vertices:
                rows[i - 1][u - 1] = mask_a
        else:
            for u in c_vertices:
                rows[i - 1][u - 1] = mask_a
    per_color = (
        [n * (n - 1)] * (p - 1)
        + [size_a * (size_a - 1) + size_c * size_a] * (q - p)
        + [size_c * size_a] * (c - q + 1)
    )
    coefficient = Fraction((c - p + 1) ** 2, 4 * (c - q + 1)) + (p - 1)
    parts = PartsInfo(
        (PartGroup("A", (), a_vertices), PartGroup("C", (), c_vertices)),
        ((),) * n,
    )
    return rows, per_color, {"sum": coefficient}, parts


def _build_b_only(n, c, p, q):
    count = math.comb(c, p + q - 1)
    subsets = list(colex_subsets(c, p + q - 1))
    sizes = proportional_sizes(n, [Fraction(1, count)] * count)
    parts = _consecutive_parts(n, sizes)
    union_mask = [0] * (c + 1)
    union_size = [0] * (c + 1)
    vertex_colors = [()] * n
    for subset, vertices in zip(subsets, parts):
        pmask = _mask(vertices)
        for u in vertices:
            vertex_colors[u - 1] = subset
        for i in subset:
            union_mask[i] |= pmask
            union_size[i] += len(vertices)
    rows = [[0] * n for _ in range(c)]
    for i in range(1, c + 1):
        m = union_mask[i]
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length()
            rows[i - 1][u - 1] = m & ~low
    per_color = [union_size[i] * (union_size[i] - 1) for i in range(1, c + 1)]
    coefficients = {
        "min": Fraction((p + q - 1) ** 2, c * c),
        "sum": Fraction((p + q - 1) ** 2, c),
    }
    groups = tuple(PartGroup(f"B{j + 1}", subsets[j], parts[j]) for j in range(count))
    return rows, per_color, coefficients, PartsInfo(groups, tuple(vertex_colors))


def _build_ab_mix(n, c, p, q):
    count_b = math.comb(c, p + q - 1)
    count_a = math.comb(c, q - 1)
    denominator = 2 * p * (c - p - q + 1)
    weight_b = Fraction((q - 1) * (p + q - 1) - c * (q - p - 1), denominator)
    weight_a = Fraction((p + q - 1) * (c - 2 * p - q + 1), denominator)
    n_a, n_b = proportional_sizes(n, [weight_a, weight_b])
    a_subsets = list(colex_subsets(c, q - 1))
    b_subsets = list(colex_subsets(c, p + q - 1))
    a_parts = _consecutive_parts(n_a, proportional_sizes(n_a, [Fraction(1, count_a)] * count_a))
    b_parts = _consecutive_parts(n_b, proportional_sizes(n_b, [Fraction(1, count_b)] * count_b), start=n_a + 1)
    mask_a_all = _mask(range(1, n_a + 1))
    vertex_colors = [()] * n
    a_mask_by_color = [0] * (c + 1)
    b_mask_by_color = [0] * (c + 1)
    a_size_by_color = [0] * (c + 1)
    b_size_by_color = [0] * (c + 1)
    for subset, vertices in zip(a_subsets, a_parts):
        pmask = _mask(vertices)
        for u in vertices:
            vertex_colors[u - 1] = subset
        for i in subset:
            a_mask_by_color[i] |= pmask
            a_size_by_color[i] += len(vertices)
    for subset, vertices in zip(b_subsets, b_parts):
        pmask = _mask(vertices)
        for u in vertices:
            vertex_colors[u - 1] = subset
        for i in subset:
            b_mask_by_color[i] |= pmask
            b_size_by_color[i] += len(vertices)
    rows = [[0] * n for _ in range(c)]
    per_color = []
    for i in range(1, c + 1):
        sources = a_mask_by_color[i] | b_mask_by_color[i]
        targets = mask_a_all | b_mask_by_color[i]
        rest = sources
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length()
            rows[i - 1][u - 1] = targets & ~low
        src = a_size_by_color[i] + b_size_by_color[i]
        per_color.append(src * (n_a + b_size_by_color[i]) - src)
    coefficient = Fraction(
        (c - q + 1) ** 2 * (p + q - 1) ** 2, 4 * c * c * p * (c - p - q + 1)
    )
    groups = tuple(
        PartGroup(f"A{j + 1}", a_subsets[j], a_parts[j]) for j in range(count_a)
    ) + tuple(PartGroup(f"B{j + 1}", b_subsets[j], b_parts[j]) for j in range(count_b))
    return rows, per_color, {"min": coefficient}, PartsInfo(groups, tuple(vertex_colors))


def _build_ac_min(n, c, p, q):
    count_a = math.comb(c, q - 1)
    count_c = math.comb(c, p - 1)
    denominator = 2 * (c - p + 1) * (c - q + 1)
    weight_a = Fraction((c - p + 1) ** 2 + (p - 1) * (q - p), denominator)
    weight_c = Fraction((c - q + 1) ** 2 - (q - 1) * (q - p), denominator)
    n_a, n_c = proportional_sizes(n, [weight_a, weight_c])
    a_subsets = list(colex_subsets(c, q - 1))
    c_subsets = list(colex_subsets(c, p - 1))
    a_parts = _consecutive_parts(n_a, proportional_sizes(n_a, [Fraction(1, count_a)] * count_a))
    c_parts = _consecutive_parts(n_c, proportional_sizes(n_c, [Fraction(1, count_c)] * count_c), start=n_a + 1)
    mask_a_all = _mask(range(1, n_a + 1))
    mask_c_all = _mask(range(n_a + 1, n + 1))
    vertex_colors = [()] * n
    a_mask_by_color = [0] * (c + 1)
    c_mask_by_color = [0] * (c + 1)
    a_size_by_color = [0] * (c + 1)
    c_size_by_color = [0] * (c + 1)
    for subset, vertices in zip(a_subsets, a_parts):
        pmask = _mask(vertices)
        for u in vertices:
            vertex_colors[u - 1] = subset
        for i in subset:
            a_mask_by_color[i] |= pmask
            a_size_by_color[i] += len(vertices)
    for subset, vertices in zip(c_subsets, c_parts):
        pmask = _mask(vertices)
        for u in vertices:
            vertex_colors[u - 1] = subset
        for i in subset:
            c_mask_by_color[i] |= pmask
            c_size_by_color[i] += len(vertices)
    rows = [[0] * n for _ in range(c)]
    per_color = []
    for i in range(1, c + 1):
        sources = a_mask_by_color[i] | mask_c_all
        targets = mask_a_all | c_mask_by_color[i]
        rest = sources
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length()
            rows[i - 1][u - 1] = targets & ~low
        alpha_i, gamma_i = a_size_by_color[i], c_size_by_color[i]
        per_color.append((alpha_i + n_c) * (n_a + gamma_i) - alpha_i - gamma_i)
    coefficient = Fraction(
        (c * c - (p - 1) * (q - 1)) ** 2, 4 * c * c * (c - p + 1) * (c - q + 1)
    )
    groups = tuple(
        PartGroup(f"A{j + 1}", a_subsets[j], a_parts[j]) for j in range(count_a)
    ) + tuple(PartGroup(f"C{j + 1}", c_subsets[j], c_parts[j]) for j in range(count_c))
    return rows, per_color, {"min": coefficient}, PartsInfo(groups, tuple(vertex_colors))


def _build_s11_complete1(n, c, p, q):
    full = (1 << n) - 1
    rows = [
        [(full & ~(1 << (u - 1))) if i == 0 else 0 for u in range(1, n + 1)]
        for i in range(c)
    ]
    per_color = [n * (n - 1)] + [0] * (c - 1)
    return rows, per_color, {}, PartsInfo((), ((),) * n)


def _build_bipartite_s11(n, c, p, q):
    left = tuple(range(1, n // 2 + 1))
    right = tuple(range(n // 2 + 1, n + 1))
    mask_right = _mask(right)
    rows = [
        [mask_right if u in left else 0 for u in range(1, n + 1)]
        for _ in range(c)
    ]
    per_color = [len(left) * len(right)] * c
    coefficients = {"min": Fraction(1, 4), "sum": Fraction(c, 4)}
    parts = PartsInfo(
        (PartGroup("left", (), left), PartGroup("right", (), right)),
        ((),) * n,
    )
    return rows, per_color, coefficients, parts


def _build_remark_cn(n, c, p, q):
    rows = [[0] * n for _ in range(c)]
    for v in range(1, n + 1):
        targets = [(v - 1 + k) % n + 1 for k in range(1, q)]
        tmask = _mask(targets)
        for i in range(c):
            rows[i][v - 1] = tmask
    per_color = [n * (q - 1)] * c
    return rows, per_color, {}, PartsInfo((), ((),) * n)


def _build_remark_nq(n, c, p, q):
    full = (1 << n) - 1
    rows = [
        [full & ~(1 << (u - 1)) for u in range(1, n + 1)]
        for _ in range(c)
    ]
    per_color = [n * (n - 1)] * c
    return rows, per_color, {}, PartsInfo((), ((),) * n)


def _build_triangle_n3(n, c, p, q):
    # G_1 = 1->2->3->1, G_2 the reverse orientation
    forward = [(1, 2), (2, 3), (3, 1)]
    rows = [[0] * 3 for _ in range(2)]
    for (u, v) in forward:
        rows[0][u - 1] |= 1 << (v - 1)
        rows[1][v - 1] |= 1 << (u - 1)
    per_color = [3, 3]
    return rows, per_color, {}, PartsInfo((), ((), (), ()))


_BUILDERS = {
    ConstructionFamily.COMPLETE_PREFIX: _build_complete_prefix,
    ConstructionFamily.ASSIGNED_OUT: _build_assigned_out,
    ConstructionFamily.CYCLIC_REMAINDER: _build_cyclic_remainder,
    ConstructionFamily.AC_SPLIT_SUM: _build_ac_split_sum,
    ConstructionFamily.B_ONLY: _build_b_only,
    ConstructionFamily.AB_MIX: _build_ab_mix,
    ConstructionFamily.A_ONLY: _build_a_only,
    ConstructionFamily.AC_MIN: _build_ac_min,
    ConstructionFamily.S11_COMPLETE1: _build_s11_complete1,
    ConstructionFamily.BIPARTITE_S11: _build_bipartite_s11,
    ConstructionFamily.REMARK_CN: _build_remark_cn,
    ConstructionFamily.REMARK_NQ: _build_remark_nq,
    ConstructionFamily.TRIANGLE_N3: _build_triangle_n3,
}


def build(family: ConstructionFamily, n: int, c: int, p: int, q: int) -> ConstructionOutput:
    """Materialize a family at (n, c, p, q), certify freeness, check counts.

    Raises ApplicabilityError outside the family domain and RuntimeError if
    the materialized collection contradicts the partition arithmetic or
    contains a rainbow star (either would be a builder defect, not bad input).
    """
    reason = applicability_error(family, n, c, p, q)
    if reason is not None:
        raise ApplicabilityError(reason)
    rows, per_color, coefficients, parts = _BUILDERS[family](n, c, p, q)
    collection = DigraphCollection.from_out_rows(n, c, rows)
    predicted = _summary(per_color)
    actual = edge_counts(collection)
    if actual != predicted:
        raise RuntimeError(
            f"internal error: {family.value} counts {actual.per_color} "
            f"differ from partition arithmetic {predicted.per_color}"
        )
    witness = find_rainbow_star(collection, StarPattern(p, q))
    if witness is not None:
        raise RuntimeError(
            f"internal error: {family.value} build contains a rainbow star at "
            f"center {witness.center}"
        )
    return ConstructionOutput(
        family, n, c, p, q, collection, predicted, coefficients, parts, True
    )


def applicability_error(family: ConstructionFamily, n: int, c: int, p: int, q: int) -> Optional[str]:
    """The domain violation message for these parameters, or None if valid.

    Checks the domain only; does not materialize edges.
    """
    try:
        check = _DOMAIN_CHECKS[family]
    except KeyError:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown family {family!r}") from None
    try:
        if n < 1 or c < 1:
            raise ApplicabilityError(f"{family.value}: requires n >= 1 and c >= 1, got n={n}, c={c}")
        if p < 0 or q < 0 or p + q < 1:
            raise ApplicabilityError(f"{family.value}: requires p, q >= 0 and p+q >= 1, got ({p}, {q})")
        check(n, c, p, q)
    except ApplicabilityError as exc:
        return str(exc)
    return None


def _domain_complete_prefix(n, c, p, q):
    _require(c >= max(1, p + q - 1), ConstructionFamily.COMPLETE_PREFIX, f"requires c >= p+q-1 = {p + q - 1}, got c={c}")


def _domain_assigned_out(n, c, p, q):
    _require(p == 0, ConstructionFamily.ASSIGNED_OUT, f"requires p = 0, got p={p}")
    _require(1 <= q <= c, ConstructionFamily.ASSIGNED_OUT, f"requires 1 <= q <= c, got q={q}, c={c}")
    count = math.comb(c, q - 1)
    _require(n >= count, ConstructionFamily.ASSIGNED_OUT, f"part count binom(c, q-1) = {count} exceeds n = {n}")


def _domain_cyclic_remainder(n, c, p, q):
    _require(p == 0, ConstructionFamily.CYCLIC_REMAINDER, f"requires p = 0, got p={p}")
    _require(n > c, ConstructionFamily.CYCLIC_REMAINDER, f"requires n > c, got n={n}, c={c}")
    _require(c >= q >= 1, ConstructionFamily.CYCLIC_REMAINDER, f"requires c >= q >= 1, got c={c}, q={q}")


def _domain_ac_split_sum(n, c, p, q):
    _require(1 <= p <= q, ConstructionFamily.AC_SPLIT_SUM, f"requires 1 <= p <= q, got ({p}, {q})")
    _require(c >= p + q, ConstructionFamily.AC_SPLIT_SUM, f"requires c >= p+q = {p + q}, got c={c}")
    _require(c + p - 2 * q + 1 >= 0, ConstructionFamily.AC_SPLIT_SUM, f"requires c >= 2q-p-1 = {2 * q - p - 1}, got c={c}")
    _require(n >= 2, ConstructionFamily.AC_SPLIT_SUM, f"part count 2 exceeds n = {n}")


def _domain_b_only(n, c, p, q):
    _require(1 <= p <= q, ConstructionFamily.B_ONLY, f"requires 1 <= p <= q, got ({p}, {q})")
    _require(c >= p + q, ConstructionFamily.B_ONLY, f"requires c >= p+q = {p + q}, got c={c}")
    count = math.comb(c, p + q - 1)
    _require(n >= count, ConstructionFamily.B_ONLY, f"part count binom(c, p+q-1) = {count} exceeds n = {n}")


def _domain_ab_mix(n, c, p, q):
    _require(1 <= p <= q, ConstructionFamily.AB_MIX, f"requires 1 <= p <= q, got ({p}, {q})")
    _require(c >= p + q, ConstructionFamily.AB_MIX, f"requires c >= p+q = {p + q}, got c={c}")
    ts = _bounds.thresholds(p, q)
    _require(c >= ts.t1, ConstructionFamily.AB_MIX, f"requires c >= t1 = {ts.t1}, got c={c}")
    _require(
        isinstance(ts.t2, _bounds._InfiniteThreshold) or Fraction(c) <= ts.t2,
        ConstructionFamily.AB_MIX,
        f"requires c <= t2 = {ts.t2}, got c={c}",
    )
    count = math.comb(c, p + q - 1) + math.comb(c, q - 1)
    _require(n >= count, ConstructionFamily.AB_MIX, f"part count binom(c,p+q-1) + binom(c,q-1) = {count} exceeds n = {n}")


def _domain_a_only(n, c, p, q):
    _require(1 <= p <= q, ConstructionFamily.A_ONLY, f"requires 1 <= p <= q, got ({p}, {q})")
    _require(c >= p + q, ConstructionFamily.A_ONLY, f"requires c >= p+q = {p + q}, got c={c}")
    count = math.comb(c, q - 1)
    _require(n >= count, ConstructionFamily.A_ONLY, f"part count binom(c, q-1) = {count} exceeds n = {n}")


def _domain_ac_min(n, c, p, q):
    _require(1 <= p <= q, ConstructionFamily.AC_MIN, f"requires 1 <= p <= q, got ({p}, {q})")
    _require(c >= p + q, ConstructionFamily.AC_MIN, f"requires c >= p+q = {p + q}, got c={c}")
    ts = _bounds.thresholds(p, q)
    _require(
        _bounds.compare_int_surd(c, ts.t4) >= 0,
        ConstructionFamily.AC_MIN,
        f"requires c >= t4 = {ts.t4.descriptor()}, got c={c}",
    )
    count = math.comb(c, q - 1) + math.comb(c, p - 1)
    _require(n >= count, ConstructionFamily.AC_MIN, f"part count binom(c,q-1) + binom(c,p-1) = {count} exceeds n = {n}")


def _domain_s11_complete1(n, c, p, q):
    _require(p == 1 and q == 1, ConstructionFamily.S11_COMPLETE1, f"requires (p, q) = (1, 1), got ({p}, {q})")


def _domain_bipartite_s11(n, c, p, q):
    _require(p == 1 and q == 1, ConstructionFamily.BIPARTITE_S11, f"requires (p, q) = (1, 1), got ({p}, {q})")


def _domain_remark_cn(n, c, p, q):
    _require(p == 0, ConstructionFamily.REMARK_CN, f"requires p = 0, got p={p}")
    _require(c >= n >= q >= 1, ConstructionFamily.REMARK_CN, f"requires c >= n >= q >= 1, got c={c}, n={n}, q={q}")


def _domain_remark_nq(n, c, p, q):
    _require(p == 0, ConstructionFamily.REMARK_NQ, f"requires p = 0, got p={p}")
    _require(n <= q, ConstructionFamily.REMARK_NQ, f"requires n <= q, got n={n}, q={q}")


def _domain_triangle_n3(n, c, p, q):
    _require(n == 3, ConstructionFamily.TRIANGLE_N3, f"requires n = 3, got n={n}")
    _require(c == 2, ConstructionFamily.TRIANGLE_N3, f"requires c = 2, got c={c}")
    _require(p == 1 and q == 1, ConstructionFamily.TRIANGLE_N3, f"requires (p, q) = (1, 1), got ({p}, {q})")


_DOMAIN_CHECKS = {
    ConstructionFamily.COMPLETE_PREFIX: _domain_complete_prefix,
    ConstructionFamily.ASSIGNED_OUT: _domain_assigned_out,
    ConstructionFamily.CYCLIC_REMAINDER: _domain_cyclic_remainder,
    ConstructionFamily.AC_SPLIT_SUM: _domain_ac_split_sum,
    ConstructionFamily.B_ONLY: _domain_b_only,
    ConstructionFamily.AB_MIX: _domain_ab_mix,
    ConstructionFamily.A_ONLY: _domain_a_only,
    ConstructionFamily.AC_MIN: _domain_ac_min,
    ConstructionFamily.S11_COMPLETE1: _domain_s11_complete1,
    ConstructionFamily.BIPARTITE_S11: _domain_bipartite_s11,
    ConstructionFamily.REMARK_CN: _domain_remark_cn,
    ConstructionFamily.REMARK_NQ: _domain_remark_nq,
    ConstructionFamily.TRIANGLE_N3: _domain_triangle_n3,
}


def predicted_value(
    family: ConstructionFamily, n: int, c: int, p: int, q: int, objective: str
) -> Union[int, Fraction]:
    """The value a family is built to reach: exact integer or n^2 coefficient.

    Exact families (and exact objectives of mixed families) return integers;
    asymptotic claims return Fractions.  Raises ApplicabilityError outside
    the domain and ValueError for objectives the family makes no claim about.
    """
    if objective not in _bounds.OBJECTIVES:
        raise ValueError(f"objective must be one of {_bounds.OBJECTIVES}, got {objective!r}")
    reason = applicability_error(family, n, c, p, q)
    if reason is not None:
        raise ApplicabilityError(reason)
    F = ConstructionFamily
    if family == F.COMPLETE_PREFIX:
        k = p + q - 1
        if objective == "sum":
            return k * (n * n - n)
        return n * n - n if c == k else 0
    if family in (F.ASSIGNED_OUT, F.A_ONLY):
        if objective == "sum":
            return (q - 1) * (n * n - n)
        count = math.comb(c, q - 1)
        sizes = proportional_sizes(n, [Fraction(1, count)] * count)
        assigned = [0] * (c + 1)
        for subset, size in zip(colex_subsets(c, q - 1), sizes):
            for i in subset:
                assigned[i] += size
        return min(assigned[1:]) * (n - 1)
    if family == F.CYCLIC_REMAINDER:
        total = n * (q - 1)
        r = total % c
        if objective == "min":
            return (total // c) * (n - 1) + r
        # each kept assignment contributes n-1 edges; each vertex with x
        # removed assignments re-adds x targets in its c-(q-1)+x other colors
        kept = total - r
        removed_by_vertex = [0] * (n + 1)
        for pos in range(kept, total):
            removed_by_vertex[pos // (q - 1) + 1] += 1
        extra = sum(
            x * (c - (q - 1) + x) for x in removed_by_vertex[1:] if x
        )
        return kept * (n - 1) + extra
    if family == F.AC_SPLIT_SUM:
        if objective == "sum":
            return Fraction((c - p + 1) ** 2, 4 * (c - q + 1)) + (p - 1)
        raise ValueError(f"{family.value} makes no min prediction")
    if family == F.B_ONLY:
        count = math.comb(c, p + q - 1)
        if n % count == 0:
            size = n * (p + q - 1) // c if (n * (p + q - 1)) % c == 0 else None
            if size is not None:
                value = size * (size - 1)
                return c * value if objective == "sum" else value
        if objective == "min":
            return Fraction((p + q - 1) ** 2, c * c)
        return Fraction((p + q - 1) ** 2, c)
    if family == F.AB_MIX:
        if objective == "min":
            return Fraction((c - q + 1) ** 2 * (p + q - 1) ** 2, 4 * c * c * p * (c - p - q + 1))
        raise ValueError(f"{family.value} makes no sum prediction")
    if family == F.AC_MIN:
        if objective == "min":
            return Fraction((c * c - (p - 1) * (q - 1)) ** 2, 4 * c * c * (c - p + 1) * (c - q + 1))
        raise ValueError(f"{family.value} makes no sum prediction")
    if family == F.S11_COMPLETE1:
        if objective == "sum":
            return n * n - n
        return n * n - n if c == 1 else 0
    if family == F.BIPARTITE_S11:
        value = n * n // 4
        return c * value if objective == "sum" else value
    if family == F.REMARK_CN:
        return (q - 1) * c * n if objective == "sum" else n * (q - 1)
    if family == F.REMARK_NQ:
        return c * n * (n - 1) if objective == "sum" else n * (n - 1)
    if family == F.TRIANGLE_N3:
        return 6 if objective == "sum" else 3
    raise ValueError(f"unknown family {family!r}")  # pragma: no cover


@dataclass(frozen=True)
class CatalogEntry:
    family: ConstructionFamily
    applicability: str
    prediction: str


def catalog() -> list[CatalogEntry]:
    """Stable-ordered descriptions of all 13 families."""
    return [
        CatalogEntry(
            ConstructionFamily.COMPLETE_PREFIX,
            "c >= p+q-1; any n",
            "first p+q-1 colors complete: sum = (p+q-1)(n^2-n), sum coefficient p+q-1",
        ),
        CatalogEntry(
            ConstructionFamily.ASSIGNED_OUT,
            "p = 0, 1 <= q <= c, n >= binom(c, q-1)",
            "parts own (q-1)-color subsets, edges to everyone: sum = (q-1)(n^2-n)",
        ),
        CatalogEntry(
            ConstructionFamily.CYCLIC_REMAINDER,
            "p = 0, n > c >= q >= 1",
            "balanced cyclic color assignment: min = floor(n(q-1)/c)(n-1) + r when q-1 divides r",
        ),
        CatalogEntry(
            ConstructionFamily.AC_SPLIT_SUM,
            "1 <= p <= q, c >= max(p+q, 2q-p-1), n >= 2",
            "A/C split: sum coefficient (c-p+1)^2/(4(c-q+1)) + p-1",
        ),
        CatalogEntry(
            ConstructionFamily.B_ONLY,
            "1 <= p <= q, c >= p+q, n >= binom(c, p+q-1)",
            "complete digraphs on color-sharing parts: min coefficient (p+q-1)^2/c^2",
        ),
        CatalogEntry(
            ConstructionFamily.AB_MIX,
            "1 <= p <= q, t1 <= c <= t2, n >= binom(c,p+q-1) + binom(c,q-1)",
            "A parts into all, B parts complete: min coefficient (c-q+1)^2(p+q-1)^2/(4c^2 p(c-p-q+1))",
        ),
        CatalogEntry(
            ConstructionFamily.A_ONLY,
            "1 <= p <= q, c >= p+q, n >= binom(c, q-1)",
            "out-assignment reused for p >= 1: min coefficient (q-1)/c",
        ),
        CatalogEntry(
            ConstructionFamily.AC_MIN,
            "1 <= p <= q, c >= max(p+q, t4), n >= binom(c,q-1) + binom(c,p-1)",
            "assigned A to A plus C both ways: min coefficient (c^2-(p-1)(q-1))^2/(4c^2(c-p+1)(c-q+1))",
        ),
        CatalogEntry(
            ConstructionFamily.S11_COMPLETE1,
            "(p, q) = (1, 1); any n, c",
            "one complete color: sum = n^2 - n",
        ),
        CatalogEntry(
            ConstructionFamily.BIPARTITE_S11,
            "(p, q) = (1, 1); any n, c",
            "every color the same oriented bipartite graph: min = floor(n^2/4)",
        ),
        CatalogEntry(
            ConstructionFamily.REMARK_CN,
            "p = 0, c >= n >= q >= 1",
            "fixed q-1 targets per vertex in every color: sum = (q-1)cn",
        ),
        CatalogEntry(
            ConstructionFamily.REMARK_NQ,
            "p = 0, n <= q; any c",
            "all colors complete: sum = c(n^2-n)",
        ),
        CatalogEntry(
            ConstructionFamily.TRIANGLE_N3,
            "n = 3, c = 2, (p, q) = (1, 1)",
            "opposite triangle orientations: min = 3",
        ),
    ]
