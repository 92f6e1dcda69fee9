"""Exact optima over rainbow-star-free collections.

Two engines.  max_exact is a branch-and-bound over individual edge slots and
works for any pattern, but only at toy sizes (the slot count c*n*(n-1) is
guarded).  cover_oracle_s0q handles out-star patterns at moderate n by
searching cover structures instead of edge sets: a collection is free of
rainbow (0, q) stars exactly when each vertex's (target, color) incidence
graph has a vertex cover of size at most q-1, and maximal realizations of
covers dominate everything else, so the search space collapses to per-vertex
cover shapes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .bounds import OBJECTIVES
from .detector import find_rainbow_star
from .model import DigraphCollection, StarPattern, edge_counts

FIRM_SLOT_GUARD = 36
STRETCH_SLOT_GUARD = 48
COVER_GUARDS = {"n": 64, "c": 8, "q": 6}
DEFAULT_BUDGET_SECS = 60.0
_BUDGET_CHECK_MASK = 0xFFF  # test the clock every 4096 nodes


@dataclass(frozen=True)
class SearchOutcome:
    optimum: int
    witness: DigraphCollection
    objective: str
    proved_optimal: bool
    nodes_explored: int
    elapsed: float


@dataclass(frozen=True)
class CoverStructure:
    """Per-vertex covers: colors in a_sets saturate, targets in b_sets catch
    the rest.  Valid when |a_sets[v]| + |b_sets[v]| <= q-1 for every v."""

    n: int
    c: int
    q: int
    a_sets: tuple[frozenset[int], ...]
    b_sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.a_sets) != self.n or len(self.b_sets) != self.n:
            raise ValueError("cover structure needs one (A_v, B_v) pair per vertex")
        colors = frozenset(range(1, self.c + 1))
        vertices = frozenset(range(1, self.n + 1))
        for v in range(1, self.n + 1):
            a_v, b_v = self.a_sets[v - 1], self.b_sets[v - 1]
            if len(a_v) + len(b_v) > self.q - 1:
                raise ValueError(
                    f"vertex {v}: cover size {len(a_v)} + {len(b_v)} exceeds q-1 = {self.q - 1}"
                )
            if not a_v <= colors:
                raise ValueError(f"vertex {v}: colors outside 1..{self.c}")
            if v in b_v or not b_v <= vertices:
                raise ValueError(f"vertex {v}: bad target set {sorted(b_v)}")

    def realize(self) -> DigraphCollection:
        """Maximal realization: v->u in color i iff i in A_v or u in B_v."""
        rows = [[0] * self.n for _ in range(self.c)]
        full = (1 << self.n) - 1
        for v in range(1, self.n + 1):
            bmask = 0
            for u in self.b_sets[v - 1]:
                bmask |= 1 << (u - 1)
            own = full & ~(1 << (v - 1))
            for i in range(1, self.c + 1):
                rows[i - 1][v - 1] = own if i in self.a_sets[v - 1] else bmask
        return DigraphCollection.from_out_rows(self.n, self.c, rows)


class _BudgetExpired(Exception):
    pass


def _validate_objective(objective: str) -> None:
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be one of {OBJECTIVES}, got {objective!r}")


def max_exact(
    n: int,
    c: int,
    pat: StarPattern,
    objective: str,
    budget_secs: float = DEFAULT_BUDGET_SECS,
    allow_large: bool = False,
) -> SearchOutcome:
    """Exact optimum over all rainbow-free collections at toy size.

    Branch-and-bound over edge slots in lexicographic (color, source, target)
    order with include/exclude branching.  Pruning: an incremental rainbow
    check at the two endpoints of each added edge, forward-checking that
    kills slots no longer addable, and an optimistic per-color bound.  For
    the sum objective two symmetry breaks apply: per-color counts must be
    non-increasing, and the first slot is forced into every nonempty
    candidate (sound because color and vertex relabeling preserve the sum;
    the empty collection is the starting incumbent).  Both are off for the
    min objective.

    On budget expiry the best incumbent is returned with
    proved_optimal=False.
    """
    _validate_objective(objective)
    if n < 1 or c < 1:
        raise ValueError(f"requires n >= 1 and c >= 1, got n={n}, c={c}")
    slot_count = c * n * (n - 1)
    if slot_count > STRETCH_SLOT_GUARD:
        raise ValueError(
            f"instance has c*n*(n-1) = {slot_count} slots, beyond the "
            f"stretch guard {STRETCH_SLOT_GUARD}"
        )
    if slot_count > FIRM_SLOT_GUARD and not allow_large:
        raise ValueError(
            f"instance has c*n*(n-1) = {slot_count} slots, beyond the firm "
            f"guard {FIRM_SLOT_GUARD}; pass allow_large=True to run anyway"
        )
    p, q = pat.p, pat.q
    start = time.monotonic()
    deadline = start + budget_secs

    slots = [
        (i, u, v)
        for i in range(1, c + 1)
        for u in range(1, n + 1)
        for v in range(1, n + 1)
        if v != u
    ]
    total_slots = len(slots)
    out_masks = [[0] * (n + 1) for _ in range(c + 1)]
    in_masks = [[0] * (n + 1) for _ in range(c + 1)]
    counts = [0] * (c + 1)
    chosen: list[tuple[int, int, int]] = []
    alive = [True] * total_slots

    best_value = 0
    best_edges: list[tuple[int, int, int]] = []
    nodes = 0

    def star_at(center: int) -> bool:
        """Any rainbow (p, q) star centered here, by tiny backtracking."""
        used_v = 1 << (center - 1)
        used_c = 0

        def go(need_in: int, need_out: int) -> bool:
            nonlocal used_v, used_c
            if need_in == 0 and need_out == 0:
                return True
            masks = in_masks if need_in else out_masks
            after = (need_in - 1, need_out) if need_in else (need_in, need_out - 1)
            for i in range(1, c + 1):
                if used_c >> (i - 1) & 1:
                    continue
                cand = masks[i][center] & ~used_v
                while cand:
                    low = cand & -cand
                    cand ^= low
                    used_v |= low
                    used_c |= 1 << (i - 1)
                    if go(*after):
                        return True
                    used_c &= ~(1 << (i - 1))
                    used_v &= ~low
            return False

        return go(p, q)

    def creates_star(i: int, u: int, v: int) -> bool:
        bit_u, bit_v = 1 << (u - 1), 1 << (v - 1)
        out_masks[i][u] |= bit_v
        in_masks[i][v] |= bit_u
        found = star_at(u) or star_at(v)
        out_masks[i][u] &= ~bit_v
        in_masks[i][v] &= ~bit_u
        return found

    def bound(idx: int) -> int:
        remaining = [0] * (c + 1)
        for j in range(idx, total_slots):
            if alive[j]:
                remaining[slots[j][0]] += 1
        if objective == "min":
            return min(counts[i] + remaining[i] for i in range(1, c + 1))
        total = 0
        ceiling = None
        for i in range(1, c + 1):
            cap = counts[i] + remaining[i]
            ceiling = cap if ceiling is None else min(ceiling, cap)
            total += ceiling
        return total

    def search(idx: int) -> None:
        nonlocal nodes, best_value, best_edges
        nodes += 1
        if nodes & _BUDGET_CHECK_MASK == 0 and time.monotonic() > deadline:
            raise _BudgetExpired
        if idx == total_slots:
            value = sum(counts[1:]) if objective == "sum" else min(counts[1:])
            if value > best_value:
                best_value = value
                best_edges = list(chosen)
            return
        if bound(idx) <= best_value:
            return
        i, u, v = slots[idx]
        can_include = alive[idx]
        if can_include and objective == "sum" and i > 1 and counts[i] + 1 > counts[i - 1]:
            can_include = False
        if can_include and not creates_star(i, u, v):
            out_masks[i][u] |= 1 << (v - 1)
            in_masks[i][v] |= 1 << (u - 1)
            counts[i] += 1
            chosen.append((i, u, v))
            killed = []
            for j in range(idx + 1, total_slots):
                if alive[j] and creates_star(*slots[j]):
                    alive[j] = False
                    killed.append(j)
            search(idx + 1)
            for j in killed:
                alive[j] = True
            chosen.pop()
            counts[i] -= 1
            out_masks[i][u] &= ~(1 << (v - 1))
            in_masks[i][v] &= ~(1 << (u - 1))
        if idx == 0 and objective == "sum":
            # any nonempty collection relabels so the first slot is present,
            # and the empty one is the starting incumbent
            return
        search(idx + 1)

    try:
        search(0)
        proved = True
    except _BudgetExpired:
        proved = False

    witness = DigraphCollection.from_edges(n, c, best_edges)
    _certify(witness, pat, objective, best_value)
    return SearchOutcome(
        optimum=best_value,
        witness=witness,
        objective=objective,
        proved_optimal=proved,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
    )


def _certify(witness: DigraphCollection, pat: StarPattern, objective: str, value: int) -> None:
    emb = find_rainbow_star(witness, pat)
    if emb is not None:
        raise RuntimeError(f"internal error: witness contains a rainbow star at {emb.center}")
    summary = edge_counts(witness)
    attained = summary.total if objective == "sum" else summary.minimum
    if attained != value:
        raise RuntimeError(
            f"internal error: witness attains {attained}, oracle reported {value}"
        )


def cover_oracle_s0q(n: int, c: int, q: int, objective: str) -> SearchOutcome:
    """Exact optimum for (0, q) patterns via cover-shape search.

    Domain n > c >= q >= 1 (smaller n is closed-form territory, handled by
    the bound evaluators).  Every free collection is dominated by the
    maximal realization of a cover structure, and for those the objectives
    depend only on each vertex's split a_v + b_v <= q-1.  The sum objective
    separates per vertex.  The min objective is solved exactly: enumerate
    type multiplicities, and for each distribute color-cover tokens over
    colors to maximize the smallest per-color count (depth-first over colors
    with memoization, pigeonhole upper bounds for pruning, and two seed
    layouts for the incumbent).
    """
    _validate_objective(objective)
    if not (n > c >= q >= 1):
        raise ValueError(
            f"requires n > c >= q >= 1, got n={n}, c={c}, q={q} "
            "(n <= c cases have closed forms in the bound evaluators)"
        )
    if n > COVER_GUARDS["n"] or c > COVER_GUARDS["c"] or q > COVER_GUARDS["q"]:
        raise ValueError(
            f"practical guards n <= {COVER_GUARDS['n']}, c <= {COVER_GUARDS['c']}, "
            f"q <= {COVER_GUARDS['q']}; got n={n}, c={c}, q={q}"
        )
    start = time.monotonic()
    if objective == "sum":
        value, structure, nodes = _cover_sum(n, c, q)
    else:
        value, structure, nodes = _cover_min(n, c, q)
    witness = structure.realize()
    _certify(witness, StarPattern(0, q), objective, value)
    return SearchOutcome(
        optimum=value,
        witness=witness,
        objective=objective,
        proved_optimal=True,
        nodes_explored=nodes,
        elapsed=time.monotonic() - start,
    )


def _type_value(a: int, n: int, c: int, q: int) -> int:
    # a covered colors contribute n-1 edges each; the other colors stop at
    # the q-1-a covered targets
    return a * (n - 1) + (c - a) * (q - 1 - a)


def _smallest_targets(v: int, n: int, b: int) -> frozenset[int]:
    targets: list[int] = []
    u = 1
    while len(targets) < b:
        if u != v:
            targets.append(u)
        u += 1
    return frozenset(targets)


def _cover_sum(n: int, c: int, q: int) -> tuple[int, CoverStructure, int]:
    values = [_type_value(a, n, c, q) for a in range(q)]
    best_a = max(range(q), key=lambda a: (values[a], -a))
    total = n * values[best_a]
    # token spread is irrelevant to the total; deal consecutive colors
    # cyclically so the witness is balanced anyway
    color_sets: list[frozenset[int]] = []
    offset = 0
    for _ in range(n):
        color_sets.append(frozenset((offset + k) % c + 1 for k in range(best_a)))
        offset += best_a
    b = q - 1 - best_a
    structure = CoverStructure(
        n, c, q,
        tuple(color_sets),
        tuple(_smallest_targets(v, n, b) for v in range(1, n + 1)),
    )
    return total, structure, q


def _cover_min(n: int, c: int, q: int) -> tuple[int, CoverStructure, int]:
    if q == 1:
        structure = CoverStructure(n, c, q, (frozenset(),) * n, (frozenset(),) * n)
        return 0, structure, 1

    # A type-a vertex covers a colors (its count contribution there is n-1)
    # and b = q-1-a targets (contributing b to every other color), so with
    # b_total fixed a token of type a is worth w_a = (n-1) - b = n-q+a.
    weights = [n - q + a for a in range(q)]
    nodes = 0
    best_value = -1
    best_plan: Optional[tuple[tuple[int, ...], list[list[int]]]] = None

    def inner_maxmin(mult: tuple[int, ...]) -> tuple[int, list[list[int]]]:
        """Exact max-min per-color count for fixed type multiplicities.

        Token layout: type a supplies a*mult[a] tokens of weight w_a, at
        most mult[a] per color (one per vertex).  Any per-color count matrix
        within those caps is realizable by dealing, so the search is over
        count matrices only.
        """
        nonlocal nodes
        b_total = sum(m * (q - 1 - a) for a, m in enumerate(mult))
        type_as = [a for a in range(1, q) if mult[a]]
        if not type_as:
            return b_total, [[0] * c for _ in range(q)]
        caps = [mult[a] for a in type_as]
        ws = [weights[a] for a in type_as]
        supply = tuple(a * mult[a] for a in type_as)
        t_count = len(type_as)

        memo: dict[tuple[int, tuple[int, ...]], int] = {}

        def usable(k: int, rem: tuple[int, ...]) -> int:
            return sum(ws[t] * min(rem[t], k * caps[t]) for t in range(t_count))

        def allocations(rem: tuple[int, ...], ascending: bool):
            """All per-color token vectors within caps and remaining supply."""
            opts: list[tuple[int, tuple[int, ...]]] = []

            def gen(t: int, load: int, alloc: tuple[int, ...]) -> None:
                if t == t_count:
                    opts.append((load, alloc))
                    return
                for x in range(0, min(caps[t], rem[t]) + 1):
                    gen(t + 1, load + ws[t] * x, alloc + (x,))

            gen(0, 0, ())
            opts.sort(key=(lambda o: (o[0], o[1])) if ascending else (lambda o: (-o[0], o[1])))
            return opts

        def solve(k: int, rem: tuple[int, ...]) -> int:
            nonlocal nodes
            if k == 1:
                return sum(ws[t] * min(rem[t], caps[t]) for t in range(t_count))
            key = (k, rem)
            cached = memo.get(key)
            if cached is not None:
                return cached
            nodes += 1
            best = -1
            for load, alloc in allocations(rem, ascending=False):
                if load <= best:
                    break
                rest = tuple(rem[t] - alloc[t] for t in range(t_count))
                if min(load, usable(k - 1, rest) // (k - 1)) <= best:
                    continue
                candidate = min(load, solve(k - 1, rest))
                if candidate > best:
                    best = candidate
            memo[key] = best
            return best

        value = solve(c, supply)

        # walk colors again, committing the lexicographically least
        # allocation that still attains the value
        layout = [[0] * c for _ in range(q)]
        rem = supply
        for color in range(c):
            k = c - color
            for load, alloc in allocations(rem, ascending=True):
                if load < value:
                    continue
                rest = tuple(rem[t] - alloc[t] for t in range(t_count))
                if k == 1 or solve(k - 1, rest) >= value:
                    for t in range(t_count):
                        layout[type_as[t]][color] = alloc[t]
                    rem = rest
                    break
            else:
                raise RuntimeError("internal error: layout reconstruction failed")
        return b_total + value, layout

    def upper(mult: tuple[int, ...]) -> int:
        b_total = sum(m * (q - 1 - a) for a, m in enumerate(mult))
        token_weight = sum(weights[a] * a * m for a, m in enumerate(mult))
        return b_total + token_weight // c

    def consider(mult: tuple[int, ...]) -> None:
        nonlocal best_value, best_plan, nodes
        nodes += 1
        value, layout = inner_maxmin(mult)
        if value > best_value:
            best_value = value
            best_plan = (mult, layout)

    # incumbent seeds: everything on the largest type, then the mixed shape
    # with r vertices shifted one type down
    seeds = [tuple(n if a == q - 1 else 0 for a in range(q))]
    shifted = n * (q - 1) % c
    if 0 < shifted <= n:
        seeds.append(tuple(
            shifted if a == q - 2 else (n - shifted if a == q - 1 else 0)
            for a in range(q)
        ))
    for seed in seeds:
        consider(seed)
    for mult in _compositions(n, q):
        if upper(mult) <= best_value:
            continue
        consider(mult)

    assert best_plan is not None
    mult, layout = best_plan
    # vertices grouped by type in ascending type order; deal each type's
    # per-color counts to its vertices by largest remaining capacity
    color_sets: list[set[int]] = [set() for _ in range(n)]
    types_of_vertex: list[int] = []
    at = 0
    for a in range(q):
        group = list(range(at, at + mult[a]))
        at += mult[a]
        types_of_vertex.extend([a] * mult[a])
        if not group or a == 0:
            continue
        dealt = _assign_tokens([layout[a][i] for i in range(c)], [a] * len(group))
        for j, s in zip(group, dealt):
            color_sets[j] = s
    a_sets = tuple(frozenset(s) for s in color_sets)
    b_sets = tuple(
        _smallest_targets(v, n, q - 1 - types_of_vertex[v - 1])
        for v in range(1, n + 1)
    )
    structure = CoverStructure(n, c, q, a_sets, b_sets)
    return best_value, structure, nodes


def _assign_tokens(counts_by_color: list[int], capacities: list[int]) -> list[set[int]]:
    """Concrete color sets from per-color token counts.

    counts_by_color[i-1] tokens of color i go to distinct vertices; vertex j
    accepts at most capacities[j] colors.  Greedy by largest remaining
    capacity (ties to the lower index) succeeds whenever the counts respect
    the caps, the standard realization argument for bipartite degree
    sequences with one semi-regular side.
    """
    remaining = list(capacities)
    sets: list[set[int]] = [set() for _ in capacities]
    for i, need in enumerate(counts_by_color, start=1):
        if need == 0:
            continue
        order = sorted(range(len(remaining)), key=lambda j: (-remaining[j], j))
        picked = [j for j in order if remaining[j] > 0][:need]
        if len(picked) < need:
            raise RuntimeError("internal error: token counts not realizable")
        for j in picked:
            remaining[j] -= 1
            sets[j].add(i)
    return sets


def _compositions(n: int, parts: int):
    """All tuples of `parts` nonnegative integers summing to n."""
    if parts == 1:
        yield (n,)
        return
    for head in range(n + 1):
        for rest in _compositions(n - head, parts - 1):
            yield (head,) + rest


@dataclass(frozen=True)
class CrossCheck:
    n: int
    c: int
    q: int
    objective: str
    branch_bound_value: int
    cover_value: int
    agree: bool


def cross_check(n: int, c: int, q: int, objective: str) -> CrossCheck:
    """Run both engines on one instance; they must agree exactly."""
    bb = max_exact(n, c, StarPattern(0, q), objective)
    cover = cover_oracle_s0q(n, c, q, objective)
    return CrossCheck(
        n=n,
        c=c,
        q=q,
        objective=objective,
        branch_bound_value=bb.optimum,
        cover_value=cover.optimum,
        agree=bb.optimum == cover.optimum,
    )
