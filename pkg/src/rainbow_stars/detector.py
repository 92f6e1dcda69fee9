"""Rainbow star detection and the vertex classification it induces.

A rainbow star with pattern (p, q) at center v consists of p in-edges and q
out-edges at v whose leaf vertices are pairwise distinct (and distinct from v)
and whose p+q colors are pairwise distinct.  `find_rainbow_star` is the
production search; `find_rainbow_star_naive` re-decides by raw enumeration and
`matching_fastpath_p0` re-decides the p=0 case through bipartite matching, so
the three can cross-check each other.

All functions are pure reads of an immutable collection.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import permutations

from .model import DigraphCollection, StarEmbedding, StarPattern

NAIVE_WORK_GUARD = 400


@dataclass(frozen=True)
class ColorDegreeProfile:
    """Colors in which a vertex has nonzero in- resp. out-degree."""

    vertex: int
    in_colors: frozenset[int]
    out_colors: frozenset[int]

    @staticmethod
    def of(collection: DigraphCollection, vertex: int) -> "ColorDegreeProfile":
        return ColorDegreeProfile(
            vertex,
            collection.colors_with_in_edge(vertex),
            collection.colors_with_out_edge(vertex),
        )


@dataclass(frozen=True)
class ClassificationReport:
    """Partition of the vertex set by color-degree spread.

    b_vertices: incident to edges of at most p+q-1 colors.
    a_vertices: not in B, out-edges in at most q-1 colors.
    c_vertices: not in B or A, in-edges in at most p-1 colors.
    violators: the rest; exactly the vertices passing the homomorphic
    center test (enough in-colors and out-colors for a color-disjoint,
    vertex-repeating image of the star).

    Per-color breakdowns: a_by_color[i-1] lists A-vertices with an out-edge in
    color i, c_by_color[i-1] lists C-vertices with an in-edge in color i, and
    b_by_color[i-1] lists B-vertices incident to color i at all.
    """

    pattern: StarPattern
    a_vertices: tuple[int, ...]
    b_vertices: tuple[int, ...]
    c_vertices: tuple[int, ...]
    violators: tuple[int, ...]
    a_by_color: tuple[tuple[int, ...], ...]
    b_by_color: tuple[tuple[int, ...], ...]
    c_by_color: tuple[tuple[int, ...], ...]

    @property
    def size_a(self) -> int:
        return len(self.a_vertices)

    @property
    def size_b(self) -> int:
        return len(self.b_vertices)

    @property
    def size_c(self) -> int:
        return len(self.c_vertices)


def detect_homomorphic_center(collection: DigraphCollection, v: int, pat: StarPattern) -> bool:
    """Can v center a star image when leaf vertices may coincide?

    True iff disjoint color sets P ⊆ in_colors(v), Q ⊆ out_colors(v) with
    |P| = p, |Q| = q exist.  Closed form: |I| >= p, |O| >= q, |I ∪ O| >= p+q.
    (Put min(p, |I∖O|) in-colors outside O first; the rest of P forces Q to
    avoid only what remains, and the union bound is exactly what's needed.)
    """
    profile = ColorDegreeProfile.of(collection, v)
    return _disjoint_color_sets_exist(profile.in_colors, profile.out_colors, pat.p, pat.q)


def _disjoint_color_sets_exist(in_colors: frozenset[int], out_colors: frozenset[int], p: int, q: int) -> bool:
    return (
        len(in_colors) >= p
        and len(out_colors) >= q
        and len(in_colors | out_colors) >= p + q
    )


def find_rainbow_star(collection: DigraphCollection, pat: StarPattern):
    """First rainbow star in deterministic scan order, or None.

    Scan order: centers ascending; in-leaf slots before out-leaf slots;
    candidates per slot ordered by (vertex, color) ascending.  The embedding
    returned is the lexicographically first valid assignment in that order.

    Centers are screened before the backtracking search: the color-set
    profile test, then maximum matchings on the (leaf, color) incidence of
    each side.  A matching below p or q rules the center out; for one-sided
    patterns the out-side matching is exact, so the search only ever runs
    where a witness exists.
    """
    p, q = pat.p, pat.q
    if collection.n - 1 < p + q:
        return None
    for v in range(1, collection.n + 1):
        if not detect_homomorphic_center(collection, v, pat):
            continue
        if q and len(hopcroft_karp(_leaf_color_adjacency(collection, v, "out"))) < q:
            continue
        if p and len(hopcroft_karp(_leaf_color_adjacency(collection, v, "in"))) < p:
            continue
        emb = _embed_at_center(collection, v, p, q)
        if emb is not None:
            return emb
    return None


def _leaf_color_adjacency(collection: DigraphCollection, v: int, side: str) -> dict:
    """Bipartite incidence at a center: leaf vertex -> colors joining it to v."""
    adj: dict[int, set[int]] = {}
    if side == "out":
        for i in collection.colors_with_out_edge(v):
            for w in collection.out_neighbors(i, v):
                adj.setdefault(w, set()).add(i)
    else:
        for i in collection.colors_with_in_edge(v):
            for u in collection.in_neighbors(i, v):
                adj.setdefault(u, set()).add(i)
    return adj


def _embed_at_center(collection: DigraphCollection, v: int, p: int, q: int):
    """Backtracking over leaf slots at a fixed center.

    Same-role slots follow ascending candidate chains: the lexicographically
    first embedding has sorted in-leaves and sorted out-leaves, so restricting
    to ascending chains returns exactly that embedding.  After each choice a
    color-availability check prunes: ignoring vertex-distinctness, the
    remaining slots are fillable iff the unused parts of I, O, and I ∪ O are
    large enough (the matching relaxation collapses to this closed form).
    """
    in_all = collection.colors_with_in_edge(v)
    out_all = collection.colors_with_out_edge(v)
    in_cands = sorted((u, i) for i in in_all for u in collection.in_neighbors(i, v))
    out_cands = sorted((w, j) for j in out_all for w in collection.out_neighbors(j, v))

    used_vertices = {v}
    used_colors: set[int] = set()
    chosen_in: list[tuple[int, int]] = []
    chosen_out: list[tuple[int, int]] = []

    def colors_feasible(need_in: int, need_out: int) -> bool:
        avail_in = len(in_all - used_colors)
        avail_out = len(out_all - used_colors)
        avail_union = len((in_all | out_all) - used_colors)
        return avail_in >= need_in and avail_out >= need_out and avail_union >= need_in + need_out

    def fill_in(k: int, start: int) -> bool:
        if k == p:
            return fill_out(0, 0)
        for idx in range(start, len(in_cands)):
            u, i = in_cands[idx]
            if u in used_vertices or i in used_colors:
                continue
            used_vertices.add(u)
            used_colors.add(i)
            chosen_in.append((u, i))
            if colors_feasible(p - k - 1, q) and fill_in(k + 1, idx + 1):
                return True
            chosen_in.pop()
            used_colors.remove(i)
            used_vertices.remove(u)
        return False

    def fill_out(k: int, start: int) -> bool:
        if k == q:
            return True
        for idx in range(start, len(out_cands)):
            w, j = out_cands[idx]
            if w in used_vertices or j in used_colors:
                continue
            used_vertices.add(w)
            used_colors.add(j)
            chosen_out.append((w, j))
            if colors_feasible(0, q - k - 1) and fill_out(k + 1, idx + 1):
                return True
            chosen_out.pop()
            used_colors.remove(j)
            used_vertices.remove(w)
        return False

    if fill_in(0, 0):
        return StarEmbedding(v, tuple(chosen_in), tuple(chosen_out))
    return None


def find_rainbow_star_naive(collection: DigraphCollection, pat: StarPattern, max_work: int = NAIVE_WORK_GUARD):
    """Reference oracle: enumerate centers, leaf-vertex tuples, color tuples.

    No pruning beyond skipping absent edges.  Guarded by n*c*(p+q) so it is
    only ever run on tiny instances.
    """
    work = collection.n * collection.c * pat.size
    if work > max_work:
        raise ValueError(
            f"naive enumeration guard: n*c*(p+q) = {work} exceeds {max_work}"
        )
    p, q = pat.p, pat.q
    vertices = range(1, collection.n + 1)
    for v in vertices:
        others = [u for u in vertices if u != v]
        for in_tuple in permutations(others, p):
            taken = set(in_tuple)
            rest = [u for u in others if u not in taken]
            for out_tuple in permutations(rest, q):
                emb = _color_tuples(collection, v, in_tuple, out_tuple)
                if emb is not None:
                    return emb
    return None


def _color_tuples(collection, v, in_tuple, out_tuple):
    """Injective color assignment to fixed leaf tuples, by exhaustive search."""
    edges = [(u, v) for u in in_tuple] + [(v, w) for w in out_tuple]
    chosen: list[int] = []

    def assign(k: int) -> bool:
        if k == len(edges):
            return True
        u, w = edges[k]
        for i in range(1, collection.c + 1):
            if i in chosen or not collection.has_edge(i, u, w):
                continue
            chosen.append(i)
            if assign(k + 1):
                return True
            chosen.pop()
        return False

    if not assign(0):
        return None
    p = len(in_tuple)
    in_leaves = tuple((u, chosen[k]) for k, u in enumerate(in_tuple))
    out_leaves = tuple((w, chosen[p + k]) for k, w in enumerate(out_tuple))
    return StarEmbedding(v, in_leaves, out_leaves)


def out_edge_matching_number(collection: DigraphCollection, v: int) -> int:
    """Maximum matching between out-neighbor slots of v and colors.

    The bipartite graph joins u to color i iff v -> u is an edge of G_i; a
    matching of size q is exactly a rainbow (0, q) star at v.
    """
    return len(_center_out_matching(collection, v))


def matching_fastpath_p0(collection: DigraphCollection, q: int):
    """Decide (0, q) patterns via maximum bipartite matching per center."""
    if q < 1:
        raise ValueError(f"pattern (0, q) needs q >= 1, got q={q}")
    for v in range(1, collection.n + 1):
        matching = _center_out_matching(collection, v)
        if len(matching) >= q:
            pairs = tuple(sorted(matching.items())[:q])
            return StarEmbedding(v, (), pairs)
    return None


def _center_out_matching(collection: DigraphCollection, v: int) -> dict[int, int]:
    return hopcroft_karp(_leaf_color_adjacency(collection, v, "out"))


def hopcroft_karp(adjacency: dict[int, tuple[int, ...]]) -> dict[int, int]:
    """Maximum bipartite matching as {left: right}; deterministic.

    Phase structure: BFS layers from free left vertices, then layered DFS
    augmentation.  Exhausted vertices get infinite distance so no phase
    revisits them.
    """
    adjacency = {u: tuple(sorted(rights)) for u, rights in adjacency.items()}
    inf = float("inf")
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    lefts = sorted(adjacency)

    while True:
        dist: dict[int, float] = {}
        queue: deque[int] = deque()
        for u in lefts:
            if u not in match_left:
                dist[u] = 0
                queue.append(u)
        reachable_free_right = False
        while queue:
            u = queue.popleft()
            for r in adjacency[u]:
                w = match_right.get(r)
                if w is None:
                    reachable_free_right = True
                elif w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if not reachable_free_right:
            return match_left

        def augment(u: int) -> bool:
            for r in adjacency[u]:
                w = match_right.get(r)
                if w is None or (dist.get(w, inf) == dist[u] + 1 and augment(w)):
                    match_left[u] = r
                    match_right[r] = u
                    return True
            dist[u] = inf
            return False

        for u in lefts:
            if u not in match_left and dist.get(u) == 0:
                augment(u)


def classify_vertices(collection: DigraphCollection, pat: StarPattern) -> ClassificationReport:
    """Partition vertices: B by incidence, then A, then C, rest violators."""
    p, q = pat.p, pat.q
    a_set, b_set, c_set, bad = [], [], [], []
    profiles = [ColorDegreeProfile.of(collection, v) for v in range(1, collection.n + 1)]
    for prof in profiles:
        incident = prof.in_colors | prof.out_colors
        if len(incident) <= p + q - 1:
            b_set.append(prof.vertex)
        elif len(prof.out_colors) <= q - 1:
            a_set.append(prof.vertex)
        elif len(prof.in_colors) <= p - 1:
            c_set.append(prof.vertex)
        else:
            bad.append(prof.vertex)

    by_vertex = {prof.vertex: prof for prof in profiles}
    a_by_color = tuple(
        tuple(v for v in a_set if i in by_vertex[v].out_colors)
        for i in range(1, collection.c + 1)
    )
    b_by_color = tuple(
        tuple(v for v in b_set if i in by_vertex[v].in_colors | by_vertex[v].out_colors)
        for i in range(1, collection.c + 1)
    )
    c_by_color = tuple(
        tuple(v for v in c_set if i in by_vertex[v].in_colors)
        for i in range(1, collection.c + 1)
    )
    return ClassificationReport(
        pattern=pat,
        a_vertices=tuple(a_set),
        b_vertices=tuple(b_set),
        c_vertices=tuple(c_set),
        violators=tuple(bad),
        a_by_color=a_by_color,
        b_by_color=b_by_color,
        c_by_color=c_by_color,
    )
