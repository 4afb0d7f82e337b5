"""Exact solvers for edge-vertex domination and paired domination.

An edge uv ev-dominates every vertex within distance one of u or v, so
its coverage is N[u] | N[v] as a bitmask. A vertex set D is dominating
when every vertex outside D has a neighbor inside D (membership alone
does not make a vertex dominated), and paired-dominating when it is
dominating and the subgraph it induces has a perfect matching.

Both solvers return the complete family of minimum sets, found by
sweeping candidate sizes upward and collecting every feasible set at the
first size that admits one. Feasibility tests are counted against a
budget so a runaway search surfaces as CapabilityError instead of a
silent hang.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, DomainError, InvariantViolation
from .graphs import Graph, _matchable, normalize_edge

DEFAULT_BUDGET = 10**8

Edge = tuple[int, int]


@dataclass(frozen=True)
class MinSetFamily:
    """Every minimum set of one kind for one graph.

    ``sets`` is a lexicographically sorted, duplicate-free tuple; each
    member is itself a sorted tuple (of edges for kind "ev", of vertices
    for kind "paired").
    """

    kind: str
    gamma: int
    sets: tuple[tuple, ...]
    graph: Graph

    def contains(self, members) -> bool:
        """Membership test that normalizes the candidate's ordering first."""
        if self.kind == "ev":
            probe = tuple(sorted(normalize_edge(u, v) for u, v in members))
        else:
            probe = tuple(sorted(members))
        return probe in self.sets


@dataclass(frozen=True)
class UniquenessVerdict:
    """Outcome of a uniqueness query.

    ``common_span`` is only present when every witness covers the same
    vertex set: for kind "ev" that is the shared set of edge endpoints,
    for kind "paired" the set itself (hence present exactly when unique).
    """

    unique: bool
    witness_count: int
    common_span: frozenset[int] | None


def ev_dominates(graph: Graph, edge: Edge, vertex: int) -> bool:
    """True when the edge is incident to the vertex or to one of its neighbors."""
    u, v = edge
    _require_edge(graph, edge)
    if not 0 <= vertex < graph.n:
        raise ValueError(f"vertex {vertex} out of range")
    reach = graph.closed_nbr_bits(vertex)
    return bool(reach >> u & 1 or reach >> v & 1)


def is_ev_dominating_set(graph: Graph, edges) -> bool:
    """Whether every vertex of the graph is ev-dominated by some member."""
    cover = 0
    for edge in edges:
        _require_edge(graph, edge)
        u, v = edge
        cover |= graph.closed_nbr_bits(u) | graph.closed_nbr_bits(v)
    return cover == (1 << graph.n) - 1


def is_dominating_set(graph: Graph, vertices) -> bool:
    """Whether every vertex outside the set has a neighbor inside it."""
    mask = _vertex_mask(graph, vertices)
    for v in range(graph.n):
        if mask >> v & 1:
            continue
        if not graph.nbr_bits[v] & mask:
            return False
    return True


def is_paired_dominating_set(graph: Graph, vertices) -> bool:
    """Dominating, and the induced subgraph has a perfect matching."""
    mask = _vertex_mask(graph, vertices)
    if not is_dominating_set(graph, vertices):
        return False
    if mask.bit_count() % 2:
        return False
    inner = tuple(b & mask for b in graph.nbr_bits)
    return _matchable(inner, mask, {})


def solve_ev(graph: Graph, budget: int = DEFAULT_BUDGET) -> MinSetFamily:
    """All minimum ev-dominating sets.

    Sizes are swept upward from 1; a greedy cover bounds the sweep. At
    each size the search walks edge combinations ordered by shrinking
    coverage and prunes branches that cannot cover the remainder.
    """
    _require_solvable(graph)
    full = (1 << graph.n) - 1
    cover = {e: graph.closed_nbr_bits(e[0]) | graph.closed_nbr_bits(e[1]) for e in graph.edges}
    order = sorted(graph.edges, key=lambda e: (-cover[e].bit_count(), e))
    masks = [cover[e] for e in order]
    sizes = [m.bit_count() for m in masks]
    upper = _greedy_ev_bound(masks, full)
    counter = _Budget(budget)
    for k in range(1, upper + 1):
        hits: list[tuple[int, ...]] = []
        _search_cover(masks, sizes, full, k, counter, hits, matching_check=None)
        if hits:
            sets = tuple(sorted(tuple(sorted(order[i] for i in pick)) for pick in hits))
            return MinSetFamily(kind="ev", gamma=k, sets=sets, graph=graph)
    raise InvariantViolation("greedy bound produced no feasible size")


def solve_pr(graph: Graph, budget: int = DEFAULT_BUDGET) -> MinSetFamily:
    """All minimum paired-dominating sets (size swept over even values)."""
    _require_solvable(graph)
    full = (1 << graph.n) - 1
    order = sorted(range(graph.n), key=lambda v: (-graph.closed_nbr_bits(v).bit_count(), v))
    masks = [graph.closed_nbr_bits(v) for v in order]
    sizes = [m.bit_count() for m in masks]
    counter = _Budget(budget)

    def paired(pick: tuple[int, ...]) -> bool:
        mask = 0
        for i in pick:
            mask |= 1 << order[i]
        inner = tuple(b & mask for b in graph.nbr_bits)
        return _matchable(inner, mask, {})

    for k in range(2, graph.n + 1, 2):
        hits: list[tuple[int, ...]] = []
        _search_cover(masks, sizes, full, k, counter, hits, matching_check=paired)
        if hits:
            sets = tuple(sorted(tuple(sorted(order[i] for i in pick)) for pick in hits))
            return MinSetFamily(kind="paired", gamma=k, sets=sets, graph=graph)
    raise InvariantViolation("no paired dominating set up to n vertices")


def spanned_vertices(edges) -> frozenset[int]:
    """Union of the endpoints of the given edges."""
    out: set[int] = set()
    for u, v in edges:
        out.add(u)
        out.add(v)
    return frozenset(out)


def uniqueness(graph: Graph, kind: str, budget: int = DEFAULT_BUDGET) -> UniquenessVerdict:
    """Uniqueness of the minimum family of the given kind ("ev" or "paired")."""
    if kind == "ev":
        family = solve_ev(graph, budget)
        spans = {spanned_vertices(m) for m in family.sets}
        common = next(iter(spans)) if len(spans) == 1 else None
    elif kind == "paired":
        family = solve_pr(graph, budget)
        common = frozenset(family.sets[0]) if len(family.sets) == 1 else None
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return UniquenessVerdict(
        unique=len(family.sets) == 1,
        witness_count=len(family.sets),
        common_span=common,
    )


def gamma_ev_tree_fast(graph: Graph) -> int:
    """Minimum ev-dominating set size of a tree, by dynamic programming.

    Linear in the vertex count. Each vertex reports, per (subtree edge
    incident to it, still uncovered, has an uncovered child that only the
    parent edge can fix) state, the cheapest subtree completion.
    """
    from .graphs import is_tree

    if not is_tree(graph):
        raise DomainError("tree solver needs a tree")
    n = graph.n
    if n < 2:
        raise DomainError("need at least two vertices")
    parent = [-1] * n
    order = [0]
    seen = {0}
    for v in order:
        for u in graph.adj[v]:
            if u not in seen:
                seen.add(u)
                parent[u] = v
                order.append(u)
    INF = n + 1
    # state table per vertex: (has_edge, needs_any, needs_parent_edge) -> cost
    table: list[dict[tuple[int, int, int], int] | None] = [None] * n
    for v in reversed(order):
        children = [u for u in graph.adj[v] if u != parent[v]]
        # partial: (edge at v exists, v covered, some child still waiting) -> cost
        partial = {(0, 0, 0): 0}
        for c in children:
            child = table[c]
            assert child is not None
            grown: dict[tuple[int, int, int], int] = {}
            for (any_edge, covered, waiting), cost in partial.items():
                for (has, need_any, need_parent), ccost in child.items():
                    # leave the edge v-c out: child must not depend on it
                    if not need_parent:
                        key = (any_edge, covered | has, waiting | need_any)
                        value = cost + ccost
                        if grown.get(key, INF) > value:
                            grown[key] = value
                    # take the edge v-c: covers v and settles the child
                    key = (1, 1, waiting)
                    value = cost + ccost + 1
                    if grown.get(key, INF) > value:
                        grown[key] = value
            partial = grown
        final: dict[tuple[int, int, int], int] = {}
        for (any_edge, covered, waiting), cost in partial.items():
            need_any = 0 if covered else 1
            need_parent = 1 if waiting and not any_edge else 0
            key = (any_edge, need_any, need_parent)
            if final.get(key, INF) > cost:
                final[key] = cost
        table[v] = final
    root = table[0]
    assert root is not None
    best = min((cost for (has, need_any, need_parent), cost in root.items()
                if not need_any and not need_parent), default=INF)
    if best >= INF:
        raise InvariantViolation("tree DP found no feasible selection")
    return best


# --- shared search machinery -------------------------------------------


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise CapabilityError("search budget exhausted")


def _search_cover(masks, sizes, full, k, counter, hits, matching_check) -> None:
    # Depth-first over index combinations; masks come sorted by shrinking
    # coverage, so one suffix test bounds the whole remaining range.
    m = len(masks)

    def descend(start: int, chosen: list[int], covered: int) -> None:
        counter.spend()
        slots = k - len(chosen)
        if slots == 0:
            if covered == full and (matching_check is None or matching_check(tuple(chosen))):
                hits.append(tuple(chosen))
            return
        missing = (full & ~covered).bit_count()
        for i in range(start, m - slots + 1):
            if missing > slots * sizes[i]:
                break
            chosen.append(i)
            descend(i + 1, chosen, covered | masks[i])
            chosen.pop()

    descend(0, [], 0)


def _greedy_ev_bound(masks, full) -> int:
    covered = 0
    count = 0
    while covered != full:
        gain, pick = 0, -1
        for i, mask in enumerate(masks):
            g = (mask & ~covered).bit_count()
            if g > gain:
                gain, pick = g, i
        if pick < 0:
            raise InvariantViolation("greedy cover stalled")
        covered |= masks[pick]
        count += 1
    return count


def _require_solvable(graph: Graph) -> None:
    if graph.n < 2:
        raise DomainError("solver needs at least two vertices")
    for v in range(graph.n):
        if not graph.nbr_bits[v]:
            raise DomainError(f"vertex {v} is isolated")


def _require_edge(graph: Graph, edge: Edge) -> None:
    u, v = edge
    if not graph.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")


def _vertex_mask(graph: Graph, vertices) -> int:
    mask = 0
    for v in vertices:
        if not 0 <= v < graph.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    return mask
