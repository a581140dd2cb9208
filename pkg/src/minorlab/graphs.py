"""Core graph type and the classical subroutines every other module consumes.

Vertices are dense integers ``0..n-1``.  Adjacency is stored as one Python int
bitmask per vertex: edge queries are O(1), and neighborhood intersections run
word-parallel, which keeps common-neighbor counting cheap at a few thousand
vertices.

Graphs are immutable after construction and every function here is a pure
function of its inputs, so values are safe to share across concurrent callers.
Tie-breaking in all searches (min-degree peeling, branch-and-bound pivots,
augmenting paths) is lowest-index-first for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import BudgetExceeded, InputError, PreconditionError

#: Default node budget for exact searches (number of branch-extension steps).
DEFAULT_BUDGET = 10_000_000


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with one bit per vertex id."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def set_of(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: no loops, no parallel edges, symmetric adjacency.

    `adj[v]` is the neighborhood of `v` as a bitmask; `m` caches the number of
    unordered adjacent pairs.
    """

    n: int
    adj: tuple[int, ...]
    m: int

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def neighbors_mask(self, v: int) -> int:
        return self.adj[v]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def min_degree(self) -> int:
        if self.n == 0:
            raise PreconditionError("min_degree of a null graph is undefined")
        return min(a.bit_count() for a in self.adj)

    def max_degree(self) -> int:
        if self.n == 0:
            raise PreconditionError("max_degree of a null graph is undefined")
        return max(a.bit_count() for a in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            above = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(above):
                out.append((u, v))
        return out

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list, de-duplicating repeated pairs.

    The result is deterministic regardless of input order.  Loops and
    out-of-range ids are rejected.
    """
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if u == v:
            raise InputError(f"loop edge ({u}, {v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for n={n}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    m = sum(a.bit_count() for a in adj) // 2
    return Graph(n, tuple(adj), m)


def adjacency_mask(G: Graph, mask: int) -> int:
    """Union of the neighborhoods of all vertices in `mask`."""
    out = 0
    for v in bits(mask):
        out |= G.adj[v]
    return out


def closure_mask(G: Graph, start: int, allowed: int) -> int:
    """Vertices reachable from `start` by paths whose interior stays in `allowed`."""
    reach = start
    frontier = start
    while frontier:
        nxt = adjacency_mask(G, frontier) & allowed & ~reach
        reach |= nxt
        frontier = nxt
    return reach


def is_connected_mask(G: Graph, mask: int) -> bool:
    """True iff the induced subgraph on a non-empty `mask` is connected."""
    if mask == 0:
        return False
    low = mask & -mask
    return closure_mask(G, low, mask) == mask


def components(G: Graph) -> list[int]:
    """Connected components as masks, ordered by smallest member."""
    seen = 0
    out = []
    for v in range(G.n):
        if seen >> v & 1:
            continue
        comp = closure_mask(G, 1 << v, G.full_mask & ~seen)
        out.append(comp)
        seen |= comp
    return out


def biconnected_blocks(G: Graph) -> list[int]:
    """Vertex masks of the biconnected components (blocks), by discovery.

    Bridges appear as 2-vertex blocks; isolated vertices belong to no block.
    Any 2-connected minor of the graph is a minor of one of its blocks.
    """
    disc = [-1] * G.n
    low = [0] * G.n
    timer = 0
    blocks: list[int] = []
    edge_stack: list[tuple[int, int]] = []
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        dfs = [(root, -1, iter(G.neighbors(root)))]
        while dfs:
            v, parent, it = dfs[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] == -1:
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    dfs.append((u, v, iter(G.neighbors(u))))
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    low[v] = min(low[v], disc[u])
            if not advanced:
                dfs.pop()
                if dfs:
                    pv = dfs[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if low[v] >= disc[pv]:
                        block = 0
                        while True:
                            x, y = edge_stack.pop()
                            block |= (1 << x) | (1 << y)
                            if (x, y) == (pv, v):
                                break
                        blocks.append(block)
    return blocks


def density(G: Graph) -> Fraction:
    """Edge count over vertex count, as an exact rational."""
    if G.n == 0:
        raise PreconditionError("density of the null graph is undefined")
    return Fraction(G.m, G.n)


def nonedge_fraction(G: Graph) -> Fraction:
    """1 - e(G) / C(n, 2), exactly; the missing-edge fraction of the graph."""
    if G.n < 2:
        return Fraction(1)
    return 1 - Fraction(G.m, G.n * (G.n - 1) // 2)


def degeneracy(G: Graph) -> tuple[int, list[int]]:
    """Minimum-degree elimination: returns (d, order).

    `order` removes a lowest-degree vertex at each step (lowest index on
    ties); `d` is the largest degree seen at removal time, so every vertex
    has at most `d` neighbors later in the returned order.
    """
    if G.n == 0:
        raise PreconditionError("degeneracy of the null graph is undefined")
    live = G.full_mask
    order: list[int] = []
    d = 0
    for _ in range(G.n):
        best_v = -1
        best_deg = G.n + 1
        for v in bits(live):
            dv = (G.adj[v] & live).bit_count()
            if dv < best_deg:
                best_deg = dv
                best_v = v
        d = max(d, best_deg)
        order.append(best_v)
        live &= ~(1 << best_v)
    return d, order


def contract(G: Graph, F: Iterable[tuple[int, int]]) -> Graph:
    """Quotient of G by the connected components of (V, F), as a simple graph.

    Parallel edges merge and loops are dropped.  New vertex ids are assigned
    by the smallest original id in each class, ascending.
    """
    return contract_with_classes(G, F)[0]


def contract_with_classes(
    G: Graph, F: Iterable[tuple[int, int]]
) -> tuple[Graph, tuple[frozenset[int], ...]]:
    """Like :func:`contract`, also returning the vertex class of each new id."""
    parent = list(range(G.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in F:
        if not (0 <= u < G.n and 0 <= v < G.n) or not G.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge of the graph")
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)

    classes: dict[int, list[int]] = {}
    for v in range(G.n):
        classes.setdefault(find(v), []).append(v)
    roots = sorted(classes, key=lambda r: min(classes[r]))
    new_id = {r: i for i, r in enumerate(roots)}

    edges = set()
    for u, v in G.edges():
        cu, cv = new_id[find(u)], new_id[find(v)]
        if cu != cv:
            edges.add((min(cu, cv), max(cu, cv)))
    H = from_edge_list(len(roots), sorted(edges))
    return H, tuple(frozenset(classes[r]) for r in roots)


def induced_subgraph_with_map(
    G: Graph, vertices: Iterable[int]
) -> tuple[Graph, list[int]]:
    """Induced subgraph on `vertices`, renumbered ascending.

    Returns (H, old_ids) where `old_ids[i]` is the original id of vertex i.
    """
    old_ids = sorted(set(vertices))
    for v in old_ids:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range for n={G.n}")
    pos = {v: i for i, v in enumerate(old_ids)}
    edges = [
        (pos[u], pos[v])
        for u, v in G.edges()
        if u in pos and v in pos
    ]
    return from_edge_list(len(old_ids), edges), old_ids


def induced_subgraph(G: Graph, vertices: Iterable[int]) -> Graph:
    return induced_subgraph_with_map(G, vertices)[0]


def bipartite_induced(G: Graph, A: Iterable[int], B: Iterable[int]) -> Graph:
    """Graph on A | B keeping only edges with one end in each part.

    Vertex i of the result is the i-th smallest element of A | B.
    """
    sa, sb = frozenset(A), frozenset(B)
    if sa & sb:
        raise InputError(f"parts overlap: {sorted(sa & sb)}")
    old_ids = sorted(sa | sb)
    for v in old_ids:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} out of range for n={G.n}")
    pos = {v: i for i, v in enumerate(old_ids)}
    edges = []
    for a in sorted(sa):
        for b in bits(G.adj[a] & mask_of(sb)):
            edges.append((pos[a], pos[b]))
    return from_edge_list(len(old_ids), edges)


# ---------------------------------------------------------------------------
# Bipartite matching with Hall violators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HallViolator:
    """A set S on the side to saturate with |N(S) & X| < |S|."""

    witness: frozenset[int]


def saturating_matching(
    G: Graph, Y: Iterable[int], X: Iterable[int]
) -> list[tuple[int, int]] | HallViolator:
    """Match every vertex of Y to a distinct X-neighbor, or exhibit a Hall violator.

    Only edges between Y and X are considered.  On success returns the
    matching as (y, x) pairs sorted by y.  On failure returns the violator
    harvested from the final failed augmenting-path search: the Y-vertices
    reachable by alternating paths from the unmatched vertex.
    """
    ys = sorted(set(Y))
    xs = frozenset(X)
    if set(ys) & xs:
        raise InputError("Y and X must be disjoint")
    xmask = mask_of(xs)
    match_of_x: dict[int, int] = {}
    match_of_y: dict[int, int] = {}

    def try_augment(y: int, seen_x: set[int]) -> bool:
        for x in bits(G.adj[y] & xmask):
            if x in seen_x:
                continue
            seen_x.add(x)
            owner = match_of_x.get(x)
            if owner is None or try_augment(owner, seen_x):
                match_of_x[x] = y
                match_of_y[y] = x
                return True
        return False

    violator_seen: set[int] | None = None
    for y in ys:
        seen: set[int] = set()
        if not try_augment(y, seen):
            violator_seen = {y} | {match_of_x[x] for x in seen}
    if violator_seen is not None:
        return HallViolator(frozenset(violator_seen))
    return sorted(match_of_y.items())


# ---------------------------------------------------------------------------
# Exact maximum independent set (branch and bound)
# ---------------------------------------------------------------------------


def _clique_cover_bound(adj: tuple[int, ...], P: int) -> int:
    """Greedy clique cover of P; its size bounds the independence number."""
    cliques: list[int] = []
    for v in bits(P):
        av = adj[v]
        for i, c in enumerate(cliques):
            if c & ~av == 0:
                cliques[i] = c | 1 << v
                break
        else:
            cliques.append(1 << v)
    return len(cliques)


def _mis_search(
    G: Graph, start: int, budget: int, target: int | None
) -> tuple[int, int]:
    """Branch and bound for a maximum independent set inside `start`.

    Returns (size, mask) of the best set found.  If `target` is given the
    search stops as soon as a set of that size exists.  Raises
    :class:`BudgetExceeded` when the node budget runs out (never returns a
    wrong answer).
    """
    adj = G.adj
    best_size = 0
    best_mask = 0
    steps = budget

    def rec(P: int, cur_mask: int, cur_size: int) -> bool:
        nonlocal best_size, best_mask, steps
        steps -= 1
        if steps < 0:
            raise BudgetExceeded(
                f"independent-set search exceeded its budget of {budget} nodes"
            )
        if cur_size > best_size:
            best_size = cur_size
            best_mask = cur_mask
            if target is not None and best_size >= target:
                return True
        if P == 0:
            return False
        limit = target if target is not None else best_size + 1
        if cur_size + _clique_cover_bound(adj, P) < limit:
            return False
        # pivot: highest degree inside P, lowest index on ties
        pivot = -1
        pivot_deg = -1
        for v in bits(P):
            dv = (adj[v] & P).bit_count()
            if dv > pivot_deg:
                pivot_deg = dv
                pivot = v
        pbit = 1 << pivot
        if rec(P & ~(adj[pivot] | pbit), cur_mask | pbit, cur_size + 1):
            return True
        return rec(P & ~pbit, cur_mask, cur_size)

    rec(start, 0, 0)
    return best_size, best_mask


def max_independent_set(
    G: Graph, budget: int = DEFAULT_BUDGET, within: Iterable[int] | None = None
) -> frozenset[int]:
    """An exact maximum independent set (of the induced subgraph on `within`)."""
    start = G.full_mask if within is None else mask_of(within)
    _, best = _mis_search(G, start, budget, None)
    return set_of(best)


def exact_alpha(G: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """The exact maximum independent set size."""
    size, _ = _mis_search(G, G.full_mask, budget, None)
    return size


def find_independent_set(
    G: Graph,
    size: int,
    budget: int = DEFAULT_BUDGET,
    within: Iterable[int] | None = None,
) -> frozenset[int] | None:
    """Some independent set of at least `size` vertices, or None if impossible."""
    if size <= 0:
        return frozenset()
    start = G.full_mask if within is None else mask_of(within)
    got, best = _mis_search(G, start, budget, size)
    if got >= size:
        return set_of(best)
    return None
