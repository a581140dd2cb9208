"""Vertex connectivity, minimum vertex cuts, and separations.

Local connectivity between non-adjacent vertices is computed as unit-capacity
max-flow on the standard split digraph (each vertex becomes an in->out arc of
capacity one); flows run through scipy's ``maximum_flow``.  Global
connectivity uses the classical pair coverage: fix a minimum-degree vertex v,
take flows from v to every non-neighbor, and between every non-adjacent pair
of neighbors of v.  Any minimum cut either avoids v (first family) or
contains it (second family), so the minimum over these flows is kappa(G).
"""

from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .errors import InputError, PreconditionError
from .graphs import Graph, components, mask_of, set_of


def _split_network(G: Graph) -> csr_matrix:
    """Split digraph: node v is v_in, node v+n is v_out.

    v_in -> v_out has capacity 1; each edge {u, v} contributes the arcs
    u_out -> v_in and v_out -> u_in with effectively unbounded capacity.
    """
    n = G.n
    rows, cols, caps = [], [], []
    for v in range(n):
        rows.append(v)
        cols.append(v + n)
        caps.append(1)
    big = n  # no vertex flow can exceed n
    for u, v in G.edges():
        rows.extend((u + n, v + n))
        cols.extend((v, u))
        caps.extend((big, big))
    return csr_matrix(
        (np.asarray(caps, dtype=np.int32), (rows, cols)), shape=(2 * n, 2 * n)
    )


def _flow_value(net: csr_matrix, n: int, s: int, t: int) -> int:
    return int(maximum_flow(net, s + n, t).flow_value)


def _pair_coverage(G: Graph) -> list[tuple[int, int]]:
    """Pairs whose local connectivities cover some minimum cut."""
    v0 = min(range(G.n), key=lambda v: (G.degree(v), v))
    nonneighbors = [
        u for u in range(G.n) if u != v0 and not G.has_edge(v0, u)
    ]
    pairs = [(v0, u) for u in nonneighbors]
    nbrs = sorted(G.neighbors(v0))
    for i, x in enumerate(nbrs):
        for y in nbrs[i + 1 :]:
            if not G.has_edge(x, y):
                pairs.append((x, y))
    return pairs


def vertex_connectivity(G: Graph) -> int:
    """kappa(G): minimum over non-adjacent pairs of max vertex-disjoint paths.

    kappa(K_n) = n - 1 by convention; requires n >= 2.
    """
    if G.n < 2:
        raise PreconditionError("vertex connectivity needs at least 2 vertices")
    if G.is_complete():
        return G.n - 1
    if len(components(G)) > 1:
        return 0
    net = _split_network(G)
    return min(_flow_value(net, G.n, s, t) for s, t in _pair_coverage(G))


def connectivity_at_least(
    G: Graph,
    k: int,
    parts: tuple[frozenset[int], frozenset[int]] | None = None,
) -> bool:
    """Exact verdict for kappa(G) >= k, with cheap certificates tried first.

    For a bipartite graph with known `parts`, the sufficient certificate is:
    every degree >= k and every same-side pair shares more than k/2 neighbors
    (any cut smaller than k then leaves one side mutually connected and the
    other side attached to it).
    """
    if k <= 0:
        return True
    if G.n < 2:
        raise PreconditionError("vertex connectivity needs at least 2 vertices")
    if k > G.n - 1:
        return False
    if G.is_complete():
        return True
    if G.min_degree() < k:
        return False
    if parts is not None and _bipartite_certificate(G, parts, k):
        return True
    return vertex_connectivity(G) >= k


def _bipartite_certificate(
    G: Graph, parts: tuple[frozenset[int], frozenset[int]], k: int
) -> bool:
    A, B = parts
    if A & B or len(A) + len(B) != G.n:
        return False
    for side in (A, B):
        smask = mask_of(side)
        for v in side:
            if G.adj[v] & smask:
                return False  # not actually bipartite on these parts
    for side in (A, B):
        vs = sorted(side)
        for i, x in enumerate(vs):
            ax = G.adj[x]
            for y in vs[i + 1 :]:
                if 2 * (ax & G.adj[y]).bit_count() <= k:
                    return False
    return True


def minimum_separation(G: Graph) -> tuple[frozenset[int], frozenset[int]]:
    """A separation (A, B) of minimum order: A | B = V, no edges A-B except
    through the cut A & B, and |A & B| = kappa(G).

    A is the cut plus the source side of the minimising flow, B the cut plus
    the sink side.  Undefined (input error) for complete graphs.
    """
    if G.n < 2:
        raise PreconditionError("a separation needs at least 2 vertices")
    if G.is_complete():
        raise InputError("complete graphs have no separation")
    comps = components(G)
    if len(comps) > 1:
        a = set_of(comps[0])
        return frozenset(a), frozenset(range(G.n)) - a

    net = _split_network(G)
    best_pair = None
    best_val = G.n
    for s, t in _pair_coverage(G):
        val = _flow_value(net, G.n, s, t)
        if val < best_val:
            best_val = val
            best_pair = (s, t)
    s, t = best_pair
    res = maximum_flow(net, s + G.n, t)
    reach = _residual_reachable(net, res.flow, s + G.n)
    n = G.n
    cut = {v for v in range(n) if (v in reach) and (v + n not in reach)}
    source_side = {v for v in range(n) if v + n in reach}
    A = frozenset(cut | source_side)
    B = frozenset(cut | (set(range(n)) - A))
    return A, B


def _residual_reachable(net: csr_matrix, flow: csr_matrix, source: int) -> set[int]:
    cap = net.tocoo()
    flo = flow.tocoo()
    fdict: dict[tuple[int, int], int] = {}
    for i, j, f in zip(flo.row, flo.col, flo.data):
        fdict[(int(i), int(j))] = int(f)
    residual: dict[int, list[int]] = {}
    for i, j, c in zip(cap.row, cap.col, cap.data):
        i, j, c = int(i), int(j), int(c)
        f = fdict.get((i, j), 0)
        if f < c:
            residual.setdefault(i, []).append(j)
        if f > 0:
            residual.setdefault(j, []).append(i)
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in residual.get(x, ()):
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen
