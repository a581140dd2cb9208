"""Named graph constructors and seeded random graph generators."""

from __future__ import annotations

import random
from typing import Sequence

from .errors import InputError
from .graphs import Graph, from_edge_list
from .seeds import derive_seed


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def complete_graph(n: int) -> Graph:
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError(f"a cycle needs at least 3 vertices, got {n}")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; part i occupies a consecutive id block."""
    offsets = [0]
    for s in sizes:
        if s < 0:
            raise InputError("part sizes must be non-negative")
        offsets.append(offsets[-1] + s)
    n = offsets[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(offsets[i], offsets[i + 1]):
                for v in range(offsets[j], offsets[j + 1]):
                    edges.append((u, v))
    return from_edge_list(n, edges)


def turan_parts(sizes: Sequence[int]) -> list[frozenset[int]]:
    """The id blocks matching :func:`complete_multipartite`."""
    parts = []
    at = 0
    for s in sizes:
        parts.append(frozenset(range(at, at + s)))
        at += s
    return parts


def petersen_graph() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i - (i + 5)."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, edges)


def gnp_random_graph(n: int, p: float, seed: int) -> Graph:
    """Each of the C(n, 2) pairs is an edge independently with probability p.

    Pairs are drawn in lexicographic order from ``random.Random(seed)``, so
    the output is a pure function of (n, p, seed).
    """
    if not 0.0 <= p <= 1.0:
        raise InputError(f"edge probability must be in [0, 1], got {p}")
    rng = random.Random(seed)
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edge_list(n, edges)


def gnm_random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform graph with exactly m edges (sampled without replacement)."""
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if m > len(all_pairs):
        raise InputError(f"m={m} exceeds the {len(all_pairs)} available pairs")
    rng = random.Random(seed)
    return from_edge_list(n, rng.sample(all_pairs, m))


def random_graph_min_degree(n: int, d: int, seed: int, p: float | None = None) -> Graph:
    """Seeded random graph with every degree forced to at least d.

    Starts from G(n, p) and tops up deficient vertices with edges to random
    non-neighbors, lowest-degree vertices first.
    """
    if d >= n:
        raise InputError(f"cannot force min degree {d} on {n} vertices")
    if p is None:
        p = min(1.0, (d + 2) / max(1, n - 1))
    base = gnp_random_graph(n, p, derive_seed(seed, 0))
    rng = random.Random(derive_seed(seed, 1))
    adj = [set(base.neighbors(v)) for v in range(n)]
    for v in range(n):
        while len(adj[v]) < d:
            candidates = [u for u in range(n) if u != v and u not in adj[v]]
            u = rng.choice(candidates)
            adj[v].add(u)
            adj[u].add(v)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    return from_edge_list(n, edges)
