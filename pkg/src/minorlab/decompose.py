"""Extraction of highly connected pieces with small coboundary.

Given minimum degree at least 6k, there is always a non-empty piece X whose
coboundary Y has at most 3k vertices, together with a matching from Y into X
saturating Y, such that contracting the matching inside G[X | Y] leaves a
k-connected graph.  :func:`small_coboundary_piece` turns the minimal-piece
argument into a terminating loop; :func:`peel_piece` is the wrapper the
coloring pipeline consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import minimum_separation, vertex_connectivity
from .errors import InputError, InvariantViolation, PreconditionError
from .graphs import (
    Graph,
    HallViolator,
    adjacency_mask,
    contract_with_classes,
    induced_subgraph_with_map,
    mask_of,
    saturating_matching,
    set_of,
)


@dataclass(frozen=True)
class Decomposition:
    """A piece X, its coboundary Y, a matching from Y into X, and the target k."""

    X: frozenset[int]
    Y: frozenset[int]
    matching: tuple[tuple[int, int], ...]
    k: int


def coboundary(G: Graph, X) -> frozenset[int]:
    """External neighborhood: the union of N(v) over v in X, minus X."""
    xmask = mask_of(X)
    return set_of(adjacency_mask(G, xmask) & ~xmask)


def _contracted_piece(G: Graph, X: frozenset[int], Y: frozenset[int], matching):
    """contract(G[X | Y], M) plus the original-id class of each new vertex."""
    H, old_ids = induced_subgraph_with_map(G, X | Y)
    pos = {v: i for i, v in enumerate(old_ids)}
    local_matching = [(pos[y], pos[x]) for y, x in matching]
    Q, classes = contract_with_classes(H, local_matching)
    lifted = tuple(frozenset(old_ids[i] for i in cls) for cls in classes)
    return Q, lifted


def small_coboundary_piece(G: Graph, k: int) -> Decomposition:
    """Shrink a candidate piece until its matching-contraction is k-connected.

    Starting from X = V(G) (empty coboundary), each round either repairs a
    Hall violator by discarding the violator's neighborhood from X, or splits
    X along a separation of order below k.  |X| strictly decreases, so the
    loop terminates; under the minimum-degree precondition a failing round is
    an implementation bug, reported as :class:`InvariantViolation`.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    if G.n == 0:
        raise PreconditionError("the graph must be non-empty")
    if G.min_degree() < 6 * k:
        raise PreconditionError(
            f"minimum degree {G.min_degree()} is below 6k = {6 * k}"
        )

    X = frozenset(range(G.n))
    prev_size = G.n + 1
    while True:
        if not X:
            raise InvariantViolation("piece became empty")
        if len(X) >= prev_size:
            raise InvariantViolation("piece size failed to decrease")
        prev_size = len(X)

        Y = coboundary(G, X)
        if len(Y) > 3 * k:
            raise InvariantViolation(f"coboundary grew past 3k: {len(Y)} > {3 * k}")
        result = saturating_matching(G, Y, X)
        if isinstance(result, HallViolator):
            S = result.witness
            hit = set_of(adjacency_mask(G, mask_of(S)) & mask_of(X))
            if hit == X:
                raise InvariantViolation(
                    "violator neighborhood covers the whole piece despite the degree bound"
                )
            X = X - hit
            continue

        matching = tuple(result)
        Q, classes = _contracted_piece(G, X, Y, matching)
        if Q.n >= 2 and vertex_connectivity(Q) >= k:
            return Decomposition(X, Y, matching, k)
        if Q.n < 2:
            raise InvariantViolation("contracted piece collapsed to a single vertex")

        A_new, B_new = minimum_separation(Q)
        A = frozenset().union(*(classes[i] for i in A_new))
        B = frozenset().union(*(classes[i] for i in B_new))
        for candidate in ((A & X) - B, (B & X) - A):
            if candidate and len(coboundary(G, candidate)) <= 3 * k:
                X = candidate
                break
        else:
            raise InvariantViolation("no separation side yields a small coboundary")


def peel_piece(G: Graph, d: int) -> frozenset[int]:
    """A non-empty piece whose coboundary has at most d vertices.

    A vertex of degree at most d is its own piece; otherwise delegate to
    :func:`small_coboundary_piece` with k = floor(d / 6) (coboundary at most
    3k <= d/2).
    """
    if G.n == 0:
        raise PreconditionError("the graph must be non-empty")
    if d < 6:
        raise InputError(f"peel parameter must be at least 6, got {d}")
    degrees = [(G.degree(v), v) for v in range(G.n)]
    deg, v = min(degrees)
    if deg <= d:
        return frozenset({v})
    return small_coboundary_piece(G, d // 6).X


def check_decomposition(G: Graph, D: Decomposition) -> list[str]:
    """Independent re-verification of every Decomposition invariant.

    Recomputes the coboundary, checks matching saturation over genuine
    edges, and re-derives the connectivity of the contracted piece from
    scratch.  Returns a list of violations (empty when valid).
    """
    problems: list[str] = []
    if not D.X:
        problems.append("piece-empty")
        return problems
    if coboundary(G, D.X) != D.Y:
        problems.append("coboundary-mismatch")
    if len(D.Y) > 3 * D.k:
        problems.append(f"coboundary-too-big:{len(D.Y)}>{3 * D.k}")
    matched_y = [y for y, _ in D.matching]
    matched_x = [x for _, x in D.matching]
    if set(matched_y) != set(D.Y) or len(matched_y) != len(D.Y):
        problems.append("matching-does-not-saturate")
    if len(set(matched_x)) != len(matched_x):
        problems.append("matching-reuses-piece-vertex")
    for y, x in D.matching:
        if y not in D.Y or x not in D.X or not G.has_edge(y, x):
            problems.append(f"matching-pair-not-an-edge:{y}-{x}")
    if problems:
        return problems
    Q, _ = _contracted_piece(G, D.X, D.Y, D.matching)
    if Q.n >= 2:
        kappa = vertex_connectivity(Q)
        if kappa < D.k:
            problems.append(f"contracted-piece-connectivity:{kappa}<{D.k}")
    elif D.k >= 1:
        problems.append("contracted-piece-trivial")
    return problems
