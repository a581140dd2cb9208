"""Clique-minor models: validation, exact search, and randomized builders.

A model of K_t in G is a family of t pairwise disjoint vertex sets, each
inducing a connected subgraph, with an edge of G between every pair of sets.
The exact search grows branch sets by backtracking with canonical-seed
symmetry pruning; the two randomized procedures build models in dense graphs
and in one random-contraction round of a bipartite graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import BudgetExceeded, InputError, InvariantViolation, PreconditionError
from .graphs import (
    DEFAULT_BUDGET,
    Graph,
    adjacency_mask,
    biconnected_blocks,
    bits,
    closure_mask,
    from_edge_list,
    is_connected_mask,
    mask_of,
    nonedge_fraction,
    set_of,
)
from .seeds import derive_seed


@dataclass(frozen=True)
class MinorModel:
    """Branch sets witnessing a K_t minor; t is the number of sets."""

    branch_sets: tuple[frozenset[int], ...]

    @property
    def t(self) -> int:
        return len(self.branch_sets)


def model_defect(G: Graph, model: MinorModel) -> str | None:
    """Machine-readable reason the model is invalid, or None if it is valid."""
    masks = []
    for i, s in enumerate(model.branch_sets):
        if not s:
            return f"branch-set-{i}-empty"
        for v in s:
            if not 0 <= v < G.n:
                return f"branch-set-{i}-vertex-{v}-out-of-range"
        masks.append(mask_of(s))
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if masks[i] & masks[j]:
                return f"branch-sets-{i}-{j}-overlap"
    for i, m in enumerate(masks):
        if not is_connected_mask(G, m):
            return f"branch-set-{i}-disconnected"
    for i in range(len(masks)):
        nbr = adjacency_mask(G, masks[i])
        for j in range(i + 1, len(masks)):
            if not nbr & masks[j]:
                return f"branch-sets-{i}-{j}-nonadjacent"
    return None


def validate_model(G: Graph, model: MinorModel) -> bool:
    """True iff disjointness, connectivity and pairwise adjacency all hold."""
    return model_defect(G, model) is None


# ---------------------------------------------------------------------------
# Exact search
# ---------------------------------------------------------------------------


def _cycle_model(G: Graph) -> MinorModel | None:
    """K_3 model from any cycle: two singletons plus the rest of the cycle."""
    parent = [-1] * G.n
    state = [0] * G.n  # 0 unseen, 1 active, 2 done
    for root in range(G.n):
        if state[root]:
            continue
        stack = [(root, -1, iter(G.neighbors(root)))]
        state[root] = 1
        while stack:
            v, pv, it = stack[-1]
            advanced = False
            for u in it:
                if u == pv:
                    continue
                if state[u] == 1:
                    # back edge v-u closes a cycle
                    path = [v]
                    x = v
                    while x != u:
                        x = parent[x]
                        path.append(x)
                    cyc = path[::-1]  # u ... v along tree edges, closed by v-u
                    return MinorModel(
                        (frozenset({cyc[0]}), frozenset({cyc[1]}), frozenset(cyc[2:]))
                    )
                if state[u] == 0:
                    parent[u] = v
                    state[u] = 1
                    stack.append((u, v, iter(G.neighbors(u))))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                stack.pop()
    return None


def k4_minor_free(G: Graph) -> bool:
    """Decide K_4-minor-freeness by series-parallel reduction.

    Repeatedly delete degree <= 1 vertices and suppress degree-2 vertices
    (dropping the parallel edge when the neighbors are already adjacent).
    The graph reduces to nothing iff it has no K_4 minor; a non-empty
    remainder has minimum degree 3 and therefore a K_4 minor.
    """
    adj: dict[int, set[int]] = {v: set(G.neighbors(v)) for v in range(G.n)}
    queue = sorted(v for v in adj if len(adj[v]) <= 2)
    pending = set(queue)
    while queue:
        v = queue.pop(0)
        pending.discard(v)
        if v not in adj or len(adj[v]) > 2:
            continue
        nbrs = sorted(adj[v])
        for u in nbrs:
            adj[u].discard(v)
        del adj[v]
        if len(nbrs) == 2:
            u, w = nbrs
            if w not in adj[u]:
                adj[u].add(w)
                adj[w].add(u)
        for u in nbrs:
            if u in adj and len(adj[u]) <= 2 and u not in pending:
                queue.append(u)
                pending.add(u)
    return not adj


_TRANSPOSITION_CAP = 1_000_000


def _branch_set_search(
    G: Graph, comp: int, t: int, steps: list[int]
) -> list[int] | None:
    """Backtracking over branch-set growth inside one block.

    Canonical form: branch sets are ordered by their minimum vertex (the
    seed), and a set only ever absorbs vertices larger than its own seed.
    At each node the most constrained non-adjacent pair is repaired by
    absorbing one available neighbor into either side; when all current
    pairs are adjacent, the next set is seeded.

    The outer loop deepens a cap on the total number of used vertices, so
    small models are found quickly and a level that never hits the cap is a
    complete proof that no model exists.  A pair whose canonical-growth
    closures can never touch prunes its subtree permanently; a transposition
    table collapses states reached through different absorption orders.
    """

    def above(v: int) -> int:
        """Mask of all vertices strictly larger than v."""
        return -1 << (v + 1)

    comp_size = comp.bit_count()
    failed_perm: set[tuple[int, ...]] = set()

    def remember_perm(state: tuple[int, ...]) -> None:
        if len(failed_perm) < _TRANSPOSITION_CAP:
            failed_perm.add(state)

    def interior_distance(src: int, dst_nbr: int, allowed: int) -> int | None:
        """Fewest absorbed vertices that could make src adjacent to the set
        whose neighborhood is dst_nbr, walking only through allowed."""
        if dst_nbr & src:
            return 0
        frontier = src
        seen = src
        dist = 0
        while True:
            frontier = adjacency_mask(G, frontier) & allowed & ~seen
            if not frontier:
                return None
            dist += 1
            if dst_nbr & frontier:
                return dist
            seen |= frontier

    def search(cap: int) -> tuple[list[int] | None, bool]:
        failed_here: set[tuple[int, ...]] = set()

        def remember(state: tuple[int, ...], cap_hit: bool) -> None:
            if cap_hit:
                if len(failed_here) < _TRANSPOSITION_CAP:
                    failed_here.add(state)
            else:
                remember_perm(state)

        def rec(
            sets: list[int], seeds: list[int], avail: int, used: int
        ) -> tuple[list[int] | None, bool]:
            steps[0] -= 1
            if steps[0] < 0:
                raise BudgetExceeded("minor search exceeded its node budget")
            state = tuple(sets)
            if state in failed_perm:
                return None, False
            if state in failed_here:
                return None, True
            k = len(sets)
            nbr = [adjacency_mask(G, s) for s in sets]
            deficient = [
                (i, j)
                for i in range(k)
                for j in range(i + 1, k)
                if not nbr[i] & sets[j]
            ]
            need_absorb = 0
            if deficient:
                for i, j in deficient:
                    dist = interior_distance(
                        sets[i], nbr[j], avail & above(min(seeds[i], seeds[j]))
                    )
                    if dist is None:
                        remember_perm(state)
                        return None, False
                    need_absorb = max(need_absorb, dist)
            floor_size = used + (t - k) + need_absorb
            if floor_size > comp_size:
                remember_perm(state)
                return None, False
            if floor_size > cap:
                remember(state, True)
                return None, True
            if deficient:
                grow = {}
                for i in {x for pair in deficient for x in pair}:
                    grow[i] = avail & nbr[i] & above(seeds[i])
                best = None
                best_count = None
                for i, j in deficient:
                    count = grow[i].bit_count() + grow[j].bit_count()
                    if count == 0:
                        remember_perm(state)
                        return None, False
                    if best_count is None or count < best_count:
                        best_count = count
                        best = (i, j)
                i, j = best
                moves = []
                for side, other in ((i, j), (j, i)):
                    for v in bits(grow[side]):
                        # absorptions that finish the pair at once go first
                        instant = 1 if G.adj[v] & sets[other] else 0
                        moves.append((1 - instant, side, v))
                moves.sort()
                cap_hit = False
                for _, side, v in moves:
                    vb = 1 << v
                    new_sets = sets.copy()
                    new_sets[side] |= vb
                    found, child_hit = rec(new_sets, seeds, avail & ~vb, used + 1)
                    if found is not None:
                        return found, False
                    cap_hit = cap_hit or child_hit
                remember(state, cap_hit)
                return None, cap_hit
            if k == t:
                return sets, False
            base = -1 if not seeds else seeds[-1]
            cands = avail & above(base)
            if cands.bit_count() < t - k:
                remember_perm(state)
                return None, False
            # seeds already adjacent to more of the current sets go first
            ranked = sorted(
                (sum(0 if G.adj[v] & s else 1 for s in sets), v)
                for v in bits(cands)
            )
            cap_hit = False
            for _, v in ranked:
                vb = 1 << v
                found, child_hit = rec(sets + [vb], seeds + [v], avail & ~vb, used + 1)
                if found is not None:
                    return found, False
                cap_hit = cap_hit or child_hit
            remember(state, cap_hit)
            return None, cap_hit

        return rec([], [], comp, 0)

    if comp_size <= 14:
        found, _ = search(comp_size)
        return found
    for cap in range(t, comp_size + 1):
        found, cap_hit = search(cap)
        if found is not None:
            return found
        if not cap_hit:
            return None
    return None


def find_kt_minor_exact(
    G: Graph,
    t: int,
    budget: int = DEFAULT_BUDGET,
    fast_paths: bool = True,
) -> MinorModel | None:
    """Exact K_t-minor search: a verified model, or None as a proof of freeness.

    Raises :class:`BudgetExceeded` when the node budget runs out, which is
    inconclusive.  With `fast_paths` enabled, t=3 reduces to cycle detection
    and t=4-freeness to series-parallel reduction (a positive t=4 answer
    still extracts its model by backtracking).
    """
    if t < 1:
        raise InputError(f"clique order must be at least 1, got {t}")
    if t == 1:
        return MinorModel((frozenset({0}),)) if G.n >= 1 else None
    if t == 2:
        edges = G.edges()
        if not edges:
            return None
        u, v = edges[0]
        return MinorModel((frozenset({u}), frozenset({v})))
    if fast_paths and t == 3:
        return _cycle_model(G)
    if fast_paths and t == 4 and k4_minor_free(G):
        return None

    # K_t is 2-connected for t >= 3, so any model lives inside one block.
    steps = [budget]
    need_edges = t * (t - 1) // 2
    for block in biconnected_blocks(G):
        if block.bit_count() < t:
            continue
        block_edges = sum(
            (G.adj[v] & block).bit_count() for v in bits(block)
        ) // 2
        if block_edges < need_edges:
            continue
        masks = _branch_set_search(G, block, t, steps)
        if masks is not None:
            model = MinorModel(tuple(set_of(m) for m in masks))
            defect = model_defect(G, model)
            if defect is not None:
                raise InvariantViolation(f"search produced an invalid model: {defect}")
            return model
    return None


def hadwiger_number(G: Graph, budget: int = DEFAULT_BUDGET) -> int:
    """Largest t such that G has a K_t minor (0 for the null graph)."""
    if G.n == 0:
        return 0
    lo, hi = 1, G.n
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if find_kt_minor_exact(G, mid, budget) is not None:
            lo = mid
        else:
            hi = mid - 1
    return lo


# ---------------------------------------------------------------------------
# Randomized dense-graph model builder
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DenseModelParams:
    """Parameters for :func:`dense_random_model`.

    `l` is the block size; when None it defaults to floor(n / 9t).  `trials`
    bounds the number of independent sampling rounds.
    """

    t: int
    l: int | None = None
    trials: int = 32
    seed: int = 0

    def __post_init__(self) -> None:
        if self.t < 1:
            raise InputError(f"t must be at least 1, got {self.t}")
        if self.l is not None and self.l < 1:
            raise InputError(f"block size must be at least 1, got {self.l}")
        if self.trials < 1:
            raise InputError(f"trials must be at least 1, got {self.trials}")


def dense_random_model(G: Graph, params: DenseModelParams) -> MinorModel | None:
    """Randomized K_t model search for graphs with very few non-edges.

    Per trial: (1) take Z = the floor(n/3) vertices with fewest non-neighbors,
    requiring each to have at most 2qn of them, where q is the missing-edge
    fraction; (2) sample disjoint blocks X_1..X_2t, Y_1..Y_t inside Z, each of
    size l; (3) keep t blocks X_i that see every Y_j; (4) greedily connect
    each X_i to its Y_i through unused common neighbors outside Z.  Returns a
    validated model, or None once the trial budget is spent.
    """
    t = params.t
    n = G.n
    if n < 9 * t:
        raise PreconditionError(f"need n >= 9t = {9 * t}, got {n}")
    l = params.l if params.l is not None else n // (9 * t)
    z_size = n // 3
    if 3 * t * l > z_size:
        raise InputError(
            f"3*t*l = {3 * t * l} blocks do not fit in the core of {z_size} vertices"
        )

    q = nonedge_fraction(G)
    cap = 2 * q * n
    by_nondegree = sorted(range(n), key=lambda v: (n - 1 - G.degree(v), v))
    zlist = by_nondegree[:z_size]
    if any(n - 1 - G.degree(v) > cap for v in zlist):
        return None  # deterministic in the graph: every trial would fail here
    zmask = mask_of(zlist)
    outside = G.full_mask & ~zmask

    for trial in range(params.trials):
        rng = random.Random(derive_seed(params.seed, trial))
        pool = sorted(zlist)
        rng.shuffle(pool)
        xs = [mask_of(pool[i * l : (i + 1) * l]) for i in range(2 * t)]
        ys = [
            mask_of(pool[(2 * t + j) * l : (2 * t + j + 1) * l]) for j in range(t)
        ]
        x_nbr = [adjacency_mask(G, x) for x in xs]
        perfect = [
            i for i in range(2 * t) if all(x_nbr[i] & ys[j] for j in range(t))
        ]
        if len(perfect) < t:
            continue
        chosen = perfect[:t]

        used = 0
        branch_masks: list[int] = []
        ok = True
        for i in range(t):
            s = xs[chosen[i]] | ys[i]
            while not is_connected_mask(G, s):
                comps = _mask_components(G, s)
                connector = -1
                for w in bits(outside & ~used & ~s):
                    touched = sum(1 for c in comps if G.adj[w] & c)
                    if touched >= 2:
                        connector = w
                        break
                if connector < 0:
                    ok = False
                    break
                s |= 1 << connector
            if not ok:
                break
            used |= s
            branch_masks.append(s)
        if not ok:
            continue
        model = MinorModel(tuple(set_of(s) for s in branch_masks))
        defect = model_defect(G, model)
        if defect is not None:
            raise InvariantViolation(f"dense builder produced a bad model: {defect}")
        return model
    return None


def _mask_components(G: Graph, mask: int) -> list[int]:
    out = []
    rest = mask
    while rest:
        low = rest & -rest
        comp = closure_mask(G, low, rest)
        out.append(comp)
        rest &= ~comp
    return out


def dense_condition_holds(G: Graph, t: int, l: int) -> bool:
    """Whether 6t(70q)^(l^2) <= 1 for the graph's missing-edge fraction q."""
    q = float(nonedge_fraction(G))
    return 6 * t * (70 * q) ** (l * l) <= 1


# ---------------------------------------------------------------------------
# Random contraction round
# ---------------------------------------------------------------------------


def contraction_round(
    G: Graph,
    A: frozenset[int] | set[int],
    B: frozenset[int] | set[int],
    X: frozenset[int] | set[int],
    seed: int = 0,
) -> Graph:
    """One random contraction round of a bipartite graph onto X.

    For each vertex of A with a neighbor in X, contract it onto a uniformly
    random such neighbor; return the graph induced on X afterwards.  Vertex i
    of the result is the i-th smallest element of X.
    """
    A, B, X = frozenset(A), frozenset(B), frozenset(X)
    if A & B or A | B != frozenset(range(G.n)):
        raise InputError("A and B must partition the vertex set")
    for side in (A, B):
        smask = mask_of(side)
        for v in side:
            if G.adj[v] & smask:
                raise InputError("graph is not bipartite on the given parts")
    if not X <= B:
        raise InputError("X must be a subset of B")

    rng = random.Random(seed)
    xmask = mask_of(X)
    xs = sorted(X)
    pos = {x: i for i, x in enumerate(xs)}
    edges = set()
    for v in sorted(A):
        nb = [x for x in bits(G.adj[v] & xmask)]
        if not nb:
            continue
        u = nb[rng.randrange(len(nb))]
        for x in nb:
            if x != u:
                edges.add((min(pos[u], pos[x]), max(pos[u], pos[x])))
    return from_edge_list(len(xs), sorted(edges))
