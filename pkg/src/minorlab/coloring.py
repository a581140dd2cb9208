"""List coloring: greedy, exact, and the randomized pipelines.

A list assignment is a sequence of color sets, one per vertex; a coloring is
a dict from vertex to chosen color (possibly partial mid-recursion).  Every
public operation that returns a coloring returns one that passes
:func:`verify_list_coloring`; randomized procedures return None on failure
rather than ever emitting an improper coloring.
"""

from __future__ import annotations

import logging
import math
import random
from typing import AbstractSet, Mapping, Sequence

from .decompose import peel_piece
from .errors import (
    BudgetExceeded,
    HallRatioViolation,
    InputError,
    InvariantViolation,
    PreconditionError,
)
from .graphs import (
    DEFAULT_BUDGET,
    Graph,
    bits,
    degeneracy,
    exact_alpha,
    find_independent_set,
    induced_subgraph_with_map,
    mask_of,
)
from .seeds import derive_seed

logger = logging.getLogger(__name__)

ListAssignment = Sequence[AbstractSet[int]]
Coloring = Mapping[int, int]


def _check_lists(G: Graph, lists: ListAssignment) -> None:
    if len(lists) != G.n:
        raise InputError(
            f"expected one color list per vertex ({G.n}), got {len(lists)}"
        )


def uniform_lists(n: int, k: int) -> list[frozenset[int]]:
    """The same list {0, .., k-1} for every vertex."""
    base = frozenset(range(k))
    return [base] * n


def random_lists(n: int, size: int, universe: int, seed: int) -> list[frozenset[int]]:
    """Seeded per-vertex lists: `size` distinct colors drawn from range(universe)."""
    if size > universe:
        raise InputError(f"cannot draw {size} distinct colors from {universe}")
    rng = random.Random(seed)
    return [frozenset(rng.sample(range(universe), size)) for _ in range(n)]


def verify_list_coloring(G: Graph, lists: ListAssignment, coloring: Coloring) -> bool:
    """True iff the coloring is proper on its domain and respects the lists."""
    _check_lists(G, lists)
    for v, c in coloring.items():
        if not 0 <= v < G.n or c not in lists[v]:
            return False
    for v, c in coloring.items():
        for u in bits(G.adj[v]):
            if u in coloring and coloring[u] == c:
                return False
    return True


def greedy_list_color(G: Graph, lists: ListAssignment, order=None) -> dict[int, int] | None:
    """Sequential greedy over `order` (vertex id order by default).

    Each vertex takes the smallest list color unused by its colored
    neighbors; returns None as soon as some vertex has no candidate.
    """
    _check_lists(G, lists)
    coloring: dict[int, int] = {}
    for v in order if order is not None else range(G.n):
        taken = {coloring[u] for u in bits(G.adj[v]) if u in coloring}
        free = sorted(set(lists[v]) - taken)
        if not free:
            return None
        coloring[v] = free[0]
    return coloring


def degeneracy_list_color(G: Graph, lists: ListAssignment) -> dict[int, int]:
    """Greedy along the reverse elimination order; needs |L(v)| >= degeneracy + 1.

    Under that precondition every vertex sees at most `degeneracy` colored
    neighbors when its turn comes, so the greedy step never fails.
    """
    _check_lists(G, lists)
    d, order = degeneracy(G)
    short = [v for v in range(G.n) if len(lists[v]) < d + 1]
    if short:
        raise PreconditionError(
            f"lists must have at least degeneracy+1 = {d + 1} colors; "
            f"vertex {short[0]} has {len(lists[short[0]])}"
        )
    coloring = greedy_list_color(G, lists, order=reversed(order))
    if coloring is None:
        raise InvariantViolation("degeneracy-greedy ran out of colors")
    return coloring


def exact_list_color(
    G: Graph, lists: ListAssignment, budget: int = DEFAULT_BUDGET
) -> dict[int, int] | None:
    """Exhaustive list-coloring search with forward checking.

    Returns a proper list coloring or None if none exists.  Raises
    :class:`BudgetExceeded` when the node budget runs out.
    """
    _check_lists(G, lists)
    n = G.n
    effective = [sorted(lists[v]) for v in range(n)]
    coloring: dict[int, int] = {}
    steps = [budget]

    def choose() -> int:
        best, best_key = -1, None
        for v in range(n):
            if v in coloring:
                continue
            key = (len(effective[v]), v)
            if best_key is None or key < best_key:
                best_key = key
                best = v
        return best

    def rec() -> bool:
        steps[0] -= 1
        if steps[0] < 0:
            raise BudgetExceeded("exact list coloring exceeded its node budget")
        if len(coloring) == n:
            return True
        v = choose()
        if not effective[v]:
            return False
        for c in effective[v]:
            removed = []
            ok = True
            for u in bits(G.adj[v]):
                if u in coloring:
                    if coloring[u] == c:
                        ok = False
                        break
                elif c in effective[u]:
                    effective[u] = [x for x in effective[u] if x != c]
                    removed.append(u)
                    if not effective[u]:
                        ok = False
                        break
            if ok:
                coloring[v] = c
                if rec():
                    return True
                del coloring[v]
            for u in removed:
                effective[u] = sorted(effective[u] + [c])
        return False

    if rec():
        return dict(coloring)
    return None


# ---------------------------------------------------------------------------
# Randomized coloring of (subgraphs of) complete multipartite graphs
# ---------------------------------------------------------------------------


def _check_partition(G: Graph, parts: Sequence[AbstractSet[int]]) -> None:
    seen: set[int] = set()
    for i, part in enumerate(parts):
        if not part:
            raise InputError(f"part {i} is empty")
        if seen & set(part):
            raise InputError(f"part {i} overlaps an earlier part")
        seen |= set(part)
        pmask = mask_of(part)
        for v in part:
            if G.adj[v] & pmask:
                raise InputError(f"part {i} is not independent in the graph")
    if seen != set(range(G.n)):
        raise InputError("parts must cover every vertex")


def multipartite_list_color(
    G: Graph,
    parts: Sequence[AbstractSet[int]],
    lists: ListAssignment,
    trials: int = 64,
    seed: int = 0,
) -> dict[int, int] | None:
    """Color-to-part random assignment for subgraphs of complete multipartite graphs.

    Per trial every color in the union of the lists is assigned independently
    and uniformly to one of the parts; each vertex takes the smallest color
    of its list that landed on its own part.  Cross-part conflicts are
    impossible by construction; a vertex left without a color fails the
    trial.
    """
    _check_lists(G, lists)
    _check_partition(G, parts)
    part_of = {}
    for i, part in enumerate(parts):
        for v in part:
            part_of[v] = i
    pool = sorted(set().union(*lists)) if G.n else []
    r = len(parts)
    for trial in range(trials):
        rng = random.Random(derive_seed(seed, trial))
        owner = {c: rng.randrange(r) for c in pool}
        coloring: dict[int, int] = {}
        for v in range(G.n):
            mine = [c for c in sorted(lists[v]) if owner[c] == part_of[v]]
            if not mine:
                break
            coloring[v] = mine[0]
        else:
            return coloring
    return None


# ---------------------------------------------------------------------------
# Hall-ratio driven recursion
# ---------------------------------------------------------------------------


def independent_sets_extract(
    G: Graph, s: int, k: int, budget: int = DEFAULT_BUDGET
) -> list[frozenset[int]]:
    """k disjoint independent sets of size exactly s, greedily from the remainder.

    Each extraction runs the exact independent-set search on what is left;
    if some remainder has no independent set of size s the promised Hall
    ratio was wrong, reported as :class:`HallRatioViolation`.
    """
    if s < 1 or k < 1:
        raise InputError("both the set size and the count must be at least 1")
    remainder = set(range(G.n))
    out: list[frozenset[int]] = []
    for i in range(k):
        found = find_independent_set(G, s, budget=budget, within=remainder)
        if found is None:
            raise HallRatioViolation(
                f"remainder of {len(remainder)} vertices has no independent "
                f"set of size {s} (needed {k - i} more)"
            )
        chosen = frozenset(sorted(found)[:s])
        out.append(chosen)
        remainder -= chosen
    return out


def split_lists_by_colors(
    lists: ListAssignment, kept: AbstractSet[int]
) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Partition every list by a global color subset: (L & kept, L - kept)."""
    first = [frozenset(L) & frozenset(kept) for L in lists]
    second = [frozenset(L) - frozenset(kept) for L in lists]
    return first, second


def hall_ratio_list_color(
    G: Graph,
    lists: ListAssignment,
    rho: float,
    C: float = 2.0,
    seed: int = 0,
    trials: int = 64,
    budget: int = DEFAULT_BUDGET,
    max_redraws: int = 64,
    _depth: int = 0,
    _n_top: int | None = None,
) -> dict[int, int] | None:
    """Recursive list coloring driven by a promised Hall ratio bound.

    The caller promises ceil(v(H) / alpha(H)) <= rho for every subgraph H;
    the promise is spot-checked on each recursion level (budget permitting)
    and violations raise :class:`HallRatioViolation`.

    Large instances split a random global color subset off the lists,
    extract k = ceil((1 - 1/e) n / s) disjoint independent sets of size
    s = floor(n / (e rho)), color their union from the split-off colors via
    :func:`multipartite_list_color`, and recurse on the remainder with the
    remaining colors.  The color subset is redrawn (up to `max_redraws`
    times) until every vertex keeps between (C/2) rho log(n/rho) and
    (3C/2) rho log(n/rho) of its list.

    Small instances, and instances whose lists are too short for the
    redraw window to ever accept, fall back to sequential greedy and then
    to exact search.
    """
    _check_lists(G, lists)
    if rho < 1:
        raise InputError(f"the Hall ratio bound must be at least 1, got {rho}")
    n = G.n
    if n == 0:
        return {}
    if _n_top is None:
        _n_top = n
    else:
        limit = math.ceil(math.log(_n_top / rho)) + 1
        if _depth > limit:
            raise InvariantViolation(
                f"recursion depth {_depth} exceeded the bound {limit}"
            )

    try:
        alpha = exact_alpha(G, budget=budget)
    except BudgetExceeded:
        alpha = None  # promise taken on faith when too big to check
    if alpha is not None and math.ceil(n / alpha) > rho:
        raise HallRatioViolation(
            f"graph itself has ceil(n / alpha) = {math.ceil(n / alpha)} > {rho}"
        )

    min_list = min((len(L) for L in lists), default=0)
    base_case = n <= 3 * math.e * rho
    window_ok = (
        not base_case and min_list >= C * rho * math.log(n / rho) ** 2
    )
    if base_case or not window_ok:
        coloring = greedy_list_color(G, lists)
        if coloring is None:
            try:
                coloring = exact_list_color(G, lists, budget=budget)
            except BudgetExceeded:
                logger.debug("base-case exact search ran out of budget (n=%d)", n)
                coloring = None
        return coloring

    log_ratio = math.log(n / rho)
    keep_p = 1.0 / log_ratio
    lo = C / 2 * rho * log_ratio
    hi = 3 * C / 2 * rho * log_ratio
    pool = sorted(set().union(*lists))

    kept = None
    for redraw in range(max_redraws):
        rng = random.Random(derive_seed(seed, 3 + redraw))
        candidate = {c for c in pool if rng.random() < keep_p}
        sizes = [len(set(L) & candidate) for L in lists]
        if all(lo <= sz <= hi for sz in sizes):
            kept = candidate
            break
    if kept is None:
        return None

    first, second = split_lists_by_colors(lists, kept)
    s = int(n / (math.e * rho))
    k = math.ceil((1 - 1 / math.e) * n / s)
    sets = independent_sets_extract(G, s, k, budget=budget)
    if k * s < (1 - 1 / math.e) * n - s:
        raise InvariantViolation("extracted union is smaller than the level target")

    X = sorted(set().union(*sets))
    H, old_ids = induced_subgraph_with_map(G, X)
    pos = {v: i for i, v in enumerate(old_ids)}
    local_parts = [frozenset(pos[v] for v in part) for part in sets]
    local_lists = [first[old_ids[i]] for i in range(H.n)]
    phi1 = multipartite_list_color(
        H, local_parts, local_lists, trials=trials, seed=derive_seed(seed, 0)
    )
    if phi1 is None:
        return None

    rest = sorted(set(range(n)) - set(X))
    coloring = {old_ids[i]: c for i, c in phi1.items()}
    if rest:
        R, rest_ids = induced_subgraph_with_map(G, rest)
        rest_lists = [second[rest_ids[i]] for i in range(R.n)]
        phi2 = hall_ratio_list_color(
            R,
            rest_lists,
            rho,
            C=C,
            seed=derive_seed(seed, 2),
            trials=trials,
            budget=budget,
            max_redraws=max_redraws,
            _depth=_depth + 1,
            _n_top=_n_top,
        )
        if phi2 is None:
            return None
        coloring.update({rest_ids[i]: c for i, c in phi2.items()})
    return coloring


# ---------------------------------------------------------------------------
# Recursive peeling for minor-free graphs
# ---------------------------------------------------------------------------


def minor_free_list_color(
    G: Graph,
    lists: ListAssignment,
    d: int,
    seed: int = 0,
    rho: float | None = None,
    inner_threshold: int = 24,
    trials: int = 64,
    budget: int = DEFAULT_BUDGET,
) -> dict[int, int] | None:
    """Peel-and-recolor list coloring for sparse (minor-free) graphs.

    Repeatedly peel a piece X whose coboundary has at most d vertices, color
    the rest first, then color G[X] from the lists minus the colors of X's
    outside neighbors; the boundary costs at most d colors per list, so
    |L(v)| >= 2d leaves at least d usable colors for the inner stage.  The
    inner stage is exact search for small pieces and
    :func:`hall_ratio_list_color` beyond `inner_threshold` (with rho
    defaulting to 2d: a graph peelable at d is minor-free for a clique order
    at most d, whose independence ratio bounds the Hall ratio by 2d).

    Returns None when an inner stage fails (including an inner exact search
    exhausting its node budget); never an improper coloring.
    """
    _check_lists(G, lists)
    if d < 6:
        raise InputError(f"peel parameter must be at least 6, got {d}")
    short = [v for v in range(G.n) if len(lists[v]) < 2 * d]
    if short:
        raise PreconditionError(
            f"lists must have at least 2d = {2 * d} colors; vertex "
            f"{short[0]} has {len(lists[short[0]])}"
        )
    if rho is None:
        rho = 2 * d

    layers: list[list[int]] = []
    remaining = sorted(range(G.n))
    while remaining:
        H, old_ids = induced_subgraph_with_map(G, remaining)
        local_piece = peel_piece(H, d)
        piece = sorted(old_ids[i] for i in local_piece)
        layers.append(piece)
        remaining = sorted(set(remaining) - set(piece))

    coloring: dict[int, int] = {}
    for level, piece in enumerate(reversed(layers)):
        piece_set = set(piece)
        reduced: list[frozenset[int]] = []
        for v in piece:
            outside = {
                coloring[u]
                for u in bits(G.adj[v])
                if u not in piece_set and u in coloring
            }
            L = frozenset(lists[v]) - outside
            if len(L) < len(lists[v]) - d:
                raise InvariantViolation(
                    f"boundary consumed more than d = {d} colors at vertex {v}"
                )
            reduced.append(L)
        H, old_ids = induced_subgraph_with_map(G, piece)
        try:
            if H.n <= inner_threshold:
                phi = exact_list_color(H, reduced, budget=budget)
            else:
                phi = hall_ratio_list_color(
                    H,
                    reduced,
                    rho,
                    seed=derive_seed(seed, level),
                    trials=trials,
                    budget=budget,
                )
        except BudgetExceeded:
            logger.debug("inner stage ran out of budget at peel level %d", level)
            phi = None
        except HallRatioViolation as exc:
            # the graph is denser than the peel parameter promised
            logger.debug("inner stage at peel level %d: %s", level, exc)
            phi = None
        if phi is None:
            logger.debug(
                "inner coloring failed at peel level %d (piece of %d vertices)",
                level,
                H.n,
            )
            return None
        coloring.update({old_ids[i]: c for i, c in phi.items()})
    return coloring
