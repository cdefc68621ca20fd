"""Best-first search for minimum bounded chains in any dimension.

The search space has one state per (d-1)-chain. From a chain, pick one
pivot face in it; every top simplex containing the pivot gives a successor
chain by symmetric-differencing in that simplex's boundary, at the cost of
its weight. Restricting moves to cofaces of a single pivot keeps the
branching factor at the pivot's coface degree without losing optimality:
any bounding chain must cover each boundary face an odd number of times,
so it contains a coface of whatever pivot is current. With non-negative
weights, settling states in cost order yields the exact optimum.

An optional bound k restricts attention to solutions using at most k top
simplices. With uniform weights a chain never profits from being reached
in more steps, so states stay keyed by chain; with general weights the
key becomes (chain, steps), which is the layered view of the same graph.
"""

from __future__ import annotations

import heapq
import os
from typing import Iterable, Sequence

from .chains import Chain
from .complexes import ComplexSlice, Gf2Matrix, boundary_matrix, feasibility_check
from .errors import ConsistencyError, UsageError
from .gf2 import indices_from_mask, mask_from_indices
from .results import SolveResult, Status

PIVOT_MIN_INDEX = "min-index"
PIVOT_MIN_COFACE = "min-coface"
PIVOT_MAX_INDEX = "max-index"
PIVOT_STRATEGIES = (PIVOT_MIN_INDEX, PIVOT_MIN_COFACE, PIVOT_MAX_INDEX)

DEFAULT_MAX_STATES = 2_000_000
MAX_STATES_ENV = "MBC_MAX_STATES"


def pivot_select(
    chain: Chain, strategy: str, coface_degrees: Sequence[int] | None = None
) -> int:
    """Pick the pivot face index of a nonempty chain under a strategy.

    min-coface needs the per-face coface degrees and breaks ties by
    smallest index.
    """
    if strategy not in PIVOT_STRATEGIES:
        raise UsageError(f"unknown pivot strategy {strategy!r}")
    if not chain.indices:
        raise UsageError("cannot pick a pivot in an empty chain")
    if strategy == PIVOT_MIN_INDEX:
        return chain.indices[0]
    if strategy == PIVOT_MAX_INDEX:
        return chain.indices[-1]
    if coface_degrees is None:
        raise UsageError("min-coface strategy needs coface degrees")
    return min(chain.indices, key=lambda i: (coface_degrees[i], i))


def _pivot_from_mask(mask: int, strategy: str, cofdeg: Sequence[int]) -> int:
    if strategy == PIVOT_MIN_INDEX:
        return (mask & -mask).bit_length() - 1
    if strategy == PIVOT_MAX_INDEX:
        return mask.bit_length() - 1
    best = None
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        key = (cofdeg[i], i)
        if best is None or key < best:
            best = key
        m ^= low
    return best[1]


def _default_max_states(max_states: int | None) -> int:
    if max_states is not None:
        return max_states
    env = os.environ.get(MAX_STATES_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"{MAX_STATES_ENV} must be an integer, got {env!r}")
    return DEFAULT_MAX_STATES


def solve_mld_dijkstra(
    matrix: Gf2Matrix,
    target_rows: Iterable[int],
    *,
    k: int | None = None,
    pivot: str = PIVOT_MIN_COFACE,
    check_feasibility: bool = True,
    max_states: int | None = None,
) -> SolveResult:
    """Run the search on the decoding view: rows are faces, columns moves."""
    if pivot not in PIVOT_STRATEGIES:
        raise UsageError(f"unknown pivot strategy {pivot!r}")
    if any(w < 0 for w in matrix.col_weights):
        raise UsageError("this search requires non-negative weights")
    if k is not None and k < 0:
        raise UsageError("k must be >= 0")
    max_states = _default_max_states(max_states)

    rows = tuple(target_rows)
    for r in rows:
        if not (0 <= r < matrix.nrows):
            raise UsageError(f"target row {r} out of range")
    start = mask_from_indices(rows)

    stats: dict = {
        "algorithm": "dijkstra",
        "pivot": pivot,
        "k": k,
        "feasibility_checked": bool(check_feasibility),
        "states_expanded": 0,
        "pushes": 0,
        "frontier_peak": 0,
        "visited": 0,
        "monotone_frontier": True,
    }

    if check_feasibility:
        feasible, _ = feasibility_check(matrix, rows)
        if not feasible:
            return SolveResult(Status.INFEASIBLE, stats=stats)

    if start == 0:
        stats["visited"] = 1
        return SolveResult(Status.OPTIMAL, 0, frozenset(), stats)

    col_masks = matrix.col_masks
    row_cols = matrix.row_cols
    weights = matrix.col_weights
    cofdeg = [len(cs) for cs in row_cols]
    chain_keyed = k is None or matrix.has_uniform_weights

    def key_of(mask: int, steps: int):
        return mask if chain_keyed else (mask, steps)

    start_key = key_of(start, 0)
    dist = {start_key: 0}
    parents: dict = {start_key: None}
    heap = [(0, 0, indices_from_mask(start), start)]
    stats["pushes"] = 1
    stats["frontier_peak"] = 1
    settled = set()
    prev_cost = 0

    while heap:
        cost, steps, _, mask = heapq.heappop(heap)
        key = key_of(mask, steps)
        if key in settled:
            continue
        settled.add(key)
        stats["states_expanded"] += 1
        if cost < prev_cost:
            stats["monotone_frontier"] = False
        prev_cost = cost

        if mask == 0:
            cols: list[int] = []
            cur = key
            while parents[cur] is not None:
                cur, col = parents[cur]
                cols.append(col)
            used = 0
            for c in cols:
                used ^= 1 << c
            witness = frozenset(indices_from_mask(used))
            weight = matrix.weight_of(witness)
            if weight != cost:
                raise ConsistencyError(
                    f"path cost {cost} disagrees with witness weight {weight}"
                )
            stats["visited"] = len(dist)
            return SolveResult(Status.OPTIMAL, cost, witness, stats)

        if k is not None and steps >= k:
            continue
        p = _pivot_from_mask(mask, pivot, cofdeg)
        for col in row_cols[p]:
            nmask = mask ^ col_masks[col]
            ncost = cost + weights[col]
            nsteps = steps + 1
            nkey = key_of(nmask, nsteps)
            if nkey in settled:
                continue
            old = dist.get(nkey)
            if old is not None and old <= ncost:
                continue
            if old is None and len(dist) >= max_states:
                stats["visited"] = len(dist)
                return SolveResult(Status.RESOURCE_LIMIT, stats=stats)
            dist[nkey] = ncost
            parents[nkey] = (key, col)
            heapq.heappush(heap, (ncost, nsteps, indices_from_mask(nmask), nmask))
            stats["pushes"] += 1
        if len(heap) > stats["frontier_peak"]:
            stats["frontier_peak"] = len(heap)

    stats["visited"] = len(dist)
    if k is None:
        return SolveResult(Status.INFEASIBLE, stats=stats)
    return SolveResult(Status.NOT_FOUND_WITHIN_BOUND, stats=stats)


def solve_dijkstra(
    cslice: ComplexSlice,
    boundary: Chain,
    *,
    k: int | None = None,
    pivot: str = PIVOT_MIN_COFACE,
    check_feasibility: bool = True,
    max_states: int | None = None,
) -> SolveResult:
    """Chain-view wrapper: minimum-weight d-chain with the given boundary."""
    if boundary.dim != cslice.dim - 1:
        raise UsageError(
            f"boundary dimension {boundary.dim} does not match slice faces"
        )
    if boundary.indices and boundary.indices[-1] >= cslice.n_faces:
        raise UsageError("boundary face index out of range")
    return solve_mld_dijkstra(
        boundary_matrix(cslice),
        boundary.indices,
        k=k,
        pivot=pivot,
        check_feasibility=check_feasibility,
        max_states=max_states,
    )


def expand_state(
    cslice: ComplexSlice, chain: Chain, strategy: str = PIVOT_MIN_COFACE
) -> list[tuple[Chain, int, int]]:
    """Successor states of a (d-1)-chain: (next chain, top index, weight).

    Exposed for inspection and tests; the solver inlines the same logic
    on bitmasks.
    """
    if chain.dim != cslice.dim - 1:
        raise UsageError("state must be a chain of the face dimension")
    if not chain.indices:
        return []
    cofdeg = [len(c) for c in cslice.cofaces]
    p = pivot_select(chain, strategy, cofdeg)
    cur = chain.as_set()
    out = []
    for j in cslice.cofaces[p]:
        nxt = Chain(chain.dim, tuple(sorted(cur ^ set(cslice.faces_of[j]))))
        out.append((nxt, j, cslice.weights[j]))
    return out
