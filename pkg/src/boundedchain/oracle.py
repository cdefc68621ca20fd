"""Ground-truth reference solvers: full enumeration, nothing clever.

These exist to pin down expected values for the real solvers, so they
favour obvious correctness over speed. Exhaustive mode walks all 2^n
column subsets in Gray-code order; kernel mode enumerates one solution
plus the span of the kernel, which is exact for any weights because every
solution is visited.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable

from .chains import Chain
from .complexes import ComplexSlice, Gf2Matrix, boundary_matrix
from .errors import ResourceLimitError, UsageError
from .gf2 import Gf2System, indices_from_mask, mask_from_indices
from .results import SolveResult, Status

EXHAUSTIVE_LIMIT = 20
KERNEL_LIMIT = 20
DEFAULT_ENUM_BUDGET = 5_000_000


def _target_mask(matrix: Gf2Matrix, target_rows) -> int:
    if isinstance(target_rows, Chain):
        rows = target_rows.indices
    else:
        rows = tuple(target_rows)
    for r in rows:
        if not (0 <= r < matrix.nrows):
            raise UsageError(f"target row {r} out of range")
    return mask_from_indices(rows)


def _exhaustive(matrix: Gf2Matrix, target: int) -> SolveResult:
    n = matrix.ncols
    masks = matrix.col_masks
    weights = matrix.col_weights
    best_w = None
    best_x = None
    x = 0
    bnd = 0
    w = 0
    if bnd == target:
        best_w, best_x = w, x
    for i in range(1, 1 << n):
        j = (i & -i).bit_length() - 1
        bit = 1 << j
        x ^= bit
        bnd ^= masks[j]
        w += weights[j] if x & bit else -weights[j]
        if bnd == target and (best_w is None or w < best_w):
            best_w, best_x = w, x
    stats = {"algorithm": "brute", "mode": "exhaustive", "enumerated": 1 << n}
    if best_w is None:
        return SolveResult(Status.INFEASIBLE, stats=stats)
    return SolveResult(
        Status.OPTIMAL, best_w, frozenset(indices_from_mask(best_x)), stats
    )


def _kernel(matrix: Gf2Matrix, target: int, kernel_limit: int) -> SolveResult:
    system = Gf2System(matrix.col_masks)
    x0 = system.solve(target)
    kdim = len(system.kernel)
    stats = {"algorithm": "brute", "mode": "kernel", "kernel_dim": kdim}
    if x0 is None:
        stats["enumerated"] = 0
        return SolveResult(Status.INFEASIBLE, stats=stats)
    if kdim > kernel_limit:
        raise ResourceLimitError(
            f"kernel dimension {kdim} exceeds enumeration limit {kernel_limit}"
        )
    weights = matrix.col_weights

    def weight_of_mask(m: int) -> int:
        return sum(weights[j] for j in indices_from_mask(m))

    x = x0
    w = weight_of_mask(x0)
    best_w, best_x = w, x
    for i in range(1, 1 << kdim):
        j = (i & -i).bit_length() - 1
        basis = system.kernel[j]
        x ^= basis
        for t in indices_from_mask(basis):
            w += weights[t] if (x >> t) & 1 else -weights[t]
        if w < best_w:
            best_w, best_x = w, x
    stats["enumerated"] = 1 << kdim
    return SolveResult(
        Status.OPTIMAL, best_w, frozenset(indices_from_mask(best_x)), stats
    )


def brute_force_mld(
    matrix: Gf2Matrix,
    target_rows,
    mode: str = "auto",
    exhaustive_limit: int = EXHAUSTIVE_LIMIT,
    kernel_limit: int = KERNEL_LIMIT,
) -> SolveResult:
    """Minimum-weight solution of A x = u by enumeration.

    mode: "exhaustive" (all 2^n subsets, n <= exhaustive_limit), "kernel"
    (one solution plus kernel span, dimension <= kernel_limit), or "auto"
    which picks exhaustive for small n and falls back to kernel mode.
    Raises ResourceLimitError when the chosen mode is over its limit.
    """
    target = _target_mask(matrix, target_rows)
    if mode not in ("auto", "exhaustive", "kernel"):
        raise UsageError(f"unknown oracle mode {mode!r}")
    if mode == "exhaustive":
        if matrix.ncols > exhaustive_limit:
            raise ResourceLimitError(
                f"{matrix.ncols} columns exceed exhaustive limit {exhaustive_limit}"
            )
        return _exhaustive(matrix, target)
    if mode == "kernel":
        return _kernel(matrix, target, kernel_limit)
    if matrix.ncols <= exhaustive_limit:
        return _exhaustive(matrix, target)
    return _kernel(matrix, target, kernel_limit)


def bounded_enumeration(
    cslice: ComplexSlice,
    boundary: Chain,
    k: int,
    budget: int = DEFAULT_ENUM_BUDGET,
) -> Chain | None:
    """Smallest-cardinality d-chain W with del W = boundary and |W| <= k.

    Returns None when no such chain exists. Subsets are tried in size
    order, lexicographically within a size, so the returned chain is
    deterministic. Raises ResourceLimitError if more than ``budget``
    subsets would have to be visited.
    """
    if k < 0:
        raise UsageError("k must be >= 0")
    if boundary.dim != cslice.dim - 1:
        raise UsageError(
            f"boundary dimension {boundary.dim} does not match slice faces"
        )
    matrix = boundary_matrix(cslice)
    target = _target_mask(matrix, boundary)
    m = matrix.ncols
    k = min(k, m)
    total = sum(math.comb(m, size) for size in range(k + 1))
    if total > budget:
        raise ResourceLimitError(
            f"bounded enumeration needs {total} subsets, budget is {budget}"
        )
    masks = matrix.col_masks
    for size in range(k + 1):
        for combo in combinations(range(m), size):
            acc = 0
            for j in combo:
                acc ^= masks[j]
            if acc == target:
                return Chain(cslice.dim, combo)
    return None
