"""One entry point over all solvers, with mandatory post-solve verification.

Every instance is carried in its decoding form (a GF(2) matrix plus
target rows); chain instances additionally keep their slice so results
can be reported in simplex vocabulary and the dimension-1 solver can run
on the graph view. Any optimal result is re-checked against the instance
before being returned; a failure there is a bug and raises, never a
silently wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

from .chains import Chain
from .complexes import ComplexSlice, Gf2Matrix, boundary_matrix
from .dijkstra import PIVOT_MIN_COFACE, solve_mld_dijkstra
from .errors import ConsistencyError, InputError, ResourceLimitError, UsageError
from .gf2 import mask_from_indices
from .mbc1 import solve_mbc1
from .oracle import brute_force_mld
from .results import SolveResult, Status
from .treewidth import solve_mld_treewidth

ALGORITHMS = ("mbc1", "dijkstra", "treewidth", "brute")


@dataclass
class Instance:
    """A solvable problem: matrix view always, slice view when chain-backed."""

    matrix: Gf2Matrix
    target: frozenset[int]
    cslice: ComplexSlice | None = None
    boundary: Chain | None = None

    @property
    def scale(self) -> int:
        return self.matrix.scale


def mbc_to_mld(
    cslice: ComplexSlice, boundary: Chain
) -> tuple[Gf2Matrix, Chain, tuple[int, ...]]:
    """Express a bounded-chain question as decoding: matrix, target, weights."""
    if boundary.dim != cslice.dim - 1:
        raise InputError(
            f"boundary dimension {boundary.dim} does not match a {cslice.dim}-slice"
        )
    if boundary.indices and boundary.indices[-1] >= cslice.n_faces:
        raise InputError("boundary references an unknown face")
    matrix = boundary_matrix(cslice)
    return matrix, boundary, cslice.weights


def instance_from_complex(cslice: ComplexSlice, boundary: Chain) -> Instance:
    matrix, target, _w = mbc_to_mld(cslice, boundary)
    return Instance(matrix, target.as_set(), cslice, boundary)


def instance_from_matrix(matrix: Gf2Matrix, target: Iterable[int]) -> Instance:
    rows = frozenset(target)
    for r in rows:
        if not (0 <= r < matrix.nrows):
            raise InputError(f"target row {r} out of range")
    return Instance(matrix, rows)


def verify_witness(instance: Instance, result: SolveResult) -> None:
    """Re-check an optimal result against the instance; raises on any lie."""
    if result.status is not Status.OPTIMAL:
        return
    if result.witness is None or result.weight is None:
        raise ConsistencyError("optimal result without witness or weight")
    product = instance.matrix.product_mask(result.witness)
    if product != mask_from_indices(instance.target):
        raise ConsistencyError("witness does not hit the target")
    if instance.matrix.weight_of(result.witness) != result.weight:
        raise ConsistencyError("reported weight disagrees with the witness")


def solve(
    instance: Instance,
    algorithm: str,
    *,
    k: int | None = None,
    pivot: str = PIVOT_MIN_COFACE,
    ntd=None,
    td_heuristic: str = "min-fill",
    check_feasibility: bool = True,
    max_states: int | None = None,
    oracle_mode: str = "auto",
    detailed_stats: bool = False,
    timing: bool = False,
) -> SolveResult:
    """Dispatch to one solver and verify whatever it claims.

    Timing is opt-in so that default outputs stay byte-reproducible.
    """
    if algorithm not in ALGORITHMS:
        raise UsageError(f"unknown algorithm {algorithm!r}; pick from {ALGORITHMS}")
    start = time.perf_counter()
    if algorithm == "mbc1":
        if instance.cslice is None:
            raise UsageError("mbc1 needs a complex-backed instance")
        if instance.cslice.dim != 1:
            raise UsageError(
                f"mbc1 handles dimension 1 only, instance has dimension {instance.cslice.dim}"
            )
        result = solve_mbc1(instance.cslice, instance.boundary)
    elif algorithm == "dijkstra":
        result = solve_mld_dijkstra(
            instance.matrix,
            sorted(instance.target),
            k=k,
            pivot=pivot,
            check_feasibility=check_feasibility,
            max_states=max_states,
        )
    elif algorithm == "treewidth":
        result = solve_mld_treewidth(
            instance.matrix,
            sorted(instance.target),
            ntd=ntd,
            heuristic=td_heuristic,
            detailed_stats=detailed_stats,
        )
    else:
        try:
            result = brute_force_mld(instance.matrix, sorted(instance.target), mode=oracle_mode)
        except ResourceLimitError as exc:
            return SolveResult(
                Status.RESOURCE_LIMIT,
                stats={"algorithm": "brute", "reason": str(exc)},
            )
    verify_witness(instance, result)
    if result.status is Status.OPTIMAL:
        result.stats["verified"] = True
    if timing:
        result.stats["wall_time_s"] = time.perf_counter() - start
    return result


def result_to_json_dict(instance: Instance, result: SolveResult) -> dict:
    """The documented JSON shape; deterministic for deterministic stats."""
    solution = None
    if result.status is Status.OPTIMAL:
        cols = sorted(result.witness)
        if instance.cslice is not None:
            solution = [list(instance.cslice.top[j].vertices) for j in cols]
        else:
            solution = cols
    return {
        "status": result.status.value,
        "weight": result.weight if result.status is Status.OPTIMAL else None,
        "scale": instance.scale,
        "solution": solution,
        "stats": dict(result.stats),
    }
