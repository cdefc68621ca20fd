import random
from itertools import combinations

import pytest

from boundedchain import (
    Chain,
    Simplex,
    Status,
    UsageError,
    boundary_matrix,
    brute_force_mld,
    build_slice,
    expand_state,
    pivot_select,
    solve_dijkstra,
    solve_mld_dijkstra,
)
from boundedchain.complexes import Gf2Matrix
from helpers import punctured_octahedron, random_problem


PIVOTS = ("min-index", "min-coface", "max-index")


def test_punctured_octahedron_needs_seven_triangles():
    cs, boundary = punctured_octahedron()
    for pivot in PIVOTS:
        r = solve_dijkstra(cs, boundary, pivot=pivot)
        assert r.status is Status.OPTIMAL
        assert r.weight == 7
        assert r.witness == frozenset(range(7))
    short = solve_dijkstra(cs, boundary, k=6)
    assert short.status is Status.NOT_FOUND_WITHIN_BOUND
    exact = solve_dijkstra(cs, boundary, k=7)
    assert exact.status is Status.OPTIMAL and exact.weight == 7


def test_pivot_select():
    chain = Chain(1, (2, 5, 7))
    assert pivot_select(chain, "min-index") == 2
    assert pivot_select(chain, "max-index") == 7
    cofdeg = [0, 0, 3, 0, 0, 1, 0, 1]
    assert pivot_select(chain, "min-coface", cofdeg) == 5
    with pytest.raises(UsageError):
        pivot_select(chain, "min-coface")
    with pytest.raises(UsageError):
        pivot_select(Chain(1, ()), "min-index")
    with pytest.raises(UsageError):
        pivot_select(chain, "best")


def test_expand_state_two_triangle_fan():
    cs = build_slice([Simplex((1, 2, 3)), Simplex((2, 3, 4))])
    # faces sorted: (1,2) (1,3) (2,3) (2,4) (3,4)
    lone = cs.chain_from_faces([Simplex((1, 2))])
    for strategy in PIVOTS:
        out = expand_state(cs, lone, strategy)
        assert [(c.indices, j, w) for c, j, w in out] == [((1, 2), 0, 1)]
    shared = cs.chain_from_faces([Simplex((2, 3))])
    out = expand_state(cs, shared, "min-coface")
    assert [(c.indices, j, w) for c, j, w in out] == [((0, 1), 0, 1), ((3, 4), 1, 1)]
    assert expand_state(cs, Chain(1, ()), "min-index") == []
    with pytest.raises(UsageError):
        expand_state(cs, Chain(2, (0,)), "min-index")


def test_branching_is_bounded_by_coface_degree():
    for seed in range(20):
        cs, boundary = random_problem(seed)
        if boundary.is_empty:
            continue
        out = expand_state(cs, boundary, "min-coface")
        assert 1 <= len(out) <= cs.coface_degree


def test_pivot_strategies_agree_with_oracle():
    for seed in range(60):
        cs, boundary = random_problem(seed, max_top=10)
        ref = brute_force_mld(boundary_matrix(cs), boundary)
        for pivot in PIVOTS:
            r = solve_dijkstra(cs, boundary, pivot=pivot)
            assert r.status is ref.status, (seed, pivot)
            if ref.is_optimal:
                assert r.weight == ref.weight, (seed, pivot)


def test_bounded_search_matches_restricted_enumeration():
    """For every k, the search equals the best solution of size <= k."""
    rng = random.Random(41)
    for trial in range(25):
        cs, boundary = random_problem(trial, max_top=8, max_vertices=8)
        mat = boundary_matrix(cs)
        tmask = 0
        for i in boundary.indices:
            tmask |= 1 << i
        solutions = []
        for size in range(mat.ncols + 1):
            for combo in combinations(range(mat.ncols), size):
                acc = 0
                for j in combo:
                    acc ^= mat.col_masks[j]
                if acc == tmask:
                    solutions.append((size, sum(mat.col_weights[j] for j in combo)))
        for k in range(mat.ncols + 1):
            fits = [w for s, w in solutions if s <= k]
            r = solve_mld_dijkstra(mat, boundary.indices, k=k)
            if fits:
                assert r.status is Status.OPTIMAL, (trial, k)
                assert r.weight == min(fits), (trial, k)
                assert len(r.witness) <= k
            else:
                assert r.status is Status.NOT_FOUND_WITHIN_BOUND, (trial, k)


def test_infeasible_via_precheck_and_via_exhaustion():
    cs, _ = punctured_octahedron()
    lonely_edge = cs.chain_from_faces([Simplex((0, 1))])
    pre = solve_dijkstra(cs, lonely_edge)
    assert pre.status is Status.INFEASIBLE
    assert pre.stats["states_expanded"] == 0
    post = solve_dijkstra(cs, lonely_edge, check_feasibility=False)
    assert post.status is Status.INFEASIBLE
    assert post.stats["states_expanded"] > 0
    assert not post.stats["feasibility_checked"]


def test_empty_target_is_trivial():
    cs, _ = punctured_octahedron()
    r = solve_dijkstra(cs, Chain(1, ()))
    assert r.status is Status.OPTIMAL
    assert r.weight == 0 and r.witness == frozenset()


def test_resource_limit_status():
    cs, boundary = punctured_octahedron()
    r = solve_dijkstra(cs, boundary, max_states=2)
    assert r.status is Status.RESOURCE_LIMIT
    assert r.stats["visited"] <= 2


def test_max_states_env(monkeypatch):
    from boundedchain.dijkstra import MAX_STATES_ENV

    cs, boundary = punctured_octahedron()
    monkeypatch.setenv(MAX_STATES_ENV, "2")
    assert solve_dijkstra(cs, boundary).status is Status.RESOURCE_LIMIT
    monkeypatch.setenv(MAX_STATES_ENV, "lots")
    with pytest.raises(UsageError):
        solve_dijkstra(cs, boundary)


def test_frontier_is_monotone():
    """Settled costs never decrease: the search is a true cost-order sweep."""
    for seed in range(40):
        cs, boundary = random_problem(seed)
        r = solve_dijkstra(cs, boundary)
        assert r.stats["monotone_frontier"], seed


def test_witness_weight_matches_cost():
    for seed in range(40):
        cs, boundary = random_problem(seed, weights="random")
        mat = boundary_matrix(cs)
        r = solve_mld_dijkstra(mat, boundary.indices)
        if r.is_optimal:
            assert mat.weight_of(r.witness) == r.weight
            acc = 0
            for j in r.witness:
                acc ^= mat.col_masks[j]
            want = 0
            for i in boundary.indices:
                want |= 1 << i
            assert acc == want


def test_usage_errors():
    mat = Gf2Matrix(2, 1, [(0,)], [-1])
    with pytest.raises(UsageError):
        solve_mld_dijkstra(mat, (0,))
    ok = Gf2Matrix(2, 1, [(0,)], [1])
    with pytest.raises(UsageError):
        solve_mld_dijkstra(ok, (5,))
    with pytest.raises(UsageError):
        solve_mld_dijkstra(ok, (0,), k=-1)
    with pytest.raises(UsageError):
        solve_mld_dijkstra(ok, (0,), pivot="best")
    cs, _ = punctured_octahedron()
    with pytest.raises(UsageError):
        solve_dijkstra(cs, Chain(0, (0,)))
    with pytest.raises(UsageError):
        solve_dijkstra(cs, Chain(1, (99,)))
