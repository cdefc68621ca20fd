import pytest

from boundedchain import (
    Chain,
    ConsistencyError,
    InputError,
    Simplex,
    SolveResult,
    Status,
    UsageError,
    build_slice,
    instance_from_complex,
    instance_from_matrix,
    mbc_to_mld,
    result_to_json_dict,
    solve,
    verify_witness,
)
from boundedchain.complexes import Gf2Matrix, boundary_matrix
from helpers import punctured_octahedron, random_problem


def test_all_algorithms_agree_on_the_punctured_octahedron():
    cs, boundary = punctured_octahedron()
    inst = instance_from_complex(cs, boundary)
    for algorithm in ("dijkstra", "treewidth", "brute"):
        r = solve(inst, algorithm)
        assert r.status is Status.OPTIMAL
        assert r.weight == 7
        assert r.stats["verified"] is True


def test_mbc1_dispatch_needs_dimension_one():
    edges = [Simplex((0, 1)), Simplex((1, 2))]
    cs = build_slice(edges)
    inst = instance_from_complex(cs, cs.chain_from_faces([Simplex((0,)), Simplex((2,))]))
    r = solve(inst, "mbc1")
    assert r.weight == 2
    cs2, boundary2 = punctured_octahedron()
    with pytest.raises(UsageError):
        solve(instance_from_complex(cs2, boundary2), "mbc1")
    mat = boundary_matrix(cs)
    with pytest.raises(UsageError):
        solve(instance_from_matrix(mat, ()), "mbc1")
    with pytest.raises(UsageError):
        solve(inst, "magic")


def test_mbc_to_mld_translation():
    cs, boundary = punctured_octahedron()
    matrix, target, weights = mbc_to_mld(cs, boundary)
    assert matrix.nrows == 12 and matrix.ncols == 7
    assert sorted(target) == [0, 1, 4]
    assert weights == cs.weights
    with pytest.raises(InputError):
        mbc_to_mld(cs, Chain(0, (0,)))


def test_brute_resource_limit_becomes_a_status():
    mat = Gf2Matrix(1, 25, [(0,)] * 25, [1] * 25)
    r = solve(instance_from_matrix(mat, (0,)), "brute")
    assert r.status is Status.RESOURCE_LIMIT
    assert "limit" in r.stats.get("reason", "")


def test_verify_witness_rejects_lies():
    cs, boundary = punctured_octahedron()
    inst = instance_from_complex(cs, boundary)
    with pytest.raises(ConsistencyError):
        verify_witness(inst, SolveResult(Status.OPTIMAL, 7, frozenset((0,))))
    with pytest.raises(ConsistencyError):
        verify_witness(inst, SolveResult(Status.OPTIMAL, 6, frozenset(range(7))))
    with pytest.raises(ConsistencyError):
        verify_witness(inst, SolveResult(Status.OPTIMAL, None, None))
    # non-optimal results carry no witness and pass through
    verify_witness(inst, SolveResult(Status.INFEASIBLE))


def test_json_dict_for_complex_instances():
    cs, boundary = punctured_octahedron()
    inst = instance_from_complex(cs, boundary)
    r = solve(inst, "treewidth")
    d = result_to_json_dict(inst, r)
    assert d["status"] == "optimal"
    assert d["weight"] == 7
    assert d["scale"] == 1
    assert d["solution"] == [list(cs.top[j].vertices) for j in sorted(r.witness)]
    assert d["stats"]["verified"] is True


def test_json_dict_for_matrix_instances_and_failures():
    mat = Gf2Matrix(2, 2, [(0,), (1,)], [3, 5])
    inst = instance_from_matrix(mat, (1,))
    d = result_to_json_dict(inst, solve(inst, "dijkstra"))
    assert d["solution"] == [1]
    assert d["weight"] == 5
    cs, _ = punctured_octahedron()
    bad = instance_from_complex(cs, cs.chain_from_faces([Simplex((0, 1))]))
    d2 = result_to_json_dict(bad, solve(bad, "treewidth"))
    assert d2["status"] == "infeasible"
    assert d2["weight"] is None and d2["solution"] is None


def test_timing_is_opt_in():
    cs, boundary = punctured_octahedron()
    inst = instance_from_complex(cs, boundary)
    plain = solve(inst, "dijkstra")
    assert "wall_time_s" not in plain.stats
    timed = solve(inst, "dijkstra", timing=True)
    assert timed.stats["wall_time_s"] >= 0


def test_scale_travels_through():
    tops = [Simplex((0, 1, 2)), Simplex((1, 2, 3))]
    cs = build_slice(tops, [5, 15], scale=10)
    boundary = cs.boundary_of(Chain(2, (0,)))
    inst = instance_from_complex(cs, boundary)
    assert inst.scale == 10
    r = solve(inst, "treewidth")
    assert r.weight == 5
    d = result_to_json_dict(inst, r)
    assert d["scale"] == 10


def test_instance_from_matrix_validates_rows():
    mat = Gf2Matrix(2, 1, [(0,)], [1])
    with pytest.raises(InputError):
        instance_from_matrix(mat, (4,))


def test_solver_specific_options_pass_through():
    for seed in range(10):
        cs, boundary = random_problem(seed)
        inst = instance_from_complex(cs, boundary)
        a = solve(inst, "dijkstra", pivot="max-index", check_feasibility=False)
        b = solve(inst, "treewidth", td_heuristic="min-degree")
        c = solve(inst, "brute", oracle_mode="kernel")
        assert a.status is b.status is c.status
        if a.is_optimal:
            assert a.weight == b.weight == c.weight
