import json

import pytest

from boundedchain.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_and_solve_round_trip(tmp_path, capsys):
    prefix = str(tmp_path / "strip")
    code, out, _ = run(capsys, "gen", "strip", "--length", "3", "--out", prefix)
    assert code == 0
    assert (tmp_path / "strip.complex").exists()
    assert (tmp_path / "strip.boundary").exists()
    code, out, _ = run(
        capsys,
        "solve",
        "--complex", prefix + ".complex",
        "--boundary", prefix + ".boundary",
        "--algorithm", "dijkstra",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["status"] == "optimal"
    assert payload["weight"] == 3
    assert len(payload["solution"]) == 3


def test_gen_is_deterministic(tmp_path, capsys):
    a = str(tmp_path / "a")
    b = str(tmp_path / "b")
    for prefix in (a, b):
        code, _, _ = run(
            capsys,
            "gen", "random",
            "--top-simplices", "9", "--vertices", "8", "--seed", "12",
            "--weights", "random", "--out", prefix,
        )
        assert code == 0
    for ext in (".complex", ".boundary"):
        assert (tmp_path / ("a" + ext)).read_bytes() == (tmp_path / ("b" + ext)).read_bytes()


def test_solve_writes_result_file_and_reruns_identically(tmp_path, capsys):
    prefix = str(tmp_path / "oct")
    run(capsys, "gen", "octahedron", "--out", prefix)
    out_a = tmp_path / "a.json"
    out_b = tmp_path / "b.json"
    for out_file in (out_a, out_b):
        code, _, _ = run(
            capsys,
            "solve",
            "--complex", prefix + ".complex",
            "--algorithm", "treewidth",
            "--out", str(out_file),
        )
        assert code == 0
    assert out_a.read_bytes() == out_b.read_bytes()


def test_solve_exit_codes(tmp_path, capsys):
    prefix = str(tmp_path / "cyl")
    run(capsys, "gen", "cylinder", "--around", "3", "--along", "1", "--out", prefix)
    # infeasible: a single edge as the target
    bad = tmp_path / "bad.boundary"
    bad.write_text("0 1\n")
    code, out, _ = run(
        capsys,
        "solve",
        "--complex", prefix + ".complex",
        "--boundary", str(bad),
        "--algorithm", "dijkstra",
    )
    assert code == 2
    assert json.loads(out)["status"] == "infeasible"
    # bound too small for the full rim
    code, out, _ = run(
        capsys,
        "solve",
        "--complex", prefix + ".complex",
        "--boundary", prefix + ".boundary",
        "--algorithm", "dijkstra", "--k", "5",
    )
    assert code == 3
    assert json.loads(out)["status"] == "not_found_within_bound"


def test_solve_matrix_input(tmp_path, capsys):
    mld = tmp_path / "toy.mld"
    mld.write_text("mld 3 2\ne 0 0\ne 1 0\ne 1 1\ne 2 1\nw 2 3\nu 0 2\n")
    code, out, _ = run(capsys, "solve", "--matrix", str(mld), "--algorithm", "treewidth")
    assert code == 0
    payload = json.loads(out)
    assert payload["weight"] == 5
    assert payload["solution"] == [0, 1]
    # mixing input styles is refused
    code, _, err = run(
        capsys,
        "solve", "--matrix", str(mld), "--complex", str(mld),
        "--algorithm", "brute",
    )
    assert code == 1
    assert "error:" in err


def test_verify_pass_and_fail(tmp_path, capsys):
    prefix = str(tmp_path / "oct")
    run(capsys, "gen", "octahedron", "--out", prefix)
    result = tmp_path / "r.json"
    run(
        capsys,
        "solve",
        "--complex", prefix + ".complex",
        "--algorithm", "dijkstra",
        "--out", str(result),
    )
    code, out, _ = run(
        capsys, "verify", str(result), "--complex", prefix + ".complex"
    )
    assert code == 0
    assert "PASS" in out
    tampered = json.loads(result.read_text())
    tampered["weight"] = 3
    tampered["status"] = "optimal"
    tampered["solution"] = [[0, 1, 2]]
    result.write_text(json.dumps(tampered))
    code, out, _ = run(
        capsys, "verify", str(result), "--complex", prefix + ".complex"
    )
    assert code == 1
    assert "FAIL" in out


def test_decompose_formats(tmp_path, capsys):
    graph = tmp_path / "g.graph"
    graph.write_text("graph 4\ne 0 1\ne 1 2\ne 2 3\n")
    out_td = tmp_path / "g.td"
    code, out, _ = run(
        capsys, "decompose", "--input", str(graph), "--out", str(out_td)
    )
    assert code == 0
    assert "width 1" in out
    prefix = str(tmp_path / "oct")
    run(capsys, "gen", "octahedron", "--out", prefix)
    oct_td = tmp_path / "oct.td"
    code, _, _ = run(
        capsys,
        "decompose", "--input", prefix + ".complex",
        "--nice", "--out", str(oct_td),
    )
    assert code == 0
    assert "kind" in oct_td.read_text()
    # the emitted decomposition is accepted back by solve
    code, out, _ = run(
        capsys,
        "solve",
        "--complex", prefix + ".complex",
        "--algorithm", "treewidth",
        "--td", str(oct_td),
    )
    assert code == 0
    assert json.loads(out)["stats"]["decomposition"] == "given"


def test_decompose_mld_and_reruns(tmp_path, capsys):
    mld = tmp_path / "toy.mld"
    mld.write_text("mld 2 2\ne 0 0\ne 1 1\nw 1 1\n")
    a = tmp_path / "a.td"
    b = tmp_path / "b.td"
    for out_td in (a, b):
        code, _, _ = run(
            capsys, "decompose", "--input", str(mld), "--out", str(out_td)
        )
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_bench_csv(tmp_path, capsys):
    prefix = str(tmp_path / "strip")
    run(capsys, "gen", "strip", "--length", "2", "--out", prefix)
    csv_a = tmp_path / "a.csv"
    csv_b = tmp_path / "b.csv"
    for out_csv in (csv_a, csv_b):
        code, _, _ = run(
            capsys,
            "bench", "--suite", str(tmp_path),
            "--algos", "dijkstra,treewidth,brute",
            "--reps", "2", "--no-timing", "--out", str(out_csv),
        )
        assert code == 0
    assert csv_a.read_bytes() == csv_b.read_bytes()
    header = csv_a.read_text().splitlines()[0]
    assert "wall_time_s" not in header
    code, out, _ = run(
        capsys, "bench", "--suite", str(tmp_path), "--algos", "dijkstra"
    )
    assert code == 0
    assert "wall_time_s" in out.splitlines()[0]


def test_errors_exit_one(tmp_path, capsys):
    code, _, err = run(
        capsys, "solve", "--complex", str(tmp_path / "nope.complex"),
        "--algorithm", "brute",
    )
    assert code == 1
    assert "error:" in err
    bad = tmp_path / "bad.complex"
    bad.write_text("dim 2\ns 0 1\n")
    code, _, err = run(capsys, "solve", "--complex", str(bad), "--algorithm", "brute")
    assert code == 1
    assert "line 2" in err
    code, _, err = run(
        capsys, "bench", "--suite", str(tmp_path), "--algos", " , "
    )
    assert code == 1
