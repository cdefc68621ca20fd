"""Command line interface: gen, solve, decompose, verify, bench."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import generators
from .bench import rows_to_csv, run_suite
from .complexes import boundary_matrix, hasse_graph
from .decomposition import Graph, greedy_decomposition, make_nice
from .errors import BoundedChainError, UsageError
from .facade import (
    instance_from_complex,
    instance_from_matrix,
    result_to_json_dict,
    solve,
    verify_witness,
)
from .fileio import (
    parse_boundary,
    parse_complex,
    parse_decomposition,
    parse_graph_text,
    parse_matrix,
    read_text,
    sniff_format,
    write_boundary_text,
    write_complex_text,
    write_decomposition_text,
    write_text,
)
from .results import EXIT_CODES, SolveResult, Status


def _load_instance(args):
    if getattr(args, "matrix", None):
        if getattr(args, "complex", None) or getattr(args, "boundary", None):
            raise UsageError("give either --matrix or --complex/--boundary, not both")
        matrix, target = parse_matrix(args.matrix)
        return instance_from_matrix(matrix, target)
    if not getattr(args, "complex", None):
        raise UsageError("an instance needs --matrix or --complex")
    cslice = parse_complex(args.complex)
    if getattr(args, "boundary", None):
        boundary = parse_boundary(args.boundary, cslice)
    else:
        from .chains import Chain

        boundary = Chain(cslice.dim - 1, ())
    return instance_from_complex(cslice, boundary)


def _cmd_gen(args) -> int:
    out = args.out
    if args.shape == "strip":
        cslice, boundary = generators.triangle_strip(args.length)
        comments = [f"generated: strip length={args.length}"]
    elif args.shape == "cylinder":
        cslice, boundary = generators.cylinder(args.around, args.along)
        comments = [f"generated: cylinder around={args.around} along={args.along}"]
    elif args.shape == "octahedron":
        cslice, boundary = generators.octahedron(), None
        comments = ["generated: octahedron"]
    elif args.shape == "sphere":
        cslice, boundary = generators.sphere_subdivision(args.levels), None
        comments = [f"generated: sphere levels={args.levels}"]
    else:  # random
        cslice = generators.random_slice(
            args.top_simplices,
            args.vertices,
            dim=args.dim,
            seed=args.seed,
            weights=args.weights,
            weight_max=args.weight_max,
        )
        boundary = generators.random_boundary(cslice, seed=args.seed)
        comments = [
            "generated: random"
            f" top={args.top_simplices} vertices={args.vertices} dim={args.dim}"
            f" weights={args.weights}",
            f"seed {args.seed}",
        ]
    write_text(out + ".complex", write_complex_text(cslice, comments))
    print(f"wrote {out}.complex")
    if boundary is not None:
        write_text(out + ".boundary", write_boundary_text(cslice, boundary, comments))
        print(f"wrote {out}.boundary")
    return 0


def _cmd_solve(args) -> int:
    instance = _load_instance(args)
    ntd = parse_decomposition(args.td) if args.td else None
    result = solve(
        instance,
        args.algorithm,
        k=args.k,
        pivot=args.pivot,
        ntd=ntd,
        td_heuristic=args.td_heuristic,
        check_feasibility=not args.no_feasibility_check,
        max_states=args.max_states,
        oracle_mode=args.oracle_mode,
        detailed_stats=False,
        timing=args.timing,
    )
    payload = json.dumps(result_to_json_dict(instance, result), sort_keys=True, indent=2)
    print(payload)
    if args.out:
        write_text(args.out, payload + "\n")
    return EXIT_CODES[result.status]


def _cmd_decompose(args) -> int:
    text = read_text(args.input)
    fmt = sniff_format(text)
    if fmt == "graph":
        graph = parse_graph_text(text)
    elif fmt == "complex":
        from .fileio import parse_complex_text

        h = hasse_graph(boundary_matrix(parse_complex_text(text)))
        graph = Graph(h.n_vertices, h.edges())
    elif fmt == "mld":
        from .fileio import parse_matrix_text

        matrix, _target = parse_matrix_text(text)
        h = hasse_graph(matrix)
        graph = Graph(h.n_vertices, h.edges())
    else:
        raise UsageError("decompose expects a graph, complex, or mld file")
    td = greedy_decomposition(graph, args.heuristic)
    if args.nice:
        td = make_nice(td)
    comments = [f"decomposition: heuristic={args.heuristic} nice={args.nice}"]
    write_text(args.out, write_decomposition_text(td, comments))
    print(f"wrote {args.out} (width {td.width}, {td.n_nodes} nodes)")
    return 0


def _cmd_verify(args) -> int:
    try:
        claimed = json.loads(read_text(args.result))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.result} is not valid JSON: {exc}") from exc
    instance = _load_instance(args)
    reference = solve(instance, "brute", oracle_mode=args.oracle_mode)
    ok = True
    if claimed.get("status") != reference.status.value:
        print(
            f"FAIL status: claimed {claimed.get('status')}, oracle says"
            f" {reference.status.value}"
        )
        ok = False
    elif reference.status is Status.OPTIMAL:
        if claimed.get("weight") != reference.weight:
            print(
                f"FAIL weight: claimed {claimed.get('weight')}, oracle found"
                f" {reference.weight}"
            )
            ok = False
        witness = _witness_from_solution(instance, claimed.get("solution"))
        if witness is None:
            print("FAIL solution: missing or malformed")
            ok = False
        else:
            try:
                verify_witness(
                    instance,
                    SolveResult(Status.OPTIMAL, claimed.get("weight"), witness),
                )
            except BoundedChainError as exc:
                print(f"FAIL solution: {exc}")
                ok = False
    if ok:
        print("PASS: result agrees with the brute-force oracle")
        return 0
    return 1


def _witness_from_solution(instance, solution):
    if not isinstance(solution, list):
        return None
    if instance.cslice is not None:
        try:
            from .chains import Simplex

            return instance.cslice.chain_from_tops(
                Simplex(tuple(sorted(v))) for v in solution
            ).as_set()
        except (BoundedChainError, TypeError):
            return None
    if all(isinstance(c, int) for c in solution):
        return frozenset(solution)
    return None


def _cmd_bench(args) -> int:
    algorithms = [a.strip() for a in args.algos.split(",") if a.strip()]
    if not algorithms:
        raise UsageError("--algos needs at least one algorithm")
    rows = run_suite(
        args.suite, algorithms, reps=args.reps, k=args.k, timing=not args.no_timing
    )
    csv_text = rows_to_csv(rows, timing=not args.no_timing)
    if args.out:
        write_text(args.out, csv_text)
        print(f"wrote {args.out} ({len(rows)} runs)")
    else:
        print(csv_text, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbc",
        description="Exact minimum bounded chain / GF(2) decoding solvers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate instance files")
    gsub = g.add_subparsers(dest="shape", required=True)
    p = gsub.add_parser("strip", help="triangle strip")
    p.add_argument("--length", type=int, required=True)
    p = gsub.add_parser("cylinder", help="open triangulated cylinder")
    p.add_argument("--around", type=int, required=True)
    p.add_argument("--along", type=int, required=True)
    gsub.add_parser("octahedron", help="closed octahedron surface")
    p = gsub.add_parser("sphere", help="subdivided octahedron sphere")
    p.add_argument("--levels", type=int, default=1)
    p = gsub.add_parser("random", help="seeded random slice")
    p.add_argument("--top-simplices", type=int, required=True)
    p.add_argument("--vertices", type=int, required=True)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", choices=("unit", "random"), default="unit")
    p.add_argument("--weight-max", type=int, default=9)
    for sp in gsub.choices.values():
        sp.add_argument("--out", required=True, help="output path prefix")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("solve", help="solve one instance")
    s.add_argument("--complex", help="complex file")
    s.add_argument("--boundary", help="boundary file (with --complex)")
    s.add_argument("--matrix", help="mld matrix file")
    s.add_argument(
        "--algorithm", required=True, choices=("mbc1", "dijkstra", "treewidth", "brute")
    )
    s.add_argument("--k", type=int, default=None, help="solution size bound")
    s.add_argument(
        "--pivot", choices=("min-index", "min-coface", "max-index"), default="min-coface"
    )
    s.add_argument("--td", help="tree decomposition file for --algorithm treewidth")
    s.add_argument(
        "--td-heuristic", choices=("min-fill", "min-degree"), default="min-fill"
    )
    s.add_argument("--no-feasibility-check", action="store_true")
    s.add_argument(
        "--max-states",
        type=int,
        default=None,
        help=f"search state cap (default {os.environ.get('MBC_MAX_STATES', '2000000')})",
    )
    s.add_argument("--oracle-mode", choices=("auto", "exhaustive", "kernel"), default="auto")
    s.add_argument("--timing", action="store_true", help="include wall time in stats")
    s.add_argument("--out", help="also write the JSON result here")
    s.set_defaults(func=_cmd_solve)

    d = sub.add_parser("decompose", help="tree-decompose a graph, complex, or matrix")
    d.add_argument("--input", required=True)
    d.add_argument("--heuristic", choices=("min-fill", "min-degree"), default="min-fill")
    d.add_argument("--nice", action="store_true", help="emit the nice form")
    d.add_argument("--out", required=True)
    d.set_defaults(func=_cmd_decompose)

    v = sub.add_parser("verify", help="check a result JSON against the oracle")
    v.add_argument("result", help="result JSON produced by solve")
    v.add_argument("--against", choices=("brute",), default="brute")
    v.add_argument("--complex")
    v.add_argument("--boundary")
    v.add_argument("--matrix")
    v.add_argument("--oracle-mode", choices=("auto", "exhaustive", "kernel"), default="auto")
    v.set_defaults(func=_cmd_verify)

    b = sub.add_parser("bench", help="run algorithms over a directory of instances")
    b.add_argument("--suite", required=True, help="directory of .complex/.boundary/.mld files")
    b.add_argument("--algos", required=True, help="comma-separated algorithm list")
    b.add_argument("--reps", type=int, default=1)
    b.add_argument("--k", type=int, default=None)
    b.add_argument("--no-timing", action="store_true", help="byte-reproducible CSV")
    b.add_argument("--out", help="CSV output path (default stdout)")
    b.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BoundedChainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
