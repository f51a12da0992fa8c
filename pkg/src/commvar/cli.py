"""Command line front end: ``commvar <subcommand>``.

Exit codes: 0 match or nothing to compare, 1 mismatch, 2 bad input,
3 a work limit was hit.
"""

import argparse
import json
import sys
from fractions import Fraction

from .engine import METHODS, EngineConfig, dimension
from .errors import DomainError, InputError, ResourceError
from .formulas import bound_table, expected_dimension, render_bound_table, threshold_check
from .groebner import GroebnerConfig
from .lie import SUBALGEBRA_TAGS, LieType, construct_algebra, select_subalgebra
from .orbits import Partition, centralizer_dim, describe, partition_representative
from .variety import Locus, compile_instance, determinantal_relaxation
from .verify import SUITES, run_suite

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


def _ints(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _matrix_json(m):
    return [[str(Fraction(x)) for x in row] for row in m]


def cmd_orbit_dim(args):
    t = LieType.parse(args.algebra)
    part = Partition.parse(args.partition)
    d = describe(t, part)
    out = {"type": t.label, "partition": str(part), "valid": d.valid,
           "dim": d.dim if d.valid else None, "centralizer_dim": None}
    if d.valid:
        g = construct_algebra(t)
        out["centralizer_dim"] = centralizer_dim(g, partition_representative(t, part))
        if d.very_even:
            out["note"] = "very even: two orbits share this label and dimension"
    print(json.dumps(out, indent=1))
    return EXIT_OK


def cmd_basis(args):
    g = construct_algebra(LieType.parse(args.algebra))
    basis = g.basis if args.sub == "g" else select_subalgebra(g, args.sub).basis
    print(json.dumps({"type": g.lie_type.label, "subalgebra": args.sub,
                      "basis": [_matrix_json(b) for b in basis]}))
    return EXIT_OK


def _instance(args):
    t = LieType.parse(args.algebra)
    inst = compile_instance(Locus.parse(args.locus, t), args.r)
    if args.relaxation:
        if args.relaxation != "determinantal":
            raise InputError(f"unknown relaxation {args.relaxation!r}")
        inst = determinantal_relaxation(inst)
    return inst


def cmd_compile(args):
    inst = _instance(args)
    fmt = args.format or ("json" if args.out and args.out.endswith(".json") else "txt")
    text = inst.to_json() + "\n" if fmt == "json" else inst.to_text()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"{inst.description}: {len(inst.generators)} generators in "
              f"{inst.nvars} variables -> {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_cvdim(args):
    inst = _instance(args)
    method = args.method
    config = EngineConfig(method=method, char=args.char, qs=args.qs,
                          count_mode=args.mode, samples=args.samples, seed=args.seed,
                          budget=args.budget, workers=args.workers,
                          groebner=GroebnerConfig(max_pairs=args.max_pairs,
                                                  max_degree=args.max_degree))
    p = config.characteristic if method != "count" else None
    sid, expected = expected_dimension(inst.locus, args.r, p, inst.relaxation)
    report = dimension(inst, config, expected)
    report.details["statement"] = sid
    print(report.to_json())
    if report.verdict == "mismatch" or report.inconsistent:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args):
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, args.max_rank, args.max_r) for n in names]
    if args.json:
        print(json.dumps([json.loads(r.to_json()) for r in reports], indent=1))
    else:
        for r in reports:
            print(f"== {r.suite}: {'pass' if r.passed else 'FAIL'} "
                  f"({len(r.rows) - len(r.failures)}/{len(r.rows)} rows match)")
            print(r.to_table())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def cmd_bound_table(args):
    rows = bound_table(args.family, args.max_rank, args.max_r)
    if args.json:
        print(json.dumps([r.as_dict() for r in rows], indent=1))
    else:
        sys.stdout.write(render_bound_table(rows))
    return EXIT_OK


def cmd_threshold(args):
    t = LieType.parse(args.algebra)
    try:
        chk = threshold_check(t, args.r)
    except DomainError as exc:
        print(json.dumps({"type": t.label, "r": args.r, "status": "out of statement domain",
                          "reason": str(exc)}, indent=1))
        return EXIT_INPUT
    out = {"type": t.label, "algebra": t.matrix_name, "r": args.r, "case": chk.case, "m": chk.m}
    for name in ("u", "N"):
        s = getattr(chk, name)
        out[name] = "out of statement domain" if s is None else {
            "threshold": str(s.threshold), "printed": s.printed, "derived": s.derived,
            "lhs": s.lhs, "rhs": s.rhs, "agree": s.agree}
    print(json.dumps(out, indent=1))
    return EXIT_OK if chk.agree else EXIT_MISMATCH


def build_parser():
    ap = argparse.ArgumentParser(prog="commvar", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit-dim", help="dimension of a nilpotent orbit")
    p.add_argument("algebra", help="e.g. C2, A3, so7")
    p.add_argument("--partition", required=True, help="e.g. 2,2,1")
    p.set_defaults(func=cmd_orbit_dim)

    p = sub.add_parser("basis", help="basis matrices as JSON")
    p.add_argument("--algebra", required=True)
    p.add_argument("--sub", default="g", choices=("g",) + SUBALGEBRA_TAGS)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("compile", help="export the ideal of C_r(locus)")
    _instance_args(p)
    p.add_argument("--out")
    p.add_argument("--format", choices=("txt", "json"))
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("cvdim", help="dimension of C_r(locus)")
    add_cvdim_args(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITES + ("all",))
    p.add_argument("--max-rank", type=int)
    p.add_argument("--max-r", type=int)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", action="store_true")
    g.add_argument("--table", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound-table", help="cohomology lower-bound table")
    p.add_argument("--family", required=True, choices=list("ABCD"))
    p.add_argument("--max-rank", type=int, default=8)
    p.add_argument("--max-r", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bound_table)

    p = sub.add_parser("threshold", help="evaluate the non-equidimensionality thresholds")
    p.add_argument("--algebra", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_threshold)
    return ap


def _instance_args(p):
    p.add_argument("--algebra", required=True)
    p.add_argument("--locus", required=True, help="u, w, N, N1(p), O2, O2_cap_u")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--relaxation", help="'determinantal' (C2, locus u)")


def add_cvdim_args(p):
    _instance_args(p)
    p.add_argument("--method", default="groebner", choices=METHODS)
    p.add_argument("--char", type=int, help="prime for the Groebner run (default COMMVAR_CHAR or 32003)")
    p.add_argument("--qs", type=_ints, default=(2, 3, 5), help="field sizes for counting")
    p.add_argument("--mode", default="enumerate", choices=("enumerate", "sample"))
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=EngineConfig.budget)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-pairs", type=int, default=GroebnerConfig.max_pairs)
    p.add_argument("--max-degree", type=int, default=GroebnerConfig.max_degree)
    p.set_defaults(func=cmd_cvdim)


def run(args) -> int:
    try:
        return args.func(args)
    except ResourceError as exc:
        print(f"resource limit ({exc.limit}): {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    return run(args)


def cvdim_main(argv=None) -> int:
    """Standalone ``cvdim`` entry point."""
    ap = argparse.ArgumentParser(prog="cvdim", description="dimension of C_r(locus)")

    add_cvdim_args(ap)
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
