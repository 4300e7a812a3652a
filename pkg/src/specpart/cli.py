"""Command-line interface.

Exit codes: 0 success, 2 usage or parse error, 3 failed precondition,
4 size guard exceeded, 5 timeout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bounds as B
from .designs import Design, design_to_dict
from .families import FamilyError, parse_family
from .graph import Graph, GraphError, ParseError, degree_profile, format_edge_list, read_edge_list
from .partition import CliquePartition, partition_to_dict
from .solve import (
    DEFAULT_TIMEOUT,
    SizeGuardError,
    SolveError,
    SolveTimeout,
    default_workers,
    find_kt_decomposition,
    solve_cp,
    solve_cp_t,
    solve_kt,
    solve_pi,
    solve_pi_t,
)
from .table import COLUMNS, table1_rows

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_GUARD, EXIT_TIMEOUT = 0, 2, 3, 4, 5

# --bound accepts the short numbered names as well as the quantity names
BOUND_ALIASES = {
    "thm31": "cp_t", "cp-t": "cp_t",
    "thm41": "pi_t", "pi-t": "pi_t",
    "prop42": "k_t", "kt": "k_t",
}


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _load_graph(args) -> Graph:
    if getattr(args, "family", None) and getattr(args, "graph", None):
        raise CliError("give either a graph file or --family, not both", EXIT_USAGE)
    try:
        if getattr(args, "family", None):
            return parse_family(args.family)
        if getattr(args, "graph", None):
            return read_edge_list(args.graph)
    except (ParseError, FamilyError, GraphError) as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    except OSError as exc:
        raise CliError(f"cannot read {args.graph}: {exc.strerror}", EXIT_USAGE) from None
    raise CliError("no graph given (path or --family)", EXIT_USAGE)


def _workers(args) -> int:
    if args.workers is not None:
        return max(1, args.workers)
    return default_workers()


def _fmt_params(params: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in sorted(params.items())) or "-"


def _write_out(text: str, path: str | None) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# --- gen -------------------------------------------------------------------------


def cmd_gen(args) -> int:
    spec = ":".join([args.family_name] + list(args.params))
    try:
        g = parse_family(spec)
    except (FamilyError, GraphError) as exc:
        raise CliError(str(exc), EXIT_USAGE) from None
    prof = degree_profile(g)
    summary = (f"n={g.n} m={g.m} min_degree={prof.min_degree} "
               f"regular={'yes' if prof.is_regular else 'no'}")
    _write_out(format_edge_list(g, comment=f"{spec}\n{summary}"), args.output)
    print(summary, file=sys.stderr if not args.output else sys.stdout)
    return EXIT_OK


# --- bounds ----------------------------------------------------------------------


def _report_rows(reports):
    for r in reports:
        yield {
            "name": r.name,
            "quantity": r.quantity,
            "params": _fmt_params(r.params),
            "raw": f"{r.raw:.6f}",
            "strengthened": r.strengthened,
            "equality_diagnosis": r.equality_diagnosis,
            "exact": "" if r.exact is None else r.exact,
        }


def _emit_reports(reports, fmt: str) -> None:
    if fmt == "json":
        print(_dumps([r.to_dict() for r in reports]))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["name", "quantity", "params", "raw",
                                            "strengthened", "equality_diagnosis", "exact"])
        w.writeheader()
        w.writerows(_report_rows(reports))
        sys.stdout.write(buf.getvalue())
    else:
        for row in _report_rows(reports):
            kind = "<=" if row["name"] == "spectral_kt" else ">="
            exact = f"  exact={row['exact']}" if row["exact"] != "" else ""
            print(f"{row['name']:<24} {row['quantity']:<5} {kind} {row['raw']:>14} "
                  f"-> {row['strengthened']:<6} [{row['params']}] "
                  f"{row['equality_diagnosis']}{exact}")


def cmd_bounds(args) -> int:
    g = _load_graph(args)
    if args.t is not None and args.t < 2:
        raise CliError("--t must be >= 2", EXIT_USAGE)
    dash = B.bound_dashboard(g, args.t, exact=not args.no_exact, exact_t=args.all,
                             workers=_workers(args), timeout=args.timeout)
    if args.t is not None and args.t < 3:
        dash.errors = [e for e in dash.errors if not e.startswith("spectral_kt")]
    _emit_reports(dash.reports, args.format)
    for err in dash.errors:
        print(f"error: {err}", file=sys.stderr)
    failed = [e for e in dash.errors if not e.startswith("exact ")]
    return EXIT_PRECONDITION if failed else EXIT_OK


# --- solve -----------------------------------------------------------------------


def _witness_dict(res, g: Graph) -> dict:
    if isinstance(res.witness, CliquePartition):
        return partition_to_dict(res.witness)
    return {"n": g.n, "cliques": [list(c) for c in res.witness]}


def cmd_solve(args) -> int:
    g = _load_graph(args)
    q = args.quantity
    needs_t = q in ("cp-t", "pi-t", "kt")
    if needs_t and args.t is None:
        raise CliError(f"{q} needs --t", EXIT_USAGE)
    kw = {"force": args.force, "workers": _workers(args), "timeout": args.timeout}
    part_kw = dict(kw, exclude_trivial=args.exclude_trivial)
    try:
        if q == "cp":
            res = solve_cp(g, **part_kw)
        elif q == "pi":
            res = solve_pi(g, **part_kw)
        elif q == "cp-t":
            res = solve_cp_t(g, args.t, **part_kw)
        elif q == "pi-t":
            res = solve_pi_t(g, args.t, **part_kw)
        else:
            res = solve_kt(g, args.t, **kw)
    except SizeGuardError as exc:
        raise CliError(str(exc), EXIT_GUARD) from None
    except SolveTimeout as exc:
        raise CliError(str(exc), EXIT_TIMEOUT) from None
    except SolveError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None
    witness = _witness_dict(res, g)
    if args.witness:
        with open(args.witness, "w") as fh:
            fh.write(_dumps(witness) + "\n")
    if args.format == "json":
        print(_dumps({"quantity": q, "t": args.t, "optimum": res.optimum, "witness": witness}))
        print(f"nodes={res.nodes_explored} time={res.elapsed:.3f}s", file=sys.stderr)
    else:
        label = q if not needs_t else f"{q}(t={args.t})"
        print(f"{label} = {res.optimum}")
        print(f"nodes explored: {res.nodes_explored}")
        print(f"wall time: {res.elapsed:.3f}s")
        print("witness: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in witness["cliques"]))
    return EXIT_OK


# --- decompose -------------------------------------------------------------------


def cmd_decompose(args) -> int:
    g = _load_graph(args)
    if args.t < 2:
        raise CliError("--t must be >= 2", EXIT_USAGE)
    p = find_kt_decomposition(g, args.t)
    if args.format == "json":
        print(_dumps({"t": args.t, "decomposition": partition_to_dict(p) if p else None}))
    elif p is None:
        print(f"no K_{args.t}-decomposition")
    else:
        print(f"K_{args.t}-decomposition with {p.size} cliques")
        print(" ".join("{" + ",".join(map(str, c)) + "}" for c in p.cliques))
    if p is not None and args.output:
        with open(args.output, "w") as fh:
            fh.write(_dumps(partition_to_dict(p)) + "\n")
    return EXIT_OK


# --- certify ---------------------------------------------------------------------


def cmd_certify(args) -> int:
    g = _load_graph(args)
    kind = BOUND_ALIASES[args.bound]
    try:
        rep = B.classify_equality(g, args.t, kind, workers=_workers(args), timeout=args.timeout)
    except B.BoundPreconditionError as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from None
    cert = rep.certificate
    payload = None
    if isinstance(cert, Design):
        payload = design_to_dict(cert)
    elif isinstance(cert, CliquePartition):
        payload = partition_to_dict(cert)
    if args.certificate and payload is not None and rep.equality_diagnosis == B.ATTAINED:
        with open(args.certificate, "w") as fh:
            fh.write(_dumps(payload) + "\n")
    if args.format == "json":
        print(_dumps(rep.to_dict() | {"note": rep.note}))
    else:
        print(f"{rep.name} (t={args.t}): raw={rep.raw:.6f} strengthened={rep.strengthened}")
        print(f"diagnosis: {rep.equality_diagnosis}" + (f" ({rep.note})" if rep.note else ""))
        if payload is not None and rep.equality_diagnosis == B.ATTAINED:
            kind_name = "design" if isinstance(cert, Design) else "partition"
            print(f"certificate ({kind_name}): {json.dumps(payload, sort_keys=True)}")
    return EXIT_OK


# --- table1 ----------------------------------------------------------------------


def _range(text: str) -> range:
    try:
        lo, _, hi = text.partition("..")
        return range(int(lo), int(hi or lo) + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def cmd_table1(args) -> int:
    rows = table1_rows(args.p, args.a, args.s, args.v, args.f, exact=not args.no_exact,
                       timeout=args.timeout, workers=_workers(args))
    headers = ["family", "instance", *COLUMNS, "cp", "residual"]
    if args.format == "json":
        print(_dumps([r.as_dict() for r in rows]))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=headers)
        w.writeheader()
        for r in rows:
            d = r.as_dict()
            w.writerow({k: (f"{v:.6f}" if isinstance(v, float) else v) for k, v in d.items()})
        sys.stdout.write(buf.getvalue())
    else:
        print(f"{'instance':<12}" + "".join(f"{c:>24}" for c in COLUMNS) + f"{'cp':>10}{'residual':>12}")
        for r in rows:
            print(f"{r.label:<12}" + "".join(f"{x:>24.6f}" for x in r.evaluated)
                  + f"{str(r.cp):>10}{r.residual:>12.1e}")
    return EXIT_OK


# --- parser ----------------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", nargs="?", help="edge-list file")
    p.add_argument("--family", help="inline family spec, e.g. triangular:5")


def _add_run_args(p: argparse.ArgumentParser, timeout=DEFAULT_TIMEOUT) -> None:
    p.add_argument("--workers", type=int, default=None,
                   help="solver worker processes (default: SPECPART_WORKERS or CPU count)")
    p.add_argument("--timeout", type=float, default=timeout, help="seconds per exact solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specpart", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="write a family graph as an edge list")
    p.add_argument("family_name")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bounds", help="evaluate every applicable bound")
    _add_graph_args(p)
    p.add_argument("--t", type=int)
    p.add_argument("--all", action="store_true", help="also solve cp_t, pi_t, k_t exactly")
    p.add_argument("--no-exact", action="store_true", help="skip exact solves")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_run_args(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="solve a partition quantity exactly")
    p.add_argument("quantity", choices=("cp", "cp-t", "pi", "pi-t", "kt"))
    _add_graph_args(p)
    p.add_argument("--t", type=int)
    p.add_argument("--exclude-trivial", action="store_true",
                   help="forbid the single clique on all vertices")
    p.add_argument("--force", action="store_true", help="ignore the edge-count guard")
    p.add_argument("--witness", help="write the witness as partition JSON")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_run_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decompose", help="find a K_t-decomposition")
    _add_graph_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("certify", help="diagnose equality in a bound")
    _add_graph_args(p)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--bound", choices=sorted(BOUND_ALIASES), required=True)
    p.add_argument("--certificate", help="write the certificate JSON here when attained")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_run_args(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("table1", help="bound comparison table over four families")
    p.add_argument("--p", type=_range, default=range(2, 6), help="parts, LO..HI")
    p.add_argument("--a", type=_range, default=range(2, 6), help="part size, LO..HI")
    p.add_argument("--s", type=_range, default=range(2, 7), help="odd-cycle complement C_{2s+1}")
    p.add_argument("--v", type=_range, default=range(4, 9), help="triangular T(v)")
    p.add_argument("--f", type=_range, default=range(2, 9), help="friendship F_v")
    p.add_argument("--no-exact", action="store_true")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_run_args(p)
    p.set_defaults(func=cmd_table1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except B.BoundPreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
