"""Command-line front end: exact spectra, oracle verification, automorphism
reports, orbit counts, graph export and scheme checking.

Exit codes: 0 success, 1 verification failure, 2 resource cap exceeded,
64 usage error.  Machine output goes to stdout, diagnostics to stderr.

Default resource caps can be overridden via the environment:
SETINCL_MAX_VERTICES (eigensolver and scheme matrices, default 2000) and
SETINCL_BRUTE_CAP (brute-force automorphism search, default 40).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .automorphisms import aut_group, brute_force_aut_order, orbit_count
from .errors import CapExceededError
from .graphs import (
    GraphParams,
    build_inclusion_graph,
    build_line_graph,
    canonicalize,
    export_graph,
    johnson_scheme_holds,
)
from .spectra import (
    compare_spectra,
    eigensolver_oracle,
    format_eigenvalue,
    spectrum_inclusion,
    spectrum_line_inclusion,
)

EX_OK = 0
EX_VERIFY_FAIL = 1
EX_CAP = 2
EX_USAGE = 64


def _env_cap(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EX_USAGE)


def _build_parser() -> _Parser:
    parser = _Parser(prog="setincl", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_params(p):
        p.add_argument("n", type=int)
        p.add_argument("k", type=int)
        p.add_argument("l", type=int)

    p = sub.add_parser("spectrum", help="print the exact spectrum")
    add_params(p)
    p.add_argument("--line", action="store_true", help="spectrum of the line graph")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("verify", help="compare the exact spectrum with the numeric solver")
    add_params(p)
    p.add_argument("--line", action="store_true")
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument(
        "--max-vertices", type=int, default=_env_cap("SETINCL_MAX_VERTICES", 2000)
    )
    p.add_argument("--inject-perturbation", type=float, default=0.0, help=argparse.SUPPRESS)

    p = sub.add_parser("aut", help="automorphism group report")
    add_params(p)
    p.add_argument("--brute-force", action="store_true", help="cross-check the order by search")
    p.add_argument(
        "--max-vertices", type=int, default=_env_cap("SETINCL_BRUTE_CAP", 40)
    )
    p.add_argument("--format", choices=["table", "json"], default="table")

    p = sub.add_parser("orbits", help="orbit counts under the automorphism group")
    add_params(p)
    p.add_argument("--on", choices=["vertices", "edges", "arcs"], required=True)

    p = sub.add_parser("export", help="write the graph in an interchange format")
    add_params(p)
    p.add_argument("--format", choices=["edgelist", "graph6", "dot"], default="edgelist")
    p.add_argument("--out", help="write to this path instead of stdout")

    p = sub.add_parser("scheme", help="intersection numbers of the scheme on k-subsets")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--check", action="store_true", help="verify the identities on explicit matrices")
    p.add_argument(
        "--max-dim", type=int, default=_env_cap("SETINCL_MAX_VERTICES", 2000)
    )
    return parser


def _canonical_params(args) -> GraphParams:
    params, complemented = canonicalize(GraphParams(args.n, args.k, args.l))
    if complemented:
        sys.stderr.write(
            f"note: ({args.n},{args.k},{args.l}) canonicalized to "
            f"({params.n},{params.k},{params.l}) via complementation\n"
        )
    return params


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_spectrum(args) -> int:
    params = _canonical_params(args)
    spec = spectrum_line_inclusion(params) if args.line else spectrum_inclusion(params)
    if args.format == "json":
        text = json.dumps(spec.to_json_obj(), indent=2) + "\n"
    elif args.format == "csv":
        text = spec.to_csv_text()
    else:
        width = max(len(format_eigenvalue(ev)) for ev, _ in spec.entries)
        lines = [f"{format_eigenvalue(ev):>{width}}  {mult}" for ev, mult in spec.entries]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EX_OK


def _cmd_verify(args) -> int:
    params = _canonical_params(args)
    graph = build_inclusion_graph(params)
    if args.line:
        graph = build_line_graph(graph)
        exact = spectrum_line_inclusion(params)
    else:
        exact = spectrum_inclusion(params)
    if graph.num_vertices > args.max_vertices:
        raise CapExceededError(
            f"graph has {graph.num_vertices} vertices, cap is {args.max_vertices}"
        )
    numeric = eigensolver_oracle(graph.adjacency_matrix(), max_dim=args.max_vertices)
    if args.inject_perturbation:
        numeric[0] += args.inject_perturbation
    report = compare_spectra(exact, numeric, args.tol)
    label = "line graph" if args.line else "graph"
    status = "PASS" if report.passed else "FAIL"
    print(
        f"verify ({params.n},{params.k},{params.l}) {label}: "
        f"max deviation {report.max_deviation:.3e} "
        f"(tol {report.tolerance:g} * scale {report.scale:g}) -> {status}"
    )
    return EX_OK if report.passed else EX_VERIFY_FAIL


def _cmd_aut(args) -> int:
    params = _canonical_params(args)
    group = aut_group(params)
    verified = None
    if args.brute_force:
        graph = build_inclusion_graph(params)
        oracle_order = brute_force_aut_order(graph, max_vertices=args.max_vertices)
        verified = oracle_order == group.order
    if args.format == "json":
        print(json.dumps(group.to_json_dict(verified_brute_force=verified)))
    else:
        print(f"kind:  {group.kind}")
        print(f"order: {group.order}")
        print(f"generators: {len(group.generators)}")
        if args.brute_force:
            print(f"brute-force order: {oracle_order} ({'agree' if verified else 'DISAGREE'})")
    if verified is False:
        return EX_VERIFY_FAIL
    return EX_OK


def _cmd_orbits(args) -> int:
    params = _canonical_params(args)
    graph = build_inclusion_graph(params)
    group = aut_group(params)
    count = orbit_count(graph, group.generators, on=args.on)
    print(f"orbits on {args.on}: {count}")
    return EX_OK


def _cmd_export(args) -> int:
    params = _canonical_params(args)
    graph = build_inclusion_graph(params)
    data = export_graph(graph, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return EX_OK


def _cmd_scheme(args) -> int:
    n, k = args.n, args.k
    if not (0 <= k and 2 * k <= n):
        raise ValueError(f"need 0 <= k <= n/2, got n={n}, k={k}")
    if args.check:
        ok = johnson_scheme_holds(n, k, max_dim=args.max_dim)
        print(f"scheme ({n},{k}) identities: {'PASS' if ok else 'FAIL'}")
        return EX_OK if ok else EX_VERIFY_FAIL
    from .combinatorics import intersection_number

    for i in range(k + 1):
        for j in range(i + 1, k + 1):
            values = [intersection_number(n, k, i, j, s) for s in range(k + 1)]
            print(f"p^s_({i},{j}) for s=0..{k}: {values}")
    return EX_OK


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "verify": _cmd_verify,
    "aut": _cmd_aut,
    "orbits": _cmd_orbits,
    "export": _cmd_export,
    "scheme": _cmd_scheme,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EX_USAGE
    try:
        return _COMMANDS[args.command](args)
    except CapExceededError as exc:
        sys.stderr.write(f"setincl: cap exceeded: {exc}\n")
        return EX_CAP
    except ValueError as exc:
        sys.stderr.write(f"setincl: error: {exc}\n")
        return EX_USAGE


if __name__ == "__main__":
    sys.exit(main())
