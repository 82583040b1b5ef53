"""Command-line interface.

Anywhere a graph argument is expected, either a graph6 string or a compact
family spec is accepted:

    g:s=2,l=4+3     the cone over C4 u C3 with 2 pendants
    h:s=2,l=4+3     its triangle-to-star mate

Eigenvalues are printed with 12 significant digits; exact polynomial
coefficients are printed as decimal strings.  `verify` exits 0 only when
every checked property holds, 1 when a violation is found (the violating
instance is part of the JSON report) and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import graph6
from .closedform import (
    closed_form_mate_spectrum,
    closed_form_spectrum,
    cospectral_mate,
)
from .errors import QSpectralError
from .graphs import CycleJoinParams, Graph, cone_cycles, cone_cycles_mate
from .linalg import char_poly_exact, cospectral, spectrum
from .enumeration import dqs_report, find_q_cospectral_mates
from .suites import run_suite

_FAMILY_SPEC = re.compile(r"^([gh]):s=(\d+),l=(\d+(?:\+\d+)*)$")


def _parse_params(s: str, cycles: str) -> CycleJoinParams:
    lengths = tuple(int(x) for x in re.split(r"[,+]", cycles) if x)
    return CycleJoinParams(int(s), lengths)


def parse_graph_argument(text: str) -> Graph:
    """graph6 string, or a family spec like g:s=1,l=3."""
    m = _FAMILY_SPEC.match(text)
    if m:
        kind, s, lens = m.groups()
        p = _parse_params(s, lens)
        return cone_cycles(p) if kind == "g" else cone_cycles_mate(p)
    return graph6.decode(text)


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_spectrum(args) -> int:
    if args.graph == "-":
        # batch mode: one graph6 line in, one JSON line out
        for line in sys.stdin:
            line = line.strip()
            if not line:
                continue
            g = parse_graph_argument(line)
            payload = char_poly_exact(g).to_json() if args.exact else spectrum(g, tol=args.tol).to_json()
            print(json.dumps(payload))
        return 0
    g = parse_graph_argument(args.graph)
    if args.exact:
        _print_json(char_poly_exact(g).to_json())
    else:
        _print_json(spectrum(g, tol=args.tol).to_json())
    return 0


def _cmd_family(args) -> int:
    p = _parse_params(args.s, args.cycles)
    if args.kind == "g":
        g, cf = cone_cycles(p), closed_form_spectrum(p)
    else:
        g, cf = cone_cycles_mate(p), closed_form_mate_spectrum(p)
    out = {"graph6": graph6.encode(g), "order": g.n, "closed_form": cf.to_json()}
    _print_json(out)
    return 0


def _cmd_mate(args) -> int:
    p = _parse_params(args.s, args.cycles)
    mate = cospectral_mate(p)
    print("none" if mate is None else graph6.encode(mate))
    return 0


def _cmd_cospectral(args) -> int:
    a = parse_graph_argument(args.first)
    b = parse_graph_argument(args.second)
    print("true" if cospectral(a, b) else "false")
    return 0


def _cmd_mates(args) -> int:
    g = parse_graph_argument(args.graph)
    for mate in find_q_cospectral_mates(g):
        print(graph6.encode(mate))
    return 0


def _cmd_dqs(args) -> int:
    p = _parse_params(args.s, args.cycles)
    _print_json(dqs_report(args.kind, p).to_json())
    return 0


def _cmd_verify(args) -> int:
    names = ["trace", "interlacing", "closedform", "census"] if args.suite == "all" else [args.suite]
    reports = [
        run_suite(name, max_n=args.max_n, jobs=args.jobs, seed=args.seed)
        for name in names
    ]
    failed = sum(len(r["violations"]) for r in reports)
    _print_json({"passed": failed == 0, "reports": reports})
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qspectral",
        description="Signless-Laplacian spectra of cone-over-cycles joins: "
        "closed forms, cospectral mates, exact verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="Q-eigenvalues (or exact characteristic polynomial) of a graph")
    sp.add_argument("graph", help="graph6 string, family spec (g:s=1,l=3), or '-' to read graph6 lines from stdin")
    sp.add_argument("--exact", action="store_true", help="print the exact characteristic polynomial")
    sp.add_argument("--tol", type=float, default=1e-12, help="eigensolver off-diagonal tolerance")
    sp.set_defaults(func=_cmd_spectrum)

    fam = sub.add_parser("family", help="build a family graph and its closed-form spectrum")
    fam.add_argument("--kind", choices=("g", "h"), required=True)
    fam.add_argument("--s", required=True, help="number of pendant vertices")
    fam.add_argument("--cycles", required=True, help="comma-separated cycle lengths, e.g. 4,3")
    fam.set_defaults(func=_cmd_family)

    mate = sub.add_parser("mate", help="the Q-cospectral mate of a g-family graph, or 'none'")
    mate.add_argument("--s", required=True)
    mate.add_argument("--cycles", required=True)
    mate.set_defaults(func=_cmd_mate)

    cosp = sub.add_parser("cospectral", help="exact Q-cospectrality of two graphs")
    cosp.add_argument("first")
    cosp.add_argument("second")
    cosp.set_defaults(func=_cmd_cospectral)

    mates = sub.add_parser("mates", help="every isomorphism class sharing the exact Q-spectrum")
    mates.add_argument("graph")
    mates.set_defaults(func=_cmd_mates)

    dqs = sub.add_parser("dqs", help="exhaustive mate report for a family graph")
    dqs.add_argument("--kind", choices=("g", "h"), required=True)
    dqs.add_argument("--s", required=True)
    dqs.add_argument("--cycles", required=True)
    dqs.set_defaults(func=_cmd_dqs)

    ver = sub.add_parser("verify", help="run a property suite; exit 0 iff everything holds")
    ver.add_argument("--suite", choices=("trace", "interlacing", "closedform", "census", "all"), default="all")
    ver.add_argument("--max-n", type=int, default=None, dest="max_n", help="order cap for exhaustive suites")
    ver.add_argument("--seed", type=int, default=0, help="seed for randomised property instances")
    ver.add_argument("--jobs", type=int, default=1, help="worker processes for exhaustive suites")
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QSpectralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
