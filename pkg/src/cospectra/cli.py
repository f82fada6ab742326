"""``cospectra`` command line.

Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
3 resource cap exceeded. Output is deterministic for identical input.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .cayley import CayleyGraph, element_to_json, graph_to_json, spectrum, wht_spectrum
from .constructions import (
    appendix_graph,
    construct_even,
    construct_odd,
    cycle_product,
    hypercube,
    parse_graph_spec,
    search_random,
)
from .cospectral import build_report, pst_pair
from .errors import CospectraError, TooLarge
from .oracle import DEFAULT_TOL, oracle_disagreements, pst_amplitude_exact

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_CAP = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _spectrum_rows(X: CayleyGraph, fast: bool) -> tuple[list, str]:
    if fast:
        values, counts = np.unique(wht_spectrum(X), return_counts=True)
        rows = [{"eigenvalue": int(v), "multiplicity": int(c)} for v, c in zip(values, counts)]
        text = "{" + ", ".join(f"{v}^({c})" for v, c in zip(values, counts)) + "}"
        return rows, text
    table = spectrum(X)
    return table.to_json(), table.format_spectrum()


def cmd_spectrum(args, out) -> int:
    graphs = [parse_graph_spec(s) for s in args.graph]
    results = [(X, *_spectrum_rows(X, args.fast)) for X in graphs]
    if args.format == "json":
        if len(results) == 1:
            _dump(results[0][1], out)
        else:
            _dump([{"graph": spec, "spectrum": rows} for spec, (_, rows, _) in zip(args.graph, results)], out)
        return EXIT_OK
    labels = [f"{i})" for i in range(1, len(results) + 1)]
    degrees = [str(X.degree) for X, _, _ in results]
    lw = max(len(s) for s in labels)
    dw = max(len("Degree"), *(len(s) for s in degrees))
    out.write(f"{'':<{lw}} | {'Degree':>{dw}} | Spectrum\n")
    out.write(f"{'-' * lw}-+-{'-' * dw}-+-{'-' * 8}\n")
    for label, degree, (_, _, text) in zip(labels, degrees, results):
        out.write(f"{label:<{lw}} | {degree:>{dw}} | {text}\n")
    return EXIT_OK


def cmd_cospectral(args, out) -> int:
    X = parse_graph_spec(args.graph)
    report = build_report(X)
    payload = report.to_json()
    ok = report.all_ok()
    if args.verify:
        bad = oracle_disagreements(X, args.tol, report.H)
        payload["oracleAgreement"] = not bad
        payload["oracleDisagreements"] = [element_to_json(X.group, g) for g in bad]
        ok = ok and not bad
    _dump(payload, out)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_pst(args, out) -> int:
    X = parse_graph_spec(args.graph)
    sigma = pst_pair(X)
    if sigma is None:
        _dump({"sigma": None, "amplitude": None, "pst": False}, out)
        return EXIT_OK
    amp = pst_amplitude_exact(X, sigma)
    pst = amp.norm() == 4 ** X.group.dimension
    _dump({"sigma": element_to_json(X.group, sigma), "amplitude": {"re": amp.re, "im": amp.im}, "pst": pst}, out)
    return EXIT_OK if pst else EXIT_VERIFY


def _build(kind: str, params: list[str]) -> CayleyGraph:
    def need(n):
        if len(params) != n:
            raise CospectraError(f"construct {kind} takes {n} parameter(s), got {len(params)}")

    def integer(text):
        try:
            return int(text)
        except ValueError:
            raise CospectraError(f"expected an integer, got {text!r}") from None

    lowered = kind.lower()
    if lowered.startswith("appendixa:"):
        need(0)
        return appendix_graph(integer(kind.partition(":")[2]))
    if lowered == "odd":
        need(1)
        return construct_odd(integer(params[0]))
    if lowered == "even":
        need(1)
        D = integer(params[0])
        return construct_even(D - 1)
    if lowered == "hypercube":
        need(1)
        return hypercube(integer(params[0]))
    if lowered == "product":
        need(2)
        return cycle_product(parse_graph_spec(params[0]), integer(params[1]))
    raise CospectraError(f"unknown construction {kind!r}")


def cmd_construct(args, out) -> int:
    X = _build(args.kind, args.params)
    obj = graph_to_json(X)
    if args.out:
        with open(args.out, "w") as fh:
            _dump(obj, fh)
    else:
        _dump(obj, out)
    return EXIT_OK


def cmd_search(args, out) -> int:
    found = search_random(args.d, args.trials, args.target, args.seed)
    _dump([{"connectionSet": [element_to_json(c.group, g) for g in c], "hSize": h} for c, h in found], out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cospectra", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    graph_help = "GROUP:CONNSET, appendixA:k, hypercube:d, odd:d, even:D or @file.json"

    s = sub.add_parser("spectrum", help="exact spectrum via characters")
    s.add_argument("graph", nargs="+", help=graph_help)
    s.add_argument("--format", choices=("json", "table"), default="json")
    s.add_argument("--fast", action="store_true", help="Walsh-Hadamard path (cubelike graphs only)")
    s.set_defaults(func=cmd_spectrum)

    s = sub.add_parser("cospectral", help="vertices strongly cospectral to 0, with bound checks")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--verify", action="store_true", help="cross-check with the spectral-projector oracle")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.set_defaults(func=cmd_cospectral)

    s = sub.add_parser("pst", help="exact perfect state transfer check at time pi/2")
    s.add_argument("graph", help=graph_help)
    s.set_defaults(func=cmd_pst)

    s = sub.add_parser("construct", help="write a graph as JSON")
    s.add_argument("kind", help="odd D | even D | hypercube D | product GRAPH M | appendixA:k")
    s.add_argument("params", nargs="*")
    s.add_argument("--out", help="output file (default: stdout)")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("search", help="random search for large strongly cospectral sets")
    s.add_argument("d", type=int)
    s.add_argument("trials", type=int)
    s.add_argument("target", type=int)
    s.add_argument("seed", type=int)
    s.set_defaults(func=cmd_search)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except TooLarge as exc:
        print(f"cospectra: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CospectraError, ValueError, OSError) as exc:
        print(f"cospectra: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
