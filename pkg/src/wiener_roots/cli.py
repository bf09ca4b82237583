"""Command-line front end: compute, family queries, verification, scatter data.

Exit codes are stable across commands: 0 for success (all verdicts pass),
1 for a verification failure, 2 for usage or parse errors.  The tool has no
randomness; setting WIENER_ROOTS_SEED is rejected so nobody relies on it.
"""

from __future__ import annotations

import argparse
import csv
import inspect
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import claims
from .families import parse_family_spec, family_polynomial
from .graph_core import (
    DisconnectedGraphError,
    Graph,
    Graph6Error,
    distance_distribution,
    enumerate_connected_distributions,
    enumerate_trees,
    load_edge_list,
    parse_graph6,
)
from .polynomial import (
    Annulus,
    ComplexRoot,
    ReducedPolynomial,
    enestrom_kakeya,
    reduce as reduce_poly,
    roots,
    wiener_index,
    wiener_polynomial,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2


def _fmt(x: float) -> str:
    return format(x, ".17g")


@dataclass
class OutputRecord:
    """One computed graph: coefficients, nonzero roots, annulus, index."""

    graph_desc: str
    coefficients: tuple[int, ...]
    roots: tuple[ComplexRoot, ...]
    annulus: Annulus | None
    wiener_index: int

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph_desc,
            "coefficients": list(self.coefficients),
            "roots": [r.to_json_dict() for r in self.roots],
            "annulus": None if self.annulus is None else
            {"r": str(self.annulus.r), "R": str(self.annulus.R)},
            "wiener_index": self.wiener_index,
        }

    def csv_rows(self) -> list[str]:
        rows = [f"{self.graph_desc},0,0"]
        rows += [f"{self.graph_desc},{_fmt(r.re)},{_fmt(r.im)}" for r in self.roots]
        return rows


def _record_for(desc: str, g: Graph) -> OutputRecord:
    dd = distance_distribution(g)
    w = wiener_polynomial(dd)
    rp = reduce_poly(w)
    ann = enestrom_kakeya(rp) if rp.degree >= 1 else None
    return OutputRecord(desc, w.d, roots(rp), ann, wiener_index(w))


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------


def cmd_compute(args: argparse.Namespace) -> int:
    if args.input == "-":
        source = sys.stdin.read().splitlines()
    else:
        source = Path(args.input).read_text().splitlines()
    lines, had_parse_error = [], False
    if args.edge_list:
        inputs = [(args.input, None)]
    else:
        inputs = [(ln.strip(), i + 1) for i, ln in enumerate(source) if ln.strip()]
    for token, lineno in inputs:
        desc = token if lineno is None else f"line {lineno}: {token}"
        try:
            g = load_edge_list(source, name=args.input) if args.edge_list \
                else parse_graph6(token)
        except (Graph6Error, ValueError) as exc:
            lines.append(json.dumps({"graph": desc, "error": str(exc)}))
            had_parse_error = True
            continue
        try:
            record = _record_for(token, g)
        except DisconnectedGraphError as exc:
            lines.append(json.dumps({"graph": desc, "error": str(exc)}))
            continue
        if args.format == "json":
            lines.append(json.dumps(record.to_json_dict()))
        else:
            lines.extend(record.csv_rows())
    _emit(lines, args.out)
    return EXIT_USAGE if had_parse_error else EXIT_OK


# ---------------------------------------------------------------------------
# scatter
# ---------------------------------------------------------------------------


def _distributions_for_scatter(order: int, kind: str, jobs: int,
                               long_running: bool) -> list[tuple[int, ...]]:
    if kind == "graphs":
        dists, _ = enumerate_connected_distributions(
            order, jobs=jobs, long_running=long_running)
        return [dd.d for dd in dists]
    seen = []
    have = set()
    for g in enumerate_trees(order):
        d = distance_distribution(g).d
        if d not in have:
            have.add(d)
            seen.append(d)
    return sorted(seen)


def cmd_scatter(args: argparse.Namespace) -> int:
    if args.klass == "graphs" and args.order == 8 and not args.long:
        print("order-8 graph sweeps are long-running; pass --long to opt in",
              file=sys.stderr)
        return EXIT_USAGE
    points: list[tuple[float, float]] = []
    for dvec in _distributions_for_scatter(args.order, args.klass, args.jobs,
                                           args.long):
        points.append((0.0, 0.0))  # zero is a root of every Wiener polynomial
        rp = ReducedPolynomial(dvec)
        if rp.degree >= 1:
            points.extend((r.re, r.im) for r in roots(rp))
    points.sort()
    lines = ["re,im"] + [f"{_fmt(re)},{_fmt(im)}" for re, im in points]
    _emit(lines, args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# family
# ---------------------------------------------------------------------------


def cmd_family(args: argparse.Namespace) -> int:
    try:
        spec = parse_family_spec(args.spec)
        w = family_polynomial(spec)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rp = reduce_poly(w)
    ann = enestrom_kakeya(rp) if rp.degree >= 1 else None
    record = OutputRecord(str(spec), w.d, roots(rp), ann, wiener_index(w))
    if args.format == "json":
        _emit([json.dumps(record.to_json_dict(), indent=2)], args.out)
    else:
        _emit(record.csv_rows(), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify / verify-all
# ---------------------------------------------------------------------------


def _parse_claim_params(tokens: list[str], func) -> dict:
    """Turn 'n=5', 'n=6..100', 'which=imag' tokens into claim arguments."""
    accepted = set(inspect.signature(func).parameters)
    params: dict = {}
    for token in tokens:
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"claim parameter {token!r} must look like key=value")
        if key == "n" and ("n_lo" in accepted or "n_hi" in accepted):
            if ".." in value:
                lo, hi = value.split("..", 1)
                params["n_lo"], params["n_hi"] = int(lo), int(hi)
            else:
                params["n_lo"] = int(value)
            continue
        if key not in accepted:
            raise ValueError(f"claim does not take a parameter named {key!r}")
        if ".." in value:
            raise ValueError(f"parameter {key!r} does not take a range")
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    return params


def _report_lines(report: claims.ClaimReport) -> list[str]:
    head = f"{report.claim_id} {report.params} -> {report.verdict} " \
           f"({report.runtime:.2f}s)"
    lines = [head]
    for desc, value in report.witnesses[:8]:
        lines.append(f"  witness: {desc}: {value}")
    for desc, value in report.counterexamples[:8]:
        lines.append(f"  counterexample: {desc}: {value}")
    extra = len(report.counterexamples) - 8
    if extra > 0:
        lines.append(f"  ... and {extra} more counterexamples")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    if args.claim not in claims.claim_ids():
        print(f"error: unknown claim {args.claim!r}; known: "
              f"{', '.join(claims.claim_ids())}", file=sys.stderr)
        return EXIT_USAGE
    func = claims.CLAIMS[args.claim]
    try:
        params = _parse_claim_params(args.params, func)
        if args.tol is not None and "tol" in inspect.signature(func).parameters:
            params["tol"] = args.tol
        claims.set_jobs(args.jobs)
        report = func(**params)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in _report_lines(report):
        print(line)
    if args.out:
        Path(args.out).write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    return EXIT_OK if report.verdict == "pass" else EXIT_VERIFICATION


def cmd_verify_all(args: argparse.Namespace) -> int:
    claims.set_jobs(args.jobs)
    try:
        reports = claims.run_all(args.profile)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    summary = [("claim_id", "params", "verdict", "runtime_seconds")]
    all_pass = True
    for i, report in enumerate(reports):
        for line in _report_lines(report):
            print(line)
        summary.append((report.claim_id, json.dumps(report.params),
                        report.verdict, f"{report.runtime:.3f}"))
        all_pass &= report.verdict == "pass"
        if outdir:
            path = outdir / f"{i:02d}_{report.claim_id}.json"
            path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    if outdir:
        with open(outdir / "summary.csv", "w", newline="") as fh:
            csv.writer(fh).writerows(summary)
    print(f"\n{sum(r.verdict == 'pass' for r in reports)}/{len(reports)} "
          f"claims pass")
    return EXIT_OK if all_pass else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wiener-roots",
        description="Wiener polynomials of connected graphs: coefficients, "
                    "roots, exhaustive claim verification, scatter data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="Wiener data for graph6 or edge-list input")
    p.add_argument("input", help="file of graph6 lines, '-' for stdin")
    p.add_argument("--edge-list", action="store_true",
                   help="treat the input file as one 'n then u v lines' graph")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("scatter", help="CSV of all roots at one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--class", dest="klass", choices=("graphs", "trees"),
                   default="graphs")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--long", action="store_true",
                   help="allow the order-8 labeled graph sweep")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("family", help="closed-form family data, e.g. 'broom:4,12'")
    p.add_argument("spec")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run one claim verifier")
    p.add_argument("claim")
    p.add_argument("params", nargs="*",
                   help="claim parameters like n=5, n=6..100, which=imag")
    p.add_argument("--out", default=None, help="write the JSON report here")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("verify-all", help="run the whole claim suite")
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--out", default=None, help="directory for reports + summary.csv")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: list[str] | None = None) -> int:
    if "WIENER_ROOTS_SEED" in os.environ:
        print("error: WIENER_ROOTS_SEED is rejected; this tool is deterministic "
              "and takes no seed", file=sys.stderr)
        return EXIT_USAGE
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    return args.func(args)


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
