"""Command-line front end: analysis reports, oracle verification, reference
tables, counterexample searches, and spectrum utilities.

Exit codes: 0 success, 1 verification disagreement, 2 invalid input,
3 budget exhaustion under --strict.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, PeriodMismatch, VpalError
from .indicator import AnalysisReport, Infinite, analyze
from .numbers import DEFAULT_BUDGET
from .oracle import (
    SearchProperty,
    Unverified,
    anomaly_witness,
    search_iter,
    verify,
)
from .spectrum import (
    PeriodicSamples,
    gcd_period,
    indicator_spectrum,
    naive_fundamental_period,
    net_coefficients,
    samples_to_spectrum,
    support_period,
)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

#: The 18 table rows shipped as the "paper" preset.
PRESET_PAPER = (13, 17, 18, 19, 26, 37, 39, 48, 49, 56, 79, 103, 107, 109, 113, 117, 119, 122)

#: Footnotes attached to preset rows whose published values are inconsistent.
PRESET_NOTES = {
    117: "the source table prints omega0 = 2045, inconsistent with its own "
    "combination I_2054, whose fundamental period is 2054",
}


@dataclass(frozen=True)
class CliConfig:
    output_format: str = "pretty"
    factor_budget: int = DEFAULT_BUDGET
    workers: int = 1
    strict: bool = False

    def __post_init__(self):
        if self.output_format not in ("pretty", "json", "csv"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.factor_budget < 10_000:
            raise ValueError("factor budget must be at least 10000")
        if self.workers < 1:
            raise ValueError("workers must be >= 1")


def canonical_json(obj) -> str:
    """Stable serialization: insertion-ordered keys, 2-space indent, no
    floats anywhere on the analysis path (integers travel as strings)."""
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _fmt_set(values) -> str:
    return "{" + ",".join(str(v) for v in sorted(values)) + "}"


def _columns(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows)


def render_report(report: AnalysisReport) -> str:
    """Human-readable walkthrough: crucial primes, solutions, case and
    constraint tables, then the final quantities."""
    lines = []
    lines.append(f"n = {report.n} = {report.n_factorization}")
    lines.append(f"reverse = {report.reverse} = {report.reverse_factorization}")
    lines.append(f"digits = {report.digits}")
    lines.append("")
    lines.append("crucial primes:")
    rows = [["", "p", "exp_n", "exp_rev", "delta", "mu"]]
    for i, r in enumerate(report.records, 1):
        rows.append([f"{i}", str(r.p), str(r.exp_n), str(r.exp_reverse), str(r.delta), str(r.mu)])
    lines.append(_columns(rows))
    lines.append("")
    n_sol = len(report.constraints)
    lines.append(f"characteristic solutions: {n_sol}")
    for i, cons in enumerate(report.constraints, 1):
        tag = "degenerate" if cons.degenerate else "nondegenerate"
        lines.append(f"  u{i} = ({', '.join(str(v) for v in cons.solution.values)})  {tag}")
    if n_sol:
        lines.append("")
        lines.append("case table:")
        rows = [["p"] + [f"u{i}" for i in range(1, n_sol + 1)]]
        for j, r in enumerate(report.records):
            rows.append([str(r.p)] + [str(cons.cases[j]) for cons in report.constraints])
        lines.append(_columns(rows))
        lines.append("")
        lines.append("constraint table:")
        rows = [["p"] + [f"u{i}" for i in range(1, n_sol + 1)]]
        for j, r in enumerate(report.records):
            row = [str(r.p)]
            for cons in report.constraints:
                pair = cons.pairs[j]
                row.append(f"({_fmt_set(pair.required)},{_fmt_set(pair.excluded)})")
            rows.append(row)
        rows.append(["A"] + [_fmt_set(c.required) for c in report.constraints])
        rows.append(["B"] + [_fmt_set(c.excluded) for c in report.constraints])
        rows.append(
            ["S"]
            + [
                "-" if c.degenerate else f"S({_fmt_set(c.required)},{_fmt_set(c.excluded)})"
                for c in report.constraints
            ]
        )
        lines.append(_columns(rows))
    lines.append("")
    lines.append(f"I = {report.combination}")
    lines.append(f"c(n) = {'infinity' if isinstance(report.order, Infinite) else report.order}")
    lines.append(f"omega0 = {report.omega0}")
    lines.append(f"omega_f = {report.omega_f}")
    lines.append(f"omega_b = {report.omega_b}")
    return "\n".join(lines)


def cmd_analyze(args, config: CliConfig) -> int:
    report = analyze(args.n, config.factor_budget)
    if config.output_format == "json":
        print(canonical_json(report.to_json_dict()))
    else:
        print(render_report(report))
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    rows = verify(args.n, args.kmax, config.factor_budget, accelerated=args.accelerated)
    disagreements = sum(1 for r in rows if r.agrees is False)
    unverified = sum(1 for r in rows if r.agrees is None)

    def obs(row):
        return "UNVERIFIED" if isinstance(row.observed, Unverified) else str(row.observed)

    def agr(row):
        return "SKIPPED" if row.agrees is None else str(row.agrees)

    if config.output_format == "json":
        payload = [
            {
                "k": str(r.k),
                "predicted": r.predicted,
                "observed": "UNVERIFIED" if isinstance(r.observed, Unverified) else r.observed,
                "agrees": "SKIPPED" if r.agrees is None else r.agrees,
            }
            for r in rows
        ]
        print(canonical_json({"n": str(args.n), "rows": payload}))
    elif config.output_format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["k", "predicted", "observed", "agrees"])
        for r in rows:
            writer.writerow([r.k, r.predicted, obs(r), agr(r)])
    else:
        table = [["k", "predicted", "observed", "agrees"]]
        for r in rows:
            table.append([str(r.k), str(r.predicted), obs(r), agr(r)])
        print(_columns(table))
        print(
            f"summary: {len(rows)} rows, {disagreements} disagreements, "
            f"{unverified} unverified"
        )
    if disagreements:
        return EXIT_DISAGREEMENT
    if config.strict and unverified:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_table(args, config: CliConfig) -> int:
    ns = PRESET_PAPER if args.preset == "paper" else tuple(args.numbers)
    if not ns:
        raise InvalidInput("no numbers given; pass N... or --preset paper")
    reports = [analyze(n, config.factor_budget) for n in ns]
    notes = PRESET_NOTES if args.preset == "paper" else {}
    if config.output_format == "json":
        print(canonical_json([r.to_json_dict() for r in reports]))
        return EXIT_OK
    if config.output_format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["n", "I", "c", "omega0"])
        for r in reports:
            c = "infinity" if isinstance(r.order, Infinite) else str(r.order)
            writer.writerow([r.n, str(r.combination), c, r.omega0])
        return EXIT_OK
    rows = [["n", "I", "c", "omega0", ""]]
    for r in reports:
        c = "infinity" if isinstance(r.order, Infinite) else str(r.order)
        rows.append([str(r.n), str(r.combination), c, str(r.omega0), "[*]" if r.n in notes else ""])
    print(_columns(rows))
    for n, note in sorted(notes.items()):
        if any(r.n == n for r in reports):
            print(f"[*] n={n}: {note}")
    return EXIT_OK


def cmd_search(args, config: CliConfig) -> int:
    prop = SearchProperty(args.property)
    for hit in search_iter(args.until, prop, workers=config.workers, budget=config.factor_budget):
        report = hit.evidence
        if config.output_format == "json":
            payload = {
                "n": str(hit.n),
                "property": prop.value,
                "omega0": str(report.omega0),
                "omega_f": str(report.omega_f),
                "omega_b": str(report.omega_b),
                "indicator": [
                    {"c": str(m), "lambda": str(c)} for m, c in report.combination.terms
                ],
            }
            if prop is SearchProperty.DIVISIBILITY_ANOMALY:
                witness = anomaly_witness(report)
                payload["witness"] = [str(witness[0]), str(witness[1])]
            print(json.dumps(payload), flush=True)
        else:
            detail = (
                f"n={hit.n}  I = {report.combination}  omega0={report.omega0}  "
                f"omega_f={report.omega_f}  omega_b={report.omega_b}"
            )
            if prop is SearchProperty.DIVISIBILITY_ANOMALY:
                witness = anomaly_witness(report)
                detail += f"  witness: {witness[0]} does not divide {witness[1]}"
            print(detail, flush=True)
    return EXIT_OK


def _parse_samples(text: str) -> PeriodicSamples:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise InvalidInput(f"malformed sample list: {text!r}")
        try:
            values.append(int(token))
            continue
        except ValueError:
            pass
        try:
            values.append(complex(token))
        except ValueError:
            raise InvalidInput(f"cannot parse sample {token!r}") from None
    if not values:
        raise InvalidInput("empty sample list")
    return PeriodicSamples(len(values), tuple(values))


def _fmt_coeff(coeff) -> str:
    if isinstance(coeff, (int, Fraction)):
        return str(coeff)
    return format(coeff, ".6g")


def cmd_spectrum(args, config: CliConfig) -> int:
    if args.spectrum_command == "periods":
        samples = _parse_samples(args.samples)
        g = samples_to_spectrum(samples)
        print(f"window = {samples.period}")
        print(f"support_period = {support_period(g)}")
        print(f"gcd_period = {gcd_period(samples)}")
        print(f"naive_fundamental_period = {naive_fundamental_period(samples)}")
        return EXIT_OK
    if args.spectrum_command == "indicator":
        g = indicator_spectrum(args.a)
        print(f"spectrum of the divisibility-by-{args.a} indicator: {len(g)} roots")
        for root, coeff in g.items():
            print(f"  e({root.num}/{root.den}): {_fmt_coeff(coeff)}")
        print(f"support_period = {support_period(g)}")
        return EXIT_OK
    # of-indicator
    report = analyze(args.n, config.factor_budget)
    nets = net_coefficients(report.combination)
    print(f"I = {report.combination}")
    print(f"active orders ({len(nets)}): {', '.join(str(d) for d in nets)}")
    for den, net in nets.items():
        print(f"  order {den}: net {net}")
    print(f"support_period = {math.lcm(*nets) if nets else 1}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vpal",
        description="Decide which repeated digit concatenations of a number "
        "keep their factorization sum under digit reversal.",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="factoring iteration cap (env VPAL_FACTOR_BUDGET overrides)",
    )
    parser.add_argument(
        "--format",
        choices=("pretty", "json", "csv"),
        default="pretty",
        help="output format",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis report for one number")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")

    p = sub.add_parser("verify", help="compare predictions against brute force")
    p.add_argument("n", type=int)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--strict", action="store_true", help="exit 3 when any row is UNVERIFIED")
    p.add_argument(
        "--accelerated",
        action="store_true",
        help="factor base, reversal, and repetition number separately",
    )

    p = sub.add_parser("table", help="indicator/order/period table for several numbers")
    p.add_argument("numbers", type=int, nargs="*")
    p.add_argument("--preset", choices=("paper",), help="use the built-in 18-row list")

    p = sub.add_parser("search", help="scan for counterexample properties")
    p.add_argument("property", choices=[sp.value for sp in SearchProperty])
    p.add_argument("--until", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("spectrum", help="root-of-unity spectrum utilities")
    spectrum_sub = p.add_subparsers(dest="spectrum_command", required=True)
    q = spectrum_sub.add_parser("periods", help="three period computations for a sample window")
    q.add_argument("--samples", required=True, help="comma-separated values, e.g. 1,0,1,0")
    q = spectrum_sub.add_parser("indicator", help="spectrum of a single divisibility indicator")
    q.add_argument("a", type=int)
    q = spectrum_sub.add_parser("of-indicator", help="spectral view of a number's indicator")
    q.add_argument("n", type=int)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    budget = args.budget
    env_budget = os.environ.get("VPAL_FACTOR_BUDGET")
    if env_budget is not None:
        budget = int(env_budget)
    if budget is None:
        budget = DEFAULT_BUDGET
    output_format = args.format
    if getattr(args, "json", False):
        output_format = "json"
    try:
        config = CliConfig(
            output_format=output_format,
            factor_budget=budget,
            workers=getattr(args, "workers", 1),
            strict=getattr(args, "strict", False),
        )
        if args.command == "analyze":
            return cmd_analyze(args, config)
        if args.command == "verify":
            return cmd_verify(args, config)
        if args.command == "table":
            return cmd_table(args, config)
        if args.command == "search":
            return cmd_search(args, config)
        return cmd_spectrum(args, config)
    except (InvalidInput, PeriodMismatch, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except VpalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
