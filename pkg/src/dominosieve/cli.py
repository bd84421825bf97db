"""Command-line front end.

Exit codes: 0 success, 1 a verification reported a mismatch or failure,
2 invalid input. Counts are printed as decimal strings in JSON.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

from dominosieve.bijection import (
    catalan_composition_count,
    count_hook,
    count_rectangular,
    count_via_quotient,
    fibonacci_composition_count,
    gamma,
    two_quotient,
)
from dominosieve.combinatorics import binomial, fibonacci
from dominosieve.sieving import EXHAUSTIVE_CAP, conjecture_probe, orbits, verify_csp
from dominosieve.tableaux import (
    as_partition,
    count_tableaux,
    enumerate_tableaux,
    rectangle,
    tableau_from_json,
    tableau_to_json,
    validate,
)

FORMATS = ("json", "csv", "text")


class UsageError(Exception):
    pass


@dataclass
class Report:
    payload: dict
    columns: list[str]
    records: list[list]
    summary: list[tuple[str, str]] = field(default_factory=list)
    ok: bool = True
    blocks: list[str] = field(default_factory=list)  # free-form text output replacing the table


def serialize(report: Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.payload, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(report.columns)
        writer.writerows([[_cell(v) for v in rec] for rec in report.records])
        return buf.getvalue()
    if fmt == "text":
        lines = []
        if report.summary:
            width = max(len(k) for k, _ in report.summary)
            lines += [f"{k.ljust(width)}  {v}" for k, v in report.summary]
        if report.blocks:
            for block in report.blocks:
                lines += ["", block]
        elif report.records:
            if lines:
                lines.append("")
            table = [report.columns] + [[_cell(v) for v in rec] for rec in report.records]
            widths = [max(len(row[i]) for row in table) for i in range(len(report.columns))]
            for row in table:
                lines.append("  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip())
        return "\n".join(lines) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "-"
    return str(v)


# ---------------------------------------------------------------------------
# argument handling


def _parse_lambda(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(p) for p in text.split(","))
        return as_partition(parts)
    except ValueError as exc:
        raise UsageError(f"malformed partition {text!r}: {exc}") from None


def _parse_rect(text: str) -> tuple[int, int]:
    try:
        rows, cols = (int(x) for x in text.lower().split("x"))
    except ValueError:
        raise UsageError(f"malformed rectangle {text!r}; expected MxN") from None
    if rows < 1 or cols < 1:
        raise UsageError(f"rectangle dimensions must be positive: {text!r}")
    return rows, cols


def _shape(args) -> tuple[int, ...]:
    if args.rect is not None:
        rows, cols = _parse_rect(args.rect)
        shape = rectangle(rows, cols)
    elif args.lambda_ is not None:
        shape = _parse_lambda(args.lambda_)
    else:
        raise UsageError("one of --lambda or --rect is required")
    if sum(shape) % 2:
        raise UsageError(f"shape {shape} has odd size; domino tableaux need an even number of cells")
    return shape


def _closed_count(shape: tuple[int, ...]) -> tuple[int, str]:
    rows, cols = len(shape), shape[0] if shape else 0
    if shape and all(p == cols for p in shape):
        if rows % 2 == 0:
            return count_rectangular(rows // 2, cols), "rectangle"
        return count_rectangular(cols // 2, rows), "rectangle (transposed)"
    if shape and all(p == 1 for p in shape[1:]):
        return count_hook(shape[0], rows - 1), "hook"
    return count_via_quotient(shape), "2-quotient"


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dominosieve",
        description="Counting, bijections and cyclic sieving for domino tableaux.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")

    shaped = argparse.ArgumentParser(add_help=False)
    group = shaped.add_mutually_exclusive_group()
    group.add_argument("--lambda", dest="lambda_", metavar="PARTS", help="comma-separated parts, e.g. 5,5,3,3,2")
    group.add_argument("--rect", metavar="MxN", help="M rows of length N")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common, shaped], help="closed-form count of DT(shape)")
    p.add_argument("--brute", action="store_true", help="cross-check by exhaustive enumeration")

    p = sub.add_parser("enumerate", parents=[common, shaped], help="list the tableaux of a shape")
    p.add_argument("--limit", type=_nonnegative, metavar="L", help="print at most L tableaux")

    p = sub.add_parser("orbits", parents=[common], help="orbits of the cyclic action on DT(n^2)")
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("verify-csp", parents=[common], help="check the cyclic sieving identity on DT(n^2)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--cap", type=_nonnegative, default=EXHAUSTIVE_CAP,
                   help="largest n for which fixed points are counted by brute force")

    p = sub.add_parser("identities", parents=[common], help="Catalan and Fibonacci composition identities")
    p.add_argument("--n-max", type=_positive, default=12)

    p = sub.add_parser("gamma", parents=[common, shaped],
                       help="apply gamma to a tableau read as JSON from stdin, or picked by --index")
    p.add_argument("--index", type=_nonnegative, help="0-based position in the enumeration of the shape")

    p = sub.add_parser("conjecture", parents=[common], help="probe the candidate sieving polynomial for DT(n^(2k))")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--order", type=_positive, metavar="N", help="extra cyclic group order to test")
    return parser


# ---------------------------------------------------------------------------
# subcommands


def cmd_count(args, stdin) -> Report:
    shape = _shape(args)
    count, method = _closed_count(shape)
    payload = {"count": str(count)}
    columns, record = ["shape", "count"], [",".join(map(str, shape)), count]
    ok = True
    if args.brute:
        brute = count_tableaux(shape)
        ok = brute == count
        payload.update({"brute": str(brute), "match": ok})
        columns += ["brute", "match"]
        record += [brute, ok]
    summary = [("shape", str(list(shape))), ("method", method), ("count", str(count))]
    return Report(payload, columns, [record], summary, ok)


def cmd_enumerate(args, stdin) -> Report:
    shape = _shape(args)
    tableaux = enumerate_tableaux(shape)
    shown = tableaux if args.limit is None else tableaux[: args.limit]
    payload = {
        "shape": list(shape),
        "total": str(len(tableaux)),
        "tableaux": [tableau_to_json(t) for t in shown],
    }
    records = [
        [i, d.label, d.row, d.col, d.orient] for i, t in enumerate(shown) for d in t.dominoes
    ]
    summary = [("shape", str(list(shape))), ("total", str(len(tableaux))), ("shown", str(len(shown)))]
    return Report(payload, ["index", "label", "row", "col", "orient"], records, summary,
                  blocks=[str(t) for t in shown])


def cmd_orbits(args, stdin) -> Report:
    rep = orbits(args.n)
    records = [[o.size, o.word] for o in rep.orbits]
    summary = [("n", str(rep.n)), ("tableaux", str(rep.total)), ("orbits", str(len(rep.orbits)))]
    return Report(rep.to_json(), ["size", "representative"], records, summary)


def cmd_verify_csp(args, stdin) -> Report:
    rep = verify_csp(args.n, cap=args.cap)
    records = [[r.k, r.fixed, r.poly, r.closed, r.match] for r in rep.rows]
    summary = [("n", str(rep.n)), ("polynomial", repr(rep.polynomial)), ("verdict", rep.verdict)]
    return Report(rep.to_json(), ["k", "fixed", "poly", "closed", "match"], records, summary,
                  rep.verdict == "pass")


def cmd_identities(args, stdin) -> Report:
    rows = []
    for n in range(1, args.n_max + 1):
        central, cat_sum = binomial(n, n // 2), catalan_composition_count(n)
        fib, fib_sum = fibonacci(n), fibonacci_composition_count(n)
        status = "OK" if (central == cat_sum and fib == fib_sum) else "FAIL"
        rows.append([n, central, cat_sum, fib, fib_sum, status])
    payload = {
        "rows": [
            {"n": n, "binomial": str(b), "catalan_sum": str(c), "fibonacci": str(f),
             "fibonacci_sum": str(fs), "status": s}
            for n, b, c, f, fs, s in rows
        ],
        "verdict": "pass" if all(r[-1] == "OK" for r in rows) else "fail",
    }
    columns = ["n", "binomial", "catalan_sum", "fibonacci", "fibonacci_sum", "status"]
    return Report(payload, columns, rows, [], payload["verdict"] == "pass")


def cmd_gamma(args, stdin) -> Report:
    if args.index is not None:
        shape = _shape(args)
        tableaux = enumerate_tableaux(shape)
        if args.index >= len(tableaux):
            raise UsageError(f"index {args.index} out of range; DT{shape} has {len(tableaux)} elements")
        tableau = tableaux[args.index]
    else:
        if args.lambda_ is not None or args.rect is not None:
            raise UsageError("--lambda/--rect for gamma require --index")
        try:
            tableau = tableau_from_json(json.loads(stdin.read()))
        except (json.JSONDecodeError, ValueError) as exc:
            raise UsageError(f"could not read a tableau from standard input: {exc}") from None
        problems = validate(tableau)
        if problems:
            raise UsageError("input is not a domino tableau: " + "; ".join(problems))
    first, second = gamma(tableau)
    payload = {
        "tableau": tableau_to_json(tableau),
        "type_I": first.to_json(),
        "type_II": second.to_json(),
        "two_quotient": [list(p) for p in two_quotient(tableau.shape)],
    }
    records = [["I", i + 1, " ".join(map(str, row))] for i, row in enumerate(first.rows)]
    records += [["II", i + 1, " ".join(map(str, row))] for i, row in enumerate(second.rows)]
    return Report(payload, ["type", "row", "entries"], records,
                  [("shape", str(list(tableau.shape))),
                   ("type I shape", str(list(first.shape))),
                   ("type II shape", str(list(second.shape)))])


def cmd_conjecture(args, stdin) -> Report:
    probe = conjecture_probe(args.n, args.k, args.order)
    records = []
    for N in sorted(probe.reports):
        rep = probe.reports[N]
        for m, o in rep.orbit_counts.items():
            records.append([N, m, rep.fix[m], o, rep.verdict])
        if not rep.orbit_counts:
            records.append([N, None, None, None, f"{rep.verdict} ({rep.reason})"])
    summary = [
        ("shape", f"{2 * args.k}x{args.n}"),
        ("f(q)", repr(probe.f)),
        ("f(1)", str(probe.f_at_one)),
        ("count_rectangular", str(probe.expected_count)),
        ("nonnegative", str(probe.nonnegative).lower()),
    ]
    summary += [(f"order {N}", r.verdict if r.realizable else f"{r.verdict} ({r.reason})")
                for N, r in sorted(probe.reports.items())]
    return Report(probe.to_json(), ["order", "orbit_size", "fixed", "orbits", "verdict"], records,
                  summary, probe.ok)


COMMANDS = {
    "count": cmd_count,
    "enumerate": cmd_enumerate,
    "orbits": cmd_orbits,
    "verify-csp": cmd_verify_csp,
    "identities": cmd_identities,
    "gamma": cmd_gamma,
    "conjecture": cmd_conjecture,
}


def run(argv: Sequence[str], stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None,
        stderr: Optional[TextIO] = None) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report = COMMANDS[args.command](args, stdin)
        text = serialize(report, args.format)
    except (UsageError, ValueError) as exc:
        print(f"dominosieve {args.command}: error: {exc}", file=stderr)
        return 2
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"dominosieve {args.command}: error: {exc}", file=stderr)
            return 2
    else:
        stdout.write(text)
    return 0 if report.ok else 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
