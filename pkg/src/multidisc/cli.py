"""Command-line interface.

Coefficients are entered highest power first ("1,-5,7,1,-8,4" is
x^5 - 5x^4 + 7x^3 + x^2 - 8x + 4); each entry is an integer or a rational
written p/q.  Exit codes: 0 success, 1 selftest property violation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .classify import classify_trace, conditions, trace_json_dict
from .degrees import degree_table_csv
from .engine import (
    SYMBOLIC_CAP_DEFAULT,
    build_matrix,
    build_symbolic_matrix,
    disc_symbolic,
    disc_value,
)
from .partitions import conjugate, lex_compare, partitions_of
from .roots import expand, random_root_spec, squarefree_multiplicity
from .unipoly import UniPoly


class CliError(Exception):
    """Bad user input; reported on stderr with exit code 2."""


def _json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def parse_coeffs(text: str) -> UniPoly:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) < 2:
        raise CliError("need at least two coefficients (degree >= 1)")
    values = []
    for part in parts:
        try:
            values.append(Fraction(part))
        except (ValueError, ZeroDivisionError):
            raise CliError(f"malformed rational {part!r}") from None
    if not values[0]:
        raise CliError("leading coefficient is zero")
    return UniPoly.from_descending(values)


def parse_gamma(text: str, n: int) -> tuple[int, ...]:
    try:
        gamma = tuple(int(p.strip()) for p in text.split(","))
    except ValueError:
        raise CliError(f"malformed partition {text!r}") from None
    if sum(gamma) != n or any(g < 1 for g in gamma) or list(gamma) != sorted(gamma, reverse=True):
        raise CliError(f"{text!r} is not a partition of {n}")
    return gamma


def _format_partition(parts) -> str:
    return ",".join(str(p) for p in parts)


def _cmd_classify(args) -> int:
    if args.file:
        lines = []
        try:
            with open(args.file, encoding="utf-8") as handle:
                lines = [line.strip() for line in handle]
        except OSError as exc:
            raise CliError(f"cannot read {args.file}: {exc}") from None
        for lineno, line in enumerate(lines, start=1):
            if not line:
                continue
            try:
                poly = parse_coeffs(line)
            except CliError as exc:
                raise CliError(f"line {lineno}: {exc}") from None
            trace = classify_trace(poly)
            if args.json:
                print(_json_dumps(trace_json_dict(poly, trace)))
            else:
                print(_format_partition(trace.result))
        return 0

    poly = parse_coeffs(args.coeffs)
    trace = classify_trace(poly)
    if args.json:
        print(_json_dumps(trace_json_dict(poly, trace)))
        return 0
    if args.trace:
        for step in trace.steps:
            tag = f"{step.value} (nonzero)" if step.nonzero else "0"
            print(f"D({_format_partition(step.gamma)}) = {tag}")
    print(_format_partition(trace.result))
    return 0


def _cmd_discriminant(args) -> int:
    try:
        n = int(args.n)
    except ValueError:
        raise CliError(f"bad degree {args.n!r}") from None
    if n < 1:
        raise CliError("degree must be at least 1")
    gamma = parse_gamma(args.gamma, n)
    poly = None
    if args.coeffs:
        poly = parse_coeffs(args.coeffs)
        if poly.degree != n:
            raise CliError(f"coefficients give degree {poly.degree}, expected {n}")

    if args.format == "value":
        if poly is None:
            raise CliError("--format value requires --coeffs")
        print(str(disc_value(poly, gamma).value))
        return 0
    if args.format == "poly":
        try:
            result = disc_symbolic(n, gamma, cap=args.cap)
        except ValueError as exc:
            raise CliError(str(exc)) from None
        print(str(result.value))
        return 0
    matrix = build_matrix(poly, gamma) if poly is not None else build_symbolic_matrix(n, gamma)
    if args.format == "latex":
        print(matrix.to_latex())
    else:
        print(_json_dumps(matrix.to_json_dict()))
    return 0


def _cmd_conditions(args) -> int:
    if args.n < 1:
        raise CliError("n must be at least 1")
    table = conditions(args.n)
    if args.json:
        payload = [
            {
                "mu": list(mu),
                "zero": [list(g) for g in zero],
                "nonzero": list(nonzero),
            }
            for mu, zero, nonzero in table
        ]
        print(_json_dumps(payload))
        return 0
    for mu, zero, nonzero in table:
        clauses = [f"D({_format_partition(g)}) = 0" for g in zero]
        clauses.append(f"D({_format_partition(nonzero)}) != 0")
        print(f"mult = ({_format_partition(mu)})  iff  " + " and ".join(clauses))
    return 0


def _cmd_degree_table(args) -> int:
    if args.max_n < 3:
        raise CliError("--max-n must be at least 3")
    sys.stdout.write(degree_table_csv(args.max_n))
    return 0


def run_selftest(max_n: int, trials: int, seed: int, quiet: bool = False) -> tuple[int, list[str]]:
    """Oracle-equivalence and vanishing sweeps over seeded random root specs.

    Returns (number of properties checked, failure descriptions).
    """
    rng = random.Random(seed)
    checked = 0
    failures: list[str] = []

    def check(ok: bool, message: str) -> None:
        nonlocal checked
        checked += 1
        if not ok:
            failures.append(message)

    for n in range(1, max_n + 1):
        partitions = partitions_of(n)
        for mu in partitions:
            for trial in range(trials):
                spec = random_root_spec(rng, mu)
                poly = expand(spec)
                label = f"n={n} mu={mu} trial={trial}"
                check(
                    squarefree_multiplicity(poly) == mu,
                    f"{label}: squarefree oracle disagrees",
                )
                trace = classify_trace(poly)
                check(trace.result == mu, f"{label}: classified as {trace.result}")
                bar_mu = conjugate(mu)
                for lam in partitions:
                    cmp = lex_compare(lam, bar_mu)
                    if cmp > 0:
                        check(
                            disc_value(poly, lam).value == 0,
                            f"{label}: D({lam}) expected to vanish",
                        )
                    elif cmp == 0:
                        check(
                            disc_value(poly, lam).value != 0,
                            f"{label}: D({lam}) expected nonzero",
                        )
        if not quiet:
            print(f"selftest: degree {n} done", file=sys.stderr)
    return checked, failures


def _cmd_selftest(args) -> int:
    checked, failures = run_selftest(args.max_n, args.trials, args.seed, quiet=args.quiet)
    for failure in failures[:20]:
        print(f"FAIL {failure}")
    if failures:
        print(f"FAIL: {checked} properties, {len(failures)} failures")
        return 1
    print(f"OK: {checked} properties, 0 failures")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON output")
    common.add_argument("--quiet", action="store_true", help="suppress progress chatter")

    parser = argparse.ArgumentParser(
        prog="multidisc",
        description="Classify the complex-root multiplicity structure of a "
        "univariate polynomial in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "classify",
        parents=[common],
        help="multiplicity vector of a polynomial",
        description="Coefficients are given highest power first.",
    )
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", help='coefficient list, e.g. "1,-5,7,1,-8,4"')
    group.add_argument("--file", help="batch mode: one coefficient list per line")
    p.add_argument("--trace", action="store_true", help="print the full discriminant chain")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser(
        "discriminant",
        parents=[common],
        help="one discriminant: matrix, LaTeX, parametric polynomial, or value",
    )
    p.add_argument("--n", required=True, help="polynomial degree")
    p.add_argument("--gamma", required=True, help='partition of n, e.g. "3,2"')
    p.add_argument(
        "--format",
        required=True,
        choices=["matrix", "latex", "poly", "value"],
        help="output representation",
    )
    p.add_argument("--coeffs", help="concrete coefficients (required for value)")
    p.add_argument(
        "--cap",
        type=int,
        default=SYMBOLIC_CAP_DEFAULT,
        help=f"symbolic degree cap for --format poly (default {SYMBOLIC_CAP_DEFAULT})",
    )
    p.set_defaults(func=_cmd_discriminant)

    p = sub.add_parser(
        "conditions",
        parents=[common],
        help="equality/inequation table for every multiplicity vector",
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_conditions)

    p = sub.add_parser("degree-table", parents=[common], help="CSV of worst-case degrees")
    p.add_argument("--max-n", type=int, default=9)
    p.set_defaults(func=_cmd_degree_table)

    p = sub.add_parser(
        "selftest",
        parents=[common],
        help="run the randomized verification sweeps",
    )
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--trials", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
