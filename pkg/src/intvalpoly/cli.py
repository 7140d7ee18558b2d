"""Command-line front end.

Every subcommand parses its flags, calls one library function and renders the
result, either as JSON (``--json``) or as short human-readable text. Exit
status 0 means a result was computed, whatever the verdict; 2 means the input
was rejected.

Sets are comma-separated for ``zp`` (``--set 0,1,2``). For ``fqt`` an element
is itself a comma-separated digit list, so elements are separated by ``;``
(``--set "0;1;0,1"``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classifier import classify
from .dvr import DvrContext, format_class
from .equalizer import (
    SplitPolynomial,
    equalizing_polynomial,
    equalizing_polynomial_lcm,
    fixed_divisor_val,
)
from .exceptions import IntValPolyError
from .oracle import OracleConfig, oracle_check
from .orderings import generalized_binomial_check, greedy_p_ordering, min_pool_level
from .partition import associated_partition, enumerate_balanced, is_balanced


class InputError(Exception):
    pass


def make_context(args) -> DvrContext:
    try:
        return DvrContext(args.dvr, args.p, args.f)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_set(ctx: DvrContext, text: str) -> tuple:
    sep = "," if ctx.backend == "zp" else ";"
    parts = [t for t in text.split(sep)]
    if not text.strip() or any(not t.strip() for t in parts):
        raise InputError(f"empty element in set {text!r}")
    try:
        return tuple(ctx.parse(t) for t in parts)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad element in {text!r}: {exc}") from exc


def parse_ints(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _polynomial(ctx, args) -> SplitPolynomial:
    S = parse_set(ctx, args.set)
    mult = parse_ints(args.mult) if args.mult else (1,) * len(S)
    const_val = args.const_val if args.const_val is not None else fixed_divisor_val(ctx, S, mult)
    return SplitPolynomial(ctx, S, mult, const_val)


def _fmt_poly(poly: SplitPolynomial) -> str:
    ctx = poly.ctx
    factors = " ".join(
        f"(x - {ctx.format(s)})" + (f"^{h}" if h > 1 else "") for s, h in zip(poly.roots, poly.mult)
    )
    return f"{factors} / u^{poly.const_val}"


# -- subcommands ------------------------------------------------------------


def cmd_partition(ctx, args):
    P = associated_partition(ctx, parse_set(ctx, args.set))
    lines = [
        f"{format_class(ctx, b)}  rho={rho}  members={', '.join(ctx.format(t) for t in P.members(b))}"
        for (_, rho), b in zip(P.reps, P.blocks)
    ]
    return P.to_json(), "\n".join(lines)


def cmd_balanced(ctx, args):
    check = is_balanced(ctx, parse_set(ctx, args.set))
    text = "balanced" if check else f"not balanced (uncovered: {ctx.format(check.uncovered)})"
    return check.to_json(), text + f"\nisolating measure: {check.union.measure()}"


def cmd_equalize(ctx, args):
    S = parse_set(ctx, args.set)
    build = equalizing_polynomial_lcm if args.method == "lcm" else equalizing_polynomial
    poly = build(ctx, S)
    return poly.to_json(expanded=args.expand), _fmt_poly(poly)


def cmd_classify(ctx, args):
    report = classify(_polynomial(ctx, args))
    text = report.verdict.value
    if report.failed_condition is not None:
        text += f" ({report.failed_condition.value}: {json.dumps(report.witness)})"
    return report.to_json(), text


def cmd_oracle(ctx, args):
    result = oracle_check(_polynomial(ctx, args), OracleConfig(args.max_mult, args.max_power))
    text = f"{result.status} after {result.candidates} candidates"
    if result.witness is not None:
        text += f"\nwitness: {_fmt_poly(result.witness)}"
    return result.to_json(), text


def cmd_enumerate(ctx, args):
    sets = [
        [ctx.format(s) for s in S]
        for S in enumerate_balanced(ctx, args.max_level, args.max_size, least_only=args.least_only)
    ]
    sep = ", " if ctx.backend == "zp" else "; "
    return sets, "\n".join("{" + sep.join(S) + "}" for S in sets)


def cmd_pordering(ctx, args):
    level = args.pool_level if args.pool_level is not None else min_pool_level(ctx.q, args.length)
    ordering = greedy_p_ordering(ctx, args.length, level)
    text = "\n".join(f"a_{i} = {ctx.format(a)}  alpha = {al}" for i, (a, al) in enumerate(zip(ordering.seq, ordering.alpha)))
    return ordering.to_json(), text


def cmd_binom(ctx, args):
    report = generalized_binomial_check(ctx, args.n)
    return report.to_json(), f"{report.verdict.value}  const_val={report.polynomial.const_val}"


# -- argument parsing -------------------------------------------------------


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dvr", choices=("zp", "fqt"), default="zp", help="ring backend")
    common.add_argument("--p", type=int, default=2, help="residue characteristic")
    common.add_argument("--f", type=_positive, default=1, help="residue field degree (fqt only)")
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", action="store_true", help="emit JSON")
    mode.add_argument("--pretty", action="store_true", help="emit text (default)")

    parser = argparse.ArgumentParser(prog="intvalpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def with_set(p):
        p.add_argument("--set", required=True, help="root set")

    def with_poly(p):
        with_set(p)
        p.add_argument("--mult", help="multiplicities, aligned with --set (default all 1)")
        p.add_argument("--const-val", type=int, help="valuation of the denominator")

    with_set(add("partition", cmd_partition, "associated partition of a set"))
    with_set(add("balanced", cmd_balanced, "balancedness check"))

    p = add("equalize", cmd_equalize, "equalizing polynomial of a balanced set")
    with_set(p)
    p.add_argument("--method", choices=("linear", "lcm"), default="linear")
    p.add_argument("--expand", action="store_true", help="include coefficients (zp only)")

    p = add("classify", cmd_classify, "classify a split polynomial")
    with_poly(p)
    p.set_defaults(const_val=None)

    p = add("oracle", cmd_oracle, "bounded brute-force check")
    with_poly(p)
    p.add_argument("--max-mult", type=_positive, default=4)
    p.add_argument("--max-power", type=_positive, default=None)

    p = add("enumerate", cmd_enumerate, "balanced sets up to a level")
    p.add_argument("--max-level", type=_positive, required=True)
    p.add_argument("--max-size", type=_positive, default=64)
    p.add_argument("--least-only", action="store_true", help="one set per partition")

    p = add("pordering", cmd_pordering, "greedy P-ordering")
    p.add_argument("--length", type=_positive, required=True)
    p.add_argument("--pool-level", type=int, default=None)

    p = add("binom", cmd_binom, "generalized binomial check")
    p.add_argument("--n", type=_positive, required=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "classify" and args.const_val is None:
        parser.error("classify requires --const-val")
    try:
        ctx = make_context(args)
        data, text = args.func(ctx, args)
    except (InputError, IntValPolyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(json.dumps(data) if args.json else text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
