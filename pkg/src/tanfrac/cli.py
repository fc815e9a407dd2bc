"""Command-line harness: run the identity suite or compute single values.

    tanfrac suite [--identity PATTERN] [--format json|csv] [--output PATH]
    tanfrac compute pi
    tanfrac compute euler_number 19
    tanfrac compute hurwitz 3 1/4
    tanfrac compute series odd_partial_fraction --x pi/4

Exit codes: 0 when no identity mismatches, 1 when any identity reports
`mismatch`, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__, contfrac, numbers, series, taylor
from .precision import PrecisionPolicy, Real, const_pi, eval_elementary
from .suite import IdentityReport, UsageError, run_suite

SERIES_NAMES = (
    "odd_partial_fraction",
    "power_partial_fraction",
    "odd_power_difference",
    "tanh_tan_difference",
    "pi_squared",
    "leibniz_tail",
    "telescoping_third",
    "cos_product",
    "log_cosh",
    "tanh",
)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def parse_x_argument(text: str) -> tuple[Fraction, bool]:
    """Parse '1/3', 'pi', 'pi/4', '3pi/4', '-pi/6' into (coefficient, is_pi).

    Rational multiples of pi stay exact so substitution points like pi/4
    lose no precision.
    """
    s = text.strip().lower().replace(" ", "").replace("*", "")
    if "pi" not in s:
        return _parse_fraction(s), False
    head, _, tail = s.partition("pi")
    coeff = Fraction(1)
    if head in ("", "+"):
        pass
    elif head == "-":
        coeff = Fraction(-1)
    else:
        coeff = _parse_fraction(head.rstrip("/") if head.endswith("/") else head)
    if tail:
        if not tail.startswith("/"):
            raise UsageError(f"cannot parse point {text!r}")
        coeff /= _parse_fraction(tail[1:])
    return coeff, True


def _x_to_real(text: str, policy: PrecisionPolicy) -> Real:
    coeff, is_pi = parse_x_argument(text)
    if is_pi:
        return const_pi(policy) * coeff
    return Real.from_rational(coeff, policy.working_bits)


def _policy_from(args) -> PrecisionPolicy:
    tolerance = Fraction(1, 10**30)
    if args.tolerance is not None:
        try:
            tolerance = Fraction(args.tolerance)
        except (ValueError, ZeroDivisionError):
            # decimal strings like 1e-25 are handled through mpq-free parsing
            try:
                mant, _, expo = args.tolerance.lower().partition("e")
                tolerance = Fraction(mant) * Fraction(10) ** int(expo or 0)
            except ValueError as exc:
                raise UsageError(f"bad tolerance: {args.tolerance!r}") from exc
        if tolerance <= 0:
            raise UsageError("tolerance must be positive")
    return PrecisionPolicy(args.precision_bits, tolerance)


def _emit(text: str, path: str | None):
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _render_reports(reports: list[IdentityReport], policy, depth, fmt: str) -> str:
    if fmt == "csv":
        lines = [IdentityReport.CSV_HEADER]
        lines.extend(r.to_csv_row() for r in reports)
        return "\n".join(lines)
    payload = {
        "version": __version__,
        "policy": {
            "precision_bits": policy.working_bits,
            "tolerance": f"{float(policy.target_tolerance):.2e}",
            "depth": depth,
        },
        "reports": [r.to_json_dict() for r in reports],
    }
    return json.dumps(payload, indent=2)


def _cmd_suite(args) -> int:
    policy = _policy_from(args)
    reports = run_suite(args.identity, policy, args.depth)
    _emit(_render_reports(reports, policy, args.depth, args.format), args.output)
    return 1 if any(r.status == "mismatch" for r in reports) else 0


def _describe(value: Real, provenance: str) -> str:
    return (
        f"value  {value.decimal(50)}\n"
        f"radius {value.radius_decimal()}\n"
        f"{provenance}"
    )


def _cmd_compute(args) -> int:
    policy = _policy_from(args)
    target = args.target
    params = list(args.params)

    def need(count: int, usage: str):
        if len(params) != count:
            raise UsageError(f"usage: compute {target} {usage}")

    if target == "pi":
        need(0, "")
        out = _describe(const_pi(policy), f"provenance machin-arctangent, {policy.working_bits} bits")
    elif target == "quarter_pi_cf":
        need(0, "")
        value, seq = contfrac.eval_gcf(contfrac.cf_quarter_pi_thm21(), args.depth, policy)
        out = _describe(
            value,
            f"provenance continued-fraction depth {args.depth}, "
            f"radius is the last convergent gap (heuristic), "
            f"{len(seq.singular)} singular convergents",
        )
    elif target == "euler_number":
        need(1, "N")
        out = str(numbers.euler(int(params[0])))
    elif target == "bernoulli":
        need(1, "N")
        out = str(numbers.bernoulli(int(params[0])))
    elif target == "zeta2n":
        need(1, "N")
        out = _describe(
            numbers.zeta_even(int(params[0]), policy),
            "provenance bernoulli closed form",
        )
    elif target == "hurwitz":
        need(2, "S A")
        value = numbers.hurwitz_zeta(int(params[0]), _parse_fraction(params[1]), policy)
        out = _describe(value, "provenance euler-maclaurin")
    elif target == "series":
        out = _compute_series(params, args, policy)
    else:
        raise UsageError(f"unknown compute target: {target!r}")
    _emit(out, args.output)
    return 0


def _compute_series(params: list, args, policy: PrecisionPolicy) -> str:
    if not params:
        raise UsageError(f"usage: compute series NAME; names: {', '.join(SERIES_NAMES)}")
    name = params[0]
    if name not in SERIES_NAMES:
        raise UsageError(f"unknown series {name!r}; names: {', '.join(SERIES_NAMES)}")
    x = _x_to_real(args.x, policy) if args.x is not None else None

    def need_x():
        if x is None:
            raise UsageError(f"series {name} needs --x")

    if name == "telescoping_third":
        return str(series.telescoping_third())
    if name == "leibniz_tail":
        value = series.leibniz_tail_sum(policy)
        return _describe(value, "provenance zeta-accelerated pairing")
    if name == "pi_squared":
        result = series.pi_squared_series(args.n if args.n is not None else 0, policy)
        return _describe(
            result.value,
            f"provenance {result.strategy}, {result.terms_used} terms",
        )
    if name == "tanh":
        need_x()
        value = series.tanh_series(x, policy)
        return _describe(value, "provenance odd euler-number power series")
    if name == "log_cosh":
        need_x()
        method = args.method or "product-log"
        result = series.log_cosh(x, method, policy)
        return _describe(
            result.value,
            f"provenance {method} ({result.strategy}), {result.terms_used} terms",
        )
    if name == "cos_product":
        need_x()
        variant = args.variant or "cos"
        result = series.cos_product(x, variant, policy)
        return _describe(
            result.value,
            f"provenance {variant} product ({result.strategy}), {result.terms_used} factors",
        )
    need_x()
    if name == "odd_partial_fraction":
        result = series.odd_partial_fraction_sum(x, policy)
    elif name == "power_partial_fraction":
        result = series.power_partial_fraction_sum(
            x, args.n if args.n is not None else 1, policy
        )
    elif name == "odd_power_difference":
        result = series.odd_power_difference_sum(
            x, args.n if args.n is not None else 1, policy
        )
    else:
        result = series.tanh_tan_difference_sum(x, policy)
    return _describe(
        result.value,
        f"provenance {result.strategy}, {result.terms_used} terms, "
        f"tail bound {result.tail_bound.decimal(4)}",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tanfrac",
        description="Verify tangent partial-fraction identities, number tables, "
        "and continued fractions for pi in rigorous ball arithmetic.",
    )
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--precision-bits", type=int, default=256)
    shared.add_argument("--tolerance", default=None, help="decimal, default 1e-30")
    shared.add_argument("--depth", type=int, default=10_000, help="continued-fraction depth cap")
    shared.add_argument("--format", choices=("json", "csv"), default="json")
    shared.add_argument("--output", default=None, help="write to file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)
    p_suite = sub.add_parser("suite", parents=[shared], help="run the identity suite")
    p_suite.add_argument("--identity", default=None, help="id pattern (fnmatch or substring)")
    p_comp = sub.add_parser("compute", parents=[shared], help="compute one value")
    p_comp.add_argument(
        "target",
        choices=("pi", "quarter_pi_cf", "euler_number", "bernoulli", "zeta2n", "hurwitz", "series"),
    )
    p_comp.add_argument("params", nargs="*")
    p_comp.add_argument("--x", default=None, help="evaluation point, e.g. 1/3 or pi/4")
    p_comp.add_argument("--n", type=int, default=None)
    p_comp.add_argument("--method", default=None, choices=series.LOG_COSH_METHODS)
    p_comp.add_argument("--variant", default=None, choices=series.PRODUCT_VARIANTS)
    return parser


def main(argv: list | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "suite":
            return _cmd_suite(args)
        return _cmd_compute(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
