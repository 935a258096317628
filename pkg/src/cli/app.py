#!/usr/bin/env python3
"""
Command-line front end: one subcommand per library operation plus the verification suites.
"""

import argparse
import json
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from ..algebraic import (
    AlgebraicReal,
    FieldElement,
    element_to_decimal,
    format_polynomial,
    format_rational,
    make_algebraic,
    parse_interval,
    parse_polynomial,
    parse_rational,
)
from ..bases import (
    FamilyId,
    FamilyVariant,
    enumerate_B2_window,
    family_has_root,
    family_polynomial,
    family_root,
    family_root_criterion,
    family_value,
    midpoint_base,
    p1,
    p2,
    q2,
    witness_sequences,
)
from ..config.env import get_settings
from ..counting import CountKind, construct_xk, count_certificate, count_expansions, xk_sequence
from ..errors import AlphaUndecided, HorizonExceeded, InputError, MultibaseError
from ..expansions import (
    BaseContext,
    evaluate,
    format_digits,
    format_word,
    in_unique_catalog,
    is_admissible_alpha,
    is_unique_expansion,
    parse_digits,
    quasi_greedy_alpha,
    unique_set_catalog,
)
from ..utils.logger import get_logger
from .models import (
    AlgebraicOut,
    AlphaOut,
    CatalogOut,
    ErrorOut,
    FamilyOut,
    FamilyReport,
    OutputFormat,
    UniqueOut,
    WitnessOut,
    XkOut,
)
from .verify import SUITES, run_suites

logger = get_logger(__name__)
settings = get_settings()

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VERIFY_FAILED = 2
EXIT_UNDECIDED = 3

NAMED_BASES: Dict[str, Callable[[int], AlgebraicReal]] = {
    "p1": p1,
    "p2": p2,
    "q2": q2,
    "mid": midpoint_base,
}


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises InputError instead of exiting."""

    def error(self, message: str):  # type: ignore[override]
        raise InputError(message)


# Input parsing
def _parse_int(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError as e:
        raise InputError(f"invalid {what} {text!r}") from e


def parse_base(text: str) -> AlgebraicReal:
    """Base spec: ``q2:M``, ``p1:M``, ``p2:M``, ``mid:M``, ``poly:<coeffs>@<lo>:<hi>`` or a rational."""
    raw = text.strip()
    if raw.startswith("poly:"):
        body = raw[len("poly:") :]
        if "@" not in body:
            raise InputError(f"invalid base {text!r}: expected poly:<coeffs>@<lo>:<hi>")
        coeffs, interval = body.split("@", 1)
        return make_algebraic(parse_polynomial(coeffs), parse_interval(interval))
    name, sep, rest = raw.partition(":")
    if sep and name in NAMED_BASES:
        return NAMED_BASES[name](_parse_int(rest, "M"))
    if sep:
        raise InputError(f"unknown base spec {text!r}")
    return AlgebraicReal.rational(parse_rational(raw))


def parse_point(text: str, ctx: BaseContext) -> FieldElement:
    """x as a rational, a digit sequence (evaluated) or ``elem:`` coefficients lowest first."""
    raw = text.strip()
    if raw.startswith("elem:"):
        coeffs = [parse_rational(c) for c in raw[len("elem:") :].split(",") if c.strip()]
        if not coeffs:
            raise InputError(f"invalid field element {text!r}")
        return ctx.field.element(coeffs)
    if "(" in raw:
        return evaluate(parse_digits(raw, ctx.M), ctx)
    return ctx.element(parse_rational(raw))


def _context(args: argparse.Namespace) -> BaseContext:
    return BaseContext.create(args.M, parse_base(args.base))


def _element_coefficients(e: FieldElement) -> List[str]:
    return [format_rational(c) for c in e.coeffs]


# Commands; each returns (payload, undecided)
Outcome = Tuple[Any, bool]


def cmd_constant(args: argparse.Namespace) -> Outcome:
    value = NAMED_BASES[args.command](args.M)
    return AlgebraicOut.of(value, args.digits), False


def cmd_alpha(args: argparse.Namespace) -> Outcome:
    ctx = _context(args)
    base = AlgebraicOut.of(ctx.q, args.digits)
    try:
        alpha = quasi_greedy_alpha(ctx, args.horizon)
    except HorizonExceeded as e:
        prefix = format_word(e.prefix, args.M)
        return AlphaOut(M=args.M, base=base, decided=False, prefix=prefix), True
    return (
        AlphaOut(
            M=args.M,
            base=base,
            decided=True,
            alpha=format_digits(alpha, args.M),
            admissible=is_admissible_alpha(alpha),
        ),
        False,
    )


def cmd_unique(args: argparse.Namespace) -> Outcome:
    ctx = _context(args)
    seq = parse_digits(args.seq, args.M)
    out = UniqueOut(
        M=args.M,
        base=AlgebraicOut.of(ctx.q, args.digits),
        seq=format_digits(seq, args.M),
        decided=True,
        in_catalog=in_unique_catalog(seq, ctx.alphabet),
    )
    try:
        out.unique = is_unique_expansion(seq, ctx, horizon=args.horizon)
    except AlphaUndecided as e:
        out.decided = False
        prefix = e.details.get("prefix")
        out.alpha_prefix = format_word(prefix, args.M) if prefix else None
        return out, True
    return out, False


def cmd_catalog(args: argparse.Namespace) -> Outcome:
    ctx = _context(args)
    sequences = unique_set_catalog(ctx, args.max_preperiod)
    return (
        CatalogOut(
            M=args.M,
            base=AlgebraicOut.of(ctx.q, args.digits),
            max_preperiod=args.max_preperiod,
            sequences=[format_digits(seq, args.M) for seq in sequences],
        ),
        False,
    )


def cmd_family(args: argparse.Namespace) -> Outcome:
    family = FamilyId(FamilyVariant(args.variant), args.k, args.j, args.u, args.v)
    family.validate(args.M)
    left, right = witness_sequences(family, args.M)
    report = FamilyReport(
        M=args.M,
        family=FamilyOut.of(family),
        polynomial=format_polynomial(family_polynomial(family, args.M)),
        left=format_digits(left, args.M),
        right=format_digits(right, args.M),
        has_root=family_has_root(family, args.M),
        criterion=family_root_criterion(family, args.M),
    )
    if args.root:
        report.root = AlgebraicOut.of(family_root(family, args.M), args.digits)
    if args.value_at is not None:
        q = parse_base(args.value_at)
        value = family_value(family, args.M, q.lo if q.is_exact_rational else q)
        if isinstance(value, FieldElement):
            report.value_at = {
                "q": args.value_at,
                "coeffs": _element_coefficients(value),
                "sign": value.sign(),
                "decimal": element_to_decimal(value, args.digits),
            }
        else:
            report.value_at = {"q": args.value_at, "value": format_rational(value)}
    return report, False


def cmd_enumerate_b2(args: argparse.Namespace) -> Outcome:
    witnesses = enumerate_B2_window(args.M, args.sweep_k)
    return {
        "M": args.M,
        "witnesses": [WitnessOut.of(w, args.M, args.digits).model_dump() for w in witnesses],
    }, False


def cmd_count(args: argparse.Namespace) -> Outcome:
    ctx = _context(args)
    x = parse_point(args.x, ctx)
    result = count_expansions(x, ctx, args.depth, args.branches)
    certificate = count_certificate(result, x, ctx, label=args.x)
    certificate["result"]["summary"] = result.summary()
    return certificate, result.kind == CountKind.UNDECIDED


def cmd_construct_xk(args: argparse.Namespace) -> Outcome:
    x, ctx = construct_xk(args.k)
    result = count_expansions(x, ctx, args.depth)
    seq = xk_sequence(args.k)
    out = XkOut(
        k=args.k,
        sequence=format_digits(seq, ctx.M),
        x=_element_coefficients(x),
        decimal=element_to_decimal(x, args.digits),
        certificate=count_certificate(result, x, ctx, label=format_digits(seq, ctx.M)),
    )
    return out, result.kind == CountKind.UNDECIDED


def cmd_verify(args: argparse.Namespace) -> Outcome:
    reports = run_suites(args.suite)
    args.verify_failed = not all(report.passed for report in reports)
    return {"passed": not args.verify_failed, "suites": [r.model_dump() for r in reports]}, False


# Parser
def _shared_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a subcommand's defaults from overwriting options given before it
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=[f.value for f in OutputFormat], default=argparse.SUPPRESS)
    shared.add_argument("--digits", type=int, default=argparse.SUPPRESS)
    shared.add_argument("--require-exact", action="store_true", default=argparse.SUPPRESS)
    return shared


def build_parser() -> CommandParser:
    shared = _shared_options()
    parser = CommandParser(
        prog="multibase",
        description="Exact expansions in non-integer bases over the alphabet {0..M}",
        parents=[shared],
    )
    commands = parser.add_subparsers(dest="command", parser_class=CommandParser)
    commands.required = True

    def add(name: str, handler: Callable[[argparse.Namespace], Outcome], help_text: str):
        sub = commands.add_parser(name, help=help_text, parents=[shared])
        sub.set_defaults(handler=handler)
        return sub

    for name, help_text in (
        ("p1", "generalized golden ratio p1(M)"),
        ("p2", "second critical base p2(M)"),
        ("q2", "smallest base of B2(M)"),
    ):
        add(name, cmd_constant, help_text).add_argument("--M", type=int, required=True)

    sub = add("alpha", cmd_alpha, "quasi-greedy expansion of 1")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--base", required=True)
    sub.add_argument("--horizon", type=int, default=None)

    sub = add("unique", cmd_unique, "test whether a sequence is a unique expansion")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--base", required=True)
    sub.add_argument("--seq", required=True)
    sub.add_argument("--horizon", type=int, default=None)

    sub = add("catalog", cmd_catalog, "unique expansions for p1 < q <= p2")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--base", required=True)
    sub.add_argument("--max-preperiod", type=int, default=4)

    sub = add("family", cmd_family, "two-expansion family polynomial and root")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--variant", choices=[v.value for v in FamilyVariant], required=True)
    for name in ("--k", "--j", "--u", "--v"):
        sub.add_argument(name, type=int, required=True)
    sub.add_argument("--root", action="store_true")
    sub.add_argument("--value-at", default=None)

    sub = add("enumerate-b2", cmd_enumerate_b2, "bases of B2(M) in (p1, p2]")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--sweep-k", type=int, default=None)

    sub = add("count", cmd_count, "count the expansions of x")
    sub.add_argument("--M", type=int, required=True)
    sub.add_argument("--base", required=True)
    sub.add_argument("--x", required=True)
    sub.add_argument("--depth", type=int, default=None)
    sub.add_argument("--branches", type=int, default=None)

    sub = add("construct-xk", cmd_construct_xk, "point with exactly k expansions for M = 2")
    sub.add_argument("--k", type=int, required=True)
    sub.add_argument("--depth", type=int, default=None)

    sub = add("verify", cmd_verify, "run verification suites")
    sub.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")

    return parser


# Output
def _render_text(payload: Any, indent: int = 0) -> List[str]:
    pad = "  " * indent
    if isinstance(payload, dict):
        lines = []
        for key, value in payload.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.extend(_render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
        return lines
    if isinstance(payload, list):
        lines = []
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
        return lines
    return [f"{pad}{_scalar(payload)}"]


def _scalar(value: Any) -> str:
    if isinstance(value, list) and not value:
        return "[]"
    if isinstance(value, dict) and not value:
        return "{}"
    if value is None:
        return "-"
    return str(value)


def emit(payload: Any, output_format: str, stream=None) -> None:
    stream = stream or sys.stdout
    if hasattr(payload, "model_dump"):
        payload = payload.model_dump(mode="json")
    if output_format == OutputFormat.TEXT.value:
        stream.write("\n".join(_render_text(payload)) + "\n")
    else:
        stream.write(json.dumps(payload, indent=2) + "\n")


def run(argv: Optional[Sequence[str]] = None, stream=None) -> int:
    """Parse ``argv``, run the command and print its result; returns the exit code."""
    stream = stream or sys.stdout
    output_format = OutputFormat.JSON.value
    try:
        args = build_parser().parse_args(list(argv) if argv is not None else None)
        output_format = getattr(args, "format", output_format)
        args.digits = getattr(args, "digits", settings.MULTIBASE_DIGITS)
        if args.digits < 0:
            raise InputError(f"--digits must be non-negative, got {args.digits}")
        require_exact = getattr(args, "require_exact", False)
        args.verify_failed = False

        logger.info(f"command {args.command}")
        payload, undecided = args.handler(args)
        emit(payload, output_format, stream)
    except MultibaseError as e:
        logger.error(f"command failed: {e.code}: {e.message}")
        emit(ErrorOut(error=e.to_dict()), output_format, stream)
        return EXIT_ERROR
    except ValidationError as e:
        logger.error(f"invalid input: {e}")
        emit(ErrorOut(error={"code": "validation_error", "message": str(e)}), output_format, stream)
        return EXIT_ERROR

    if args.verify_failed:
        return EXIT_VERIFY_FAILED
    if undecided and require_exact:
        return EXIT_UNDECIDED
    return EXIT_OK


def main() -> None:
    """Console script entry point."""
    sys.exit(run())
