"""Command-line front end.

Usage::

    maxarc denniston --m 5 --s 3 --modulus 37
    maxarc pg3 --m 5 --h 1 --format markdown
    maxarc charsum --m 5 --h 1
    maxarc charsum --m 5 --h 1 --s 3
    maxarc verify-paper
    maxarc dump-arc --family pg3 --m 4 --h 1
    maxarc sweep --family denniston --m-values 4,5

Exit codes: 0 on success, 1 on invalid parameters or an unwritable output path, 2 when a theorem,
example or character-sum check fails.
"""
import argparse
import copy
import json
import logging
import sys
from collections import OrderedDict
from math import gcd

from maxarc import __version__
from maxarc.analysis import denniston_report, pg3_report, paper_example_suite, denniston_sweep, pg3_sweep
from maxarc.arcs import DennistonSpec, PG3ArcSpec, denniston_arc, pg3_arc
from maxarc.charsum import coulter_sweep, denniston_count_iff, pg3_count_identity
from maxarc.constants import (
    MIN_FIELD_DEGREE,
    MAX_FIELD_DEGREE,
    FIELD_DEGREE_MSG,
    DEFAULT_APPLIED_MSG,
    THEOREM_DISABLED_MSG,
    DENNISTON_SWEEP_DEFAULT_M,
    PG3_SWEEP_DEFAULT_M,
)
from maxarc.errors import CliUsageError, MaxArcError
from maxarc.gf2m import build_field, smallest_irreducible, gf2_independent
from maxarc.helpers import resolve_budget, resolve_threads
from maxarc.models import CodeFamily, Diagnostic, OutputFormat

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFICATION_FAILED = 2

DENNISTON = "denniston"
PG3 = "pg3"
CHARSUM = "charsum"
VERIFY_PAPER = "verify-paper"
DUMP_ARC = "dump-arc"
SWEEP = "sweep"
SUBCOMMANDS = (DENNISTON, PG3, CHARSUM, VERIFY_PAPER, DUMP_ARC, SWEEP)


class CliConfig(object):
    """Parsed command-line options.

    Every field defaults to None (or the documented default) so configs can be built directly in code.
    :func:`validate` returns a normalized copy with defaults filled in and ``ctx`` built.
    """

    FIELDS = OrderedDict([
        ("subcommand", None),
        ("m", None),
        ("s", None),
        ("h", None),
        ("modulus", None),
        ("beta", None),
        ("basis", None),
        ("family", None),
        ("m_values", None),
        ("budget", None),
        ("threads", None),
        ("output", None),
        ("format", OutputFormat.JSON.value),
        ("timing", False),
        ("verbose", 0),
    ])

    def __init__(self, **kwargs):
        unknown = set(kwargs) - set(self.FIELDS)
        if unknown:
            raise TypeError("Unknown config fields: {}".format(", ".join(sorted(unknown))))
        for name, default in self.FIELDS.items():
            setattr(self, name, kwargs.get(name, default))
        self.ctx = None

    @classmethod
    def from_namespace(cls, namespace):
        return cls(**{name: getattr(namespace, name) for name in cls.FIELDS if hasattr(namespace, name)})

    def __repr__(self):
        return "CliConfig({})".format(", ".join(
            "{}={!r}".format(name, getattr(self, name)) for name in self.FIELDS if getattr(self, name) is not None))


class _Diagnostics(object):
    def __init__(self):
        self.items = []

    def error(self, message):
        self.items.append(Diagnostic(Diagnostic.ERROR, message))

    def note(self, message):
        self.items.append(Diagnostic(Diagnostic.NOTE, message))


def _arc_family(config):
    if config.subcommand == DENNISTON:
        return CodeFamily.DENNISTON
    if config.subcommand in (PG3, CHARSUM):
        return CodeFamily.PG3
    if config.subcommand == DUMP_ARC and config.family is not None:
        return CodeFamily.from_string(config.family)
    return None


def _validate_field(config, diagnostics):
    if config.m is None:
        diagnostics.error("--m is required for {}".format(config.subcommand))
        return
    if not MIN_FIELD_DEGREE <= config.m <= MAX_FIELD_DEGREE:
        diagnostics.error(FIELD_DEGREE_MSG.format(config.m, MIN_FIELD_DEGREE, MAX_FIELD_DEGREE))
        return
    if config.modulus is None:
        config.modulus = smallest_irreducible(config.m)
        diagnostics.note(DEFAULT_APPLIED_MSG.format("modulus", config.modulus))
    try:
        config.ctx = build_field(config.m, config.modulus)
    except MaxArcError as e:
        diagnostics.error(str(e))


def _validate_denniston(config, diagnostics):
    m, s, ctx = config.m, config.s, config.ctx
    if s is None:
        diagnostics.error("--s is required for the denniston family")
        return
    if m is not None and s >= m:
        diagnostics.error("s={} >= m={}: the subgroup would be the whole field".format(s, m))
    elif s < 1:
        diagnostics.error("s={} must be at least 1".format(s))
    elif s == 1:
        diagnostics.note(THEOREM_DISABLED_MSG.format(s, m))
    if ctx is None:
        return
    if config.beta is None:
        config.beta = ctx.default_beta()
        diagnostics.note(DEFAULT_APPLIED_MSG.format("beta", config.beta))
    elif not 0 < config.beta < ctx.q or not ctx.quadratic_irreducible(config.beta):
        diagnostics.error("beta={}: x^2 + beta*x + 1 is reducible over GF(2^{})".format(config.beta, m))
    if config.basis is None:
        if 1 <= s < m:
            config.basis = ctx.polynomial_basis()[:s]
            diagnostics.note(DEFAULT_APPLIED_MSG.format("subgroup basis", config.basis))
    elif len(config.basis) != s:
        diagnostics.error("--basis has {} elements, s={} needs {}".format(len(config.basis), s, s))
    elif any(not 0 < b < ctx.q for b in config.basis) or not gf2_independent(config.basis):
        diagnostics.error("--basis {} is not GF(2)-independent in GF(2^{})".format(config.basis, m))


def _validate_exponent(config, diagnostics):
    if config.h is None:
        diagnostics.error("--h is required for {}".format(config.subcommand))
        return
    if config.h < 1:
        diagnostics.error("h={} must be at least 1".format(config.h))
    elif config.m is not None and config.subcommand != CHARSUM and gcd(config.m, config.h) != 1:
        diagnostics.error("gcd(m={}, h={}) = {} but the arc requires gcd 1".format(
            config.m, config.h, gcd(config.m, config.h)))


def validate(config):
    """Fill defaults and check every option against the target operation's preconditions.

    All violations are collected; nothing is raised.

    Args:
        config (CliConfig): The parsed options.

    Returns:
        tuple[CliConfig, list[maxarc.models.Diagnostic]]: A normalized copy and the notes and errors found.
    """
    config = copy.copy(config)
    diagnostics = _Diagnostics()
    if config.subcommand not in SUBCOMMANDS:
        diagnostics.error("Unknown subcommand: {}".format(config.subcommand))
        return config, diagnostics.items
    try:
        config.format = OutputFormat.from_string(config.format or OutputFormat.JSON.value).value
    except MaxArcError as e:
        diagnostics.error(str(e))
    try:
        config.budget = resolve_budget(config.budget)
        config.threads = resolve_threads(config.threads)
    except MaxArcError as e:
        diagnostics.error(str(e))
    if config.subcommand in (DUMP_ARC, SWEEP) and config.family is None:
        diagnostics.error("--family is required for {}".format(config.subcommand))
        return config, diagnostics.items
    try:
        family = _arc_family(config)
        if config.subcommand == SWEEP:
            CodeFamily.from_string(config.family)
    except MaxArcError as e:
        diagnostics.error(str(e))
        return config, diagnostics.items
    if family is not None:
        _validate_field(config, diagnostics)
        if family is CodeFamily.DENNISTON:
            _validate_denniston(config, diagnostics)
        else:
            _validate_exponent(config, diagnostics)
            if config.subcommand == CHARSUM and config.s is not None:
                _validate_denniston(config, diagnostics)
    if config.subcommand == SWEEP and config.m_values is not None:
        bad = [m for m in config.m_values if not MIN_FIELD_DEGREE <= m <= MAX_FIELD_DEGREE]
        if bad:
            diagnostics.error("--m-values outside {}..{}: {}".format(MIN_FIELD_DEGREE, MAX_FIELD_DEGREE, bad))
    return config, diagnostics.items


def _render_report(config, report, notes):
    report.provenance.extend(notes)
    if config.format == OutputFormat.MARKDOWN.value:
        text = report.to_markdown()
    else:
        text = report.to_json(include_timing=config.timing) + "\n"
    return text, bool(report.failed_checks())


def _run_denniston(config, notes):
    spec = DennistonSpec(config.ctx, config.s, subgroup_basis=config.basis, beta=config.beta)
    return _render_report(config, denniston_report(spec, config.budget, config.threads), notes)


def _run_pg3(config, notes):
    spec = PG3ArcSpec(config.ctx, config.h)
    return _render_report(config, pg3_report(spec, config.budget, config.threads), notes)


def _run_charsum(config, notes):
    ctx, h = config.ctx, config.h
    reports = coulter_sweep(ctx, h)
    disagreements = [r for r in reports if not r.agrees and not r.printed_form_ambiguous]
    summary = OrderedDict([
        ("m", ctx.m),
        ("h", h),
        ("modulus", ctx.modulus),
        ("pairs", len(reports)),
        ("ambiguous", sum(1 for r in reports if r.printed_form_ambiguous)),
        ("disagreements", len(disagreements)),
    ])
    failed = bool(disagreements)
    if gcd(ctx.m, h) == 1:
        identity = pg3_count_identity(ctx, h)
        summary["count_identity_pairs"] = identity.checked
        summary["count_identity_holds"] = identity.identity_holds
        summary["full_count_only_at_zero"] = identity.full_only_at_zero
        failed = failed or not (identity.identity_holds and identity.full_only_at_zero)
    if config.s is not None:
        spec = DennistonSpec(ctx, config.s, subgroup_basis=config.basis, beta=config.beta)
        full_only_at_zero = denniston_count_iff(spec)
        summary["denniston_s"] = config.s
        summary["denniston_full_count_only_at_zero"] = full_only_at_zero
        failed = failed or (spec.theorem_applies and not full_only_at_zero)
    summary["notes"] = notes
    if config.format == OutputFormat.MARKDOWN.value:
        lines = ["| a | b | S | predicted | agrees |", "|---|---|---|---|---|"]
        lines.extend("| {} | {} | {} | {} | {} |".format(
            r.a, r.b, r.brute_value, sorted(r.predicted_set), "yes" if r.agrees else "**NO**") for r in reports)
        lines.extend(["", "summary: {}".format(json.dumps(summary))])
    else:
        lines = [r.to_json() for r in reports]
        lines.append(json.dumps(OrderedDict([("summary", summary)])))
    return "\n".join(lines) + "\n", failed


def _run_verify_paper(config, notes):
    result = paper_example_suite(config.budget, config.threads)
    if config.format == OutputFormat.MARKDOWN.value:
        text = result.to_markdown()
    else:
        text = result.to_json() + "\n"
    return text, bool(result.failures)


def _run_dump_arc(config, notes):
    if CodeFamily.from_string(config.family) is CodeFamily.DENNISTON:
        arc = denniston_arc(DennistonSpec(config.ctx, config.s, subgroup_basis=config.basis, beta=config.beta))
    else:
        arc = pg3_arc(PG3ArcSpec(config.ctx, config.h))
    return arc.to_text(), False


def _run_sweep(config, notes):
    if CodeFamily.from_string(config.family) is CodeFamily.DENNISTON:
        reports = denniston_sweep(config.m_values or DENNISTON_SWEEP_DEFAULT_M, budget=config.budget,
                                  threads=config.threads)
    else:
        reports = pg3_sweep(config.m_values or PG3_SWEEP_DEFAULT_M, budget=config.budget, threads=config.threads)
    if config.format == OutputFormat.MARKDOWN.value:
        text = "\n".join(report.to_markdown() for report in reports)
    else:
        text = json.dumps([report.as_dict(config.timing) for report in reports], indent=2) + "\n"
    return text, any(report.failed_checks() for report in reports)


HANDLERS = {
    DENNISTON: _run_denniston,
    PG3: _run_pg3,
    CHARSUM: _run_charsum,
    VERIFY_PAPER: _run_verify_paper,
    DUMP_ARC: _run_dump_arc,
    SWEEP: _run_sweep,
}


def _emit(text, output):
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return True
    try:
        with open(output, "w") as f:
            f.write(text)
    except (IOError, OSError) as e:
        logger.error("Cannot write {}: {}".format(output, e))
        return False
    return True


def run(config):
    """Validate ``config``, dispatch to the matching operation and emit its output.

    Args:
        config (CliConfig): The options.

    Returns:
        int: 0 on success, 1 on invalid parameters or an unwritable output, 2 on a failed check.
    """
    config, diagnostics = validate(config)
    errors = [d.message for d in diagnostics if d.level == Diagnostic.ERROR]
    notes = [d.message for d in diagnostics if d.level == Diagnostic.NOTE]
    for message in notes:
        logger.info(message)
    if errors:
        for message in errors:
            logger.error(message)
        return EXIT_INVALID
    try:
        text, failed = HANDLERS[config.subcommand](config, notes)
    except MaxArcError as e:
        logger.error("{}: {}".format(e.__class__.__name__, e))
        return EXIT_INVALID
    if not _emit(text, config.output):
        return EXIT_INVALID
    if failed:
        logger.warning("verification checks failed")
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


class ArgumentParser(argparse.ArgumentParser):
    """An ``argparse`` parser that raises :class:`~maxarc.errors.CliUsageError` instead of exiting."""

    def error(self, message):
        raise CliUsageError(message, self.format_usage())


def _integer(value):
    """Decimal, or any prefix accepted by ``int(value, 0)`` such as ``0x25``."""
    return int(value, 0)


def _integer_list(value):
    return [_integer(item) for item in value.split(",") if item.strip()]


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_integer, help="enumeration budget (default: $MAXARC_BUDGET or 2^24)")
    common.add_argument("--threads", type=int, help="worker threads (default: all cores)")
    common.add_argument("--output", help="write the result to this path instead of stdout")
    common.add_argument("--format", default=OutputFormat.JSON.value,
                        choices=[member.value for member in OutputFormat])
    common.add_argument("--timing", action="store_true", help="include per-stage seconds in JSON reports")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--m", type=int, help="extension degree of GF(2^m)")
    field.add_argument("--modulus", type=_integer, help="irreducible modulus as an integer bit mask")

    denniston = argparse.ArgumentParser(add_help=False)
    denniston.add_argument("--s", type=int, help="subgroup exponent, h = 2^s")
    denniston.add_argument("--beta", type=_integer, help="pencil parameter beta")
    denniston.add_argument("--basis", type=_integer_list, help="comma-separated encodings spanning H")

    exponent = argparse.ArgumentParser(add_help=False)
    exponent.add_argument("--h", type=int, help="exponent of x^(2^h+1)")

    parser = ArgumentParser(prog="maxarc", description="Optimal binary codes from maximal arcs.")
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    subparsers = parser.add_subparsers(dest="subcommand", metavar="command")
    subparsers.required = True
    subparsers.add_parser(DENNISTON, parents=[common, field, denniston], help="Denniston arc code pipeline")
    subparsers.add_parser(PG3, parents=[common, field, exponent], help="PG(3) arc code pipeline")
    subparsers.add_parser(
        CHARSUM, parents=[common, field, exponent, denniston],
        help="Coulter sums and the PG(3) count identity; with --s also the Denniston count (Weil sums: library only)")
    subparsers.add_parser(VERIFY_PAPER, parents=[common], help="recompute the worked examples")
    dump = subparsers.add_parser(DUMP_ARC, parents=[common, field, denniston, exponent], help="print arc points")
    dump.add_argument("--family", help="denniston or pg3")
    sweep = subparsers.add_parser(SWEEP, parents=[common], help="run a family over many parameters")
    sweep.add_argument("--family", help="denniston or pg3")
    sweep.add_argument("--m-values", dest="m_values", type=_integer_list, help="comma-separated m values")
    return parser


def _configure_logging(verbose):
    level = logging.WARNING if verbose <= 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def main(argv=None):
    """Console entry point. Returns the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CliUsageError as e:
        sys.stderr.write("{}maxarc: error: {}\n".format(e.usage, e.message))
        return EXIT_INVALID
    _configure_logging(args.verbose)
    return run(CliConfig.from_namespace(args))
