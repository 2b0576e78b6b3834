"""Full pipelines from an arc to its optimal binary codes, with every number backed by an exact method.

A pipeline builds the arc, derives each code of the chain (arc code, duals, augmented code, subfield
code, extended dual), computes weight distributions and minimum distances where the enumeration budget
allows, cross-checks them with an independent method, and records the outcome in a
:class:`~maxarc.models.CodeReport`. Checks that fail are recorded, never raised.

Examples:
    Reproduce the [232, 220, 4] code::

        from maxarc.gf2m import build_field
        from maxarc.arcs import DennistonSpec
        from maxarc.analysis import denniston_report

        report = denniston_report(DennistonSpec(build_field(5, 37), 3))
        print(report.stage("subfield_code_dual").parameters)
"""
import logging
from collections import OrderedDict
from fractions import Fraction
from math import gcd

from maxarc.arcs import (
    DennistonSpec,
    PG3ArcSpec,
    denniston_arc,
    pg3_arc,
    power_basis,
    is_maximal_arc,
    general_position_check,
)
from maxarc.codes import augment, extend, subfield_expand, trace_subfield, subfield_subcode
from maxarc.constants import (
    LINE_PROFILE_MAX_DEGREE,
    GEOMETRY_FALLBACK_MAX_POINTS,
    MAX_SEARCH_WEIGHT,
    REPORT_SUBCODE_MAX_EXPONENT,
    PAPER_EXAMPLE_MODULUS,
    DENNISTON_SWEEP_DEFAULT_M,
    PG3_SWEEP_DEFAULT_M,
    PG3_THEOREM_MIN_M,
    THEOREM_DISABLED_MSG,
    PG3_THEOREM_DISABLED_MSG,
    DENNISTON_COLUMN_ORDER,
    PG3_COLUMN_ORDER,
    SUBFIELD_BASIS_NOTE,
    PG3_SUBFIELD_OPTIMALITY_NOTE,
    PG3_DUAL_OPTIMALITY_NOTE,
)
from maxarc.errors import BudgetExceededError, InvalidParametersError
from maxarc.gf2m import build_field
from maxarc.helpers import StageTimer, pack_bits, resolve_budget
from maxarc.models import (
    CodeFamily,
    CodeReport,
    DistanceMethod,
    ExampleCheck,
    RateComparison,
    StageRecord,
    SuiteResult,
)
from maxarc.weights import (
    weight_distribution,
    macwilliams_transform,
    low_weight_search,
    sphere_packing_verdict,
    is_mds,
    maximal_arc_code_distribution,
)

logger = logging.getLogger(__name__)


def construction_equivalence(code, expanded):
    """True iff ``expanded`` equals the trace code and the expansion over the alternate basis.

    Args:
        code (maxarc.codes.LinearCodeQ): The code over GF(2^m).
        expanded (maxarc.codes.BinaryCode): Its expansion over the polynomial basis.

    Returns:
        bool: Whether all three constructions give the same row space.
    """
    traced = trace_subfield(code)
    alternate = subfield_expand(code, code.ctx.alternate_basis())
    return expanded.same_code(traced) and expanded.same_code(alternate)


class _Pipeline(object):
    """Runs the stages named in ``STAGES`` in order, timing each one.

    Each stage is a method ``_<name>`` returning a :class:`~maxarc.models.StageRecord`; later stages read
    earlier records through ``self.report.stage(name)``.

    Note:
        This class is intended to be inherited. It should not be initiated or used directly in your code.
    """

    STAGES = ()

    def __init__(self, spec, budget=None, threads=None):
        self.spec = spec
        self.ctx = spec.ctx
        self.budget = resolve_budget(budget)
        self.threads = threads
        self.report = None

    def _new_report(self):  # pragma: no cover
        raise NotImplementedError()

    def _theorem(self):  # pragma: no cover
        raise NotImplementedError()

    def run(self):
        self.report = self._new_report()
        for diagnostic in self.spec.diagnostics:
            self.report.provenance.append(diagnostic.message)
        self.report.provenance.append(SUBFIELD_BASIS_NOTE.format(self.ctx.alternate_basis()))
        for name in self.STAGES:
            with StageTimer(name) as timer:
                record = getattr(self, "_" + name)()
            record.elapsed = timer.elapsed
            self.report.add_stage(record)
        self._theorem()
        logger.info("{}: failed checks {}".format(self.spec, self.report.failed_checks() or "none"))
        return self.report

    def _distribution(self, code):
        try:
            return weight_distribution(code, budget=self.budget, threads=self.threads)
        except BudgetExceededError as e:
            logger.info("{} Stage left unenumerated.".format(e))
            return None

    def _enumerated(self, name, code):
        """Record for ``code`` with its distribution and distance when the budget allows."""
        record = StageRecord(name, code.q, code.n, code.k)
        distribution = self._distribution(code)
        if distribution is not None:
            record.distribution = distribution
            record.d = distribution.minimum_distance
            record.methods.append(DistanceMethod.ENUMERATION)
        return record

    def _dual_of(self, name, primal, field_size):
        """Record for the dual of an enumerated stage, by the MacWilliams transform."""
        record = StageRecord(name, field_size, primal.n, primal.n - primal.k)
        if primal.distribution is not None:
            record.distribution = macwilliams_transform(primal.distribution, field_size, primal.k)
            record.d = record.distribution.minimum_distance
            record.methods.append(DistanceMethod.MACWILLIAMS)
        return record

    def _cross_check(self, record, parity_check):
        """Add the low-weight search on ``parity_check`` as a second method for ``record.d``."""
        searched = low_weight_search(parity_check, MAX_SEARCH_WEIGHT)
        if record.d is not None:
            expected = record.d if record.d <= MAX_SEARCH_WEIGHT else None
            record.checks["methods_agree"] = searched == expected
            if searched is not None:
                record.methods.append(DistanceMethod.LOW_WEIGHT_SEARCH)
        elif searched is not None:
            record.d = searched
            record.methods.append(DistanceMethod.LOW_WEIGHT_SEARCH)
        if record.d is not None:
            record.verdict = sphere_packing_verdict(record.n, record.k, record.d, 2)
        return record

    def _subcode_containment(self, code, expanded):
        if self.ctx.m * code.k > REPORT_SUBCODE_MAX_EXPONENT:
            return None
        subcode = subfield_subcode(code)
        return all(expanded.contains(pack_bits(row)) for row in subcode.gen)


class _DennistonPipeline(_Pipeline):

    STAGES = (
        "arc_code",
        "arc_code_dual",
        "augmented_code",
        "augmented_code_dual",
        "subfield_code",
        "subfield_code_dual",
    )

    def __init__(self, spec, budget=None, threads=None):
        super(_DennistonPipeline, self).__init__(spec, budget, threads)
        self.arc = denniston_arc(spec)
        self.code = None
        self.augmented = None
        self.expanded = None

    def _new_report(self):
        ctx, spec = self.ctx, self.spec
        report = CodeReport(CodeFamily.DENNISTON, OrderedDict([
            ("m", ctx.m),
            ("s", spec.s),
            ("h", spec.h),
            ("modulus", ctx.modulus),
            ("primitive_element", ctx.primitive_element),
            ("beta", spec.beta),
            ("subgroup_basis", list(spec.subgroup_basis)),
            ("subfield_basis", ctx.polynomial_basis()),
            ("budget", self.budget),
        ]))
        report.provenance.append(DENNISTON_COLUMN_ORDER)
        if not spec.theorem_applies:
            report.provenance.append(THEOREM_DISABLED_MSG.format(spec.s, ctx.m))
        return report

    def _arc_code(self):
        spec, n, h = self.spec, self.spec.n, self.spec.h
        self.code = self.arc.code()
        record = self._enumerated("arc_code", self.code)
        if record.distribution is not None:
            record.checks["parameters"] = record.parameters == [n, 3, n - h]
            record.checks["two_weight"] = record.distribution.nonzero_weights() == [n - h, n]
            record.checks["closed_form"] = record.distribution == maximal_arc_code_distribution(n, h, self.ctx.q)
        if self.ctx.m <= LINE_PROFILE_MAX_DEGREE:
            record.checks["maximal_arc"] = is_maximal_arc(self.ctx, self.arc.points, h)
        logger.debug("{} arc code: {}".format(spec, record.parameters))
        return record

    def _arc_code_dual(self):
        record = self._dual_of("arc_code_dual", self.report.stage("arc_code"), self.ctx.q)
        if record.d is not None:
            record.checks["dual_distance"] = record.d == (4 if self.spec.s == 1 else 3)
        return record

    def _augmented_code(self):
        self.augmented = augment(self.code)
        record = self._enumerated("augmented_code", self.augmented.code)
        record.observations["all_ones_already_present"] = self.augmented.degenerate
        record.checks["dimension"] = self.augmented.code.k == 4
        return record

    def _augmented_code_dual(self):
        return self._dual_of("augmented_code_dual", self.report.stage("augmented_code"), self.ctx.q)

    def _subfield_code(self):
        code, m = self.augmented.code, self.ctx.m
        self.expanded = subfield_expand(code)
        record = self._enumerated("subfield_code", self.expanded)
        record.checks["construction_equivalence"] = construction_equivalence(code, self.expanded)
        if self.spec.theorem_applies:
            record.checks["dimension"] = self.expanded.k == 2 * m + 2
        else:
            record.observations["dimension_is_2m_plus_2"] = self.expanded.k == 2 * m + 2
        contained = self._subcode_containment(code, self.expanded)
        if contained is not None:
            record.checks["subcode_containment"] = contained
        if record.d is not None:
            record.observations["conjectured_distance_h"] = record.d == self.spec.h
        return record

    def _subfield_code_dual(self):
        record = self._dual_of("subfield_code_dual", self.report.stage("subfield_code"), 2)
        self._cross_check(record, self.expanded.gen)
        primal_dual = self.report.stage("augmented_code_dual")
        if record.d is not None and primal_dual.d is not None:
            record.checks["dual_distance_inequality"] = record.d >= primal_dual.d
        return record

    def _theorem(self):
        report, spec, m = self.report, self.spec, self.ctx.m
        n = spec.n
        report.theorem["hypotheses_hold"] = spec.theorem_applies
        report.theorem["statement"] = (
            "the dual of the binary subfield code of the augmented arc code is [{}, {}, 4] and "
            "distance-optimal".format(n, n - 2 * m - 2)
        )
        if spec.theorem_applies:
            dual = report.stage("subfield_code_dual")
            report.theorem["checks"] = OrderedDict([
                ("dimension", dual.k == n - 2 * m - 2),
                ("dual_distance", dual.d == 4),
                ("distance_optimal", dual.verdict is not None and dual.verdict.distance_optimal),
            ])
        report.rates = rate_comparison(CodeFamily.DENNISTON, m, spec.s)


class _PG3Pipeline(_Pipeline):

    STAGES = (
        "arc_code",
        "arc_code_dual",
        "subfield_code",
        "subfield_code_dual",
        "extended_dual",
    )

    def __init__(self, spec, budget=None, threads=None):
        super(_PG3Pipeline, self).__init__(spec, budget, threads)
        self.arc = pg3_arc(spec)
        self.code = None
        self.expanded = None

    @property
    def theorem_applies(self):
        return self.ctx.m >= PG3_THEOREM_MIN_M

    def _new_report(self):
        ctx = self.ctx
        report = CodeReport(CodeFamily.PG3, OrderedDict([
            ("m", ctx.m),
            ("h", self.spec.h),
            ("modulus", ctx.modulus),
            ("primitive_element", ctx.primitive_element),
            ("subfield_basis", ctx.polynomial_basis()),
            ("budget", self.budget),
        ]))
        report.provenance.append(PG3_COLUMN_ORDER)
        if not self.theorem_applies:
            report.provenance.append(PG3_THEOREM_DISABLED_MSG.format(ctx.m, PG3_THEOREM_MIN_M))
        return report

    def _arc_code(self):
        self.code = self.arc.code()
        n = self.code.n
        record = self._enumerated("arc_code", self.code)
        if n <= GEOMETRY_FALLBACK_MAX_POINTS:
            in_general_position = general_position_check(self.ctx, self.arc.points)
            record.checks["general_position"] = in_general_position
            if record.d is None and in_general_position:
                record.d = n - 3
                record.methods.append(DistanceMethod.GEOMETRY)
        if record.d is not None:
            record.checks["mds"] = is_mds(n, record.k, record.d)
        return record

    def _arc_code_dual(self):
        primal = self.report.stage("arc_code")
        record = self._dual_of("arc_code_dual", primal, self.ctx.q)
        if record.d is None and DistanceMethod.GEOMETRY in primal.methods:
            # the dual of an MDS code is MDS
            record.d = record.n - record.k + 1
            record.methods.append(DistanceMethod.GEOMETRY)
        if record.d is not None:
            record.checks["mds"] = is_mds(record.n, record.k, record.d)
        return record

    def _subfield_code(self):
        m = self.ctx.m
        self.expanded = subfield_expand(self.code)
        record = self._enumerated("subfield_code", self.expanded)
        record.checks["construction_equivalence"] = construction_equivalence(self.code, self.expanded)
        record.checks["dimension"] = self.expanded.k == 2 * m + 1
        contained = self._subcode_containment(self.code, self.expanded)
        if contained is not None:
            record.checks["subcode_containment"] = contained
        return record

    def _subfield_code_dual(self):
        record = self._dual_of("subfield_code_dual", self.report.stage("subfield_code"), 2)
        self._cross_check(record, self.expanded.gen)
        if record.d is not None:
            record.checks["distance_at_least_5"] = record.d >= 5
            primal_dual = self.report.stage("arc_code_dual")
            if primal_dual.d is not None:
                record.checks["dual_distance_inequality"] = record.d >= primal_dual.d
        return record

    def _extended_dual(self):
        extended = extend(self.expanded.dual())
        check_code = extended.dual()
        record = StageRecord("extended_dual", 2, extended.n, extended.k)
        check_distribution = self._distribution(check_code)
        if check_distribution is not None:
            record.distribution = macwilliams_transform(check_distribution, 2, check_code.k)
            record.d = record.distribution.minimum_distance
            record.methods.append(DistanceMethod.MACWILLIAMS)
            record.observations["even_weights_only"] = record.distribution.is_even()
        return self._cross_check(record, check_code.gen)

    def _theorem(self):
        report, m, q = self.report, self.ctx.m, self.ctx.q
        report.theorem["hypotheses_hold"] = self.theorem_applies
        report.theorem["statement"] = (
            "the extended dual of the binary subfield code is [{}, {}, 6] and distance-optimal".format(q + 2, q - 2 * m)
        )
        if self.theorem_applies:
            extended = report.stage("extended_dual")
            report.theorem["checks"] = OrderedDict([
                ("subfield_dimension", report.stage("subfield_code").k == 2 * m + 1),
                ("dimension", extended.k == q - 2 * m),
                ("extended_dual_distance", extended.d == 6),
                ("distance_optimal", extended.verdict is not None and extended.verdict.distance_optimal),
            ])
        report.rates = rate_comparison(CodeFamily.PG3, m)


def denniston_report(spec, budget=None, threads=None):
    """Run the Denniston pipeline.

    Stages: ``arc_code`` C(A) [n, 3, n-h]; ``arc_code_dual``; ``augmented_code`` C(A) plus the all-ones word;
    ``augmented_code_dual``; ``subfield_code`` its binary subfield code; ``subfield_code_dual``.
    The theorem checks (dual [n, n-2m-2, 4], distance-optimal) are only evaluated when 1 < s < m.

    Args:
        spec (maxarc.arcs.denniston.DennistonSpec): Validated arc parameters.
        budget (int): Enumeration budget; stages beyond it are reported as not enumerated.
        threads (int): Worker threads for enumeration.

    Returns:
        maxarc.models.CodeReport: The report.
    """
    return _DennistonPipeline(spec, budget, threads).run()


def pg3_report(spec, budget=None, threads=None):
    """Run the PG(3) pipeline.

    Stages: ``arc_code`` the MDS code [q+1, 4, q-2]; ``arc_code_dual``; ``subfield_code`` [q+1, 2m+1];
    ``subfield_code_dual``; ``extended_dual`` its parity extension. Theorem checks (extended dual
    [q+2, q-2m, 6], distance-optimal) are only evaluated when m >= 5.

    Args:
        spec (maxarc.arcs.pg3.PG3ArcSpec): Validated arc parameters.
        budget (int): Enumeration budget.
        threads (int): Worker threads for enumeration.

    Returns:
        maxarc.models.CodeReport: The report.
    """
    return _PG3Pipeline(spec, budget, threads).run()


def rate_comparison(family, m, s=None):
    """Exact information rates of a family member and of its comparison code.

    * Denniston: R1 = (2^m - m - 1)/2^m, R2 = (n - 2m - 2)/n with n = 2^(m+s) + 2^s - 2^m.
    * PG(3): R1 = (2^m - 2m - 1)/2^m, R2 = (2^m - 2m)/(2^m + 2).

    Args:
        family (maxarc.models.CodeFamily|str): The family.
        m (int): Extension degree.
        s (int): Denniston subgroup exponent; required for that family.

    Returns:
        maxarc.models.RateComparison: The rates as :class:`fractions.Fraction`.

    Raises:
        maxarc.errors.InvalidParametersError: If s is missing for the Denniston family.
    """
    if not isinstance(family, CodeFamily):
        family = CodeFamily.from_string(family)
    q = 1 << m
    if family is CodeFamily.DENNISTON:
        if s is None:
            raise InvalidParametersError("The Denniston rate comparison needs s")
        n = (1 << (m + s)) + (1 << s) - q
        return RateComparison(family, m, Fraction(q - m - 1, q), Fraction(n - 2 * m - 2, n), s)
    return RateComparison(family, m, Fraction(q - 2 * m - 1, q), Fraction(q - 2 * m, q + 2))


def _parameters(report, name):
    return report.stage(name).parameters


def _nonzero_counts(report, name):
    distribution = report.stage(name).distribution
    if distribution is None:
        return None
    return {weight: count for weight, count in distribution.items() if weight}


def _optimal(report, name):
    verdict = report.stage(name).verdict
    return None if verdict is None else verdict.distance_optimal


def paper_example_suite(budget=None, threads=None):
    """Recompute both worked examples over GF(32) modulo x^5 + x^2 + 1 and compare every quoted value.

    Returns:
        maxarc.models.SuiteResult: One :class:`~maxarc.models.ExampleCheck` per quoted value; mismatches
        are listed in ``failures``.
    """
    ctx = build_field(5, PAPER_EXAMPLE_MODULUS)
    denniston = denniston_report(DennistonSpec(ctx, 3), budget, threads)
    pg3 = pg3_report(PG3ArcSpec(ctx, 1), budget, threads)
    checks = [
        ExampleCheck("denniston.arc_code.parameters", [232, 3, 224], _parameters(denniston, "arc_code")),
        ExampleCheck("denniston.arc_code.distribution", {224: 29667, 232: 3100},
                     _nonzero_counts(denniston, "arc_code")),
        ExampleCheck("denniston.arc_code_dual.parameters", [232, 229, 3], _parameters(denniston, "arc_code_dual")),
        ExampleCheck("denniston.subfield_code.parameters", [232, 12, 8], _parameters(denniston, "subfield_code")),
        ExampleCheck("denniston.subfield_code_dual.parameters", [232, 220, 4],
                     _parameters(denniston, "subfield_code_dual")),
        ExampleCheck("denniston.subfield_code_dual.distance_optimal", True,
                     _optimal(denniston, "subfield_code_dual")),
        ExampleCheck("denniston.failed_checks", [], denniston.failed_checks()),
        ExampleCheck("denniston.rates.r1", Fraction(26, 32), denniston.rates.r1),
        ExampleCheck("denniston.rates.r2", Fraction(220, 232), denniston.rates.r2),
        ExampleCheck("pg3.arc_code.parameters", [33, 4, 30], _parameters(pg3, "arc_code")),
        ExampleCheck("pg3.arc_code.distribution", {30: 169136, 31: 32736, 32: 508431, 33: 338272},
                     _nonzero_counts(pg3, "arc_code")),
        ExampleCheck("pg3.subfield_code.parameters", [33, 11, 12], _parameters(pg3, "subfield_code")),
        ExampleCheck("pg3.subfield_code_dual.parameters", [33, 22, 5], _parameters(pg3, "subfield_code_dual")),
        ExampleCheck("pg3.extended_dual.parameters", [34, 22, 6], _parameters(pg3, "extended_dual")),
        ExampleCheck("pg3.extended_dual.distance_optimal", True, _optimal(pg3, "extended_dual")),
        ExampleCheck("pg3.failed_checks", [], pg3.failed_checks()),
        ExampleCheck("pg3.rates.r1", Fraction(21, 32), pg3.rates.r1),
        ExampleCheck("pg3.rates.r2", Fraction(22, 34), pg3.rates.r2),
    ]
    result = SuiteResult(checks, [PG3_SUBFIELD_OPTIMALITY_NOTE, PG3_DUAL_OPTIMALITY_NOTE])
    for check in result.failures:
        logger.warning("example mismatch {}: expected {}, got {}".format(check.name, check.expected, check.actual))
    return result


def denniston_variants(ctx, s):
    """The two (beta, H) choices swept per (m, s): both defaults, then the largest admissible beta with
    a basis of H drawn greedily from the powers of the primitive element."""
    return [
        DennistonSpec(ctx, s),
        DennistonSpec(ctx, s, subgroup_basis=power_basis(ctx, s), beta=ctx.admissible_betas()[-1]),
    ]


def denniston_sweep(m_values=DENNISTON_SWEEP_DEFAULT_M, s_values=None, variants=denniston_variants, budget=None,
                    threads=None):
    """Denniston reports for every m, every s (default 2..m-1) and every variant.

    Args:
        variants (callable): Maps (ctx, s) to the list of :class:`DennistonSpec` to report on.
            Defaults to :func:`denniston_variants`.

    Returns:
        list[maxarc.models.CodeReport]: In (m, s, variant) order.
    """
    reports = []
    for m in m_values:
        ctx = build_field(m)
        exponents = range(2, m) if s_values is None else [s for s in s_values if 1 <= s < m]
        for s in exponents:
            for spec in variants(ctx, s):
                reports.append(denniston_report(spec, budget, threads))
    return reports


def pg3_sweep(m_values=PG3_SWEEP_DEFAULT_M, budget=None, threads=None):
    """PG(3) reports for every m and every 1 <= h < m with gcd(m, h) = 1.

    Returns:
        list[maxarc.models.CodeReport]: In (m, h) order.
    """
    reports = []
    for m in m_values:
        ctx = build_field(m)
        for h in range(1, m):
            if gcd(m, h) == 1:
                reports.append(pg3_report(PG3ArcSpec(ctx, h), budget, threads))
    return reports
