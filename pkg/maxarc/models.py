"""Define models and enums shared by the constructions, the analysis pipelines and the CLI.

Note:
    Most developers will meet these objects as return values of :mod:`maxarc.analysis`
    and :mod:`maxarc.charsum` rather than build them directly.
"""
import json
from math import gcd
from collections import namedtuple, OrderedDict

from enum import Enum

from maxarc.constants import NOT_ENUMERATED, REPORT_DISTRIBUTION_MAX_LENGTH
from maxarc.errors import InvalidParametersError


class CodeFamily(Enum):
    """Enum of the two code families built from maximal arcs.

    Attributes:
        DENNISTON: Codes of Denniston maximal arcs in PG(2, 2^m).
        PG3: Codes of the (q+1)-arcs {(x^(2^h+1), x^(2^h), x, 1)} in PG(3, 2^m).
    """

    DENNISTON = "denniston"
    PG3 = "pg3"

    @classmethod
    def from_string(cls, string):
        """Return an enum corresponding to the given string.

        Example:
            ::
                CodeFamily.from_string("PG3") # Returns ``CodeFamily.PG3``

        Args:
            string (str): The family name, case insensitive.

        Raises:
            InvalidParametersError: If the given string could not be matched to any of the enum members.

        Returns:
            CodeFamily: The relevant enum matching the given string.
        """
        for member in cls:
            if member.value == string.strip().lower():
                return member
        raise InvalidParametersError("Unable to get CodeFamily from string: {}".format(string))


DistanceMethodInfo = namedtuple("DistanceMethodInfo", ["label", "description"])


class DistanceMethod(Enum):
    """The exact methods a reported minimum distance can be backed by.

    Attributes:
        ENUMERATION: Full message-space enumeration of the code itself.
        MACWILLIAMS: MacWilliams transform of the enumerated dual distribution.
        LOW_WEIGHT_SEARCH: Meet-in-the-middle search for dependent parity-check columns.
        GEOMETRY: Arc general-position check, giving the MDS distance n - k + 1.
    """

    ENUMERATION = DistanceMethodInfo("enumeration", "full message-space enumeration")
    MACWILLIAMS = DistanceMethodInfo("macwilliams", "MacWilliams transform of the dual distribution")
    LOW_WEIGHT_SEARCH = DistanceMethodInfo("low_weight_search", "dependent parity-check column search")
    GEOMETRY = DistanceMethodInfo("geometry", "general-position check of the arc (MDS)")

    def __repr__(self):
        return "{}.{}".format(self.__class__.__name__, self._name_)


class OutputFormat(Enum):
    """Report rendering formats. JSON is canonical, markdown is a human view."""

    JSON = "json"
    MARKDOWN = "markdown"

    @classmethod
    def from_string(cls, string):
        """Return the format named by ``string``, raising InvalidParametersError otherwise."""
        for member in cls:
            if member.value == string.strip().lower():
                return member
        raise InvalidParametersError("Unknown output format: {}".format(string))


Diagnostic = namedtuple("Diagnostic", ["level", "message"])
Diagnostic.ERROR = "error"
Diagnostic.NOTE = "note"

SpherePackingVerdict = namedtuple(
    "SpherePackingVerdict", ["bound_holds_at_d", "fails_at_d_plus_1", "distance_optimal", "perfect"]
)

SingletonVerdict = namedtuple("SingletonVerdict", ["bound_holds", "mds"])


def _verdict_dict(verdict):
    if verdict is None:
        return None
    return OrderedDict(zip(verdict._fields, verdict))


class RateComparison(object):
    """Information rates of a family member against the comparison code of the same redundancy.

    Args:
        family (CodeFamily): The code family.
        m (int): The extension degree.
        r1 (fractions.Fraction): Rate of the reference code (Hamming for Denniston, BCH for PG(3)).
        r2 (fractions.Fraction): Rate of the arc-derived code.
        s (int): The Denniston subgroup exponent, None for PG(3).
    """

    def __init__(self, family, m, r1, r2, s=None):
        self.family = family
        self.m = m
        self.s = s
        self.r1 = r1
        self.r2 = r2

    @property
    def r2_exceeds_r1(self):
        return self.r2 > self.r1

    def as_dict(self):
        return OrderedDict([
            ("family", self.family.value),
            ("m", self.m),
            ("s", self.s),
            ("r1", str(self.r1)),
            ("r2", str(self.r2)),
            ("r2_exceeds_r1", self.r2_exceeds_r1),
        ])


class StageRecord(object):
    """One derived code of a pipeline: parameters, distribution, distance provenance and checks.

    Args:
        name (str): Stage name, e.g. ``subfield_code_dual``.
        field_size (int): Size of the alphabet the code is defined over.
        n (int): Length.
        k (int): Dimension.
        d (int): Minimum distance, or None when no exact method was within budget.
        methods (list[DistanceMethod]): The exact methods backing ``d``.
        distribution (maxarc.weights.WeightDistribution): The weight distribution, or None.
        verdict (SpherePackingVerdict): Sphere-packing verdict for binary stages, or None.
    """

    def __init__(self, name, field_size, n, k, d=None, methods=None, distribution=None, verdict=None):
        self.name = name
        self.field_size = field_size
        self.n = n
        self.k = k
        self.d = d
        self.methods = list(methods or [])
        self.distribution = distribution
        self.verdict = verdict
        self.checks = OrderedDict()
        self.observations = OrderedDict()
        self.elapsed = None

    @property
    def parameters(self):
        return [self.n, self.k, self.d]

    def as_dict(self, include_timing=False):
        if self.distribution is None:
            distribution = NOT_ENUMERATED
        elif self.n > REPORT_DISTRIBUTION_MAX_LENGTH:
            distribution = "omitted: length {} exceeds {}".format(self.n, REPORT_DISTRIBUTION_MAX_LENGTH)
        else:
            distribution = self.distribution.to_dict()
        result = OrderedDict([
            ("name", self.name),
            ("field_size", self.field_size),
            ("n", self.n),
            ("k", self.k),
            ("d", self.d),
            ("d_methods", [method.value.label for method in self.methods]),
            ("distribution", distribution),
            ("sphere_packing", _verdict_dict(self.verdict)),
            ("checks", OrderedDict(self.checks)),
            ("observations", OrderedDict(self.observations)),
        ])
        if include_timing:
            result["seconds"] = self.elapsed
        return result


class CodeReport(object):
    """Full account of one pipeline run, with the provenance needed to reproduce it.

    Args:
        family (CodeFamily): The code family.
        parameters (collections.OrderedDict): Construction inputs (m, s or h, modulus, beta, basis, ...).
    """

    def __init__(self, family, parameters):
        self.family = family
        self.parameters = parameters
        self.provenance = []
        self.stages = OrderedDict()
        self.theorem = OrderedDict([("hypotheses_hold", False), ("statement", ""), ("checks", OrderedDict())])
        self.rates = None

    def add_stage(self, record):
        self.stages[record.name] = record
        return record

    def stage(self, name):
        return self.stages[name]

    def failed_checks(self):
        """Return the dotted names of every check that evaluated to False.

        Theorem checks only count when the theorem's hypotheses hold.

        Returns:
            list[str]: Names like ``subfield_code.construction_equivalence``.
        """
        failed = []
        for record in self.stages.values():
            failed.extend("{}.{}".format(record.name, name) for name, ok in record.checks.items() if ok is False)
        if self.theorem["hypotheses_hold"]:
            failed.extend("theorem.{}".format(name) for name, ok in self.theorem["checks"].items() if not ok)
        return failed

    def as_dict(self, include_timing=False):
        return OrderedDict([
            ("family", self.family.value),
            ("parameters", self.parameters),
            ("provenance", list(self.provenance)),
            ("stages", [record.as_dict(include_timing) for record in self.stages.values()]),
            ("theorem", self.theorem),
            ("rates", self.rates.as_dict() if self.rates is not None else None),
            ("failed_checks", self.failed_checks()),
        ])

    def to_json(self, include_timing=False):
        return json.dumps(self.as_dict(include_timing), indent=2)

    def to_markdown(self):
        lines = [
            "## {} code report".format(self.family.value),
            "",
            " ".join("{}={}".format(key, value) for key, value in self.parameters.items()),
            "",
            "| stage | q | [n, k, d] | d from | distance-optimal |",
            "|---|---|---|---|---|",
        ]
        for record in self.stages.values():
            optimal = "" if record.verdict is None else ("yes" if record.verdict.distance_optimal else "no")
            lines.append("| {} | {} | [{}, {}, {}] | {} | {} |".format(
                record.name, record.field_size, record.n, record.k,
                "?" if record.d is None else record.d,
                ", ".join(method.value.label for method in record.methods) or "-",
                optimal,
            ))
        if self.rates is not None:
            lines.extend(["", "R1 = {}, R2 = {}".format(self.rates.r1, self.rates.r2)])
        failed = self.failed_checks()
        lines.extend(["", "failed checks: {}".format(", ".join(failed) if failed else "none")])
        for note in self.provenance:
            lines.append("- {}".format(note))
        return "\n".join(lines) + "\n"


class CharSumReport(object):
    """Brute-force character sum alongside the value set admitted by its closed form.

    Args:
        m (int): Extension degree.
        h (int): Exponent of x^(2^h+1).
        a (int): Field encoding of the quadratic coefficient.
        b (int): Field encoding of the linear coefficient.
        brute_value (int): The exhaustively computed signed sum.
        predicted_set (frozenset[int]): Values the closed form admits.
        printed_form_ambiguous (bool): True when the closed form could not be evaluated unambiguously.
    """

    def __init__(self, m, h, a, b, brute_value, predicted_set, printed_form_ambiguous=False):
        self.m = m
        self.h = h
        self.e = gcd(m, h)
        self.a = a
        self.b = b
        self.brute_value = brute_value
        self.predicted_set = frozenset(predicted_set)
        self.printed_form_ambiguous = printed_form_ambiguous

    @property
    def agrees(self):
        return self.brute_value in self.predicted_set

    def as_dict(self):
        return OrderedDict([
            ("m", self.m),
            ("h", self.h),
            ("e", self.e),
            ("a", self.a),
            ("b", self.b),
            ("brute_value", self.brute_value),
            ("predicted_set", sorted(self.predicted_set)),
            ("agrees", self.agrees),
            ("printed_form_ambiguous", self.printed_form_ambiguous),
        ])

    def to_json(self):
        return json.dumps(self.as_dict())


class WeilSumResult(namedtuple("WeilSumResult", ["brute_value", "predicted_value", "condition_holds"])):
    """An affine-polynomial character sum and the value its closed form predicts."""

    __slots__ = ()

    @property
    def agrees(self):
        return self.brute_value == self.predicted_value


CountIdentityCheck = namedtuple("CountIdentityCheck", ["checked", "identity_holds", "full_only_at_zero"])


class ExampleCheck(namedtuple("ExampleCheck", ["name", "expected", "actual"])):
    """A single quoted value compared against the recomputed one."""

    __slots__ = ()

    @property
    def passed(self):
        return self.expected == self.actual


class SuiteResult(object):
    """Outcome of :func:`maxarc.analysis.paper_example_suite`.

    Args:
        checks (list[ExampleCheck]): Every comparison made, in order.
        notes (list[str]): Claims recorded but not certified by the available bounds.
    """

    def __init__(self, checks, notes=None):
        self.checks = list(checks)
        self.notes = list(notes or [])

    @property
    def failures(self):
        return [check for check in self.checks if not check.passed]

    def as_dict(self):
        return OrderedDict([
            ("checks", [
                OrderedDict([("name", c.name), ("expected", str(c.expected)), ("actual", str(c.actual)),
                             ("passed", c.passed)])
                for c in self.checks
            ]),
            ("failures", [c.name for c in self.failures]),
            ("notes", self.notes),
        ])

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2)

    def to_markdown(self):
        lines = ["| check | expected | actual | ok |", "|---|---|---|---|"]
        for check in self.checks:
            lines.append("| {} | {} | {} | {} |".format(
                check.name, check.expected, check.actual, "yes" if check.passed else "**NO**"))
        for note in self.notes:
            lines.append("")
            lines.append("note: {}".format(note))
        return "\n".join(lines) + "\n"
