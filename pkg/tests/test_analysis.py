import json
import logging
from fractions import Fraction

import pytest
from hamcrest import assert_that, equal_to, is_, has_key, has_length, contains_string

from maxarc.analysis import (
    construction_equivalence,
    denniston_report,
    denniston_sweep,
    denniston_variants,
    paper_example_suite,
    pg3_report,
    pg3_sweep,
    rate_comparison,
)
from maxarc.arcs import DennistonSpec, PG3ArcSpec
from maxarc.codes import LinearCodeQ, subfield_expand
from maxarc.constants import NOT_ENUMERATED, PG3_THEOREM_MIN_M
from maxarc.errors import InvalidParametersError
from maxarc.gf2m import build_field
from maxarc.models import CodeFamily, DistanceMethod


@pytest.fixture(scope="module")
def denniston_m4(gf16):
    return denniston_report(DennistonSpec(gf16, 2))


@pytest.fixture(scope="module")
def denniston_m5(gf32):
    return denniston_report(DennistonSpec(gf32, 3))


@pytest.fixture(scope="module")
def pg3_m5(gf32):
    return pg3_report(PG3ArcSpec(gf32, 1))


class TestConstructionEquivalence(object):
    def test_small_code(self, gf16):
        code = LinearCodeQ(gf16, [[1, 0, 3, 7, 9, 4, 1], [0, 1, 11, 2, 15, 8, 1]])
        assert_that(construction_equivalence(code, subfield_expand(code)), is_(True))


class TestDennistonReport(object):
    def test_stage_parameters(self, denniston_m4):
        parameters = {name: record.parameters for name, record in denniston_m4.stages.items()}
        assert_that(parameters["arc_code"], equal_to([52, 3, 48]))
        assert_that(parameters["arc_code_dual"], equal_to([52, 49, 3]))
        assert_that(parameters["augmented_code"][:2], equal_to([52, 4]))
        assert_that(parameters["subfield_code"][:2], equal_to([52, 10]))
        assert_that(parameters["subfield_code_dual"], equal_to([52, 42, 4]))

    def test_no_failed_checks(self, denniston_m4):
        assert_that(denniston_m4.failed_checks(), equal_to([]))
        assert_that(denniston_m4.theorem["hypotheses_hold"], is_(True))
        assert_that(list(denniston_m4.theorem["checks"].values()), equal_to([True, True, True]))

    def test_two_weight_arc_code(self, denniston_m4):
        arc_code = denniston_m4.stage("arc_code")
        assert_that(arc_code.distribution.items(), equal_to([(0, 1), (48, 3315), (52, 780)]))
        assert_that(arc_code.checks["maximal_arc"], is_(True))

    def test_dual_distance_backed_by_two_methods(self, denniston_m4):
        dual = denniston_m4.stage("subfield_code_dual")
        assert_that(dual.methods, equal_to([DistanceMethod.MACWILLIAMS, DistanceMethod.LOW_WEIGHT_SEARCH]))
        assert_that(dual.checks["methods_agree"], is_(True))
        assert_that(dual.verdict.distance_optimal, is_(True))

    def test_subfield_checks(self, denniston_m4):
        checks = denniston_m4.stage("subfield_code").checks
        assert_that(checks["construction_equivalence"], is_(True))
        assert_that(checks["subcode_containment"], is_(True))
        assert_that(denniston_m4.stage("augmented_code").observations["all_ones_already_present"], is_(False))

    def test_rates(self, denniston_m4):
        assert_that(denniston_m4.rates.r1, equal_to(Fraction(11, 16)))
        assert_that(denniston_m4.rates.r2, equal_to(Fraction(42, 52)))
        assert_that(denniston_m4.rates.r2_exceeds_r1, is_(True))

    def test_provenance(self, denniston_m4):
        assert_that(denniston_m4.parameters["modulus"], equal_to(19))
        assert_that(any("beta not given" in note for note in denniston_m4.provenance), is_(True))
        assert_that(any(note.startswith("columns:") for note in denniston_m4.provenance), is_(True))

    def test_json(self, denniston_m4):
        data = json.loads(denniston_m4.to_json(include_timing=True))
        assert_that(data["family"], equal_to("denniston"))
        assert_that(data["failed_checks"], equal_to([]))
        assert_that(data["stages"][0]["distribution"]["counts"], equal_to({"0": "1", "48": "3315", "52": "780"}))
        assert_that(data["stages"][0], has_key("seconds"))
        assert_that(data["rates"]["r2"], equal_to("21/26"))

    def test_markdown(self, denniston_m4):
        markdown = denniston_m4.to_markdown()
        row = "| subfield_code_dual | 2 | [52, 42, 4] | macwilliams, low_weight_search | yes |"
        assert_that(markdown, contains_string(row))
        assert_that(markdown, contains_string("failed checks: none"))

    def test_reproducible(self, gf8):
        first = denniston_report(DennistonSpec(gf8, 2), threads=1)
        second = denniston_report(DennistonSpec(gf8, 2), threads=4)
        assert_that(first.to_json(), equal_to(second.to_json()))
        assert_that(first.stage("subfield_code_dual").parameters, equal_to([28, 20, 4]))

    def test_outside_theorem_hypothesis(self, gf16):
        report = denniston_report(DennistonSpec(gf16, 1))
        assert_that(report.theorem["hypotheses_hold"], is_(False))
        assert_that(report.theorem["checks"], equal_to({}))
        assert_that(report.stage("arc_code_dual").d, equal_to(4))
        assert_that(report.stage("subfield_code").observations, has_key("dimension_is_2m_plus_2"))
        assert_that(any("verdicts disabled" in note for note in report.provenance), is_(True))
        assert_that(report.failed_checks(), equal_to([]))

    def test_tiny_budget_falls_back_to_search(self, gf16, caplog):
        with caplog.at_level(logging.INFO, logger="maxarc.analysis"):
            report = denniston_report(DennistonSpec(gf16, 2), budget=1)
        assert_that(report.stage("arc_code").d, is_(None))
        assert_that(report.stage("arc_code").as_dict()["distribution"], equal_to(NOT_ENUMERATED))
        dual = report.stage("subfield_code_dual")
        assert_that(dual.d, equal_to(4))
        assert_that(dual.methods, equal_to([DistanceMethod.LOW_WEIGHT_SEARCH]))
        assert_that(report.failed_checks(), equal_to([]))
        assert_that(any("unenumerated" in r.getMessage() for r in caplog.records), is_(True))

    def test_variants_differ(self, gf16):
        default, alternative = denniston_variants(gf16, 2)
        assert_that(default.subgroup_basis, equal_to([1, 2]))
        assert_that(alternative.subgroup_basis, equal_to([2, 4]))
        assert_that(alternative.beta, equal_to(gf16.admissible_betas()[-1]))


class TestDennistonWorkedExample(object):
    def test_stage_parameters(self, denniston_m5):
        parameters = {name: record.parameters for name, record in denniston_m5.stages.items()}
        assert_that(parameters["arc_code"], equal_to([232, 3, 224]))
        assert_that(parameters["arc_code_dual"], equal_to([232, 229, 3]))
        assert_that(parameters["augmented_code"], equal_to([232, 4, 8]))
        assert_that(parameters["subfield_code"], equal_to([232, 12, 8]))
        assert_that(parameters["subfield_code_dual"], equal_to([232, 220, 4]))

    def test_arc_code_distribution(self, denniston_m5):
        distribution = denniston_m5.stage("arc_code").distribution
        assert_that(distribution.items(), equal_to([(0, 1), (224, 29667), (232, 3100)]))

    def test_no_failed_checks(self, denniston_m5):
        assert_that(denniston_m5.parameters["modulus"], equal_to(37))
        assert_that(denniston_m5.failed_checks(), equal_to([]))

    def test_sweep_with_custom_variants(self):
        reports = denniston_sweep((4,), variants=lambda ctx, s: [DennistonSpec(ctx, s)])
        assert_that([report.parameters["s"] for report in reports], equal_to([2, 3]))


class TestPG3Report(object):
    def test_example_parameters(self, pg3_m5):
        parameters = {name: record.parameters for name, record in pg3_m5.stages.items()}
        assert_that(parameters, equal_to({
            "arc_code": [33, 4, 30],
            "arc_code_dual": [33, 29, 5],
            "subfield_code": [33, 11, 12],
            "subfield_code_dual": [33, 22, 5],
            "extended_dual": [34, 22, 6],
        }))

    def test_example_distribution(self, pg3_m5):
        distribution = pg3_m5.stage("arc_code").distribution
        assert_that(distribution.items(), equal_to([(0, 1), (30, 169136), (31, 32736), (32, 508431), (33, 338272)]))

    def test_checks(self, pg3_m5):
        assert_that(pg3_m5.failed_checks(), equal_to([]))
        assert_that(pg3_m5.stage("arc_code").checks["general_position"], is_(True))
        assert_that(pg3_m5.stage("arc_code").checks["mds"], is_(True))
        assert_that(pg3_m5.theorem["hypotheses_hold"], is_(True))
        assert_that(all(pg3_m5.theorem["checks"].values()), is_(True))

    def test_extended_dual(self, pg3_m5):
        extended = pg3_m5.stage("extended_dual")
        assert_that(extended.observations["even_weights_only"], is_(True))
        assert_that(extended.methods, equal_to([DistanceMethod.MACWILLIAMS, DistanceMethod.LOW_WEIGHT_SEARCH]))
        assert_that(extended.verdict.distance_optimal, is_(True))

    def test_geometry_fallback(self, gf16):
        report = pg3_report(PG3ArcSpec(gf16, 1), budget=2 ** 12)
        arc_code = report.stage("arc_code")
        assert_that((arc_code.d, arc_code.methods), equal_to((14, [DistanceMethod.GEOMETRY])))
        assert_that(report.stage("arc_code_dual").d, equal_to(5))
        assert_that(report.theorem["hypotheses_hold"], is_(False))
        assert_that(any(str(PG3_THEOREM_MIN_M) in note for note in report.provenance), is_(True))


class TestRateComparison(object):
    def test_denniston_example(self):
        rates = rate_comparison(CodeFamily.DENNISTON, 5, 3)
        assert_that((rates.r1, rates.r2), equal_to((Fraction(26, 32), Fraction(220, 232))))
        assert_that(rates.r2_exceeds_r1, is_(True))

    def test_pg3_example(self):
        rates = rate_comparison("pg3", 5)
        assert_that((rates.r1, rates.r2), equal_to((Fraction(21, 32), Fraction(22, 34))))
        assert_that(rates.as_dict()["s"], is_(None))

    def test_denniston_needs_s(self):
        with pytest.raises(InvalidParametersError):
            rate_comparison(CodeFamily.DENNISTON, 5)

    @pytest.mark.parametrize("m", range(4, 9))
    def test_denniston_rate_exceeds_hamming(self, m):
        for s in range(2, m):
            assert_that(rate_comparison(CodeFamily.DENNISTON, m, s).r2_exceeds_r1, is_(True))


@pytest.mark.slow
class TestAcceptanceSweeps(object):
    def test_paper_example_suite(self):
        result = paper_example_suite()
        assert_that(result.checks, has_length(18))
        assert_that([check.name for check in result.failures], equal_to([]))
        assert_that(result.notes, has_length(2))

    def test_denniston_sweep(self):
        reports = denniston_sweep((4, 5, 6, 7))
        assert_that(reports, has_length(2 * (2 + 3 + 4 + 5)))
        for report in reports:
            m = report.parameters["m"]
            n = report.stage("subfield_code").n
            assert_that(report.failed_checks(), equal_to([]))
            assert_that(report.stage("subfield_code").k, equal_to(2 * m + 2))
            assert_that(report.stage("subfield_code_dual").parameters, equal_to([n, n - 2 * m - 2, 4]))

    def test_pg3_sweep(self):
        reports = pg3_sweep((5, 6, 7))
        assert_that(reports, has_length(4 + 2 + 6))
        for report in reports:
            m = report.parameters["m"]
            q = 2 ** m
            assert_that(report.failed_checks(), equal_to([]))
            assert_that(report.stage("extended_dual").parameters, equal_to([q + 2, q - 2 * m, 6]))
