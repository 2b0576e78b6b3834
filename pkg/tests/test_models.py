import json
from fractions import Fraction

import pytest
from hamcrest import assert_that, equal_to, is_, starts_with

from maxarc.constants import NOT_ENUMERATED
from maxarc.errors import InvalidParametersError
from maxarc.models import (
    CharSumReport,
    CodeFamily,
    CodeReport,
    DistanceMethod,
    ExampleCheck,
    OutputFormat,
    RateComparison,
    SpherePackingVerdict,
    StageRecord,
    SuiteResult,
    WeilSumResult,
)
from maxarc.weights import WeightDistribution


class TestCodeFamily(object):
    @pytest.mark.parametrize("string,expected", [
        ("denniston", CodeFamily.DENNISTON),
        ("Denniston", CodeFamily.DENNISTON),
        ("pg3", CodeFamily.PG3),
        (" PG3 ", CodeFamily.PG3),
    ])
    def test_from_string(self, string, expected):
        # Make sure we have no case sensitivity
        assert CodeFamily.from_string(string) == expected
        assert CodeFamily.from_string(string.upper()) == expected

    def test_from_string_on_exception(self):
        with pytest.raises(InvalidParametersError):
            CodeFamily.from_string("hermitian")


class TestOutputFormat(object):
    def test_from_string(self):
        assert OutputFormat.from_string("Markdown") is OutputFormat.MARKDOWN

    def test_unknown(self):
        with pytest.raises(InvalidParametersError):
            OutputFormat.from_string("yaml")


def test_distance_method_repr():
    assert repr(DistanceMethod.MACWILLIAMS) == "DistanceMethod.MACWILLIAMS"


class TestStageRecord(object):
    def test_as_dict(self):
        record = StageRecord("arc_code_dual", 2, 7, 4, 3, [DistanceMethod.ENUMERATION],
                             WeightDistribution(7, [1, 0, 0, 7, 7, 0, 0, 1]),
                             SpherePackingVerdict(True, True, True, True))
        record.checks["methods_agree"] = True
        data = record.as_dict()
        assert data["d_methods"] == ["enumeration"]
        assert data["sphere_packing"]["perfect"] is True
        assert "seconds" not in data
        assert record.parameters == [7, 4, 3]

    def test_not_enumerated(self):
        assert StageRecord("arc_code", 16, 52, 3).as_dict()["distribution"] == NOT_ENUMERATED

    def test_long_distribution_is_omitted(self):
        record = StageRecord("subfield_code", 2, 4096, 1, 4096, distribution=WeightDistribution(4096, [1] + [0] * 4096))
        assert_that(record.as_dict()["distribution"], starts_with("omitted"))

    def test_timing(self):
        record = StageRecord("arc_code", 2, 3, 1)
        record.elapsed = 0.5
        assert record.as_dict(include_timing=True)["seconds"] == 0.5


class TestCodeReport(object):
    def _report(self, hypotheses_hold):
        report = CodeReport(CodeFamily.PG3, {"m": 4, "h": 1})
        record = report.add_stage(StageRecord("arc_code", 16, 17, 4, 14))
        record.checks["mds"] = True
        record.checks["general_position"] = False
        report.theorem["hypotheses_hold"] = hypotheses_hold
        report.theorem["checks"]["extended_dual_parameters"] = False
        return report

    def test_theorem_checks_need_hypotheses(self):
        assert self._report(False).failed_checks() == ["arc_code.general_position"]
        assert self._report(True).failed_checks() == [
            "arc_code.general_position", "theorem.extended_dual_parameters"]

    def test_json(self):
        data = json.loads(self._report(False).to_json())
        assert data["family"] == "pg3"
        assert data["rates"] is None
        assert data["stages"][0]["d"] == 14

    def test_markdown(self):
        markdown = self._report(False).to_markdown()
        assert_that(markdown, starts_with("## pg3 code report"))
        assert "| arc_code | 16 | [17, 4, 14] | - |  |" in markdown


class TestCharSumReport(object):
    def test_agrees(self):
        report = CharSumReport(4, 2, 1, 0, 16, [16])
        assert report.agrees is True
        assert report.e == 2
        assert json.loads(report.to_json())["predicted_set"] == [16]

    def test_disagrees(self):
        assert CharSumReport(5, 1, 1, 1, 8, [0]).agrees is False


def test_weil_sum_result():
    assert WeilSumResult(16, 16, True).agrees is True
    assert WeilSumResult(0, 16, True).agrees is False


class TestSuiteResult(object):
    def test_failures(self):
        suite = SuiteResult([ExampleCheck("a", 1, 1), ExampleCheck("b", [33, 4, 30], [33, 4, 29])], ["note"])
        assert [check.name for check in suite.failures] == ["b"]
        data = json.loads(suite.to_json())
        assert data["failures"] == ["b"]
        assert data["checks"][1]["expected"] == "[33, 4, 30]"
        assert "**NO**" in suite.to_markdown()


class TestRateComparison(object):
    def test_as_dict(self):
        rates = RateComparison(CodeFamily.DENNISTON, 5, Fraction(26, 32), Fraction(220, 232), s=3)
        assert_that(rates.r2_exceeds_r1, is_(True))
        assert_that(rates.as_dict()["r1"], equal_to("13/16"))
