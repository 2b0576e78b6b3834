import pytest
from hamcrest import assert_that, equal_to, is_, none

from maxarc.arcs.denniston import DennistonSpec, denniston_arc
from maxarc.bitlinalg import BitMatrix
from maxarc.codes import BinaryCode, LinearCodeQ, augment, subfield_expand
from maxarc.errors import (
    BudgetExceededError,
    DimensionMismatchError,
    InvalidDistributionError,
    UnsupportedSearchWeightError,
)
from maxarc.weights import (
    WeightDistribution,
    is_mds,
    krawtchouk_column,
    low_weight_search,
    macwilliams_transform,
    maximal_arc_code_distribution,
    singleton_verdict,
    sphere_packing_verdict,
    weight_distribution,
)

HAMMING_GENERATOR = [
    [1, 0, 0, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 1],
    [0, 0, 1, 0, 1, 1, 0],
    [0, 0, 0, 1, 1, 1, 1],
]
HAMMING_CHECK = [
    [1, 0, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 1],
]


def _check_from_columns(columns, rows):
    data = [sum(((column >> i) & 1) << j for j, column in enumerate(columns)) for i in range(rows)]
    return BitMatrix(rows, len(columns), data)


@pytest.fixture
def hamming():
    return BinaryCode(BitMatrix.from_rows(HAMMING_GENERATOR))


class TestWeightDistribution(object):
    def test_wrong_length(self):
        with pytest.raises(InvalidDistributionError):
            WeightDistribution(3, [1, 0, 0])

    def test_negative_count(self):
        with pytest.raises(InvalidDistributionError):
            WeightDistribution(2, [1, -1, 0])

    def test_zero_code_has_no_distance(self):
        assert_that(WeightDistribution(3, [1, 0, 0, 0]).minimum_distance, is_(none()))

    def test_dict_round_trip(self):
        distribution = WeightDistribution.from_mapping(7, {0: 1, 3: 7, 4: 7, 7: 1})
        data = distribution.to_dict()
        assert_that(data, equal_to({"n": 7, "counts": {"0": "1", "3": "7", "4": "7", "7": "1"}}))
        assert_that(WeightDistribution.from_dict(data), equal_to(distribution))
        assert_that(distribution.enumerator_string(), equal_to("1 + 7 z^3 + 7 z^4 + 1 z^7"))


class TestEnumeration(object):
    def test_hamming_code(self, hamming):
        distribution = weight_distribution(hamming)
        assert_that(distribution.counts, equal_to([1, 0, 0, 7, 7, 0, 0, 1]))
        assert_that(distribution.minimum_distance, equal_to(3))
        assert_that(distribution.nonzero_weights(), equal_to([3, 4, 7]))

    @pytest.mark.parametrize("threads", [1, 2, 3, 8, 64])
    def test_thread_count_does_not_change_result(self, hamming, threads):
        assert_that(weight_distribution(hamming, threads=threads).counts, equal_to([1, 0, 0, 7, 7, 0, 0, 1]))

    def test_qary_repetition_code(self, gf4):
        distribution = weight_distribution(LinearCodeQ(gf4, [[1, 1, 1]]))
        assert_that(distribution.counts, equal_to([1, 0, 0, 3]))

    def test_qary_agrees_with_macwilliams(self, gf16):
        code = LinearCodeQ(gf16, [[1, 0, 3, 7, 9, 4], [0, 1, 11, 2, 15, 8]])
        primal = weight_distribution(code, threads=2)
        assert_that(primal.total, equal_to(256))
        assert_that(weight_distribution(code.dual()), equal_to(macwilliams_transform(primal, 16, 2)))

    def test_budget_exceeded(self, hamming):
        with pytest.raises(BudgetExceededError) as e:
            weight_distribution(hamming, budget=8)
        assert_that((e.value.required, e.value.budget), equal_to((16, 8)))

    def test_budget_from_environment(self, hamming, monkeypatch):
        monkeypatch.setenv("MAXARC_BUDGET", "15")
        with pytest.raises(BudgetExceededError):
            weight_distribution(hamming)


class TestMacWilliams(object):
    def test_krawtchouk_at_zero(self):
        assert_that(krawtchouk_column(3, 2, 0), equal_to([1, 3, 3, 1]))

    def test_even_weight_to_repetition(self):
        dual = macwilliams_transform(WeightDistribution(3, [1, 0, 3, 0]), 2, 2)
        assert_that(dual.counts, equal_to([1, 0, 0, 1]))

    def test_hamming_to_simplex(self, hamming):
        dual = macwilliams_transform(weight_distribution(hamming), 2, 4)
        assert_that(dual.counts, equal_to([1, 0, 0, 0, 7, 0, 0, 0]))

    def test_qary_repetition_dual(self):
        dual = macwilliams_transform(WeightDistribution(3, [1, 0, 0, 3]), 4, 1)
        assert_that(dual.counts, equal_to([1, 0, 9, 6]))

    def test_wrong_total(self):
        with pytest.raises(InvalidDistributionError):
            macwilliams_transform(WeightDistribution(3, [1, 0, 2, 0]), 2, 2)

    def test_non_integral_result(self):
        # sums to 4 but is not the distribution of any [3, 2] binary code
        with pytest.raises(InvalidDistributionError):
            macwilliams_transform(WeightDistribution(3, [1, 3, 0, 0]), 2, 2)

    def test_transform_is_an_involution(self, hamming):
        primal = weight_distribution(hamming)
        assert_that(macwilliams_transform(macwilliams_transform(primal, 2, 4), 2, 3), equal_to(primal))
        repetition = WeightDistribution(3, [1, 0, 0, 3])
        assert_that(macwilliams_transform(macwilliams_transform(repetition, 4, 1), 4, 2), equal_to(repetition))

    def test_subfield_code_against_enumerated_dual(self, gf8):
        expanded = subfield_expand(augment(denniston_arc(DennistonSpec(gf8, 2)).code()).code)
        orthogonal = expanded.dual()
        assert_that((expanded.n, expanded.k, orthogonal.k), equal_to((28, 8, 20)))
        primal = weight_distribution(expanded)
        assert_that(macwilliams_transform(primal, 2, expanded.k), equal_to(weight_distribution(orthogonal)))


class TestLowWeightSearch(object):
    def test_hamming(self):
        assert_that(low_weight_search(BitMatrix.from_rows(HAMMING_CHECK)), equal_to(3))

    def test_zero_column(self):
        assert_that(low_weight_search(_check_from_columns([1, 0, 2], 2)), equal_to(1))

    def test_repeated_column(self):
        assert_that(low_weight_search(_check_from_columns([1, 2, 1], 2)), equal_to(2))

    def test_extended_hamming(self):
        columns = [v | 8 for v in range(8)]
        assert_that(low_weight_search(_check_from_columns(columns, 4)), equal_to(4))

    def test_weight_six(self):
        columns = [1, 2, 4, 8, 16, 31]
        check = _check_from_columns(columns, 5)
        assert_that(low_weight_search(check), equal_to(6))
        assert_that(low_weight_search(check, wmax=5), is_(none()))

    def test_independent_columns(self):
        assert_that(low_weight_search(BitMatrix.identity(4)), is_(none()))

    @pytest.mark.parametrize("wmax", [0, 7])
    def test_unsupported_weight(self, wmax):
        with pytest.raises(UnsupportedSearchWeightError):
            low_weight_search(BitMatrix.identity(3), wmax=wmax)

    def test_too_many_rows(self):
        with pytest.raises(DimensionMismatchError):
            low_weight_search(BitMatrix.identity(27))


class TestBounds(object):
    @pytest.mark.parametrize("n,k,d,expected", [
        (7, 4, 3, (True, False, False, True)),
        (8, 4, 4, (True, True, True, False)),
        (34, 22, 6, (True, True, True, False)),
        (232, 220, 4, (True, True, True, False)),
        (7, 4, 5, (False, True, False, False)),
    ])
    def test_sphere_packing(self, n, k, d, expected):
        assert_that(tuple(sphere_packing_verdict(n, k, d, 2)), equal_to(expected))

    def test_singleton(self):
        assert_that(tuple(singleton_verdict(33, 4, 30)), equal_to((True, True)))
        assert_that(is_mds(33, 4, 29), is_(False))
        assert_that(singleton_verdict(33, 4, 31).bound_holds, is_(False))

    def test_maximal_arc_closed_form(self):
        distribution = maximal_arc_code_distribution(52, 4, 16)
        assert_that(distribution.items(), equal_to([(0, 1), (48, 3315), (52, 780)]))
        assert_that(distribution.total, equal_to(16 ** 3))
