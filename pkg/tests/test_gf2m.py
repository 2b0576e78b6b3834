import numpy as np
import pytest
from hamcrest import assert_that, equal_to, is_, contains_exactly

from maxarc.errors import (
    FieldDegreeError,
    InvalidModulusError,
    FieldMismatchError,
    SubfieldError,
    ZeroInversionError,
    DependentBasisError,
    InvalidParametersError,
)
from maxarc.gf2m import (
    ArithOp,
    arith,
    build_field,
    default_beta,
    gf2_independent,
    is_irreducible,
    poly_mulmod,
    quadratic_irreducible,
    smallest_irreducible,
    span_values,
    trace_abs,
    trace_rel,
)


class TestPolynomials(object):
    @pytest.mark.parametrize("modulus,expected", [
        (7, True),
        (5, False),
        (11, True),
        (19, True),
        (37, True),
        (35, False),
        (1, False),
    ])
    def test_is_irreducible(self, modulus, expected):
        assert_that(is_irreducible(modulus), is_(expected))

    @pytest.mark.parametrize("m,expected", [(2, 7), (3, 11), (4, 19), (5, 37)])
    def test_smallest_irreducible(self, m, expected):
        assert_that(smallest_irreducible(m), equal_to(expected))

    def test_mulmod_reduces(self):
        # w^4 * w = w^5 = w^2 + 1 modulo x^5 + x^2 + 1
        assert_that(poly_mulmod(16, 2, 37), equal_to(5))


class TestBuildField(object):
    @pytest.mark.parametrize("m", [1, 17, 0])
    def test_degree_out_of_range(self, m):
        with pytest.raises(FieldDegreeError) as e:
            build_field(m)
        assert_that(e.value.parameters, equal_to({"m": m}))

    @pytest.mark.parametrize("m,modulus", [(2, 5), (3, 7), (5, 35)])
    def test_bad_modulus(self, m, modulus):
        with pytest.raises(InvalidModulusError):
            build_field(m, modulus)

    def test_default_modulus(self, gf16):
        assert_that(gf16.modulus, equal_to(19))
        assert_that(gf16.q, equal_to(16))

    def test_primitive_element_has_full_order(self, gf16):
        powers = {gf16.pow(gf16.primitive_element, i) for i in range(15)}
        assert_that(len(powers), equal_to(15))

    def test_equality_by_degree_and_modulus(self, gf32):
        assert_that(build_field(5, 37), equal_to(gf32))
        assert_that(build_field(5) != gf32, is_(False))
        assert_that(build_field(5, 41) == gf32, is_(False))


class TestScalarArithmetic(object):
    def test_gf4_multiplication(self, gf4):
        assert_that(gf4.mul(2, 2), equal_to(3))
        assert_that(gf4.mul(2, 3), equal_to(1))
        assert_that(gf4.inv(2), equal_to(3))

    def test_gf32_powers(self, gf32):
        # w^5 = w^2 + 1, w^11 = w^2 + w + 1, w^18 = w + 1, w^19 = w^2 + w
        assert_that([gf32.pow(2, e) for e in (5, 11, 18, 19)], contains_exactly(5, 7, 3, 6))

    def test_inverse_of_zero(self, gf8):
        with pytest.raises(ZeroInversionError):
            gf8.inv(0)
        with pytest.raises(ZeroDivisionError):
            gf8.div(1, 0)

    def test_sqrt_inverts_square(self, gf16):
        for x in range(16):
            assert_that(gf16.square(gf16.sqrt(x)), equal_to(x))

    @pytest.mark.parametrize("x,expected", [(0, 0), (1, 0), (2, 1), (3, 1)])
    def test_gf4_trace(self, gf4, x, expected):
        assert_that(gf4.trace_abs(x), equal_to(expected))

    def test_trace_is_balanced(self, gf32):
        assert_that(int(gf32.trace_table.sum()), equal_to(16))
        assert_that(gf32.trace_abs(1), equal_to(1))

    def test_relative_trace_lands_in_subfield(self, gf16):
        for x in range(16):
            assert_that(gf16.in_subfield(gf16.trace_rel(x, 2), 2), is_(True))
        assert_that(gf16.trace_rel(1, 2), equal_to(0))
        assert_that(gf16.trace_rel(7, 4), equal_to(7))

    def test_relative_trace_needs_divisor(self, gf16):
        with pytest.raises(SubfieldError):
            gf16.trace_rel(3, 3)


class TestVectorArithmetic(object):
    def test_mul_vec_matches_scalar(self, gf8):
        xs = gf8.elements()
        table = gf8.mul_vec(xs[:, None], xs[None, :])
        for a in range(8):
            for b in range(8):
                assert_that(int(table[a, b]), equal_to(gf8.mul(a, b)))

    def test_scale_table_rows(self, gf8):
        row = np.array([0, 1, 5, 7])
        table = gf8.scale_table(row)
        assert_that(table.shape, equal_to((8, 4)))
        assert_that(table[3].tolist(), equal_to([gf8.mul(3, int(x)) for x in row]))

    def test_frobenius_and_pow(self, gf16):
        xs = gf16.elements()
        assert_that(gf16.frobenius_vec(xs, 2).tolist(), equal_to([gf16.pow(int(x), 4) for x in xs]))
        assert_that(gf16.pow_vec(xs, 0).tolist(), equal_to([1] * 16))

    def test_inv_vec_rejects_zero(self, gf4):
        with pytest.raises(ZeroInversionError):
            gf4.inv_vec([1, 0])


class TestFieldProperties(object):
    @pytest.mark.parametrize("m", range(2, 9))
    def test_frobenius_is_additive(self, m):
        ctx = build_field(m)
        xs = ctx.elements()
        a = np.repeat(xs, ctx.q)
        b = np.tile(xs, ctx.q)
        for times in range(1, m):
            left = ctx.frobenius_vec(a ^ b, times)
            right = ctx.frobenius_vec(a, times) ^ ctx.frobenius_vec(b, times)
            assert_that(bool((left == right).all()), is_(True))

    @pytest.mark.parametrize("m", range(2, 9))
    def test_every_nonzero_element_is_invertible(self, m):
        ctx = build_field(m)
        assert_that([ctx.mul(ctx.inv(x), x) for x in range(1, ctx.q)], equal_to([1] * (ctx.q - 1)))
        nonzero = ctx.elements()[1:]
        assert_that(ctx.mul_vec(ctx.inv_vec(nonzero), nonzero).tolist(), equal_to([1] * (ctx.q - 1)))


class TestQuadratics(object):
    def test_gf4_admissible_betas(self, gf4):
        assert_that(gf4.admissible_betas(), equal_to([2, 3]))
        assert_that(gf4.default_beta(), equal_to(2))

    def test_odd_degree_admits_one(self, gf32):
        assert_that(gf32.default_beta(), equal_to(1))

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_matches_trace_criterion(self, m):
        # x^2 + b x + 1 is irreducible exactly when Tr(1/b) = 1
        ctx = build_field(m)
        for beta in range(1, ctx.q):
            assert_that(ctx.quadratic_irreducible(beta), is_(ctx.trace_abs(ctx.inv(beta)) == 1))


class TestBases(object):
    def test_span_values_order(self):
        assert_that(span_values([1, 2]).tolist(), equal_to([0, 1, 2, 3]))
        assert_that(span_values([4, 1]).tolist(), equal_to([0, 4, 1, 5]))

    def test_independence(self):
        assert_that(gf2_independent([1, 2, 4]), is_(True))
        assert_that(gf2_independent([1, 2, 3]), is_(False))

    def test_coordinate_table_inverts_span(self, gf16):
        basis = gf16.alternate_basis()
        table = gf16.coordinate_table(basis)
        values = span_values(basis)
        for index, value in enumerate(values):
            assert_that(int(table[value]), equal_to(index))

    @pytest.mark.parametrize("basis", [[1, 2, 3, 4], [1, 2, 4]])
    def test_dependent_basis(self, gf16, basis):
        with pytest.raises(DependentBasisError):
            gf16.coordinate_table(basis)


class TestFieldElement(object):
    def test_operators(self, gf32):
        w = gf32.element(2)
        assert_that(int(w ** 5), equal_to(5))
        assert_that(w * w.inverse(), equal_to(1))
        assert_that(w + w, equal_to(0))
        assert_that((w - 1) / w, equal_to(gf32.div(3, 2)))
        assert_that(w.sqrt() * w.sqrt(), equal_to(w))

    def test_mixed_fields(self, gf4, gf8):
        with pytest.raises(FieldMismatchError):
            gf4.element(1) + gf8.element(1)

    def test_out_of_range(self, gf4):
        with pytest.raises(InvalidParametersError):
            gf4.element(4)

    def test_hash_and_bool(self, gf8):
        assert_that(len({gf8.element(3), gf8.element(3), gf8.element(4)}), equal_to(2))
        assert_that(bool(gf8.element(0)), is_(False))

    @pytest.mark.parametrize("kind,b,expected", [
        (ArithOp.ADD, 3, 1),
        ("mul", 3, 1),
        ("pow", 2, 3),
        ("inv", None, 3),
        ("sqrt", None, 3),
    ])
    def test_arith(self, gf4, kind, b, expected):
        a = gf4.element(2)
        other = gf4.element(b) if isinstance(b, int) and kind in (ArithOp.ADD, "mul") else b
        assert_that(arith(a, other, kind), equal_to(expected))

    def test_module_helpers(self, gf4, gf16):
        assert_that(trace_abs(gf4.element(2)), equal_to(1))
        assert_that(trace_rel(gf16.element(1), 2), equal_to(0))
        assert_that(quadratic_irreducible(gf4.element(1)), is_(False))
        assert_that(default_beta(gf4), equal_to(2))
