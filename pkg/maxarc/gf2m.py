"""Arithmetic in GF(2^m) with an explicit modulus.

Elements are m-bit integers, bit i holding the coefficient of w^i where w is a root of the modulus.
A :class:`FieldCtx` owns log/antilog tables built from a discovered primitive element, and offers
both scalar operations on integer encodings and vectorized operations on numpy arrays of encodings.
:class:`FieldElement` wraps an encoding together with its context for operator-style use.

Examples:
    Reproduce the multiplication rule of GF(32) modulo x^5 + x^2 + 1::

        from maxarc.gf2m import build_field

        ctx = build_field(5, 37)
        w = ctx.element(2)
        assert int(w ** 5) == 5  # w^5 = w^2 + 1
"""
import logging

import numpy as np
from enum import Enum

from maxarc.constants import (
    MIN_FIELD_DEGREE,
    MAX_FIELD_DEGREE,
    FIELD_DEGREE_MSG,
    MODULUS_DEGREE_MSG,
    REDUCIBLE_MODULUS_MSG,
    FIELD_MISMATCH_MSG,
    DEPENDENT_BASIS_MSG,
)
from maxarc.errors import (
    FieldDegreeError,
    InvalidModulusError,
    FieldMismatchError,
    SubfieldError,
    ZeroInversionError,
    DependentBasisError,
    InvalidParametersError,
)

logger = logging.getLogger(__name__)


def poly_mod(a, b):
    """Remainder of the GF(2)[x] division of ``a`` by ``b`` (both as coefficient bit masks)."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def poly_mulmod(a, b, modulus):
    """Product of reduced polynomials ``a`` and ``b`` modulo ``modulus`` over GF(2)."""
    degree = modulus.bit_length() - 1
    result = 0
    while b:
        if b & 1:
            result ^= a
        b >>= 1
        a <<= 1
        if (a >> degree) & 1:
            a ^= modulus
    return result


def poly_powmod(a, e, modulus):
    result = 1
    while e:
        if e & 1:
            result = poly_mulmod(result, a, modulus)
        a = poly_mulmod(a, a, modulus)
        e >>= 1
    return result


def is_irreducible(modulus):
    """Decide irreducibility over GF(2) by trial division with every polynomial of degree <= deg/2.

    Args:
        modulus (int): Coefficient bit mask of a polynomial of degree at least 1.

    Returns:
        bool: True if the polynomial has no factor of smaller positive degree.
    """
    degree = modulus.bit_length() - 1
    if degree < 1:
        return False
    for divisor in range(2, 1 << (degree // 2 + 1)):
        if poly_mod(modulus, divisor) == 0:
            return False
    return True


def smallest_irreducible(m):
    """Return the smallest irreducible degree-``m`` polynomial by integer value."""
    for candidate in range((1 << m) + 1, 1 << (m + 1), 2):
        if is_irreducible(candidate):
            return candidate
    raise InvalidModulusError("No irreducible polynomial of degree {}".format(m))  # pragma: no cover


def _prime_factors(n):
    factors, p = [], 2
    while p * p <= n:
        if n % p == 0:
            factors.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        factors.append(n)
    return factors


def _find_primitive_element(m, modulus):
    order = (1 << m) - 1
    cofactors = [order // p for p in _prime_factors(order)]
    for g in range(2, 1 << m):
        if all(poly_powmod(g, c, modulus) != 1 for c in cofactors):
            return g
    raise InvalidModulusError("No primitive element found for modulus {}".format(modulus))  # pragma: no cover


class ArithOp(Enum):
    """Operations accepted by :func:`arith`."""

    ADD = "add"
    MUL = "mul"
    INV = "inv"
    POW = "pow"
    SQRT = "sqrt"


class FieldCtx(object):
    """Immutable context of GF(2^m): modulus, primitive element and log/antilog tables.

    Instances are created by :func:`build_field`. All methods taking ``x`` expect integer encodings;
    methods with a ``_vec`` suffix take and return numpy arrays of encodings.

    Args:
        m (int): Extension degree.
        modulus (int): Irreducible degree-m polynomial as a coefficient bit mask.
        primitive_element (int): Encoding of a generator of the multiplicative group.
    """

    def __init__(self, m, modulus, primitive_element):
        self.m = m
        self.modulus = modulus
        self.q = 1 << m
        self.primitive_element = primitive_element
        order = self.q - 1
        exp = [0] * (2 * order)
        log = [0] * self.q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = poly_mulmod(x, primitive_element, modulus)
        exp[order:] = exp[:order]
        self._exp = exp
        self._log = log
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self._trace_table = None

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and (self.m, self.modulus) == (other.m, other.modulus)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.m, self.modulus))

    def __repr__(self):
        return "FieldCtx(m={}, modulus={})".format(self.m, self.modulus)

    def element(self, bits):
        """Wrap an encoding as a :class:`FieldElement` of this field."""
        return FieldElement(self, bits)

    def elements(self):
        """All 2^m encodings as a numpy array, in integer order."""
        return np.arange(self.q, dtype=np.int64)

    # scalar arithmetic

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise ZeroInversionError("Zero has no inverse in GF(2^{})".format(self.m))
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroInversionError("Zero has no inverse in GF(2^{})".format(self.m))
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def square(self, a):
        return self.mul(a, a)

    def frobenius(self, a, times=1):
        """Return a^(2^times)."""
        if a == 0:
            return 0
        return self._exp[(self._log[a] << times) % (self.q - 1)]

    def sqrt(self, a):
        """Square root as (m-1)-fold squaring, x -> x^(2^(m-1))."""
        for _ in range(self.m - 1):
            a = self.mul(a, a)
        return a

    def log(self, a):
        """Discrete logarithm of a nonzero element to the base of the primitive element."""
        if a == 0:
            raise ZeroInversionError("Zero has no discrete logarithm")
        return self._log[a]

    def trace_abs(self, x):
        """Absolute trace Tr(x) = x + x^2 + ... + x^(2^(m-1)), returned as 0 or 1."""
        acc, t = 0, x
        for _ in range(self.m):
            acc ^= t
            t = self.mul(t, t)
        return acc

    def trace_rel(self, x, e):
        """Relative trace onto GF(2^e): the sum of x^(2^(e*i)) for i < m/e.

        Raises:
            maxarc.errors.SubfieldError: If ``e`` does not divide m.
        """
        if e <= 0 or self.m % e:
            raise SubfieldError("{} does not divide m={}".format(e, self.m), parameters={"e": e, "m": self.m})
        acc, t = 0, x
        for _ in range(self.m // e):
            acc ^= t
            t = self.frobenius(t, e)
        return acc

    def in_subfield(self, x, e):
        """True iff x lies in GF(2^e), i.e. x^(2^e) = x."""
        return self.frobenius(x, e) == x

    def quadratic_irreducible(self, beta):
        """True iff x^2 + beta*x + 1 has no root in the field, by exhaustive root search."""
        xs = self.elements()
        values = self.square_vec(xs) ^ self.scale(beta, xs) ^ 1
        return not bool((values == 0).any())

    def default_beta(self):
        """Smallest encoding beta with x^2 + beta*x + 1 irreducible."""
        for beta in range(1, self.q):
            if self.quadratic_irreducible(beta):
                return beta
        raise InvalidParametersError("No admissible beta in GF(2^{})".format(self.m))  # pragma: no cover

    def admissible_betas(self):
        return [beta for beta in range(1, self.q) if self.quadratic_irreducible(beta)]

    # vectorized arithmetic

    def mul_vec(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        product = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, product)

    def scale(self, c, xs):
        """Multiply every entry of ``xs`` by the scalar ``c``."""
        xs = np.asarray(xs, dtype=np.int64)
        if c == 0:
            return np.zeros_like(xs)
        product = self.exp_table[self.log_table[xs] + self._log[c]]
        return np.where(xs == 0, 0, product)

    def square_vec(self, xs):
        return self.frobenius_vec(xs, 1)

    def frobenius_vec(self, xs, times=1):
        xs = np.asarray(xs, dtype=np.int64)
        shifted = self.exp_table[(self.log_table[xs] << times) % (self.q - 1)]
        return np.where(xs == 0, 0, shifted)

    def pow_vec(self, xs, e):
        xs = np.asarray(xs, dtype=np.int64)
        powered = self.exp_table[(self.log_table[xs] * e) % (self.q - 1)]
        if e == 0:
            return np.ones_like(xs)
        return np.where(xs == 0, 0, powered)

    def inv_vec(self, xs):
        xs = np.asarray(xs, dtype=np.int64)
        if (xs == 0).any():
            raise ZeroInversionError("Zero has no inverse in GF(2^{})".format(self.m))
        return self.exp_table[(self.q - 1 - self.log_table[xs]) % (self.q - 1)]

    def sqrt_vec(self, xs):
        return self.frobenius_vec(xs, self.m - 1)

    @property
    def trace_table(self):
        """numpy array mapping every encoding to its absolute trace (0 or 1)."""
        if self._trace_table is None:
            xs = self.elements()
            acc, t = np.zeros_like(xs), xs
            for _ in range(self.m):
                acc ^= t
                t = self.square_vec(t)
            self._trace_table = acc
        return self._trace_table

    def scale_table(self, row):
        """The q x n array whose row ``c`` is ``c * row``."""
        row = np.asarray(row, dtype=np.int64)
        return self.mul_vec(self.elements()[:, None], row[None, :])

    # bases

    def polynomial_basis(self):
        """The basis {1, w, ..., w^(m-1)}."""
        return [1 << i for i in range(self.m)]

    def alternate_basis(self):
        """The basis {1, 1+w, 1+w+w^2, ...}, triangular against the polynomial basis."""
        return [(1 << (i + 1)) - 1 for i in range(self.m)]

    def coordinate_table(self, basis):
        """Map every encoding to its coordinate word over ``basis`` (bit t = coefficient of basis[t]).

        Args:
            basis (list[int]): m encodings forming a GF(2)-basis.

        Returns:
            numpy.ndarray: Array of length q, indexed by encoding.

        Raises:
            maxarc.errors.DependentBasisError: If ``basis`` does not span the field.
        """
        basis = [int(b) for b in basis]
        if len(basis) != self.m:
            raise DependentBasisError("A basis of GF(2^{}) needs {} elements, got {}".format(
                self.m, self.m, len(basis)))
        values = span_values(basis)
        if np.unique(values).size != self.q:
            raise DependentBasisError(DEPENDENT_BASIS_MSG.format(basis))
        table = np.zeros(self.q, dtype=np.int64)
        table[values] = np.arange(self.q, dtype=np.int64)
        return table


def span_values(elements):
    """All GF(2)-combinations of ``elements``; combination c sits at index c (bit t selects elements[t])."""
    values = np.zeros(1, dtype=np.int64)
    for element in elements:
        values = np.concatenate([values, values ^ int(element)])
    return values


class FieldElement(object):
    """An element of GF(2^m) bound to its context.

    Supports ``+``, ``-``, ``*``, ``/``, ``**`` and equality; combining elements of different
    contexts raises :class:`~maxarc.errors.FieldMismatchError`.

    Args:
        ctx (FieldCtx): The field.
        bits (int): The encoding, 0 <= bits < 2^m.
    """

    __slots__ = ("ctx", "bits")

    def __init__(self, ctx, bits):
        bits = int(bits)
        if not 0 <= bits < ctx.q:
            raise InvalidParametersError("{} is not an element of GF(2^{})".format(bits, ctx.m))
        self.ctx = ctx
        self.bits = bits

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx != self.ctx:
                raise FieldMismatchError(FIELD_MISMATCH_MSG.format(self.ctx, other.ctx))
            return other.bits
        if isinstance(other, (int, np.integer)):
            return FieldElement(self.ctx, other).bits
        return NotImplemented

    def __add__(self, other):
        bits = self._coerce(other)
        if bits is NotImplemented:
            return bits
        return FieldElement(self.ctx, self.bits ^ bits)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        bits = self._coerce(other)
        if bits is NotImplemented:
            return bits
        return FieldElement(self.ctx, self.ctx.mul(self.bits, bits))

    __rmul__ = __mul__

    def __truediv__(self, other):
        bits = self._coerce(other)
        if bits is NotImplemented:
            return bits
        return FieldElement(self.ctx, self.ctx.div(self.bits, bits))

    def __pow__(self, e):
        return FieldElement(self.ctx, self.ctx.pow(self.bits, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx == other.ctx and self.bits == other.bits
        if isinstance(other, (int, np.integer)):
            return self.bits == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.ctx, self.bits))

    def __int__(self):
        return self.bits

    __index__ = __int__

    def __bool__(self):
        return self.bits != 0

    def __repr__(self):
        return "FieldElement({}, GF(2^{}))".format(self.bits, self.ctx.m)

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.bits))

    def sqrt(self):
        return FieldElement(self.ctx, self.ctx.sqrt(self.bits))


def build_field(m, modulus=None):
    """Build the context of GF(2^m).

    Args:
        m (int): Extension degree, 2 <= m <= 16.
        modulus (int): Degree-m irreducible polynomial as a coefficient bit mask. Defaults to the
            smallest irreducible polynomial of degree m by integer value.

    Returns:
        FieldCtx: The context, with tables built and a primitive element discovered.

    Raises:
        maxarc.errors.FieldDegreeError: If m is out of range.
        maxarc.errors.InvalidModulusError: If the modulus has the wrong degree or is reducible.
    """
    if not MIN_FIELD_DEGREE <= m <= MAX_FIELD_DEGREE:
        raise FieldDegreeError(FIELD_DEGREE_MSG.format(m, MIN_FIELD_DEGREE, MAX_FIELD_DEGREE), parameters={"m": m})
    if modulus is None:
        modulus = smallest_irreducible(m)
        logger.debug("default modulus for m={}: {}".format(m, modulus))
    if modulus.bit_length() - 1 != m:
        raise InvalidModulusError(MODULUS_DEGREE_MSG.format(modulus, m), parameters={"modulus": modulus})
    if not is_irreducible(modulus):
        raise InvalidModulusError(REDUCIBLE_MODULUS_MSG.format(modulus), parameters={"modulus": modulus})
    primitive = _find_primitive_element(m, modulus)
    logger.debug("GF(2^{}) modulus {} primitive element {}".format(m, modulus, primitive))
    return FieldCtx(m, modulus, primitive)


def _same_ctx(a, b):
    if a.ctx != b.ctx:
        raise FieldMismatchError(FIELD_MISMATCH_MSG.format(a.ctx, b.ctx))
    return a.ctx


def arith(a, b, kind):
    """Dispatch a field operation.

    Args:
        a (FieldElement): First operand.
        b (FieldElement|int): Second operand; the exponent for ``pow``; ignored for ``inv`` and ``sqrt``.
        kind (ArithOp|str): The operation.

    Returns:
        FieldElement: The result.

    Raises:
        maxarc.errors.ZeroInversionError: When inverting zero.
        maxarc.errors.FieldMismatchError: When the operands live in different fields.
    """
    kind = ArithOp(kind) if not isinstance(kind, ArithOp) else kind
    ctx = a.ctx
    if kind is ArithOp.ADD:
        return FieldElement(_same_ctx(a, b), a.bits ^ b.bits)
    if kind is ArithOp.MUL:
        return FieldElement(_same_ctx(a, b), ctx.mul(a.bits, b.bits))
    if kind is ArithOp.POW:
        return FieldElement(ctx, ctx.pow(a.bits, int(b)))
    if kind is ArithOp.INV:
        return FieldElement(ctx, ctx.inv(a.bits))
    return FieldElement(ctx, ctx.sqrt(a.bits))


def trace_abs(x):
    """Absolute trace of a :class:`FieldElement`, as the int 0 or 1."""
    return x.ctx.trace_abs(x.bits)


def trace_rel(x, e):
    """Relative trace of ``x`` onto GF(2^e), as a :class:`FieldElement` of the same field."""
    return FieldElement(x.ctx, x.ctx.trace_rel(x.bits, e))


def quadratic_irreducible(beta):
    """True iff x^2 + beta*x + 1 is irreducible over the field of ``beta``."""
    return beta.ctx.quadratic_irreducible(beta.bits)


def default_beta(ctx):
    """Smallest admissible beta of ``ctx`` as a :class:`FieldElement`."""
    return FieldElement(ctx, ctx.default_beta())


def gf2_independent(elements):
    """True iff the encodings are linearly independent over GF(2)."""
    values = span_values(elements)
    return np.unique(values).size == values.size

