"""Brute-force character sums over GF(2^m) and the closed forms they are checked against.

The additive character is chi(x) = (-1)^Tr(x), so every sum over a set of field values equals
``size - 2 * (number of values with trace 1)``. All sums are exhaustive.

* :func:`weil_affine`: sums of chi(b*f(x)) for affine 2-polynomials f.
* :func:`coulter_sum` and :func:`coulter_predict`: S_h(a, b), the sum of chi(a*x^(2^h+1) + b*x).
* :func:`denniston_count_N` and :func:`pg3_count_N`: the zero counts behind the subfield-code
  dimension arguments of the two arc families.
"""
import logging
from math import gcd

import numpy as np

from maxarc.errors import InvalidCharSumParametersError
from maxarc.models import CharSumReport, WeilSumResult, CountIdentityCheck

logger = logging.getLogger(__name__)


def character_sum(ctx, values):
    """Sum of (-1)^Tr(v) over ``values``."""
    values = np.asarray(values, dtype=np.int64)
    return int(values.size - 2 * int(ctx.trace_table[values].sum()))


def _chi(ctx, x):
    return 1 - 2 * int(ctx.trace_table[x])


def weil_affine(ctx, coeffs, a, b):
    """Character sum of b*f(x) for the affine polynomial f(x) = a_r x^(2^r) + ... + a_0 x + a.

    The closed form is chi(b*a) * q when b*a_r + (b*a_(r-1))^2 + ... + (b*a_0)^(2^r) = 0, else 0.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        coeffs (list[int]): a_r, ..., a_0, highest 2-power first.
        a (int): The constant term.
        b (int): Nonzero twist.

    Returns:
        maxarc.models.WeilSumResult: Brute value, predicted value and whether the condition held.

    Raises:
        maxarc.errors.InvalidCharSumParametersError: If b = 0.
    """
    if b == 0:
        raise InvalidCharSumParametersError("Weil sums need b != 0", parameters={"b": b})
    coeffs = [int(c) for c in coeffs]
    r = len(coeffs) - 1
    xs = ctx.elements()
    values = np.full(ctx.q, a, dtype=np.int64)
    condition = 0
    for index, coefficient in enumerate(coeffs):
        power = r - index
        values ^= ctx.scale(coefficient, ctx.frobenius_vec(xs, power))
        condition ^= ctx.frobenius(ctx.mul(b, coefficient), index)
    brute = character_sum(ctx, ctx.scale(b, values))
    holds = condition == 0
    predicted = _chi(ctx, ctx.mul(b, a)) * ctx.q if holds else 0
    return WeilSumResult(brute, predicted, holds)


def coulter_sum(ctx, a, b, h):
    """S_h(a, b): the exhaustive sum of chi(a*x^(2^h+1) + b*x) over GF(q)."""
    xs = ctx.elements()
    values = ctx.scale(a, ctx.mul_vec(ctx.frobenius_vec(xs, h), xs)) ^ ctx.scale(b, xs)
    return character_sum(ctx, values)


def _linearized_roots(ctx, a, b, h):
    """All x with a^(2^h) x^(2^(2h)) + a x = b^(2^h)."""
    xs = ctx.elements()
    left = ctx.scale(ctx.frobenius(a, h), ctx.frobenius_vec(xs, 2 * h)) ^ ctx.scale(a, xs)
    return [int(x) for x in xs[left == ctx.frobenius(b, h)]]


def coulter_predict(ctx, a, b, h):
    """Value set admitted for S_h(a, b) by the closed-form evaluation.

    With e = gcd(m, h):

    * m/e odd: 0 when b = 0; otherwise, with c^(2^h+1) = a and b' = b/c, +-2^((m+e)/2) when the
      relative trace of b' onto GF(2^e) is 1, else 0.
    * m/e even, b = 0: -(-1)^(m/2e) 2^(m/2+e) if a is a (2^e+1)-th power, else (-1)^(m/2e) 2^(m/2).
    * m/e even, a not a power: (-1)^(m/2e) 2^(m/2) chi(a x0^(2^h+1)) with x0 the unique root of
      a^(2^h) x^(2^(2h)) + a x = b^(2^h).
    * m/e even, a a power, b != 0: 0 without a root. With roots the printed evaluation is ambiguous,
      so the set is the union of both branch values over every root.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        a (int): Nonzero coefficient of x^(2^h+1).
        b (int): Coefficient of x.
        h (int): The exponent.

    Returns:
        tuple[frozenset[int], bool]: The admissible values and whether the ambiguous branch was used.

    Raises:
        maxarc.errors.InvalidCharSumParametersError: If a = 0.
    """
    if a == 0:
        raise InvalidCharSumParametersError("The closed form needs a != 0", parameters={"a": a})
    m = ctx.m
    e = gcd(m, h)
    order = ctx.q - 1
    if (m // e) % 2:
        if b == 0:
            return frozenset([0]), False
        # x -> x^(2^h+1) is a permutation here, so a has a unique such root
        root = ctx.pow(a, pow((1 << h) + 1, -1, order))
        if ctx.trace_rel(ctx.div(b, root), e) == 1:
            magnitude = 1 << ((m + e) // 2)
            return frozenset([magnitude, -magnitude]), False
        return frozenset([0]), False
    sign = -1 if (m // (2 * e)) % 2 else 1
    small = sign * (1 << (m // 2))
    large = -sign * (1 << (m // 2 + e))
    is_power = ctx.log(a) % ((1 << e) + 1) == 0
    if b == 0:
        return frozenset([large if is_power else small]), False
    roots = _linearized_roots(ctx, a, b, h)
    if not is_power:
        x0 = roots[0]
        return frozenset([small * _chi(ctx, ctx.mul(a, ctx.pow(x0, (1 << h) + 1)))]), False
    if not roots:
        return frozenset([0]), False
    values = set()
    for x0 in roots:
        chi = _chi(ctx, ctx.mul(a, ctx.pow(x0, (1 << h) + 1)))
        values.update([large * chi, small * chi])
    logger.debug("ambiguous closed form for a={} b={} h={}: {}".format(a, b, h, sorted(values)))
    return frozenset(values), True


def coulter_report(ctx, a, b, h):
    """Brute S_h(a, b) next to :func:`coulter_predict`, as a :class:`~maxarc.models.CharSumReport`."""
    predicted, ambiguous = coulter_predict(ctx, a, b, h)
    report = CharSumReport(ctx.m, h, a, b, coulter_sum(ctx, a, b, h), predicted, ambiguous)
    if not report.agrees:
        logger.warning("S_{}({}, {}) = {} is outside {}".format(h, a, b, report.brute_value, sorted(predicted)))
    return report


def coulter_sweep(ctx, h):
    """Reports for every a != 0 and every b, in integer order.

    Returns:
        list[maxarc.models.CharSumReport]: q(q-1) reports.
    """
    return [coulter_report(ctx, a, b, h) for a in range(1, ctx.q) for b in range(ctx.q)]


def _denniston_parts(spec):
    """Per lambda in H*: the values u*(y + sqrt(beta)*sqrt(y)) and y + 1 over all y."""
    ctx = spec.ctx
    ys = ctx.elements()
    offsets = ys ^ ctx.scale(ctx.sqrt(spec.beta), ctx.sqrt_vec(ys))
    us = [ctx.sqrt(ctx.inv(lam)) for lam in spec.subgroup[1:]]
    return [ctx.scale(u, offsets) for u in us], ys ^ 1


def denniston_count_N(spec, a1, a2, b):
    """Number of (lambda, y) in H* x GF(q) with Tr(a1*u*(y + sqrt(beta)*sqrt(y)) + a2*(y + 1)) + b = 0.

    Args:
        spec (maxarc.arcs.denniston.DennistonSpec): The arc parameters.
        a1 (int): Field encoding.
        a2 (int): Field encoding.
        b (int): 0 or 1.

    Returns:
        int: The count, between 0 and q(h-1).
    """
    ctx = spec.ctx
    firsts, seconds = _denniston_parts(spec)
    traces = ctx.trace_table
    count = 0
    for first in firsts:
        total = traces[ctx.scale(a1, first)] ^ traces[ctx.scale(a2, seconds)] ^ b
        count += int(np.count_nonzero(total == 0))
    return count


def denniston_count_table(spec):
    """All counts of :func:`denniston_count_N` at once.

    With T[A, z] = (-1)^Tr(A*z), the number of y with Tr(a1*z1_y) = Tr(a2*z2_y) is
    (q + sum_y T[a1, z1_y] T[a2, z2_y]) / 2, a matrix product over all (a1, a2).

    Returns:
        numpy.ndarray: Shape (q, q, 2), indexed [a1, a2, b].
    """
    ctx = spec.ctx
    q = ctx.q
    elements = ctx.elements()
    signs = 1 - 2 * ctx.trace_table[ctx.mul_vec(elements[:, None], elements[None, :])]
    firsts, seconds = _denniston_parts(spec)
    right = signs[:, seconds]
    zero_counts = np.zeros((q, q), dtype=np.int64)
    for first in firsts:
        zero_counts += (q + signs[:, first] @ right.T) // 2
    table = np.empty((q, q, 2), dtype=np.int64)
    table[:, :, 0] = zero_counts
    table[:, :, 1] = len(firsts) * q - zero_counts
    return table


def denniston_count_iff(spec):
    """True iff the count reaches q(h-1) exactly at (a1, a2, b) = (0, 0, 0)."""
    table = denniston_count_table(spec)
    full = spec.ctx.q * (spec.h - 1)
    hits = [tuple(int(i) for i in index) for index in np.argwhere(table == full)]
    logger.debug("full counts at {}".format(hits))
    return hits == [(0, 0, 0)]


def _check_gcd(ctx, h):
    if gcd(ctx.m, h) != 1:
        raise InvalidCharSumParametersError("gcd(m={}, h={}) must be 1".format(ctx.m, h), parameters={"h": h})


def pg3_count_N(ctx, a, b, h):
    """Number of x in GF(q) with Tr(a*x^(2^h+1) + b*x) = 0, counted directly.

    Raises:
        maxarc.errors.InvalidCharSumParametersError: If gcd(m, h) != 1.
    """
    _check_gcd(ctx, h)
    xs = ctx.elements()
    values = ctx.scale(a, ctx.mul_vec(ctx.frobenius_vec(xs, h), xs)) ^ ctx.scale(b, xs)
    return int(np.count_nonzero(ctx.trace_table[values] == 0))


def pg3_count_identity(ctx, h):
    """Check N(A, B) = 2^(m-1) + S_h(A, B)/2 for every A != 0, and that N = q only at (0, 0).

    Returns:
        maxarc.models.CountIdentityCheck: Number of pairs checked and both outcomes.
    """
    _check_gcd(ctx, h)
    half = ctx.q // 2
    identity = True
    full_at = []
    checked = 0
    for a in range(ctx.q):
        for b in range(ctx.q):
            count = pg3_count_N(ctx, a, b, h)
            if count == ctx.q:
                full_at.append((a, b))
            if a:
                checked += 1
                if 2 * (count - half) != coulter_sum(ctx, a, b, h):
                    logger.warning("N({}, {}) = {} breaks the count identity".format(a, b, count))
                    identity = False
    return CountIdentityCheck(checked, identity, full_at == [(0, 0)])
