"""Denniston maximal arcs in PG(2, 2^m).

A Denniston arc is the union of the conics F_lambda = {lambda*x^2 + y^2 + beta*y*z + z^2 = 0} of a
standard pencil, taken over an additive subgroup H of GF(2^m) of order h = 2^s. It has
n = h*q + h - q points and meets every line in 0 or h points.

Examples:
    Build the arc of GF(32) modulo x^5 + x^2 + 1 with H spanned by {1, w, w^2}::

        from maxarc.gf2m import build_field
        from maxarc.arcs.denniston import DennistonSpec, denniston_arc

        arc = denniston_arc(DennistonSpec(build_field(5, 37), 3))
        assert arc.n == 232
"""
import logging

import numpy as np

from maxarc.arcs.base import ArcConstruction
from maxarc.arcs.geometry import ProjPoint
from maxarc.constants import (
    LAMBDA_INFINITY,
    DENNISTON_S_RANGE_MSG,
    BETA_INADMISSIBLE_MSG,
    DEPENDENT_BASIS_MSG,
    DEFAULT_APPLIED_MSG,
)
from maxarc.errors import InvalidArcParametersError, InadmissibleBetaError, DependentBasisError
from maxarc.gf2m import span_values, gf2_independent
from maxarc.models import Diagnostic

logger = logging.getLogger(__name__)


def _check_beta(ctx, beta):
    if not 0 < beta < ctx.q or not ctx.quadratic_irreducible(beta):
        raise InadmissibleBetaError(BETA_INADMISSIBLE_MSG.format(beta, ctx.m), parameters={"beta": beta})


def subgroup_span(ctx, basis):
    """All GF(2)-combinations of ``basis``, sorted by integer encoding.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        basis (list[int]): GF(2)-independent encodings.

    Returns:
        list[int]: The 2^s elements of the additive subgroup, 0 first.

    Raises:
        maxarc.errors.DependentBasisError: If the basis elements are dependent or not field elements.
    """
    basis = [int(b) for b in basis]
    if any(not 0 < b < ctx.q for b in basis) or not gf2_independent(basis):
        raise DependentBasisError(DEPENDENT_BASIS_MSG.format(basis), parameters={"basis": basis})
    return sorted(int(value) for value in span_values(basis))


def power_basis(ctx, s):
    """s independent elements chosen greedily from alpha, alpha^2, ... (alpha the primitive element)."""
    basis = []
    power = ctx.primitive_element
    while len(basis) < s:
        if gf2_independent(basis + [power]):
            basis.append(power)
        power = ctx.mul(power, ctx.primitive_element)
    return basis


def standard_pencil(ctx, lam, beta):
    """The conic F_lambda of the standard pencil with parameter ``beta``.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        lam (int|str): A field encoding, or :data:`~maxarc.constants.LAMBDA_INFINITY` for the line x = 0.
        beta (int): Encoding with x^2 + beta*x + 1 irreducible.

    Returns:
        list[ProjPoint]: {(1,0,0)} for lambda = 0; otherwise q + 1 points, (u, 1, 0) followed by
        (u*(y + sqrt(beta)*sqrt(y) + 1), y, 1) for y in integer order, where u = lambda^(-q/2).

    Raises:
        maxarc.errors.InadmissibleBetaError: If x^2 + beta*x + 1 is reducible.
    """
    _check_beta(ctx, beta)
    if lam == LAMBDA_INFINITY:
        return [ProjPoint((0, 1, 0))] + [ProjPoint((0, y, 1)) for y in range(ctx.q)]
    lam = int(lam)
    if lam == 0:
        return [ProjPoint((1, 0, 0))]
    u = ctx.sqrt(ctx.inv(lam))
    ys = ctx.elements()
    xs = ctx.scale(u, _pencil_offsets(ctx, beta, ys) ^ 1)
    return [ProjPoint((u, 1, 0))] + [ProjPoint((int(x), int(y), 1)) for x, y in zip(xs, ys)]


def _pencil_offsets(ctx, beta, ys):
    """y + sqrt(beta) * sqrt(y), vectorized over ``ys``."""
    return ys ^ ctx.scale(ctx.sqrt(beta), ctx.sqrt_vec(ys))


class DennistonSpec(object):
    """Validated parameters of a Denniston arc.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field GF(2^m).
        s (int): Subgroup exponent, 1 <= s < m. The main theorem needs 1 < s < m.
        subgroup_basis (list[int]): s independent encodings spanning H. Defaults to {1, w, ..., w^(s-1)}.
        beta (int): Pencil parameter. Defaults to the smallest admissible encoding.

    Attributes:
        diagnostics (list[maxarc.models.Diagnostic]): Notes on defaults applied and hypotheses missed.

    Raises:
        maxarc.errors.InvalidArcParametersError: If s is outside 1 <= s < m.
        maxarc.errors.DependentBasisError: If the basis is dependent or has the wrong size.
        maxarc.errors.InadmissibleBetaError: If beta is not admissible.
    """

    def __init__(self, ctx, s, subgroup_basis=None, beta=None):
        if not 1 <= s < ctx.m:
            raise InvalidArcParametersError(DENNISTON_S_RANGE_MSG.format(s, ctx.m), parameters={"s": s, "m": ctx.m})
        self.ctx = ctx
        self.s = s
        self.diagnostics = []
        if subgroup_basis is None:
            subgroup_basis = ctx.polynomial_basis()[:s]
            self._note(DEFAULT_APPLIED_MSG.format("subgroup basis", subgroup_basis))
        subgroup_basis = [int(b) for b in subgroup_basis]
        if len(subgroup_basis) != s:
            raise DependentBasisError("H needs a basis of {} elements, got {}".format(s, len(subgroup_basis)))
        self.subgroup = subgroup_span(ctx, subgroup_basis)
        self.subgroup_basis = subgroup_basis
        if beta is None:
            beta = ctx.default_beta()
            self._note(DEFAULT_APPLIED_MSG.format("beta", beta))
        _check_beta(ctx, int(beta))
        self.beta = int(beta)

    def _note(self, message):
        logger.info(message)
        self.diagnostics.append(Diagnostic(Diagnostic.NOTE, message))

    @property
    def h(self):
        return 1 << self.s

    @property
    def n(self):
        return self.h * self.ctx.q + self.h - self.ctx.q

    @property
    def theorem_applies(self):
        """True when 1 < s < m, the range in which the main theorem is asserted."""
        return 1 < self.s < self.ctx.m

    def __repr__(self):
        return "DennistonSpec(m={}, s={}, beta={}, basis={})".format(self.ctx.m, self.s, self.beta, self.subgroup_basis)


class DennistonArc(ArcConstruction):
    """The Denniston arc of a :class:`DennistonSpec`, in the canonical column layout.

    Columns: the h - 1 points (u_i, 1, 0) for lambda_i in H* (span order); then, for each y in integer
    order, the h - 1 points (u_i * (y + sqrt(beta)*sqrt(y) + 1), y, 1); finally (1, 0, 0). Here
    u_i = lambda_i^(-q/2), the square root of the inverse of lambda_i.
    """

    DIMENSION = 2

    def _build_points(self):
        ctx, spec = self.ctx, self.spec
        lambdas = spec.subgroup[1:]
        us = ctx.sqrt_vec(ctx.inv_vec(np.array(lambdas, dtype=np.int64)))
        ys = ctx.elements()
        offsets = _pencil_offsets(ctx, spec.beta, ys) ^ 1
        xs = ctx.mul_vec(offsets[:, None], us[None, :])
        points = [ProjPoint((int(u), 1, 0)) for u in us]
        for y, row in zip(ys, xs):
            points.extend(ProjPoint((int(x), int(y), 1)) for x in row)
        points.append(ProjPoint((1, 0, 0)))
        return points

    def augmented_generator_matrix(self):
        """The generator matrix with the all-ones row appended (4 x n)."""
        gen = self.generator_matrix()
        return np.vstack([gen, np.ones((1, gen.shape[1]), dtype=np.int64)])


def denniston_arc(spec):
    """Build the Denniston arc of ``spec``.

    Args:
        spec (DennistonSpec): Validated parameters.

    Returns:
        DennistonArc: Exposes ``points``, ``generator_matrix()`` (G_A) and
        ``augmented_generator_matrix()`` (G_A with the all-ones row).
    """
    return DennistonArc(spec)
