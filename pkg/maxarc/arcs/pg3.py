"""The (q+1)-arc {(x^(2^h+1), x^(2^h), x, 1) : x in GF(q)} + {(1,0,0,0)} of PG(3, 2^m)."""
import logging
from math import gcd

from maxarc.arcs.base import ArcConstruction
from maxarc.arcs.geometry import ProjPoint
from maxarc.constants import PG3_GCD_MSG
from maxarc.errors import InvalidArcParametersError

logger = logging.getLogger(__name__)


class PG3ArcSpec(object):
    """Validated parameters of the PG(3) arc.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field GF(2^m).
        h (int): Exponent with gcd(m, h) = 1.

    Raises:
        maxarc.errors.InvalidArcParametersError: If h < 1 or gcd(m, h) != 1.
    """

    def __init__(self, ctx, h):
        divisor = gcd(ctx.m, h)
        if h < 1 or divisor != 1:
            raise InvalidArcParametersError(PG3_GCD_MSG.format(ctx.m, h, divisor), parameters={"m": ctx.m, "h": h})
        self.ctx = ctx
        self.h = h
        self.diagnostics = []

    @property
    def n(self):
        return self.ctx.q + 1

    def __repr__(self):
        return "PG3ArcSpec(m={}, h={})".format(self.ctx.m, self.h)


class PG3Arc(ArcConstruction):
    """Columns (x^(2^h+1), x^(2^h), x, 1) for x in integer order, then (1, 0, 0, 0)."""

    DIMENSION = 3

    def _build_points(self):
        ctx = self.ctx
        xs = ctx.elements()
        twisted = ctx.frobenius_vec(xs, self.spec.h)
        products = ctx.mul_vec(twisted, xs)
        points = [ProjPoint((int(p), int(t), int(x), 1)) for p, t, x in zip(products, twisted, xs)]
        points.append(ProjPoint((1, 0, 0, 0)))
        return points


def pg3_arc(spec):
    """Build the PG(3) arc of ``spec``.

    Args:
        spec (PG3ArcSpec): Validated parameters.

    Returns:
        PG3Arc: Exposes ``points`` and the 4 x (q+1) ``generator_matrix()``.
    """
    return PG3Arc(spec)
