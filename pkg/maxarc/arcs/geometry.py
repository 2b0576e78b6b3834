"""Projective points and incidence scans in PG(2, 2^m) and PG(3, 2^m)."""
import logging
from collections import Counter

import numpy as np

from maxarc.constants import LINE_PROFILE_MAX_DEGREE, GENERAL_POSITION_MAX_POINTS
from maxarc.errors import InvalidParametersError, DimensionMismatchError
from maxarc.helpers import check_budget

logger = logging.getLogger(__name__)


class ProjPoint(object):
    """A point of PG(2, q) or PG(3, q) in canonical form: the last nonzero coordinate is 1.

    Two equal projective points therefore always have identical ``coords``.

    Args:
        coords (tuple[int]): Normalized field encodings, 3 or 4 of them.

    Raises:
        maxarc.errors.InvalidParametersError: If ``coords`` is all zero or not normalized.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(int(c) for c in coords)
        nonzero = [c for c in coords if c]
        if not nonzero:
            raise InvalidParametersError("The zero vector is not a projective point")
        if nonzero[-1] != 1:
            raise InvalidParametersError("Coordinates {} are not normalized".format(coords))
        self.coords = coords

    @classmethod
    def normalized(cls, ctx, coords):
        """Scale ``coords`` so the last nonzero entry becomes 1.

        Args:
            ctx (maxarc.gf2m.FieldCtx): The field.
            coords (iterable[int]): Any nonzero representative.

        Returns:
            ProjPoint: The canonical point.
        """
        coords = [int(c) for c in coords]
        nonzero = [c for c in coords if c]
        if not nonzero:
            raise InvalidParametersError("The zero vector is not a projective point")
        scale = ctx.inv(nonzero[-1])
        return cls(ctx.mul(scale, c) for c in coords)

    @property
    def dimension(self):
        return len(self.coords) - 1

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "ProjPoint{}".format(self.coords)


def points_array(points, dimension):
    """Stack points of PG(``dimension``, q) into an (n, dimension + 1) array of encodings."""
    width = dimension + 1
    for point in points:
        if len(point.coords) != width:
            raise DimensionMismatchError("Expected points of PG({}, q), got {}".format(dimension, point))
    return np.array([point.coords for point in points], dtype=np.int64).reshape(-1, width)


def line_intersection_profile(ctx, points):
    """Histogram of |line & points| over all q^2 + q + 1 lines of PG(2, q).

    Lines are [a, b, 1], [a, 1, 0] and [1, 0, 0], each meeting the points with a*x + b*y + c*z = 0.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field, m <= 6.
        points (list[ProjPoint]): Points of PG(2, q).

    Returns:
        collections.Counter: Intersection size -> number of lines.

    Raises:
        maxarc.errors.BudgetExceededError: If m exceeds the line enumeration limit.
    """
    limit = 1 << LINE_PROFILE_MAX_DEGREE
    check_budget("line enumeration", ctx.q ** 2 + ctx.q + 1, limit ** 2 + limit + 1)
    coords = points_array(points, 2)
    x, y, z = coords[:, 0], coords[:, 1], coords[:, 2]
    elements = ctx.elements()
    ax = ctx.mul_vec(elements[:, None], x[None, :])
    by = ctx.mul_vec(elements[:, None], y[None, :])
    profile = Counter()
    for a in range(ctx.q):
        hits = np.count_nonzero((ax[a][None, :] ^ by ^ z[None, :]) == 0, axis=1)
        profile.update(hits.tolist())
    profile.update(np.count_nonzero((ax ^ y[None, :]) == 0, axis=1).tolist())
    profile[int(np.count_nonzero(x == 0))] += 1
    logger.debug("line profile of {} points: {}".format(len(points), dict(profile)))
    return profile


def is_maximal_arc(ctx, points, h):
    """True iff every line of PG(2, q) meets ``points`` in 0 or ``h`` points."""
    return set(line_intersection_profile(ctx, points)) <= {0, h}


def _det3(ctx, u, v, w, a, b, c):
    """3x3 determinant of rows u, v (scalars per column) and w (arrays) over columns a, b, c.

    Characteristic 2, so the cofactor expansion has no signs.
    """
    term_a = ctx.scale(u[a], ctx.scale(v[b], w[c]) ^ ctx.scale(v[c], w[b]))
    term_b = ctx.scale(u[b], ctx.scale(v[a], w[c]) ^ ctx.scale(v[c], w[a]))
    term_c = ctx.scale(u[c], ctx.scale(v[a], w[b]) ^ ctx.scale(v[b], w[a]))
    return term_a ^ term_b ^ term_c


def _plane_keys(ctx, normals):
    """Encode each normal, scaled so its last nonzero entry is 1, as one integer."""
    nonzero = normals != 0
    last = normals.shape[1] - 1 - np.argmax(nonzero[:, ::-1], axis=1)
    pivots = normals[np.arange(normals.shape[0]), last]
    scaled = ctx.mul_vec(normals, ctx.inv_vec(pivots)[:, None])
    keys = np.zeros(normals.shape[0], dtype=np.int64)
    for column in range(normals.shape[1]):
        keys |= scaled[:, column] << (ctx.m * column)
    return keys


def general_position_check(ctx, points):
    """True iff no four of the points of PG(3, q) lie on a common plane.

    For each pair i < j the planes through the line P_i P_j and every later point P_k are computed
    from 3x3 minors. A zero normal means three collinear points; two equal planes mean four
    coplanar points.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        points (list[ProjPoint]): Points of PG(3, q), at most 300 of them.

    Returns:
        bool: True when every 4 points are linearly independent.

    Raises:
        maxarc.errors.BudgetExceededError: If there are more than 300 points.
    """
    check_budget("general position check", len(points), GENERAL_POSITION_MAX_POINTS)
    coords = points_array(points, 3)
    n = coords.shape[0]
    if n < 4:
        return True
    minors = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))
    for i in range(n - 3):
        u = [int(c) for c in coords[i]]
        for j in range(i + 1, n - 2):
            v = [int(c) for c in coords[j]]
            w = [coords[j + 1:, column] for column in range(4)]
            normals = np.stack([_det3(ctx, u, v, w, *columns) for columns in minors], axis=1)
            if not normals.any(axis=1).all():
                logger.debug("points {}, {} and a later point are collinear".format(i, j))
                return False
            keys = _plane_keys(ctx, normals)
            if np.unique(keys).size < keys.size:
                logger.debug("four coplanar points through points {} and {}".format(i, j))
                return False
    return True
