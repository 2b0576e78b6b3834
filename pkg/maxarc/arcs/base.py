"""Base class for arc constructions.

Classes in this file are intended to be inherited by the specific constructions in
:mod:`maxarc.arcs.denniston` and :mod:`maxarc.arcs.pg3`.
"""
import logging

import numpy as np

from maxarc.codes import LinearCodeQ

logger = logging.getLogger(__name__)


class ArcConstruction(object):
    """Abstract arc inherited by all constructions.

    The point list is built on first access and kept; the generator matrix has one column per point,
    in the same order.

    Args:
        spec: A validated parameter object exposing ``ctx``.

    Note:
        This class is intended to be inherited. It should not be initiated or used directly in your code.
    """

    #: Projective dimension of the ambient space; set by subclasses.
    DIMENSION = None

    def __init__(self, spec):
        super(ArcConstruction, self).__init__()
        self.spec = spec
        self.ctx = spec.ctx
        # Will be built once the points are used
        self._points = None

    def _build_points(self):  # pragma: no cover
        raise NotImplementedError()

    @property
    def points(self):
        """Return the ordered list of :class:`~maxarc.arcs.geometry.ProjPoint`.

        The same list is returned on subsequent calls.
        """
        if self._points is None:
            self._points = self._build_points()
            logger.debug("built {} with {} points".format(self, len(self._points)))
        return self._points

    @property
    def n(self):
        return len(self.points)

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, self.spec)

    def generator_matrix(self):
        """The (DIMENSION + 1) x n array whose columns are the point coordinates."""
        return np.array([point.coords for point in self.points], dtype=np.int64).T.copy()

    def code(self):
        """The linear code over GF(2^m) spanned by :meth:`generator_matrix`.

        Returns:
            maxarc.codes.LinearCodeQ: The arc code.
        """
        return LinearCodeQ(self.ctx, self.generator_matrix())

    def to_text(self):
        """Dump the arc: header ``"m modulus dim n"``, then one point per line as decimal encodings."""
        lines = ["{} {} {} {}".format(self.ctx.m, self.ctx.modulus, self.DIMENSION, self.n)]
        lines.extend(" ".join(str(c) for c in point.coords) for point in self.points)
        return "\n".join(lines) + "\n"
