"""Helper functions and classes used internally by the package.

Note:
    Most developers will not have to use any of the contents of this module directly.
"""
import logging
import os
import time
from contextlib import contextmanager

import numpy as np

from maxarc.constants import BUDGET_ENV_VAR, DEFAULT_ENUMERATION_BUDGET, BUDGET_EXCEEDED_MSG
from maxarc.errors import InvalidParametersError, BudgetExceededError

logger = logging.getLogger(__name__)


@contextmanager
def report_failure(exception_to_raise, reason="invalid input"):
    """Translate low-level parsing failures into a package error.

    Used as a context manager around code that converts user supplied values.

    Args:
        exception_to_raise (maxarc.errors.MaxArcError): The exception type that should be
            raised in case of a conversion failure.
        reason (str): Short description prefixed to the raised error message.

    Raises:
        maxarc.errors.MaxArcError: The ``exception_to_raise`` type, chained to the original error.
    """
    try:
        yield
    except (ValueError, TypeError, ZeroDivisionError) as e:
        logger.debug("conversion failed: {!r}".format(e))
        raise exception_to_raise("{}: {}".format(reason, e))


def resolve_budget(explicit=None):
    """Return the enumeration budget in effect.

    An explicit value wins, then the ``MAXARC_BUDGET`` environment variable, then the default.

    Args:
        explicit (int): Budget given by the caller, or None.

    Returns:
        int: The budget, counted in enumerated messages.

    Raises:
        maxarc.errors.InvalidParametersError: If the resolved budget is not a positive integer.
    """
    if explicit is not None:
        budget = explicit
    else:
        raw = os.environ.get(BUDGET_ENV_VAR)
        if raw is None:
            return DEFAULT_ENUMERATION_BUDGET
        with report_failure(InvalidParametersError, "{} must be an integer".format(BUDGET_ENV_VAR)):
            budget = int(raw)
    if budget <= 0:
        raise InvalidParametersError("Enumeration budget must be positive, got {}".format(budget))
    return budget


def resolve_threads(explicit=None):
    """Return the worker count: the explicit value, else every available core."""
    if explicit is not None:
        if explicit < 1:
            raise InvalidParametersError("Thread count must be at least 1, got {}".format(explicit))
        return explicit
    return os.cpu_count() or 1


def check_budget(what, required, budget):
    """Raise :class:`~maxarc.errors.BudgetExceededError` when ``required`` exceeds ``budget``."""
    if required > budget:
        raise BudgetExceededError(
            BUDGET_EXCEEDED_MSG.format(what, required, budget), required=required, budget=budget
        )


if hasattr(int, "bit_count"):
    def popcount(value):
        return value.bit_count()
else:  # pragma: no cover
    def popcount(value):
        return bin(value).count("1")


def pack_bits(bits):
    """Pack a 0/1 sequence into an integer, element i becoming bit i.

    Args:
        bits (numpy.ndarray|list[int]): The bits, each 0 or 1.

    Returns:
        int: The packed word.
    """
    packed = np.packbits(np.asarray(bits, dtype=np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def unpack_bits(word, length):
    """Inverse of :func:`pack_bits`: a length ``length`` uint8 array of the bits of ``word``."""
    nbytes = (length + 7) // 8
    raw = np.frombuffer(word.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:length]


class StageTimer(object):
    """Context manager measuring the wall-clock duration of a pipeline stage.

    The elapsed seconds are logged at ``LOG_LEVEL`` and kept on the ``elapsed`` attribute.

    Args:
        name (str): The stage name used in the log line.
    """

    LOG_LEVEL = logging.DEBUG

    def __init__(self, name):
        self.name = name
        self.elapsed = None
        self._start = None
        self.log = logging.getLogger(__name__)

    def __enter__(self):
        self._start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.elapsed = time.perf_counter() - self._start
        self.log.log(self.LOG_LEVEL, "stage {} took {:.3f}s".format(self.name, self.elapsed))
        return False
