"""Weight distributions and the exact tools built on them.

* :func:`weight_distribution` enumerates the message space (Gray code for binary codes, projective
  numpy blocks for codes over GF(2^m)), optionally across worker threads.
* :func:`macwilliams_transform` computes a dual distribution with the Krawtchouk three-term recurrence
  in arbitrary-precision integers.
* :func:`low_weight_search` finds the smallest set of dependent parity-check columns up to weight 6 with
  meet-in-the-middle sum tables, an oracle independent of enumeration.
* :func:`sphere_packing_verdict` and :func:`singleton_verdict` certify optimality.
"""
import json
import logging
from concurrent.futures import ThreadPoolExecutor
from math import comb

import numpy as np

from maxarc.codes import BinaryCode
from maxarc.constants import MAX_SEARCH_WEIGHT, SEARCH_TABLE_MAX_ROWS
from maxarc.errors import InvalidDistributionError, UnsupportedSearchWeightError, DimensionMismatchError
from maxarc.helpers import check_budget, popcount, resolve_budget, resolve_threads, unpack_bits
from maxarc.models import SpherePackingVerdict, SingletonVerdict

logger = logging.getLogger(__name__)


class WeightDistribution(object):
    """Exact counts A_0..A_n of codewords by Hamming weight.

    Args:
        n (int): Code length.
        counts (list[int]): n + 1 nonnegative integers.

    Raises:
        maxarc.errors.InvalidDistributionError: If the counts have the wrong length or a negative entry.
    """

    def __init__(self, n, counts):
        counts = [int(c) for c in counts]
        if len(counts) != n + 1:
            raise InvalidDistributionError("Expected {} counts, got {}".format(n + 1, len(counts)))
        if any(c < 0 for c in counts):
            raise InvalidDistributionError("Negative weight count")
        self.n = n
        self.counts = counts

    @classmethod
    def from_mapping(cls, n, mapping):
        counts = [0] * (n + 1)
        for weight, count in mapping.items():
            counts[int(weight)] = int(count)
        return cls(n, counts)

    def __getitem__(self, weight):
        return self.counts[weight]

    def __eq__(self, other):
        return isinstance(other, WeightDistribution) and (self.n, self.counts) == (other.n, other.counts)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "WeightDistribution({})".format(self.enumerator_string())

    @property
    def total(self):
        return sum(self.counts)

    @property
    def minimum_distance(self):
        """Smallest nonzero weight with a codeword, or None for the zero code."""
        for weight in range(1, self.n + 1):
            if self.counts[weight]:
                return weight
        return None

    def nonzero_weights(self):
        return [w for w in range(1, self.n + 1) if self.counts[w]]

    def items(self):
        return [(w, c) for w, c in enumerate(self.counts) if c]

    def is_even(self):
        return all(c == 0 for c in self.counts[1::2])

    def enumerator_string(self):
        terms = []
        for weight, count in self.items():
            terms.append(str(count) if weight == 0 else "{} z^{}".format(count, weight))
        return " + ".join(terms)

    def to_dict(self):
        return {"n": self.n, "counts": {str(w): str(c) for w, c in self.items()}}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        return cls.from_mapping(int(data["n"]), data["counts"])


def _gray_counts(rows, n, base):
    counts = [0] * (n + 1)
    word = base
    counts[popcount(word)] += 1
    for i in range(1, 1 << len(rows)):
        word ^= rows[(i & -i).bit_length() - 1]
        counts[popcount(word)] += 1
    return counts


def _binary_distribution(code, threads):
    rows, n, k = code.gen.data, code.n, code.k
    prefix = 0
    while (1 << prefix) < threads and prefix < k:
        prefix += 1
    head, tail = rows[:prefix], rows[prefix:]
    bases = []
    for combo in range(1 << prefix):
        base = 0
        for i, row in enumerate(head):
            if (combo >> i) & 1:
                base ^= row
        bases.append(base)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        partial = list(executor.map(lambda base: _gray_counts(tail, n, base), bases))
    return [sum(column) for column in zip(*partial)]


def _qary_distribution(code, threads):
    n, q = code.n, code.q

    def count(task):
        base, block = task
        return np.bincount(np.count_nonzero(block ^ base, axis=1), minlength=n + 1)

    totals = np.zeros(n + 1, dtype=object)
    with ThreadPoolExecutor(max_workers=threads) as executor:
        for partial in executor.map(count, code.message_tasks(projective=True)):
            totals += partial.astype(object)
    counts = [int(c) * (q - 1) for c in totals]
    counts[0] = 1
    return counts


def weight_distribution(code, budget=None, threads=None):
    """Exact weight distribution by full message-space enumeration.

    Args:
        code (maxarc.codes.BinaryCode|maxarc.codes.LinearCodeQ): The code.
        budget (int): Maximum (field size)^k. Defaults to :func:`~maxarc.helpers.resolve_budget`.
        threads (int): Worker threads. Defaults to every core.

    Returns:
        WeightDistribution: The distribution.

    Raises:
        maxarc.errors.BudgetExceededError: If (field size)^k exceeds the budget.
    """
    budget = resolve_budget(budget)
    threads = resolve_threads(threads)
    check_budget("weight distribution of {}".format(code), code.q ** code.k, budget)
    logger.debug("enumerating {} with {} threads".format(code, threads))
    if isinstance(code, BinaryCode):
        counts = _binary_distribution(code, threads)
    else:
        counts = _qary_distribution(code, threads)
    return WeightDistribution(code.n, counts)


def krawtchouk_column(n, q, x):
    """Krawtchouk values K_j(x; n, q) for j = 0..n by the three-term recurrence."""
    values = [1]
    if n == 0:
        return values
    values.append((q - 1) * n - q * x)
    for j in range(1, n):
        numerator = ((q - 1) * (n - j) + j - q * x) * values[j] - (q - 1) * (n - j + 1) * values[j - 1]
        values.append(numerator // (j + 1))
    return values


def macwilliams_transform(distribution, q, k):
    """Distribution of the dual of an [n, k] code over GF(q) with the given distribution.

    Args:
        distribution (WeightDistribution): The primal distribution.
        q (int): Field size.
        k (int): Primal dimension.

    Returns:
        WeightDistribution: The dual distribution.

    Raises:
        maxarc.errors.InvalidDistributionError: If the input does not sum to q^k or an output is
            negative or non-integral.
    """
    n = distribution.n
    size = q ** k
    if distribution.total != size:
        raise InvalidDistributionError("Counts sum to {}, expected {}^{}".format(distribution.total, q, k))
    sums = [0] * (n + 1)
    for weight, count in distribution.items():
        for j, value in enumerate(krawtchouk_column(n, q, weight)):
            sums[j] += count * value
    counts = []
    for j, value in enumerate(sums):
        quotient, remainder = divmod(value, size)
        if remainder or quotient < 0:
            raise InvalidDistributionError("Dual count A_{} = {}/{} is not a nonnegative integer".format(
                j, value, size))
        counts.append(quotient)
    return WeightDistribution(n, counts)


def _column_values(matrix):
    values = np.zeros(matrix.cols, dtype=np.int64)
    for i, row in enumerate(matrix.data):
        values |= unpack_bits(row, matrix.cols).astype(np.int64) << i
    return values


def _pair_sums(columns):
    for i in range(columns.size - 1):
        yield columns[i] ^ columns[i + 1:]


def _triple_sums(columns):
    n = columns.size
    for i in range(n - 2):
        for j in range(i + 1, n - 1):
            yield columns[i] ^ columns[j] ^ columns[j + 1:]


def low_weight_search(parity_check, wmax=MAX_SEARCH_WEIGHT):
    """Smallest number of columns of ``parity_check`` summing to zero, up to ``wmax``.

    That number is the minimum distance of the code with this parity-check matrix, when it is at
    most ``wmax``. Weights 1 and 2 are zero and repeated columns; 3 and 4 use the table of pair sums;
    5 and 6 use the table of triple sums. Each stage runs only once all smaller weights are excluded,
    which is what makes a table hit a genuine dependency of exactly that size.

    Args:
        parity_check (maxarc.bitlinalg.BitMatrix): The matrix whose columns are searched.
        wmax (int): Largest weight searched, 1..6.

    Returns:
        int: The smallest dependent column count, or None if there is none of size <= ``wmax``.

    Raises:
        maxarc.errors.UnsupportedSearchWeightError: If ``wmax`` is outside 1..6.
        maxarc.errors.DimensionMismatchError: If the matrix has too many rows for the sum tables.
    """
    if not 1 <= wmax <= MAX_SEARCH_WEIGHT:
        raise UnsupportedSearchWeightError("wmax must lie in 1..{}, got {}".format(MAX_SEARCH_WEIGHT, wmax))
    if parity_check.rows > SEARCH_TABLE_MAX_ROWS:
        raise DimensionMismatchError("Low-weight search supports at most {} rows, got {}".format(
            SEARCH_TABLE_MAX_ROWS, parity_check.rows))
    columns = _column_values(parity_check)
    if (columns == 0).any():
        return 1
    if wmax < 2:
        return None
    if np.unique(columns).size < columns.size:
        return 2
    if wmax < 3:
        return None
    size = 1 << parity_check.rows
    present = np.zeros(size, dtype=bool)
    present[columns] = True
    for sums in _pair_sums(columns):
        if present[sums].any():
            return 3
    if wmax < 4:
        return None
    pairs = np.zeros(size, dtype=bool)
    for sums in _pair_sums(columns):
        if pairs[sums].any():
            return 4
        pairs[sums] = True
    if wmax < 5:
        return None
    for sums in _triple_sums(columns):
        if pairs[sums].any():
            return 5
    if wmax < 6:
        return None
    triples = np.zeros(size, dtype=bool)
    for sums in _triple_sums(columns):
        if triples[sums].any():
            return 6
        triples[sums] = True
    return None


def sphere_volume(n, radius, q):
    return sum((q - 1) ** i * comb(n, i) for i in range(radius + 1))


def sphere_packing_holds(n, k, d, q):
    """True iff q^(n-k) >= the volume of a Hamming ball of radius floor((d-1)/2)."""
    return q ** (n - k) >= sphere_volume(n, (d - 1) // 2, q)


def sphere_packing_verdict(n, k, d, q):
    """Evaluate the sphere-packing bound at d and d + 1.

    Args:
        n (int): Length.
        k (int): Dimension.
        d (int): Minimum distance.
        q (int): Field size.

    Returns:
        SpherePackingVerdict: ``distance_optimal`` when the bound holds at d and fails at d + 1;
        ``perfect`` when it holds with equality at d.
    """
    holds = sphere_packing_holds(n, k, d, q)
    fails_next = not sphere_packing_holds(n, k, d + 1, q)
    perfect = q ** (n - k) == sphere_volume(n, (d - 1) // 2, q)
    return SpherePackingVerdict(holds, fails_next, holds and fails_next, perfect)


def singleton_verdict(n, k, d):
    """Singleton bound d <= n - k + 1 and its equality (MDS) case."""
    return SingletonVerdict(d <= n - k + 1, d == n - k + 1)


def is_mds(n, k, d):
    return singleton_verdict(n, k, d).mds


def maximal_arc_code_distribution(n, h, q):
    """Closed-form distribution of the [n, 3, n - h] code of a maximal (n, h)-arc in PG(2, q).

    Returns:
        WeightDistribution: 1 + (q^2-1)n/h z^(n-h) + ((q^3-1)h - (q^2-1)n)/h z^n.
    """
    low = (q * q - 1) * n // h
    full = ((q ** 3 - 1) * h - (q * q - 1) * n) // h
    counts = [0] * (n + 1)
    counts[0] = 1
    counts[n - h] += low
    counts[n] += full
    return WeightDistribution(n, counts)
