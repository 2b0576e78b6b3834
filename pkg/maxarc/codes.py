"""Linear codes over GF(2^m) and GF(2), and the constructions composed by the arc pipelines.

A :class:`LinearCodeQ` is a generator matrix of field encodings bound to its :class:`~maxarc.gf2m.FieldCtx`;
a :class:`BinaryCode` is a :class:`~maxarc.bitlinalg.BitMatrix` generator kept in reduced form.
The module-level functions (:func:`dual`, :func:`extend`, :func:`augment`, :func:`subfield_expand`,
:func:`trace_subfield`, :func:`subfield_subcode`) build new codes from old ones.

Examples:
    Expand a code over GF(4) to its binary subfield code::

        from maxarc.gf2m import build_field
        from maxarc.codes import LinearCodeQ, subfield_expand

        ctx = build_field(2)
        code = LinearCodeQ(ctx, [[1, 2, 3]])
        binary = subfield_expand(code)
"""
import itertools
import logging
from collections import namedtuple

import numpy as np

from maxarc.bitlinalg import BitMatrix, row_basis, kernel_basis, in_row_space
from maxarc.constants import AUGMENT_DEGENERATE_MSG, BLOCK_MAX_ENTRIES, SUBFIELD_SUBCODE_MAX_EXPONENT
from maxarc.errors import InvalidParametersError, DimensionMismatchError
from maxarc.helpers import check_budget, pack_bits, popcount, unpack_bits

logger = logging.getLogger(__name__)


def rref_q(ctx, matrix):
    """Reduced row-echelon form over GF(2^m).

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        matrix (numpy.ndarray): 2-D array of encodings.

    Returns:
        tuple[numpy.ndarray, list[int]]: The nonzero RREF rows and their pivot columns.
    """
    work = np.array(matrix, dtype=np.int64, copy=True)
    rows, cols = work.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nonzero = np.nonzero(work[r:, c])[0]
        if nonzero.size == 0:
            continue
        p = r + int(nonzero[0])
        if p != r:
            work[[r, p]] = work[[p, r]]
        work[r] = ctx.scale(ctx.inv(int(work[r, c])), work[r])
        for i in range(rows):
            if i != r and work[i, c]:
                work[i] ^= ctx.scale(int(work[i, c]), work[r])
        pivots.append(c)
        r += 1
    return work[:r], pivots


class LinearCodeQ(object):
    """A linear code over GF(2^m) given by a generator matrix.

    Args:
        ctx (maxarc.gf2m.FieldCtx): The field.
        gen (array-like): k x n encodings; rows must be independent. A (0, n) array is the zero code.
        check (bool): Verify ranges and independence. Default True.

    Raises:
        maxarc.errors.InvalidParametersError: If an entry is not a field element or rows are dependent.
    """

    def __init__(self, ctx, gen, check=True):
        gen = np.array(gen, dtype=np.int64)
        if gen.ndim != 2:
            raise DimensionMismatchError("Generator must be 2-dimensional, got shape {}".format(gen.shape))
        self.ctx = ctx
        self.gen = gen
        if check:
            if gen.size and (gen.min() < 0 or gen.max() >= ctx.q):
                raise InvalidParametersError("Generator entries must lie in [0, {})".format(ctx.q))
            if len(rref_q(ctx, gen)[1]) != gen.shape[0]:
                raise InvalidParametersError("Generator rows are linearly dependent")

    @classmethod
    def zero(cls, ctx, n):
        return cls(ctx, np.zeros((0, n), dtype=np.int64), check=False)

    @property
    def k(self):
        return self.gen.shape[0]

    @property
    def n(self):
        return self.gen.shape[1]

    @property
    def q(self):
        return self.ctx.q

    def __repr__(self):
        return "LinearCodeQ([{}, {}] over GF({}))".format(self.n, self.k, self.q)

    def encode(self, message):
        """The codeword sum(message[i] * gen[i])."""
        word = np.zeros(self.n, dtype=np.int64)
        for coefficient, row in zip(message, self.gen):
            word ^= self.ctx.scale(int(coefficient), row)
        return word

    def contains(self, word):
        word = np.asarray(word, dtype=np.int64).reshape(1, -1)
        return len(rref_q(self.ctx, np.vstack([self.gen, word]))[1]) == self.k

    def contains_all_ones(self):
        return self.contains(np.ones(self.n, dtype=np.int64))

    def dual(self):
        """The dual code, from the RREF with free-variable back-substitution."""
        reduced, pivots = rref_q(self.ctx, self.gen)
        pivot_set = set(pivots)
        free = [c for c in range(self.n) if c not in pivot_set]
        kernel = np.zeros((len(free), self.n), dtype=np.int64)
        if free:
            kernel[np.arange(len(free)), free] = 1
            if pivots:
                kernel[:, pivots] = reduced[:, free].T
        return LinearCodeQ(self.ctx, kernel, check=False)

    def to_binary(self):
        """The same code viewed over GF(2); valid only when every generator entry is 0 or 1."""
        if self.gen.size and self.gen.max() > 1:
            raise InvalidParametersError("Generator has entries outside GF(2)")
        return BinaryCode(BitMatrix(self.k, self.n, [pack_bits(row) for row in self.gen]))

    def message_tasks(self, projective=False):
        """Partition the message space into (base, block) pairs.

        Every codeword of the enumeration is ``base ^ block[i]`` for exactly one task and one i.
        With ``projective`` only messages whose first nonzero coefficient is 1 are produced, so each
        one-dimensional subspace is visited once.

        Yields:
            tuple[numpy.ndarray, numpy.ndarray]: base word of length n and a block of words.
        """
        k, n, q = self.k, self.n, self.q
        tables = [self.ctx.scale_table(row) for row in self.gen]
        if projective:
            leads = [(i, list(range(i + 1, k))) for i in range(k)]
        else:
            leads = [(None, list(range(k)))]
        for lead, free in leads:
            start = tables[lead][1] if lead is not None else np.zeros(n, dtype=np.int64)
            in_block = 0
            while in_block < len(free) and q ** (in_block + 1) * n <= BLOCK_MAX_ENTRIES:
                in_block += 1
            outer, inner = free[:len(free) - in_block], free[len(free) - in_block:]
            block = np.zeros((1, n), dtype=np.int64)
            for r in inner:
                block = (block[:, None, :] ^ tables[r][None, :, :]).reshape(-1, n)
            for coefficients in itertools.product(range(q), repeat=len(outer)):
                base = start.copy()
                for r, c in zip(outer, coefficients):
                    base ^= tables[r][c]
                yield base, block


class BinaryCode(object):
    """A binary linear code; the generator is stored as its reduced row basis.

    Args:
        gen (maxarc.bitlinalg.BitMatrix): Any spanning set of the code.
    """

    def __init__(self, gen):
        self.gen = row_basis(gen)

    @property
    def k(self):
        return self.gen.rows

    @property
    def n(self):
        return self.gen.cols

    @property
    def q(self):
        return 2

    def __repr__(self):
        return "BinaryCode([{}, {}])".format(self.n, self.k)

    def contains(self, word):
        return in_row_space(word, self.gen)

    def same_code(self, other):
        return self.n == other.n and self.gen == other.gen

    def dual(self):
        return BinaryCode(kernel_basis(self.gen))


AugmentedCode = namedtuple("AugmentedCode", ["code", "degenerate"])


def dual(code):
    """Dual of a :class:`BinaryCode` or :class:`LinearCodeQ`, of the same kind and dimension n - k."""
    return code.dual()


def extend(code):
    """Append an overall parity coordinate to a binary code.

    Args:
        code (BinaryCode): The code to extend.

    Returns:
        BinaryCode: The [n+1, k] code whose words all have even weight.
    """
    n = code.n
    rows = [row | ((popcount(row) & 1) << n) for row in code.gen.data]
    return BinaryCode(BitMatrix(len(rows), n + 1, rows))


def augment(code):
    """Add the all-ones word to a code over GF(2^m).

    Args:
        code (LinearCodeQ): The code to augment.

    Returns:
        AugmentedCode: ``code`` is the augmented code; ``degenerate`` is True when the all-ones word
        was already present and the input is returned unchanged.
    """
    if code.k and code.contains_all_ones():
        logger.warning(AUGMENT_DEGENERATE_MSG.format(code.k))
        return AugmentedCode(code, True)
    gen = np.vstack([code.gen, np.ones((1, code.n), dtype=np.int64)])
    return AugmentedCode(LinearCodeQ(code.ctx, gen, check=False), False)


def subfield_expand(code, basis=None):
    """Subfield code by coordinate expansion of each generator entry over a GF(2)-basis.

    Args:
        code (LinearCodeQ): The code over GF(2^m).
        basis (list[int]): m encodings forming a GF(2)-basis. Defaults to the polynomial basis.

    Returns:
        BinaryCode: The binary code of length n spanned by the expanded km x n matrix.

    Raises:
        maxarc.errors.DependentBasisError: If ``basis`` is not a basis.
    """
    ctx = code.ctx
    table = ctx.coordinate_table(ctx.polynomial_basis() if basis is None else basis)
    rows = []
    for row in code.gen:
        coordinates = table[row]
        rows.extend(pack_bits((coordinates >> t) & 1) for t in range(ctx.m))
    result = BinaryCode(BitMatrix(len(rows), code.n, rows))
    logger.debug("subfield expansion of {} has dimension {}".format(code, result.k))
    return result


def trace_subfield(code):
    """Subfield code in trace representation: rows Tr(w^t * g_i) for every generator row g_i.

    Args:
        code (LinearCodeQ): The code over GF(2^m).

    Returns:
        BinaryCode: The binary code {(Tr(sum a_i g_ij))_j}.
    """
    ctx = code.ctx
    traces = ctx.trace_table
    rows = [pack_bits(traces[ctx.scale(1 << t, row)]) for row in code.gen for t in range(ctx.m)]
    return BinaryCode(BitMatrix(len(rows), code.n, rows))


def _pack_rows(words):
    packed = np.packbits(words.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def subfield_subcode(code):
    """Codewords of ``code`` with every coordinate in GF(2), found by exhaustive enumeration.

    Args:
        code (LinearCodeQ): The code over GF(2^m); m*k must not exceed 24.

    Returns:
        LinearCodeQ: The subcode, generated by binary rows. May have dimension 0.

    Raises:
        maxarc.errors.BudgetExceededError: If m*k exceeds 24.
    """
    exponent = code.ctx.m * code.k
    check_budget("subfield subcode", 1 << exponent, 1 << SUBFIELD_SUBCODE_MAX_EXPONENT)
    found = []
    for base, block in code.message_tasks():
        words = block ^ base
        binary = words[(words <= 1).all(axis=1)]
        if binary.size:
            found.extend(_pack_rows(binary))
    basis = row_basis(BitMatrix(len(found), code.n, found))
    gen = np.array([unpack_bits(row, code.n) for row in basis.data], dtype=np.int64).reshape(basis.rows, code.n)
    return LinearCodeQ(code.ctx, gen, check=False)
