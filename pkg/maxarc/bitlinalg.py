"""Exact linear algebra over GF(2) on packed-bit matrices.

Rows are Python integers used as bitsets: bit j of row i is the entry in column j. Row operations are
single XORs regardless of the number of columns, which keeps elimination cheap for the long codes
(tens of thousands of columns) the Denniston family produces.
"""
import logging

from maxarc.errors import DimensionMismatchError, InvalidParametersError

logger = logging.getLogger(__name__)


class BitMatrix(object):
    """A binary matrix with packed rows.

    Args:
        rows (int): Number of rows.
        cols (int): Number of columns.
        data (list[int]): Row bitsets; bit j of ``data[i]`` is entry (i, j). Defaults to all zero.

    Raises:
        maxarc.errors.DimensionMismatchError: If ``data`` has the wrong length or a row has bits
            beyond ``cols``.
    """

    def __init__(self, rows, cols, data=None):
        data = [0] * rows if data is None else [int(row) for row in data]
        if len(data) != rows:
            raise DimensionMismatchError("Expected {} rows, got {}".format(rows, len(data)))
        for row in data:
            if row < 0 or row >> cols:
                raise DimensionMismatchError("Row {:x} does not fit in {} columns".format(row, cols))
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def from_rows(cls, rows, cols=None):
        """Build from an iterable of 0/1 sequences."""
        rows = [list(row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            if len(row) != cols:
                raise DimensionMismatchError("Row of length {} in a {}-column matrix".format(len(row), cols))
            data.append(sum(1 << j for j, bit in enumerate(row) if bit))
        return cls(len(data), cols, data)

    @classmethod
    def identity(cls, n):
        return cls(n, n, [1 << i for i in range(n)])

    def __eq__(self, other):
        return isinstance(other, BitMatrix) and (self.rows, self.cols, self.data) == (
            other.rows, other.cols, other.data)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "BitMatrix({}x{})".format(self.rows, self.cols)

    def row_bits(self, i):
        row = self.data[i]
        return [(row >> j) & 1 for j in range(self.cols)]

    def to_lists(self):
        return [self.row_bits(i) for i in range(self.rows)]

    def column(self, j):
        """Column j as an integer, bit i = entry (i, j)."""
        return sum(((row >> j) & 1) << i for i, row in enumerate(self.data))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return BitMatrix(self.cols, self.rows, self.columns())

    def stack(self, other):
        """Rows of ``self`` followed by rows of ``other``."""
        if other.cols != self.cols:
            raise DimensionMismatchError("Cannot stack {} under {}".format(other, self))
        return BitMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def append_row(self, row):
        return BitMatrix(self.rows + 1, self.cols, self.data + [row])

    def apply(self, vector):
        """M v^T as an integer: bit i is the parity of row i AND ``vector``."""
        return sum((bin(row & vector).count("1") & 1) << i for i, row in enumerate(self.data))

    def to_text(self):
        """Serialize as ``"rows cols"`` then one zero-padded hex row per line (bit j = column j)."""
        width = max(1, (self.cols + 3) // 4)
        lines = ["{} {}".format(self.rows, self.cols)]
        lines.extend(format(row, "0{}x".format(width)) for row in self.data)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        """Parse the :meth:`to_text` format.

        Raises:
            maxarc.errors.InvalidParametersError: If the header is malformed.
        """
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        try:
            rows, cols = (int(token) for token in lines[0].split())
        except (IndexError, ValueError):
            raise InvalidParametersError("Malformed matrix header")
        return cls(rows, cols, [int(line, 16) for line in lines[1:1 + rows]])


def _eliminate(data):
    """Reduce rows to RREF. Returns (pivot columns ascending, matching reduced rows)."""
    pivots = {}
    for row in data:
        for col, pivot_row in pivots.items():
            if (row >> col) & 1:
                row ^= pivot_row
        if not row:
            continue
        col = (row & -row).bit_length() - 1
        for other in pivots:
            if (pivots[other] >> col) & 1:
                pivots[other] ^= row
        pivots[col] = row
    order = sorted(pivots)
    return order, [pivots[col] for col in order]


def rref_rank(matrix):
    """Reduced row-echelon form and rank.

    Args:
        matrix (BitMatrix): The input.

    Returns:
        tuple[BitMatrix, int]: The RREF (same shape, zero rows last) and the rank.
    """
    pivots, reduced = _eliminate(matrix.data)
    rank = len(reduced)
    return BitMatrix(matrix.rows, matrix.cols, reduced + [0] * (matrix.rows - rank)), rank


def rank(matrix):
    return len(_eliminate(matrix.data)[1])


def row_basis(matrix):
    """The nonzero RREF rows as a matrix with independent rows."""
    _, reduced = _eliminate(matrix.data)
    return BitMatrix(len(reduced), matrix.cols, reduced)


def kernel_basis(matrix):
    """Basis of {v : M v^T = 0}, by free-variable back-substitution on the RREF.

    Args:
        matrix (BitMatrix): The input.

    Returns:
        BitMatrix: ``cols - rank`` rows spanning the right kernel.
    """
    pivots, reduced = _eliminate(matrix.data)
    pivot_set = set(pivots)
    basis = []
    for free in range(matrix.cols):
        if free in pivot_set:
            continue
        vector = 1 << free
        for col, row in zip(pivots, reduced):
            if (row >> free) & 1:
                vector |= 1 << col
        basis.append(vector)
    logger.debug("kernel of {}: dimension {}".format(matrix, len(basis)))
    return BitMatrix(len(basis), matrix.cols, basis)


def row_space_equal(a, b):
    """True iff ``a`` and ``b`` span the same row space.

    Raises:
        maxarc.errors.DimensionMismatchError: If the column counts differ.
    """
    if a.cols != b.cols:
        raise DimensionMismatchError("Column counts differ: {} vs {}".format(a.cols, b.cols))
    return _eliminate(a.data)[1] == _eliminate(b.data)[1]


def in_row_space(vector, matrix):
    """True iff ``vector`` (an integer bitset) is a combination of the rows of ``matrix``."""
    pivots, reduced = _eliminate(matrix.data)
    for col, row in zip(pivots, reduced):
        if (vector >> col) & 1:
            vector ^= row
    return vector == 0
