"""Dense GF(2) linear algebra on Python-int bit rows.

Rows are plain ints: bit j set means entry j is 1.  Column index 0 is the
least significant bit.  All ranks, kernels and quotients here are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def vector_from_support(support: Iterable[int]) -> int:
    """Pack a set of column indices into a bit row."""
    v = 0
    for j in support:
        if j < 0:
            raise ValueError(f"negative index {j}")
        v |= 1 << j
    return v


def vector_support(v: int) -> list[int]:
    """Sorted indices of the set bits of v."""
    if v < 0:
        raise ValueError("negative bit row")
    out = []
    j = 0
    while v:
        if v & 1:
            out.append(j)
        v >>= 1
        j += 1
    return out


@dataclass(frozen=True)
class BitMatrix:
    """Immutable GF(2) matrix; ``rows[i]`` is the i-th row as a bit int."""

    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self) -> None:
        if self.ncols < 0:
            raise ValueError("ncols must be >= 0")
        mask = (1 << self.ncols) - 1
        for i, r in enumerate(self.rows):
            if r < 0 or r & ~mask:
                raise ValueError(f"row {i} has bits outside {self.ncols} columns")

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[int]], ncols: int) -> "BitMatrix":
        """Build from 0/1 entry lists."""
        packed = []
        for row in rows:
            bits = 0
            for j, e in enumerate(row):
                if e not in (0, 1):
                    raise ValueError(f"entry {e!r} is not a bit")
                bits |= e << j
            packed.append(bits)
        return cls(tuple(packed), ncols)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(tuple(1 << i for i in range(n)), n)

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls((0,) * nrows, ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} out of range")
        return (self.rows[i] >> j) & 1

    def row(self, i: int) -> int:
        return self.rows[i]

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return BitMatrix(tuple(cols), self.nrows)

    def compose(self, other: "BitMatrix") -> "BitMatrix":
        """Matrix product self @ other (rows of self select rows of other)."""
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.ncols} cols vs {other.nrows} rows")
        out = []
        for r in self.rows:
            acc = 0
            rr = r
            while rr:
                low = rr & -rr
                acc ^= other.rows[low.bit_length() - 1]
                rr ^= low
            out.append(acc)
        return BitMatrix(tuple(out), other.ncols)

    def apply(self, v: int) -> int:
        """Image of column vector v (bit int over ncols) as a bit int over nrows."""
        out = 0
        for i, r in enumerate(self.rows):
            if (r & v).bit_count() & 1:
                out |= 1 << i
        return out

    def rank(self) -> int:
        return EchelonBasis.from_rows(self.rows).rank

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)


class EchelonBasis:
    """Incremental row space in echelon form, pivot = lowest set bit."""

    def __init__(self) -> None:
        self._pivots: dict[int, int] = {}

    @classmethod
    def from_rows(cls, rows: Iterable[int]) -> "EchelonBasis":
        basis = cls()
        for r in rows:
            basis.add(r)
        return basis

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: int) -> int:
        """Residue of row modulo the current span."""
        while row:
            low = (row & -row).bit_length() - 1
            piv = self._pivots.get(low)
            if piv is None:
                return row
            row ^= piv
        return 0

    def add(self, row: int) -> bool:
        """Insert row; True if it enlarged the span."""
        row = self.reduce(row)
        if row == 0:
            return False
        self._pivots[(row & -row).bit_length() - 1] = row
        return True

    def contains(self, row: int) -> bool:
        return self.reduce(row) == 0

    def rows(self) -> list[int]:
        """Current basis rows, sorted by pivot column."""
        return [self._pivots[c] for c in sorted(self._pivots)]

    def pivot_columns(self) -> list[int]:
        return sorted(self._pivots)


def rref(matrix: BitMatrix) -> tuple[BitMatrix, list[int], int]:
    """Reduced row echelon form (same shape), pivot columns, rank.

    Pivots are the lowest set bits; each pivot column is cleared from every
    other row, so the nonzero rows are the canonical basis of the row space.
    """
    basis = EchelonBasis.from_rows(matrix.rows)
    pivots = basis.pivot_columns()
    rows = basis.rows()
    # back-substitute so each pivot column is unique to its row
    for i in range(len(rows) - 1, -1, -1):
        mask = 1 << pivots[i]
        for j in range(i):
            if rows[j] & mask:
                rows[j] ^= rows[i]
    padded = tuple(rows) + (0,) * (matrix.nrows - len(rows))
    return BitMatrix(padded, matrix.ncols), pivots, len(pivots)


def kernel_basis(matrix: BitMatrix) -> list[int]:
    """Basis of the right kernel, one vector per free column, ascending."""
    reduced, pivots, _ = rref(matrix)
    pivot_of_col = {c: i for i, c in enumerate(pivots)}
    free = [j for j in range(matrix.ncols) if j not in pivot_of_col]
    out = []
    for f in free:
        v = 1 << f
        for c, i in pivot_of_col.items():
            if (reduced.rows[i] >> f) & 1:
                v |= 1 << c
        out.append(v)
    return out


def quotient_dims(ambient_dim: int, relation_rows: Iterable[int]) -> int:
    """Dimension of ambient / span(relations)."""
    r = EchelonBasis.from_rows(relation_rows).rank
    if r > ambient_dim:
        raise ValueError("relations exceed the ambient space")
    return ambient_dim - r


def coset_representatives(ambient_dim: int, relation_rows: Iterable[int]) -> list[int]:
    """Unit vectors e_j whose classes form a basis of the quotient.

    Greedy: walk columns in ascending order, keep e_j whenever it is
    independent of the relations and the representatives chosen so far.
    """
    basis = EchelonBasis.from_rows(relation_rows)
    reps = []
    for j in range(ambient_dim):
        if basis.add(1 << j):
            reps.append(1 << j)
    return reps
