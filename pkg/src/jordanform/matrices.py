"""Exact dense linear algebra over rational numbers.

Everything here is deterministic: row reduction pivots on the first nonzero
entry scanning top to bottom (exact arithmetic removes the usual numerical
reason to pivot by magnitude), and nullspace bases are read off the reduced
echelon form in a fixed normalization. Downstream canonical choices depend
on this determinism.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


class NoSolution(Exception):
    """A right-hand side column lies outside the column span."""


class RankDeficient(Exception):
    """Columns are linearly dependent where independence is required."""


def _coerce(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


def as_vector(entries: Iterable) -> Vector:
    return tuple(_coerce(x) for x in entries)


class Mat:
    """Immutable dense matrix of Fractions.

    Rows are given as any iterable of iterables; entries may be ints,
    Fractions or strings such as ``"1/2"``. Operations allocate fresh
    matrices, so instances are safe to share.

    >>> m = Mat([[1, 2], ["1/2", 0]])
    >>> m[1, 0]
    Fraction(1, 2)
    >>> (m * m).row(0)
    (Fraction(2, 1), Fraction(2, 1))
    >>> m ** 0 == Mat.identity(2)
    True
    """

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        data = tuple(tuple(_coerce(x) for x in row) for row in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data[1:]):
                raise ValueError("rows must all have the same length")
            if ncols is not None and ncols != width:
                raise ValueError("ncols does not match row length")
            self._ncols = width
        else:
            self._ncols = 0 if ncols is None else ncols
        self._rows = data

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Mat":
        zero = Fraction(0)
        return cls([[zero] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Iterable], nrows: int | None = None) -> "Mat":
        cols = [as_vector(c) for c in columns]
        if not cols:
            if nrows is None:
                raise ValueError("nrows is required for an empty column list")
            return cls([() for _ in range(nrows)], ncols=0)
        n = len(cols[0])
        if any(len(c) != n for c in cols):
            raise ValueError("columns must all have the same length")
        if nrows is not None and nrows != n:
            raise ValueError("nrows does not match column length")
        return cls([[c[i] for c in cols] for i in range(n)], ncols=len(cols))

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def is_zero(self) -> bool:
        return all(x == 0 for row in self._rows for x in row)

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(row[j] for row in self._rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self._ncols)]

    def __getitem__(self, index) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self):
        return hash((self._ncols, self._rows))

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in self._rows)
        return f"Mat([{rows}])"

    def __str__(self):
        if self.nrows == 0 or self._ncols == 0:
            return "[]"
        cells = [[str(x) for x in row] for row in self._rows]
        widths = [max(len(cells[i][j]) for i in range(self.nrows)) for j in range(self._ncols)]
        return "\n".join(
            "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in cells
        )

    def __neg__(self):
        return Mat([[-x for x in row] for row in self._rows], ncols=self._ncols)

    def __add__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._require_same_shape(other)
        return Mat(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            ncols=self._ncols,
        )

    def __sub__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        self._require_same_shape(other)
        return Mat(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self._rows, other._rows)],
            ncols=self._ncols,
        )

    def __mul__(self, other):
        if isinstance(other, Mat):
            if self._ncols != other.nrows:
                raise ValueError(
                    f"cannot multiply {self.nrows}x{self._ncols} by {other.nrows}x{other.ncols}"
                )
            cols = other.columns()
            return Mat(
                [[_dot(row, c) for c in cols] for row in self._rows],
                ncols=other.ncols,
            )
        scalar = _coerce(other)
        return Mat([[x * scalar for x in row] for row in self._rows], ncols=self._ncols)

    def __rmul__(self, other):
        scalar = _coerce(other)
        return Mat([[scalar * x for x in row] for row in self._rows], ncols=self._ncols)

    def __pow__(self, k: int) -> "Mat":
        self._require_square()
        if k < 0:
            raise ValueError("negative matrix power")
        out = Mat.identity(self.nrows)
        for _ in range(k):
            out = out * self
        return out

    def apply(self, vector: Iterable) -> Vector:
        """Matrix times column vector."""
        v = as_vector(vector)
        if len(v) != self._ncols:
            raise ValueError("vector length does not match column count")
        return tuple(_dot(row, v) for row in self._rows)

    def transpose(self) -> "Mat":
        return Mat(
            [[self._rows[i][j] for i in range(self.nrows)] for j in range(self._ncols)],
            ncols=self.nrows,
        )

    def augment(self, other: "Mat") -> "Mat":
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return Mat(
            [r1 + r2 for r1, r2 in zip(self._rows, other._rows)],
            ncols=self._ncols + other._ncols,
        )

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self._rows[i][i] for i in range(self.nrows)), Fraction(0))

    def rref(self) -> tuple["Mat", tuple[int, ...]]:
        """Reduced row echelon form and the strictly increasing pivot columns.

        The result is the unique RREF, so ``m.rref()[0].rref()[0]`` equals
        ``m.rref()[0]``.
        """
        rows = [list(r) for r in self._rows]
        nr, nc = self.nrows, self._ncols
        pivots = []
        r = 0
        for c in range(nc):
            if r == nr:
                break
            pivot_row = next((i for i in range(r, nr) if rows[i][c] != 0), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            pv = rows[r][c]
            if pv != 1:
                rows[r] = [x / pv for x in rows[r]]
            for i in range(nr):
                if i != r and rows[i][c] != 0:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Mat(rows, ncols=nc), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace_basis(self) -> list[Vector]:
        """Canonical kernel basis read off the RREF.

        One basis vector per free column, ordered by ascending free-column
        index, with entry 1 at its own free column and 0 at every other
        free column.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self._ncols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self._ncols
            v[free] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -reduced[r, free]
            basis.append(tuple(v))
        return basis

    def det(self) -> Fraction:
        self._require_square()
        rows = [list(r) for r in self._rows]
        n = self.nrows
        sign = 1
        out = Fraction(1)
        for c in range(n):
            pivot_row = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if pivot_row is None:
                return Fraction(0)
            if pivot_row != c:
                rows[c], rows[pivot_row] = rows[pivot_row], rows[c]
                sign = -sign
            pv = rows[c][c]
            out *= pv
            for i in range(c + 1, n):
                if rows[i][c] != 0:
                    f = rows[i][c] / pv
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return sign * out

    def inverse(self) -> "Mat":
        self._require_square()
        return solve_right(self, Mat.identity(self.nrows))

    def _require_square(self):
        if not self.is_square:
            raise ValueError(f"matrix is {self.nrows}x{self._ncols}, expected square")

    def _require_same_shape(self, other: "Mat"):
        if self.nrows != other.nrows or self._ncols != other._ncols:
            raise ValueError("matrix shapes differ")


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def jordan_block(eigenvalue, size: int) -> Mat:
    """size x size block with ``eigenvalue`` on the diagonal, 1 above it."""
    lam = _coerce(eigenvalue)
    rows = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        rows[i][i] = lam
        if i + 1 < size:
            rows[i][i + 1] = Fraction(1)
    return Mat(rows, ncols=size)


def block_diag(blocks: Sequence[Mat]) -> Mat:
    """Square block-diagonal matrix assembled from square blocks."""
    n = sum(b.nrows for b in blocks)
    zero = Fraction(0)
    rows = [[zero] * n for _ in range(n)]
    offset = 0
    for b in blocks:
        b._require_square()
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[offset + i][offset + j] = b[i, j]
        offset += b.nrows
    return Mat(rows, ncols=n)


def solve_right(b: Mat, c: Mat) -> Mat:
    """Solve ``b * M = c`` exactly for M, given independent columns of b.

    Raises RankDeficient when b's columns are dependent, NoSolution when a
    column of c lies outside the column span of b.
    """
    if b.nrows != c.nrows:
        raise ValueError("row counts differ")
    k = b.ncols
    reduced, pivots = b.augment(c).rref()
    if sum(1 for p in pivots if p < k) < k:
        raise RankDeficient("left factor has dependent columns")
    if any(p >= k for p in pivots):
        raise NoSolution("right-hand side outside column span")
    return Mat([[reduced[r, k + j] for j in range(c.ncols)] for r in range(k)], ncols=c.ncols)


def extend_independent(
    existing: Sequence[Iterable], candidates: Sequence[Iterable]
) -> list[Vector]:
    """Greedy completion of ``existing`` from an ordered candidate list.

    Scans candidates in order and keeps each one that strictly increases the
    rank of existing plus the kept set; returns the kept vectors. The scan
    order makes the result deterministic.
    """
    reduced: list[tuple[int, list[Fraction]]] = []

    def residue(vec: Sequence[Fraction]):
        v = list(vec)
        for pivot, row in reduced:
            f = v[pivot]
            if f:
                v = [a - f * b for a, b in zip(v, row)]
        for i, x in enumerate(v):
            if x:
                return i, [y / x for y in v]
        return None

    dimension = None
    kept: list[Vector] = []
    for group, keep in ((existing, False), (candidates, True)):
        for raw in group:
            vec = as_vector(raw)
            if dimension is None:
                dimension = len(vec)
            elif len(vec) != dimension:
                raise ValueError("vectors must share one dimension")
            hit = residue(vec)
            if hit is not None:
                reduced.append(hit)
                if keep:
                    kept.append(vec)
    return kept
