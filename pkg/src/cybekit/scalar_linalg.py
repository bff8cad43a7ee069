"""Exact rational scalars and small dense matrices.

Scalars are :class:`fractions.Fraction`, which already keeps numerator and
denominator in lowest terms with a positive denominator.  Matrices are
immutable, row-major and dense; every algorithm here uses plain Gaussian
elimination with first-nonzero pivoting so results are bit-for-bit
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeMismatch, SingularMatrix

Scalar = Fraction
Vector = tuple  # tuple of Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def scalar(x) -> Fraction:
    """Coerce ints, Fractions and rational literals ("p/q", "p") to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def parse_scalar(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            value = Fraction(int(num), int(den))
        else:
            value = Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational literal {text!r}") from exc
    return value


def format_scalar(x: Fraction) -> str:
    """Canonical literal: "p" when the denominator is 1, else "p/q"."""
    x = scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Iterable) -> tuple:
    return tuple(scalar(v) for v in values)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> tuple:
    c = scalar(c)
    return tuple(c * a for a in v)


def first_nonzero(v: Sequence):
    for i, x in enumerate(v):
        if x != 0:
            return i
    return None


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        return cls(len(rows), cols, tuple(scalar(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int | None = None) -> Matrix:
        if rows is None:
            rows = len(columns[0]) if columns else 0
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], cols=len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> Matrix:
        if cols is None:
            cols = rows
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence) -> Matrix:
        n = len(values)
        vals = vector(values)
        return cls(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple:
        return (self.rows, self.cols)

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def _check_same_shape(self, other: Matrix):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> Matrix:
        c = scalar(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __rmul__(self, c) -> Matrix:
        return self.scale(c)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        ocols = [other.column(j) for j in range(other.cols)]
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                out.append(sum((a * b for a, b in zip(r, c) if a and b), ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        """Matrix-vector product."""
        if len(v) != self.cols:
            raise ShapeMismatch(f"vector of length {len(v)} for {self.shape} matrix")
        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a and b), ZERO)
            for i in range(self.rows)
        )

    def __str__(self) -> str:
        return "[" + ", ".join(
            "[" + ", ".join(format_scalar(x) for x in self.row(i)) + "]"
            for i in range(self.rows)
        ) + "]"


def row_reduce(m: Matrix) -> tuple[list, list]:
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    a = m.to_rows()
    pivots = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m: Matrix) -> int:
    return len(row_reduce(m)[1])


def rank_and_kernel(m: Matrix) -> tuple[int, list]:
    """Rank and a basis of the null space, one basis vector per free column."""
    a, pivots = row_reduce(m)
    free = [c for c in range(m.cols) if c not in pivots]
    kernel = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -a[r][f]
        kernel.append(tuple(v))
    return len(pivots), kernel


def kernel(m: Matrix) -> list:
    return rank_and_kernel(m)[1]


def invert(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ShapeMismatch(f"cannot invert a {m.rows}x{m.cols} matrix")
    n = m.rows
    aug = Matrix.from_rows([list(m.row(i)) + list(Matrix.identity(n).row(i)) for i in range(n)])
    a, pivots = row_reduce(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix(f"matrix of rank {len([p for p in pivots if p < n])} < {n} is singular")
    return Matrix.from_rows([row[n:] for row in a])


def is_invertible(m: Matrix) -> bool:
    return m.is_square() and rank(m) == m.rows


def solve(m: Matrix, b: Sequence):
    """One solution x of m x = b, or None when the system is inconsistent."""
    if len(b) != m.rows:
        raise ShapeMismatch("right-hand side length does not match row count")
    aug = Matrix.from_rows([list(m.row(i)) + [b[i]] for i in range(m.rows)])
    a, pivots = row_reduce(aug)
    if m.cols in pivots:
        return None
    x = [ZERO] * m.cols
    for r, c in enumerate(pivots):
        x[c] = a[r][m.cols]
    return tuple(x)


def in_span(basis: Sequence[Sequence], v: Sequence) -> bool:
    if not basis:
        return is_zero_vector(v)
    return solve(Matrix.from_columns(basis), v) is not None


def coordinates(basis: Sequence[Sequence], v: Sequence):
    """Coordinates of v in a linearly independent basis, or None if v is outside the span."""
    if not basis:
        return () if is_zero_vector(v) else None
    return solve(Matrix.from_columns(basis), v)


def column_space_basis(m: Matrix) -> tuple[list, list]:
    """Pivot columns of m (indices, vectors); they form a basis of the image."""
    _, pivots = row_reduce(m)
    return pivots, [m.column(c) for c in pivots]
