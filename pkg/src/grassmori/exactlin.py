"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`.  A :class:`RatMatrix` is an immutable
row-major table of fractions; every operation returns fresh values.

Elimination is fraction-free: each row is scaled to a primitive integer row
once, then reduced with Bareiss steps, whose exact division by the previous
pivot keeps coefficients at the size of the minors.  Pivots are the first nonzero entry met scanning columns left
to right and rows top to bottom, so results are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple[Fraction, ...]


def as_rational(x) -> Fraction:
    """Coerce ints, fractions and ``"p/q"`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def format_rational(x: Fraction) -> str:
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class RatMatrix:
    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable], cols: int | None = None):
        data = tuple(tuple(as_rational(x) for x in row) for row in entries)
        if data:
            widths = {len(row) for row in data}
            if len(widths) != 1:
                raise ValueError("ragged rows")
            (width,) = widths
            if cols is not None and cols != width:
                raise ValueError(f"expected {cols} columns, got {width}")
        else:
            width = cols if cols is not None else 0
        self.rows = len(data)
        self.cols = width
        self._data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], cols=size)

    def __getitem__(self, index):
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> RatVector:
        return self._data[i]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self._data), cols=self.rows) if self.rows else RatMatrix([], cols=0)

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols_t = list(zip(*other._data)) if other.rows else [()] * other.cols
            return RatMatrix(
                [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols_t] for row in self._data],
                cols=other.cols,
            )
        vec = tuple(as_rational(x) for x in other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(sum((a * b for a, b in zip(row, vec)), Fraction(0)) for row in self._data)

    def stack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return RatMatrix(self._data + other._data, cols=self.cols)

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(format_rational(x) for x in row) for row in self._data)
        return f"RatMatrix({self.rows}x{self.cols}: [{body}])"


def _as_matrix(m) -> RatMatrix:
    return m if isinstance(m, RatMatrix) else RatMatrix(m)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators, then strip the content."""
    out = []
    for row in m._data:
        scale = 1
        for x in row:
            scale = lcm(scale, x.denominator)
        out.append(_primitive([int(x * scale) for x in row]))
    return out


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def _echelon(rows: list[list[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free forward elimination.

    Returns the nonzero echelon rows and their pivot columns.  Row swaps keep
    every entry a minor of the input, so the division by the previous pivot
    is exact.
    """
    rows = [r[:] for r in rows if any(r)]
    pivots: list[int] = []
    top = 0
    prev = 1
    for col in range(ncols):
        if top == len(rows):
            break
        found = next((i for i in range(top, len(rows)) if rows[i][col]), None)
        if found is None:
            continue
        rows[top], rows[found] = rows[found], rows[top]
        prow = rows[top]
        p = prow[col]
        tail = range(col + 1, ncols)
        for i in range(top + 1, len(rows)):
            r = rows[i]
            f = r[col]
            if f:
                for j in tail:
                    r[j] = (p * r[j] - f * prow[j]) // prev
                r[col] = 0
            elif prev != p:
                for j in tail:
                    if r[j]:
                        r[j] = (p * r[j]) // prev
        pivots.append(col)
        top += 1
        prev = p
    return rows[:top], pivots


def rank(m) -> int:
    m = _as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    _, pivots = _echelon(_integer_rows(m), m.cols)
    return len(pivots)


def integer_rank(rows: Sequence[Sequence[int]], ncols: int | None = None) -> int:
    """Rank of an integer matrix given as plain lists (no Fraction overhead)."""
    rows = [_primitive([int(x) for x in r]) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    _, pivots = _echelon(rows, ncols)
    return len(pivots)


def _rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    ech, pivots = _echelon(_integer_rows(m), m.cols)
    red = [[Fraction(x) for x in row] for row in ech]
    for i, c in enumerate(pivots):
        piv = red[i][c]
        red[i] = [x / piv for x in red[i]]
    for i in range(len(pivots) - 1, -1, -1):
        c = pivots[i]
        for k in range(i):
            f = red[k][c]
            if f:
                red[k] = [a - f * b for a, b in zip(red[k], red[i])]
    return red, pivots


def rref(m) -> tuple[RatMatrix, tuple[int, ...]]:
    m = _as_matrix(m)
    red, pivots = _rref(m)
    return RatMatrix(red, cols=m.cols), tuple(pivots)


def nullspace(m) -> list[RatVector]:
    """Basis of the right kernel, one vector per free column."""
    m = _as_matrix(m)
    if m.rows == 0:
        return [tuple(Fraction(int(i == j)) for i in range(m.cols)) for j in range(m.cols)]
    red, pivots = _rref(m)
    pivset = set(pivots)
    basis = []
    for free in range(m.cols):
        if free in pivset:
            continue
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -red[i][free]
        basis.append(tuple(v))
    return basis


def solve(m, b) -> RatVector | None:
    """One exact solution of ``m x = b`` (free variables set to zero), or None."""
    m = _as_matrix(m)
    b = [as_rational(x) for x in b]
    if len(b) != m.rows:
        raise ValueError("right-hand side length must equal the row count")
    aug = RatMatrix([list(row) + [bi] for row, bi in zip(m._data, b)], cols=m.cols + 1)
    red, pivots = _rref(aug)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [Fraction(0)] * m.cols
    for i, c in enumerate(pivots):
        x[c] = red[i][m.cols]
    return tuple(x)


def determinant(m) -> Fraction:
    m = _as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = [list(row) for row in m._data]
    det = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Bareiss determinant of a square integer matrix."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def primitive_integer_vector(v: Sequence) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd; the zero vector is returned as is."""
    v = [as_rational(x) for x in v]
    scale = 1
    for x in v:
        scale = lcm(scale, x.denominator)
    return tuple(_primitive([int(x * scale) for x in v]))
