"""Grassmannians G(r, n) of r-planes in P^n under the Plucker embedding.

Points are given by (r+1) x (n+1) basis matrices.  Plucker coordinates are
the maximal minors, indexed by (r+1)-subsets of {0..n} in lexicographic
order.

Local computations use the chart at p: extend a basis of p by unit vectors
to a basis t_0..t_r, s_0..s_{n-r-1} of Q^{n+1}, and send an
(r+1) x (n-r) matrix A to the span of the rows t_i + sum_j A_ij s_j.  The
Plucker coordinates become polynomials in the entries of A with p at the
origin, so osculating spans and multiplicities are read off monomial
coefficients.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

from .exactlin import RatMatrix, as_rational, determinant, rank, rref

Monomial = tuple[int, ...]


# -- sparse polynomials --------------------------------------------------------

class Poly:
    """Sparse polynomial over Q: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: as_rational(c)})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Poly":
        mono = [0] * nvars
        mono[i] = 1
        return cls(nvars, {tuple(mono): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            s = as_rational(other)
            return Poly(self.nvars, {m: s * c for m, c in self.terms.items()})
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no order")
        return min(sum(m) for m in self.terms)

    def monomials(self) -> list[Monomial]:
        """Monomials in graded-lex order."""
        return sorted(self.terms, key=lambda m: (sum(m), tuple(-e for e in m)))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __repr__(self):
        return f"Poly({self.nvars}, {{{', '.join(f'{m}: {c}' for m, c in self.terms.items())}}})"


def poly_determinant(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Laplace expansion along the first row; fine for the small sizes used here."""
    size = len(rows)
    if size == 1:
        return rows[0][0]
    nvars = rows[0][0].nvars
    total = Poly(nvars)
    for j in range(size):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = entry * poly_determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


# -- points and indices --------------------------------------------------------

@dataclass(frozen=True)
class GrassmannIndex:
    r: int
    n: int

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be non-negative")
        if self.n < 2 * self.r + 1:
            raise ValueError(f"need n >= 2r+1, got r={self.r}, n={self.n}")

    @property
    def N(self) -> int:
        return comb(self.n + 1, self.r + 1) - 1

    @property
    def dim(self) -> int:
        return (self.r + 1) * (self.n - self.r)

    def plucker_indices(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.n + 1), self.r + 1))


class SubspacePoint:
    """The (r+1)-dimensional row space of a full-rank basis matrix."""

    def __init__(self, basis):
        m = basis if isinstance(basis, RatMatrix) else RatMatrix(basis)
        if m.rows == 0 or rank(m) != m.rows:
            raise ValueError("basis must have full row rank")
        self.basis = m

    @property
    def r(self) -> int:
        return self.basis.rows - 1

    @property
    def n(self) -> int:
        return self.basis.cols - 1

    @cached_property
    def canonical(self) -> RatMatrix:
        return rref(self.basis)[0]

    def __eq__(self, other):
        return isinstance(other, SubspacePoint) and self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __repr__(self):
        return f"SubspacePoint({self.basis.to_lists()})"


class LinearCenter:
    """A linear subspace of P^n given by the row space of a full-rank matrix."""

    def __init__(self, subspace):
        m = subspace if isinstance(subspace, RatMatrix) else RatMatrix(subspace)
        if m.rows == 0 or rank(m) != m.rows:
            raise ValueError("center must have full row rank")
        self.subspace = m

    @property
    def projective_dim(self) -> int:
        return self.subspace.rows - 1


def coordinate_point(g: GrassmannIndex, columns: Sequence[int]) -> SubspacePoint:
    return SubspacePoint([[int(j == c) for j in range(g.n + 1)] for c in columns])


def coordinate_center(n: int, columns: Sequence[int]) -> LinearCenter:
    return LinearCenter([[int(j == c) for j in range(n + 1)] for c in columns])


def random_point(g: GrassmannIndex, rng: random.Random, bound: int = 100) -> SubspacePoint:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(g.n + 1)] for _ in range(g.r + 1)]
        try:
            return SubspacePoint(rows)
        except ValueError:
            continue


def _check_point(g: GrassmannIndex, p: SubspacePoint):
    if (p.r, p.n) != (g.r, g.n):
        raise ValueError(f"point lives in G({p.r},{p.n}), expected G({g.r},{g.n})")


# -- Plucker embedding -----------------------------------------------------------

def plucker(p: SubspacePoint) -> tuple[Fraction, ...]:
    cols = p.basis.cols
    rows = p.basis.to_lists()
    return tuple(
        determinant([[row[c] for c in idx] for row in rows])
        for idx in combinations(range(cols), p.basis.rows)
    )


def plucker_relation_3term(vec: Sequence) -> Fraction:
    """p01 p23 - p02 p13 + p03 p12 for a vector on G(1,3)."""
    p01, p02, p03, p12, p13, p23 = vec
    return p01 * p23 - p02 * p13 + p03 * p12


# -- Schubert loci R_m ---------------------------------------------------------

def schubert_membership(q: SubspacePoint, v: SubspacePoint, m: int) -> bool:
    """Does dim(U_q cap V) >= r+1-m hold for the flag piece V = v?"""
    r = q.r
    if not 0 <= m <= r + 1:
        raise ValueError("m must lie in [0, r+1]")
    meet = 2 * (r + 1) - rank(q.basis.stack(v.basis))
    return meet >= r + 1 - m


def schubert_dimension(g: GrassmannIndex, m: int, verify: bool = False, seed: int = 0) -> int:
    """dim R_m = m(n+1-m).  With ``verify`` the number is recomputed as the
    rank of the differential of the parametrization of R_m at a random
    point, and a mismatch raises.
    """
    if not 0 <= m <= g.r + 1:
        raise ValueError("m must lie in [0, r+1]")
    value = m * (g.n + 1 - m)
    if verify:
        measured = schubert_dimension_by_jacobian(g, m, seed)
        if measured != value:
            raise ArithmeticError(f"Jacobian rank gives {measured}, formula gives {value}")
    return value


def schubert_dimension_by_jacobian(g: GrassmannIndex, m: int, seed: int = 0,
                                   v: SubspacePoint | None = None, bound: int = 100) -> int:
    """Projective dimension of the image of (C, B) -> [C.V ; B] in P^N.

    C is (r+1-m) x (r+1) and B is m x (n+1); the row space meets V in
    dimension >= r+1-m, and every such space arises.  The differential is
    assembled column by column: moving one entry changes one row of the
    matrix, and each minor changes by the determinant with that row swapped
    for the direction.
    """
    rng = random.Random(seed)
    r, n = g.r, g.n
    if v is None:
        v = coordinate_point(g, range(r + 1))
    vb = v.basis.to_lists()
    fixed = r + 1 - m
    while True:
        c = [[Fraction(rng.randint(-bound, bound)) for _ in range(r + 1)] for _ in range(fixed)]
        b = [[Fraction(rng.randint(-bound, bound)) for _ in range(n + 1)] for _ in range(m)]
        top = [[sum(ci[t] * vb[t][j] for t in range(r + 1)) for j in range(n + 1)] for ci in c]
        mat = top + b
        if rank(mat) == r + 1:
            break
    directions: list[tuple[int, list[Fraction]]] = []
    for a in range(fixed):
        for t in range(r + 1):
            directions.append((a, vb[t]))
    for a in range(m):
        for j in range(n + 1):
            directions.append((fixed + a, [Fraction(int(i == j)) for i in range(n + 1)]))
    indices = g.plucker_indices()
    columns = []
    for row_idx, delta in directions:
        col = []
        for idx in indices:
            sub = [[row[i] for i in idx] for row in mat]
            sub[row_idx] = [delta[i] for i in idx]
            col.append(determinant(sub))
        columns.append(col)
    return rank(RatMatrix(columns, cols=len(indices))) - 1


# -- charts and osculating spaces --------------------------------------------------

class Chart:
    """Affine chart of G(r, n) centred at p."""

    def __init__(self, g: GrassmannIndex, p: SubspacePoint):
        _check_point(g, p)
        self.g = g
        self.p = p
        red, pivots = rref(p.basis)
        self.t = [list(red.row(i)) for i in range(red.rows)]
        self.s = [[Fraction(int(j == c)) for j in range(g.n + 1)] for c in range(g.n + 1) if c not in pivots]
        self.nvars = (g.r + 1) * (g.n - g.r)

    def var(self, i: int, j: int) -> int:
        return i * (self.g.n - self.g.r) + j

    @cached_property
    def rows(self) -> list[list[Poly]]:
        g, nv = self.g, self.nvars
        out = []
        for i in range(g.r + 1):
            row = []
            for col in range(g.n + 1):
                entry = Poly.constant(nv, self.t[i][col])
                for j, s in enumerate(self.s):
                    if s[col]:
                        entry = entry + Poly.variable(nv, self.var(i, j)) * s[col]
                row.append(entry)
            out.append(row)
        return out

    @cached_property
    def plucker_polys(self) -> list[Poly]:
        rows = self.rows
        return [poly_determinant([[row[c] for c in idx] for row in rows]) for idx in self.g.plucker_indices()]

    def point(self, a: Sequence[Sequence]) -> SubspacePoint:
        """The point with chart coordinates A."""
        rows = []
        for i, t in enumerate(self.t):
            rows.append([t[c] + sum(as_rational(a[i][j]) * s[c] for j, s in enumerate(self.s))
                         for c in range(self.g.n + 1)])
        return SubspacePoint(rows)


def osculating_span(g: GrassmannIndex, p: SubspacePoint, m: int, chart: Chart | None = None) -> RatMatrix:
    """Rows spanning the affine cone over T^m_p: one row per chart monomial of
    degree <= m, holding that monomial's coefficient in every Plucker
    coordinate (derivatives at the origin up to factorials).
    """
    if m < 0:
        raise ValueError("m must be non-negative")
    chart = chart or Chart(g, p)
    polys = chart.plucker_polys
    monos = sorted({mono for f in polys for mono in f.terms if sum(mono) <= m},
                   key=lambda mono: (sum(mono), tuple(-e for e in mono)))
    return RatMatrix([[f.terms.get(mono, Fraction(0)) for f in polys] for mono in monos], cols=g.N + 1)


def osculating_dimension(g: GrassmannIndex, p: SubspacePoint, m: int) -> int:
    return rank(osculating_span(g, p, m)) - 1


def in_span(span: RatMatrix, vec: Sequence) -> bool:
    base = rank(span)
    return rank(span.stack(RatMatrix([list(vec)], cols=span.cols))) == base


# -- Schubert divisors and multiplicities ------------------------------------------

@dataclass(frozen=True)
class PluckerForm:
    """Linear form sum c_I p_I in Plucker coordinates, lexicographic index order."""

    r: int
    n: int
    coefficients: tuple[Fraction, ...]

    def __call__(self, p: SubspacePoint) -> Fraction:
        return sum((c * x for c, x in zip(self.coefficients, plucker(p))), Fraction(0))

    def is_zero(self) -> bool:
        return not any(self.coefficients)


def schubert_divisor(g: GrassmannIndex, center: LinearCenter) -> PluckerForm:
    """Linear form cutting {Sigma : Sigma meets Gamma} for Gamma of dimension n-r-1.

    It is det([Sigma; Gamma]) expanded along the Sigma rows: the coefficient
    of p_I is the signed complementary minor of Gamma.
    """
    gam = center.subspace
    if gam.cols != g.n + 1:
        raise ValueError("center lives in a different projective space")
    if gam.rows != g.n - g.r:
        raise ValueError(f"center must be P^{g.n - g.r - 1}, got P^{center.projective_dim}")
    rows = gam.to_lists()
    k = g.r + 1
    base = k * (k - 1) // 2
    coeffs = []
    for idx in g.plucker_indices():
        rest = [c for c in range(g.n + 1) if c not in idx]
        sign = -1 if (sum(idx) - base) % 2 else 1
        coeffs.append(sign * determinant([[row[c] for c in rest] for row in rows]))
    form = PluckerForm(g.r, g.n, tuple(coeffs))
    if form.is_zero():
        raise ValueError("degenerate center: the form vanishes identically")
    return form


def multiplicity_at(g: GrassmannIndex, form: PluckerForm, p: SubspacePoint, chart: Chart | None = None) -> int:
    """Order of vanishing at p of the divisor cut by ``form``."""
    if form.is_zero():
        raise ValueError("the zero form does not define a divisor")
    chart = chart or Chart(g, p)
    total = Poly(chart.nvars)
    for c, f in zip(form.coefficients, chart.plucker_polys):
        if c:
            total = total + f * c
    return total.min_degree()


def borel_centers(g: GrassmannIndex) -> list[LinearCenter]:
    """Gamma_j = <e_0..e_{j-1}, e_{r+1}..e_{n-j}> for j = 0..r+1; the divisor
    they define has multiplicity j at <e_0..e_r>."""
    out = []
    for j in range(g.r + 2):
        cols = list(range(j)) + list(range(g.r + 1, g.n - j + 1))
        out.append(coordinate_center(g.n, cols))
    return out


def borel_base_point(g: GrassmannIndex) -> SubspacePoint:
    """p_0 = <e_i + e_{n-i} : i = 0..r>, off every Gamma_j divisor."""
    rows = [[int(c == i) + int(c == g.n - i) for c in range(g.n + 1)] for i in range(g.r + 1)]
    return SubspacePoint(rows)


def point_in_schubert_stratum(g: GrassmannIndex, v: SubspacePoint, m: int, rng: random.Random,
                              bound: int = 100) -> SubspacePoint:
    """Random U with dim(U cap V) = r+1-m exactly (generic in that stratum)."""
    r = g.r
    vb = v.basis.to_lists()
    while True:
        rows = []
        for _ in range(r + 1 - m):
            coeffs = [rng.randint(-bound, bound) for _ in range(r + 1)]
            rows.append([sum(a * vb[t][c] for t, a in enumerate(coeffs)) for c in range(g.n + 1)])
        rows += [[rng.randint(-bound, bound) for _ in range(g.n + 1)] for _ in range(m)]
        if rank(rows) != r + 1:
            continue
        q = SubspacePoint(rows)
        if 2 * (r + 1) - rank(q.basis.stack(v.basis)) == r + 1 - m:
            return q


__all__ = [
    "Chart", "GrassmannIndex", "LinearCenter", "PluckerForm", "Poly", "SubspacePoint",
    "borel_base_point", "borel_centers", "coordinate_center", "coordinate_point", "in_span",
    "multiplicity_at", "osculating_dimension", "osculating_span", "plucker", "plucker_relation_3term",
    "point_in_schubert_stratum", "poly_determinant", "random_point", "schubert_dimension",
    "schubert_dimension_by_jacobian", "schubert_divisor", "schubert_membership",
]
