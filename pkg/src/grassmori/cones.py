"""Finitely generated rational polyhedral cones.

A cone is stored by primitive integer generators.  Its facet normals (the
``dual_cache``, taken with respect to the standard dot product inside the
linear span of the cone) are computed at construction with the double
description method, so membership tests and duality are cheap afterwards.

Duality between divisor and curve cones goes through an explicit bilinear
form; see :func:`grassmori.lattice.intersection_form`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exactlin import integer_rank, nullspace, primitive_integer_vector, solve, RatMatrix


Vector = tuple[int, ...]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _primitive_ray(v) -> Vector:
    return primitive_integer_vector(v)


def standard_form(dim: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))


def double_description(rows: Sequence[Sequence[int]], dim: int) -> list[Vector]:
    """Extreme rays of {x in Q^dim : row . x >= 0 for every row}.

    The rows must span Q^dim (the solution cone is then pointed).  Rays are
    returned primitive and sorted.
    """
    rows = [tuple(int(x) for x in r) for r in rows if any(r)]
    if dim == 0:
        return []
    if integer_rank(rows, dim) != dim if rows else True:
        raise ValueError("inequalities do not span the space; the cone is not pointed")

    # Seed with a basis of rows: the simplicial cone A_S x >= 0.
    basis_idx: list[int] = []
    for i, r in enumerate(rows):
        if integer_rank([rows[j] for j in basis_idx] + [r], dim) > len(basis_idx):
            basis_idx.append(i)
            if len(basis_idx) == dim:
                break
    a_s = RatMatrix([rows[i] for i in basis_idx])
    rays = []
    for i in range(dim):
        rhs = [int(i == j) for j in range(dim)]
        rays.append(_primitive_ray(solve(a_s, rhs)))
    processed = [rows[i] for i in basis_idx]

    for i, a in enumerate(rows):
        if i in basis_idx:
            continue
        values = [_dot(a, x) for x in rays]
        neg = [x for x, s in zip(rays, values) if s < 0]
        if not neg:
            processed.append(a)
            continue
        pos = [(x, s) for x, s in zip(rays, values) if s > 0]
        keep = [x for x, s in zip(rays, values) if s >= 0]
        zero_sets = {x: frozenset(j for j, row in enumerate(processed) if _dot(row, x) == 0) for x in rays}
        fresh = []
        for p, sp in pos:
            for q in neg:
                common = zero_sets[p] & zero_sets[q]
                if len(common) < dim - 2:
                    continue
                if integer_rank([processed[j] for j in common], dim) != dim - 2 if common else dim != 2:
                    continue
                sq = _dot(a, q)
                fresh.append(_primitive_ray([sp * qi - sq * pi for pi, qi in zip(p, q)]))
        rays = sorted(set(keep) | set(fresh))
        processed.append(a)
    return sorted(set(rays))


class RationalCone:
    """Cone generated by finitely many integer (or rational) vectors."""

    def __init__(self, ambient_dim: int, generators: Iterable[Sequence]):
        self.ambient_dim = int(ambient_dim)
        gens = set()
        for g in generators:
            if len(g) != self.ambient_dim:
                raise ValueError(f"generator {tuple(g)} has length {len(g)}, expected {self.ambient_dim}")
            v = _primitive_ray(g)
            if any(v):
                gens.add(v)
        self.generators: tuple[Vector, ...] = tuple(sorted(gens))
        self._build_dual_cache()

    def _build_dual_cache(self):
        d = self.ambient_dim
        gens = self.generators
        self.dimension = integer_rank(gens, d) if gens else 0
        rho = self.dimension
        if rho == d:
            self._span_basis = None
            self.equations: tuple[Vector, ...] = ()
        else:
            # Work in coordinates of a basis of the span picked among the generators.
            basis: list[Vector] = []
            for g in gens:
                if integer_rank(basis + [g], d) > len(basis):
                    basis.append(g)
            self._span_basis = RatMatrix(basis, cols=d).transpose() if basis else None
            self.equations = tuple(_primitive_ray(z) for z in nullspace(RatMatrix(gens, cols=d))) if gens \
                else standard_form(d)
        coords = [_primitive_ray(self._coordinates(g)) for g in gens]
        self.dual_cache: tuple[Vector, ...] = tuple(double_description(coords, rho)) if rho else ()
        self.pointed = rho == 0 or integer_rank(self.dual_cache, rho) == rho

    def _coordinates(self, v) -> tuple[Fraction, ...] | None:
        if self._span_basis is None:
            return tuple(Fraction(x) for x in v)
        return solve(self._span_basis, v)

    # -- queries -------------------------------------------------------------

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise ValueError("vector length differs from the ambient dimension")
        if not any(v):
            return True
        if self.dimension == 0:
            return False
        x = self._coordinates(v)
        if x is None:
            return False
        return all(_dot(f, x) >= 0 for f in self.dual_cache)

    def contains_interior(self, v: Sequence) -> bool:
        """Strictly inside every facet (relative interior)."""
        if not self.contains(v) or self.dimension == 0:
            return False
        x = self._coordinates(v)
        return all(_dot(f, x) > 0 for f in self.dual_cache)

    def extremal_rays(self) -> tuple[Vector, ...]:
        if not self.pointed:
            raise ValueError("cone contains a line; extremal rays are not defined")
        rho = self.dimension
        out = []
        for g in self.generators:
            x = self._coordinates(g)
            active = [f for f in self.dual_cache if _dot(f, x) == 0]
            if (integer_rank(active, rho) if active else 0) == rho - 1:
                out.append(g)
        return tuple(sorted(out))

    def facets(self) -> tuple[Vector, ...]:
        """Inward facet normals; ambient coordinates only for full-dimensional cones."""
        if self._span_basis is not None:
            raise ValueError("facet normals of a lower-dimensional cone live in span coordinates")
        return self.dual_cache

    def is_full_dimensional(self) -> bool:
        return self.dimension == self.ambient_dim

    def __eq__(self, other):
        if not isinstance(other, RationalCone) or other.ambient_dim != self.ambient_dim:
            return NotImplemented if not isinstance(other, RationalCone) else False
        if self.pointed and other.pointed:
            return self.extremal_rays() == other.extremal_rays()
        return all(other.contains(g) for g in self.generators) and all(self.contains(g) for g in other.generators)

    def __hash__(self):
        return hash((self.ambient_dim, self.extremal_rays() if self.pointed else self.generators))

    def __le__(self, other: "RationalCone") -> bool:
        """Containment of cones."""
        return all(other.contains(g) for g in self.generators)

    def __repr__(self):
        rays = self.extremal_rays() if self.pointed else self.generators
        return f"RationalCone({self.ambient_dim}, {list(rays)})"

    def to_json(self) -> dict:
        rays = self.extremal_rays() if self.pointed else self.generators
        return {"ambient": self.ambient_dim, "rays": [list(r) for r in rays]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalCone":
        return cls(data["ambient"], data["rays"])


def dual(c: RationalCone, form: Sequence[Sequence[int]]) -> RationalCone:
    """{v : <g, v> >= 0 for every generator g}, with <g, v> = g^T form v.

    ``form`` must be square and invertible.  Use :func:`standard_form` for the
    ordinary dot product and ``lattice.intersection_form(k)`` to pass between
    divisor and curve classes.
    """
    d = c.ambient_dim
    f = RatMatrix(form)
    if f.shape != (d, d):
        raise ValueError(f"form must be {d}x{d}")
    if not c.is_full_dimensional():
        raise ValueError("the dual of a lower-dimensional cone contains a line")
    if integer_rank([[int(x) for x in row] for row in f.to_lists()], d) != d:
        raise ValueError("degenerate bilinear form")
    # g^T F v >= 0 for all g  <=>  F v lies in the dual of c under the dot product,
    # whose rays are the cached facet normals.
    rays = [solve(f, n) for n in c.dual_cache]
    return RationalCone(d, rays)
