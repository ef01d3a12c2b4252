"""Borel-type subalgebras fixing configurations of points of G(r, n), and the
complexity of G(r, n)_k.

The Lie algebra of the group preserving a family of flags is the space of
trace-zero matrices M with M V inside V for every flag piece V.  Its orbit
through a point U has dimension equal to the rank of

    M  ->  (u -> M u mod U)   in Hom(U, C^{n+1}/U),

which we evaluate as W M U^T with W a basis of the annihilator of U.

Point configurations.  For k <= floor((n+1)/(r+1)) the points are coordinate
blocks <e_{i(r+1)}, ..., e_{(i+1)(r+1)-1}>; the algebra fixes a complete
coordinate flag in each block and one in the leftover coordinates, which is
the Borel of the reductive part of the stabilizer.  One further general point
is handled only through the larger algebra that also preserves the leftover
flag extended by v = e_0 + ... + e_n; the resulting complexity is then a
lower bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from . import fano
from .cones import RationalCone
from .exactlin import RatMatrix, integer_rank, nullspace, primitive_integer_vector, rank
from .grassmann import GrassmannIndex, SubspacePoint
from .lattice import BlowupConfig

DEFAULT_SAMPLES = 5
DEFAULT_BOUND = 100

MORI_DREAM = "MoriDream"
UNKNOWN = "Unknown"


class UnsupportedConfiguration(ValueError):
    """The requested point configuration is not one the engine can place."""


# -- flags and subalgebras -----------------------------------------------------------

@dataclass(frozen=True)
class FlagSpec:
    """Nested subspaces V_1 < V_2 < ... of Q^{n+1}, each given by spanning rows."""

    pieces: tuple[RatMatrix, ...]

    def __post_init__(self):
        pieces = tuple(p if isinstance(p, RatMatrix) else RatMatrix(p) for p in self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise ValueError("a flag needs at least one piece")
        cols = {p.cols for p in pieces}
        if len(cols) != 1:
            raise ValueError("flag pieces live in different ambient spaces")
        prev = None
        for p in pieces:
            d = rank(p)
            if d != p.rows:
                raise ValueError("flag piece rows must be independent")
            if prev is not None:
                if d <= rank(prev):
                    raise ValueError("flag dimensions must increase strictly")
                if rank(prev.stack(p)) != d:
                    raise ValueError("flag pieces must be nested")
            prev = p

    @property
    def ambient(self) -> int:
        return self.pieces[0].cols

    @classmethod
    def coordinate(cls, n: int, columns: Sequence[int], extra: Sequence[Sequence[int]] = ()) -> "FlagSpec":
        """Complete flag <e_c0> < <e_c0, e_c1> < ..., optionally followed by
        one more piece for each extra vector."""
        unit = [[int(j == c) for j in range(n + 1)] for c in columns]
        pieces = [unit[: i + 1] for i in range(len(unit))]
        rows = list(unit)
        for v in extra:
            rows = rows + [list(v)]
            pieces.append(list(rows))
        return cls(tuple(RatMatrix(p, cols=n + 1) for p in pieces))


@dataclass(frozen=True)
class SubalgebraBasis:
    """Trace-zero (n+1) x (n+1) integer matrices, flattened row-major."""

    size: int
    elements: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def matrices(self) -> list[RatMatrix]:
        s = self.size
        return [RatMatrix([e[i * s:(i + 1) * s] for i in range(s)], cols=s) for e in self.elements]


def _annihilator(rows: Sequence[Sequence], ncols: int) -> list[tuple[int, ...]]:
    """Integer basis of {w : w . v = 0 for every row v}."""
    return [primitive_integer_vector(z) for z in nullspace(RatMatrix(rows, cols=ncols))]


def stabilizer_subalgebra(n: int, flags: Sequence[FlagSpec]) -> SubalgebraBasis:
    size = n + 1
    nvars = size * size
    equations: list[dict[int, int]] = []
    for flag in flags:
        if flag.ambient != size:
            raise ValueError(f"flag lives in dimension {flag.ambient}, expected {size}")
        for piece in flag.pieces:
            basis = [primitive_integer_vector(r) for r in piece.to_lists()]
            for w in _annihilator(basis, size):
                for v in basis:
                    eq: dict[int, int] = {}
                    for a, wa in enumerate(w):
                        if not wa:
                            continue
                        for c, vc in enumerate(v):
                            if vc:
                                eq[a * size + c] = eq.get(a * size + c, 0) + wa * vc
                    eq = {i: x for i, x in eq.items() if x}
                    if eq:
                        equations.append(eq)
    equations.append({i * size + i: 1 for i in range(size)})

    # Equations with a single variable just kill that entry; strip them first so
    # the dense nullspace only sees the coupled part.
    zero: set[int] = set()
    changed = True
    while changed:
        changed = False
        rest = []
        for eq in equations:
            eq = {i: x for i, x in eq.items() if i not in zero}
            if len(eq) == 1:
                zero.update(eq)
                changed = True
            elif eq:
                rest.append(eq)
        equations = rest
    free = [i for i in range(nvars) if i not in zero]
    if equations:
        mat = RatMatrix([[eq.get(v, 0) for v in free] for eq in equations], cols=len(free))
        kernel = [primitive_integer_vector(z) for z in nullspace(mat)]
    else:
        kernel = [tuple(int(i == j) for i in range(len(free))) for j in range(len(free))]
    elements = []
    for z in kernel:
        full = [0] * nvars
        for v, x in zip(free, z):
            full[v] = x
        elements.append(tuple(full))
    return SubalgebraBasis(size, tuple(elements))


# -- configurations ------------------------------------------------------------------

def max_block_points(g: GrassmannIndex) -> int:
    return (g.n + 1) // (g.r + 1)


def configuration_flags(g: GrassmannIndex, k: int) -> tuple[list[FlagSpec], bool]:
    """Flags for k points and whether the resulting complexity is exact."""
    if k < 0:
        raise ValueError("k must be non-negative")
    kmax = max_block_points(g)
    if k > kmax + 1:
        raise UnsupportedConfiguration(
            f"k={k} needs more than one general point beyond the {kmax} coordinate blocks of G({g.r},{g.n})"
        )
    blocks = min(k, kmax)
    size = g.r + 1
    flags = [FlagSpec.coordinate(g.n, range(i * size, (i + 1) * size)) for i in range(blocks)]
    leftover = list(range(blocks * size, g.n + 1))
    if k <= kmax:
        if leftover:
            flags.append(FlagSpec.coordinate(g.n, leftover))
        return flags, True
    v1 = [1] * (g.n + 1)
    if leftover:
        flags.append(FlagSpec.coordinate(g.n, leftover, extra=[v1]))
    else:
        flags.append(FlagSpec((RatMatrix([v1]),)))
    return flags, False


def configuration_algebra(g: GrassmannIndex, k: int) -> tuple[SubalgebraBasis, bool]:
    flags, exact = configuration_flags(g, k)
    return stabilizer_subalgebra(g.n, flags), exact


# -- orbit dimensions ----------------------------------------------------------------

def orbit_dimension(g: GrassmannIndex, alg: SubalgebraBasis, q: SubspacePoint) -> int:
    if (q.r, q.n) != (g.r, g.n):
        raise ValueError("point and Grassmannian disagree")
    size = g.n + 1
    if alg.size != size:
        raise ValueError("algebra acts on a different space")
    u = [primitive_integer_vector(row) for row in q.basis.to_lists()]
    w = _annihilator(u, size)
    rows = []
    for elem in alg.elements:
        nz = [(i // size, i % size, x) for i, x in enumerate(elem) if x]
        out = []
        for wi in w:
            for uj in u:
                out.append(sum(x * wi[a] * uj[b] for a, b, x in nz))
        rows.append(out)
    return integer_rank(rows, len(w) * len(u)) if rows else 0


def general_point(g: GrassmannIndex, rng: random.Random, bound: int = DEFAULT_BOUND) -> SubspacePoint:
    """[I | A] with A uniform in [-bound, bound]: a random point of the open
    chart, which is dense, so this is a general point with high probability."""
    r, n = g.r, g.n
    rows = []
    for i in range(r + 1):
        rows.append([int(i == j) for j in range(r + 1)] + [rng.randint(-bound, bound) for _ in range(n - r)])
    return SubspacePoint(rows)


def sample_rng(seed: int, index: int) -> random.Random:
    """Independent stream per sample, so samples can run in any order."""
    return random.Random(f"grassmori:{seed}:{index}")


# -- complexity ------------------------------------------------------------------------

@dataclass
class ComplexityReport:
    r: int
    n: int
    k: int
    complexity: int
    exact: bool
    orbit_dim: int
    algebra_dim: int
    samples: list[int]
    seed: int
    stable: bool = True
    dim: int = field(default=0)

    @property
    def stabilizer_dim(self) -> int:
        return self.algebra_dim - self.orbit_dim

    @property
    def samples_used(self) -> int:
        return len(self.samples)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "n": self.n,
            "k": self.k,
            "complexity": self.complexity,
            "exact": self.exact,
            "lower_bound": not self.exact,
            "orbit_dim": self.orbit_dim,
            "algebra_dim": self.algebra_dim,
            "stabilizer_dim": self.stabilizer_dim,
            "dim": self.dim,
            "samples": list(self.samples),
            "seed": self.seed,
            "stable": self.stable,
        }


def complexity(g: GrassmannIndex, k: int, seed: int = 0, samples: int = DEFAULT_SAMPLES,
               bound: int = DEFAULT_BOUND) -> ComplexityReport:
    """Codimension of a general orbit of the configuration algebra.

    Takes the maximal orbit dimension over ``samples`` general points; rank is
    lower semicontinuous so the maximum is the generic value unless every
    sample hit the exceptional locus.
    """
    if samples < 1:
        raise ValueError("samples must be at least 1")
    alg, exact = configuration_algebra(g, k)
    values = [orbit_dimension(g, alg, general_point(g, sample_rng(seed, i), bound)) for i in range(samples)]
    best = max(values)
    stable = values.count(best) * 10 >= 9 * len(values)
    return ComplexityReport(g.r, g.n, k, g.dim - best, exact, best, alg.dim, sorted(values), seed, stable, g.dim)


def is_spherical(g: GrassmannIndex, k: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> bool:
    report = complexity(g, k, seed, samples)
    return report.complexity == 0 and report.exact


# -- effective cones and Mori dream spaces -----------------------------------------

def _divisor(k: int, a: int, b: Sequence[int]) -> tuple[int, ...]:
    """(a, b_1..b_k) for a H - sum b_i E_i."""
    return (a,) + tuple(b)


def _exceptionals(k: int) -> list[tuple[int, ...]]:
    return [_divisor(k, 0, [-int(i == j) for j in range(k)]) for i in range(k)]


def effective_cone_catalog(g: GrassmannIndex, k: int) -> RationalCone:
    """Effective cones of the spherical blow-ups, in (H, E_1..E_k) coordinates
    with a H - sum b_i E_i stored as (a, b_1, ..., b_k)."""
    r, n = g.r, g.n
    gens = _exceptionals(k)
    if k == 1:
        gens.append(_divisor(1, 1, [r + 1]))
    elif k == 2 and n == 2 * r + 1:
        gens += [_divisor(2, 1, [r + 1, 0]), _divisor(2, 1, [0, r + 1])]
    elif k == 2 and n == 2 * r + 2:
        gens += [_divisor(2, 1, [r + 1, 1]), _divisor(2, 1, [1, r + 1])]
    elif k == 2 and r == 1 and n >= 5:
        gens.append(_divisor(2, 1, [2, 2]))
    elif k == 3 and (r, n) == (1, 5):
        gens += [_divisor(3, 1, [2, 2, 0]), _divisor(3, 1, [2, 0, 2]), _divisor(3, 1, [0, 2, 2])]
    else:
        raise UnsupportedConfiguration(f"no effective cone on record for G({r},{n})_{k}")
    return RationalCone(k + 1, gens)


def mds_verdict(g: GrassmannIndex, k: int, seed: int = 0, samples: int = DEFAULT_SAMPLES) -> str:
    r, n = g.r, g.n
    if r == 0 and k <= n + 3:
        return MORI_DREAM
    if (r, n) == (1, 4):
        verdict = fano.classify(BlowupConfig.grassmannian(1, 4, k))
        if verdict.status in (fano.FANO, fano.WEAK_FANO_NOT_FANO):
            return MORI_DREAM
    try:
        report = complexity(g, k, seed, samples)
    except UnsupportedConfiguration:
        return UNKNOWN
    if report.exact and report.complexity <= 1:
        return MORI_DREAM
    return UNKNOWN


def two_block_dimension(r: int, n: int) -> int:
    """(r+1)(r+2) + (n-2r-1)(n-2r)/2 - 1: two block Borels plus the leftover one."""
    return (r + 1) * (r + 2) + (n - 2 * r - 1) * (n - 2 * r) // 2 - 1


def two_point_complexity_formula(r: int, n: int) -> int:
    """Closed form of c(G(r,n)_2) for n >= 2r+2."""
    if n <= 3 * r + 2:
        return (n - 2 * r - 2) * (4 * r + 1 - n) // 2
    return r * (r - 1) // 2

