"""Divisor and curve classes on the blow-up X_k of a prime Fano variety X at k
general points.

Classes are stored with the exceptional part subtracted::

    D = a*H - sum(b_i * E_i)        stored as  DivisorClass(h=a, e=(b_1, ..., b_k))
    C = d*h - sum(m_i * e_i)        stored as  CurveClass(h=d, e=(m_1, ..., m_k))

so H - jE has ``e == (j,)`` and E itself has ``e == (-1,)``.  The pairing is
``D . C = a*d - sum(b_i * m_i)``; with this convention H.h = 1, H.e_i = 0,
E_i.e_i = -1 and E_i.h = 0.

Top self-intersection.  H^n = deg X.  A product H^i E_j^(n-i) with 0 < i < n
vanishes because a general hyperplane section misses the point p_j.  E_j is
a P^(n-1) with normal bundle O(-1), so E_j^n = (E_j|E_j)^(n-1) = (-1)^(n-1)
and therefore (-b E_j)^n = (-b)^n (-1)^(n-1) = -b^n.  Altogether

    (a H - sum b_i E_i)^n = a^n deg X - sum b_i^n,

which gives (3H - 2 sum E_i)^3 = 54 - 8k on the quadric threefold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod
from typing import Sequence

from .exactlin import as_rational, format_rational


class DimensionMismatch(ValueError):
    """Two classes live on blow-ups with a different number of points."""


def _coerce(values: Sequence) -> tuple[Fraction, ...]:
    return tuple(as_rational(v) for v in values)


@dataclass(frozen=True)
class _Class:
    h: Fraction
    e: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "h", as_rational(self.h))
        object.__setattr__(self, "e", _coerce(self.e))

    @property
    def k(self) -> int:
        return len(self.e)

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.k != self.k:
            raise DimensionMismatch(f"k={self.k} vs k={other.k}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.h + other.h, tuple(a + b for a, b in zip(self.e, other.e)))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return type(self)(self.h - other.h, tuple(a - b for a, b in zip(self.e, other.e)))

    def __neg__(self):
        return type(self)(-self.h, tuple(-a for a in self.e))

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return type(self)(s * self.h, tuple(s * a for a in self.e))

    __rmul__ = __mul__

    def vector(self) -> tuple[Fraction, ...]:
        """Coordinates (h, e_1, ..., e_k) in the stored sign convention."""
        return (self.h,) + self.e


@dataclass(frozen=True)
class DivisorClass(_Class):
    def to_json(self) -> dict:
        return {"H": format_rational(self.h), "E": [format_rational(b) for b in self.e]}

    @classmethod
    def from_json(cls, data: dict) -> "DivisorClass":
        return cls(data["H"], data["E"])

    def __str__(self):
        return _render(self.h, self.e, "H", "E")


@dataclass(frozen=True)
class CurveClass(_Class):
    def to_json(self) -> dict:
        return {"h": format_rational(self.h), "e": [format_rational(m) for m in self.e]}

    @classmethod
    def from_json(cls, data: dict) -> "CurveClass":
        return cls(data["h"], data["e"])

    def __str__(self):
        return _render(self.h, self.e, "h", "e")


def _render(lead, tail, big, small) -> str:
    terms = []
    if lead:
        terms.append(f"{format_rational(lead)}{big}" if lead != 1 else big)
    for i, b in enumerate(tail, start=1):
        if not b:
            continue
        name = f"{small}{i}" if len(tail) > 1 else small
        coef = "" if abs(b) == 1 else format_rational(abs(b))
        terms.append(("- " if b > 0 else "+ ") + coef + name)
    if not terms:
        return "0"
    out = " ".join(terms)
    return out[2:] if out.startswith("+ ") else out


# -- named classes -----------------------------------------------------------

def hyperplane(k: int) -> DivisorClass:
    return DivisorClass(1, (0,) * k)


def exceptional(i: int, k: int) -> DivisorClass:
    """E_i, 1-based."""
    e = [0] * k
    e[i - 1] = -1
    return DivisorClass(0, e)


def line(k: int) -> CurveClass:
    return CurveClass(1, (0,) * k)


def exceptional_line(i: int, k: int) -> CurveClass:
    """e_i, the class of a line in E_i (1-based)."""
    m = [0] * k
    m[i - 1] = -1
    return CurveClass(0, m)


def line_through(i: int, k: int) -> CurveClass:
    """l_i = h - e_i, strict transform of a line through p_i."""
    m = [0] * k
    m[i - 1] = 1
    return CurveClass(1, m)


def conic_through(indices: Sequence[int], k: int) -> CurveClass:
    """c_ijl = 2h - e_i - e_j - e_l."""
    m = [0] * k
    for i in indices:
        m[i - 1] += 1
    return CurveClass(2, m)


def pair(d: DivisorClass, c: CurveClass) -> Fraction:
    if not isinstance(d, DivisorClass) or not isinstance(c, CurveClass):
        raise TypeError("pair takes a divisor class and a curve class")
    if d.k != c.k:
        raise DimensionMismatch(f"divisor has k={d.k}, curve has k={c.k}")
    return d.h * c.h - sum((b * m for b, m in zip(d.e, c.e)), Fraction(0))


def intersection_form(k: int) -> tuple[tuple[int, ...], ...]:
    """Gram matrix of the pairing in (h, e_1..e_k) coordinates: diag(1, -1, ..., -1)."""
    return tuple(tuple((1 if i == 0 else -1) if i == j else 0 for j in range(k + 1)) for i in range(k + 1))


# -- configurations ----------------------------------------------------------

PROJECTIVE_SPACE = "ProjectiveSpace"
QUADRIC = "Quadric"
CUBIC = "Cubic"
Y22 = "Y22"
G14_SECTION = "G14Section"
GRASSMANNIAN = "Grassmannian"
OTHER = "Other"

FAMILIES = (PROJECTIVE_SPACE, QUADRIC, CUBIC, Y22, G14_SECTION, GRASSMANNIAN, OTHER)


def grassmannian_degree(r: int, n: int) -> int:
    """Degree of G(r, n) in its Plucker embedding."""
    k = r + 1
    dim = k * (n + 1 - k)
    num = factorial(dim) * prod(factorial(i) for i in range(k))
    den = prod(factorial(n + 1 - k + i) for i in range(k))
    return num // den


@dataclass(frozen=True)
class BlowupConfig:
    """Numerical profile of X together with the number k of blown-up points."""

    n: int
    k: int
    degree: Fraction
    index: int
    codim: int
    covered_by_lines: bool = True
    family: str = OTHER
    family_params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "degree", as_rational(self.degree))
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.degree < 1:
            raise ValueError("degree must be at least 1")
        if not 1 <= self.index <= self.n + 1:
            raise ValueError("index must lie in [1, n+1]")
        if self.index == self.n + 1 and self.family != PROJECTIVE_SPACE:
            raise ValueError("index n+1 forces X to be projective space")
        if self.index == self.n and not self.is_quadric:
            raise ValueError("index n forces X to be a quadric")

    @property
    def is_quadric(self) -> bool:
        return self.family == QUADRIC or (self.family == GRASSMANNIAN and self.family_params == (1, 3))

    def with_k(self, k: int) -> "BlowupConfig":
        return BlowupConfig(self.n, k, self.degree, self.index, self.codim,
                            self.covered_by_lines, self.family, self.family_params)

    def label(self) -> str:
        if self.family == PROJECTIVE_SPACE:
            return f"P^{self.n}"
        if self.family == QUADRIC:
            return f"Q^{self.n}"
        if self.family == CUBIC:
            return f"Y3^{self.n}"
        if self.family == Y22:
            return f"Y22^{self.n}"
        if self.family == G14_SECTION:
            return f"G(1,4) section c={self.family_params[0]}"
        if self.family == GRASSMANNIAN:
            return "G({},{})".format(*self.family_params)
        return f"X^{self.n}"

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.family_params),
            "n": self.n,
            "k": self.k,
            "degree": format_rational(self.degree),
            "index": self.index,
            "codim": self.codim,
            "covered_by_lines": self.covered_by_lines,
        }

    # factories

    @classmethod
    def projective_space(cls, n: int, k: int) -> "BlowupConfig":
        return cls(n, k, 1, n + 1, 0, True, PROJECTIVE_SPACE)

    @classmethod
    def quadric(cls, n: int, k: int) -> "BlowupConfig":
        return cls(n, k, 2, n, 1, True, QUADRIC)

    @classmethod
    def cubic(cls, n: int, k: int) -> "BlowupConfig":
        if n < 3:
            raise ValueError("the prime cubic needs n >= 3")
        return cls(n, k, 3, n - 1, 1, True, CUBIC)

    @classmethod
    def y22(cls, n: int, k: int) -> "BlowupConfig":
        if n < 3:
            raise ValueError("the prime complete intersection of two quadrics needs n >= 3")
        return cls(n, k, 4, n - 1, 2, True, Y22)

    @classmethod
    def g14_section(cls, c: int, k: int) -> "BlowupConfig":
        """Codimension-c linear section of G(1,4) in P^9: dimension 6-c in P^(9-c)."""
        if not 0 <= c <= 3:
            raise ValueError("linear sections of G(1,4) are prime del Pezzo only for c <= 3")
        n = 6 - c
        return cls(n, k, 5, n - 1, 3, True, G14_SECTION, (c,))

    @classmethod
    def grassmannian(cls, r: int, m: int, k: int) -> "BlowupConfig":
        if r == 0:
            return cls.projective_space(m, k)
        if m < 2 * r + 1:
            raise ValueError("use the dual Grassmannian: need m >= 2r+1")
        dim = (r + 1) * (m - r)
        codim = comb(m + 1, r + 1) - 1 - dim
        return cls(dim, k, grassmannian_degree(r, m), m + 1, codim, True, GRASSMANNIAN, (r, m))


def anticanonical(cfg: BlowupConfig) -> DivisorClass:
    return DivisorClass(cfg.index, (cfg.n - 1,) * cfg.k)


def top_self_intersection(d: DivisorClass, cfg: BlowupConfig) -> Fraction:
    if d.k != cfg.k:
        raise DimensionMismatch(f"class has k={d.k}, configuration has k={cfg.k}")
    n = cfg.n
    return d.h ** n * cfg.degree - sum((b ** n for b in d.e), Fraction(0))


def conic_indices(k: int):
    return combinations(range(1, k + 1), 3)
