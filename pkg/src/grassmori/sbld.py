"""Stable base locus decomposition of Eff(G(r, n)_1) and the five cones of
G(r, n)_1.

A class D = aH - bE lies on the ray of slope t = b/a.  The chambers are

    C_-1 = [E, H)                      base locus E
    C_0  = <H, H - E>                  empty base locus (nef)
    C_m  = (H - mE, H - (m+1)E]        base locus the Schubert locus R_m,  1 <= m <= r

and everything outside <E, H - (r+1)E> is not effective.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import RationalCone, dual
from .grassmann import GrassmannIndex
from .lattice import DivisorClass, intersection_form
from .orbits import effective_cone_catalog

C_MINUS_1 = "CMinus1"
C_0 = "C0_Nef"
C_I = "Ci"
NOT_EFFECTIVE = "NotEffective"

EMPTY = "Empty"
EXCEPTIONAL = "ExceptionalDivisor"
SCHUBERT = "SchubertLocus"

NEG_INF = "-inf"


@dataclass(frozen=True)
class Chamber:
    label: str
    index: int | None = None
    base_locus: str | None = None

    def __post_init__(self):
        expected = {C_MINUS_1: EXCEPTIONAL, C_0: EMPTY, C_I: SCHUBERT, NOT_EFFECTIVE: None}
        if self.label not in expected:
            raise ValueError(f"unknown chamber {self.label!r}")
        if self.base_locus != expected[self.label]:
            raise ValueError(f"{self.label} must carry base locus {expected[self.label]}")
        if (self.label == C_I) != (self.index is not None):
            raise ValueError("only C_i chambers carry an index")

    @property
    def name(self) -> str:
        return {C_MINUS_1: "C_-1", C_0: "C_0", NOT_EFFECTIVE: "NotEffective"}.get(self.label, f"C_{self.index}")


def _chamber(label: str, m: int | None = None) -> Chamber:
    locus = {C_MINUS_1: EXCEPTIONAL, C_0: EMPTY, C_I: SCHUBERT, NOT_EFFECTIVE: None}[label]
    return Chamber(label, m, locus)


def locate(g: GrassmannIndex, d: DivisorClass) -> Chamber:
    if d.k != 1:
        raise ValueError("the decomposition is only available for one blown-up point")
    a, b = d.h, d.e[0]
    if a == 0 and b == 0:
        raise ValueError("the zero class spans no ray")
    if a < 0 or (a == 0 and b > 0):
        return _chamber(NOT_EFFECTIVE)
    if b < 0:
        return _chamber(C_MINUS_1)
    t = Fraction(b) / a
    if t <= 1:
        return _chamber(C_0)
    if t > g.r + 1:
        return _chamber(NOT_EFFECTIVE)
    m = t.numerator // t.denominator
    if m == t:
        m -= 1
    return _chamber(C_I, m)


def base_locus_dim(g: GrassmannIndex, ch: Chamber):
    if ch.label == NOT_EFFECTIVE:
        raise ValueError("a non-effective class has no stable base locus")
    if ch.label == C_0:
        return NEG_INF
    if ch.label == C_MINUS_1:
        return g.dim - 1
    m = ch.index
    return m * (g.n + 1 - m)


def chamber_to_json(g: GrassmannIndex, ch: Chamber) -> dict:
    out: dict = {"chamber": ch.name, "label": ch.label}
    if ch.label == C_I:
        out["i"] = ch.index
    if ch.label == NOT_EFFECTIVE:
        out["base_locus"] = None
        return out
    dim = base_locus_dim(g, ch)
    locus: dict = {"kind": {EMPTY: "empty", EXCEPTIONAL: "exceptional", SCHUBERT: "schubert"}[ch.base_locus],
                   "dim": dim}
    if ch.label == C_I:
        locus["m"] = ch.index
    out["base_locus"] = locus
    return out


@dataclass(frozen=True)
class ConeSuite:
    Eff: RationalCone
    Nef: RationalCone
    Mov: RationalCone
    NE: RationalCone
    mov: RationalCone

    def to_json(self) -> dict:
        return {name: getattr(self, name).to_json() for name in ("Eff", "Nef", "Mov", "NE", "mov")}


def movable_cone(g: GrassmannIndex) -> RationalCone:
    """<H, H - jE> with j the largest index whose Schubert locus R_{j-1} has
    codimension at least 2; this gives H - rE for n = 2r+1 and H - (r+1)E
    otherwise."""
    j = g.r + 1
    while j > 1 and g.dim - (j - 1) * (g.n + 2 - j) < 2:
        j -= 1
    return RationalCone(2, [(1, 0), (1, j)])


def cone_suite(g: GrassmannIndex) -> ConeSuite:
    form = intersection_form(1)
    eff = effective_cone_catalog(g, 1)
    ne = RationalCone(2, [(0, -1), (1, 1)])
    return ConeSuite(Eff=eff, Nef=dual(ne, form), Mov=movable_cone(g), NE=ne, mov=dual(eff, form))


def wall_classes(g: GrassmannIndex) -> list[DivisorClass]:
    """E, H, H - E, ..., H - (r+1)E."""
    return [DivisorClass(0, (-1,))] + [DivisorClass(1, (j,)) for j in range(g.r + 2)]
