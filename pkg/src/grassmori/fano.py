"""Mori cones of X_k and the Fano / weak-Fano classification.

For the families covered by lines the Mori cone is generated by e_i and
l_i = h - e_i as long as k <= codim(X) + 1; on quadrics the conics
c_ijl = 2h - e_i - e_j - e_l join the list for larger k.  Ampleness and
nefness of -K are then read off the pairings with these generators, and
bigness of a nef -K off its top self-intersection.

Projective spaces and surfaces are not covered by that argument (for P^n the
bound k <= codim + 1 = 1 is useless); their rows come from the del Pezzo
classification and from the known result for blow-ups of P^n, encoded below
as data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import lattice
from .lattice import BlowupConfig, CurveClass, anticanonical, pair, top_self_intersection

FANO = "Fano"
WEAK_FANO_NOT_FANO = "WeakFanoNotFano"
NOT_WEAK_FANO = "NotWeakFano"
OUT_OF_SCOPE = "OutOfScope"


class OutOfScope(Exception):
    """No available description of the Mori cone applies to this configuration."""


@dataclass(frozen=True)
class FanoVerdict:
    status: str
    witness: dict | None = None
    reason: str = field(default="", compare=False)

    def __post_init__(self):
        if self.status == FANO and self.witness is not None:
            raise ValueError("a Fano verdict carries no witness")
        if self.status == NOT_WEAK_FANO and self.witness is None:
            raise ValueError("a NotWeakFano verdict needs a witness")

    def to_json(self) -> dict:
        out = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason:
            out["reason"] = self.reason
        return out


def _quadric_bound(n: int) -> Fraction:
    return Fraction(3 * n + 2, 2) if n % 2 == 0 else Fraction(3 * n + 3, 2)


def mori_generators(cfg: BlowupConfig) -> list[CurveClass]:
    """Generators of NE(X_k); raises :class:`OutOfScope` when none of the
    known descriptions applies.  For k = 0 the list is empty and NE = <h>.
    """
    k = cfg.k
    if k == 0:
        return []
    if not cfg.covered_by_lines:
        raise OutOfScope("X is not known to be covered by lines")
    base = [lattice.exceptional_line(i, k) for i in range(1, k + 1)]
    base += [lattice.line_through(i, k) for i in range(1, k + 1)]
    if k <= cfg.codim + 1:
        return base
    if cfg.is_quadric and k >= 3 and k <= _quadric_bound(cfg.n):
        return base + [lattice.conic_through(t, k) for t in lattice.conic_indices(k)]
    raise OutOfScope(f"k={k} exceeds codim+1={cfg.codim + 1}" +
                     (f" and the quadric bound {_quadric_bound(cfg.n)}" if cfg.is_quadric else ""))


def weak_fano_bound(cfg: BlowupConfig) -> Fraction:
    """d * index^n / (n-1)^n; X_k can only be weak Fano for k strictly below it."""
    n = cfg.n
    if n == 1:
        raise ValueError("n = 1 has no bound")
    return cfg.degree * Fraction(cfg.index) ** n / Fraction(n - 1) ** n


def _curve_witness(curve: CurveClass, value) -> dict:
    return {"kind": "curve", "curve": curve.to_json(), "pairing": lattice.format_rational(value)}


def _volume_witness(cfg: BlowupConfig, volume) -> dict:
    return {
        "kind": "volume",
        "volume": lattice.format_rational(volume),
        "bound": lattice.format_rational(weak_fano_bound(cfg)),
    }


def _known_curves(cfg: BlowupConfig) -> list[CurveClass]:
    """Effective curves on X_k even where they need not generate NE."""
    k = cfg.k
    curves = [lattice.exceptional_line(i, k) for i in range(1, k + 1)]
    if cfg.covered_by_lines:
        curves += [lattice.line_through(i, k) for i in range(1, k + 1)]
    if cfg.family == lattice.PROJECTIVE_SPACE and k >= 2:
        curves.append(CurveClass(1, (1, 1) + (0,) * (k - 2)))
    if cfg.is_quadric and k >= 3:
        curves += [lattice.conic_through(t, k) for t in lattice.conic_indices(k)]
    return curves


def _table_row(cfg: BlowupConfig) -> FanoVerdict | None:
    """Rows resolved by classification data rather than by the Mori cone."""
    n, k = cfg.n, cfg.k
    if n == 2 and cfg.family in (lattice.PROJECTIVE_SPACE, lattice.QUADRIC):
        # del Pezzo surfaces; Q^2 blown up in k points is P^2 blown up in k+1.
        limit = 8 if cfg.family == lattice.PROJECTIVE_SPACE else 7
        if k <= limit:
            return FanoVerdict(FANO, reason="del Pezzo surface")
        return None
    if cfg.family == lattice.PROJECTIVE_SPACE:
        if k <= 1:
            return FanoVerdict(FANO, reason="blow-up of P^n in at most one point")
        if n == 3 and k <= 7:
            return FanoVerdict(WEAK_FANO_NOT_FANO, reason="blow-up of P^3 in 2..7 general points")
    return None


def classify(cfg: BlowupConfig) -> FanoVerdict:
    k = cfg.k
    minus_k = anticanonical(cfg)
    volume = top_self_intersection(minus_k, cfg)

    if cfg.covered_by_lines and k >= 1 and cfg.index < cfg.n - 1:
        l1 = lattice.line_through(1, k)
        return FanoVerdict(NOT_WEAK_FANO, _curve_witness(l1, pair(minus_k, l1)),
                           reason="index < n-1 makes -K negative on lines through a blown-up point")

    row = _table_row(cfg)
    if row is not None:
        return row

    if volume <= 0:
        return FanoVerdict(NOT_WEAK_FANO, _volume_witness(cfg, volume),
                           reason="(-K)^n <= 0, so -K is not big")

    try:
        gens = mori_generators(cfg)
    except OutOfScope as exc:
        for c in _known_curves(cfg):
            value = pair(minus_k, c)
            if value < 0:
                return FanoVerdict(NOT_WEAK_FANO, _curve_witness(c, value),
                                   reason="-K is negative on an effective curve")
        return FanoVerdict(OUT_OF_SCOPE, reason=str(exc))

    if not gens:
        # k = 0: X itself is Fano by assumption.
        return FanoVerdict(FANO, reason="no points blown up")
    values = [(pair(minus_k, c), c) for c in gens]
    low, worst = min(values, key=lambda t: (t[0], t[1].vector()))
    if low > 0:
        return FanoVerdict(FANO, reason="-K is positive on every Mori cone generator")
    if low < 0:
        return FanoVerdict(NOT_WEAK_FANO, _curve_witness(worst, low),
                           reason="-K is negative on a Mori cone generator")
    return FanoVerdict(WEAK_FANO_NOT_FANO, {"kind": "curve", "curve": worst.to_json(), "pairing": "0"},
                       reason="-K is nef and big but vanishes on a Mori cone generator")
