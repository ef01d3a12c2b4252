from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grassmori import lattice
from grassmori.lattice import (
    BlowupConfig, CurveClass, DimensionMismatch, DivisorClass, anticanonical, pair, top_self_intersection,
)

coef = st.integers(-20, 20)


def classes(cls, k):
    return st.builds(lambda h, e: cls(h, tuple(e)), coef, st.lists(coef, min_size=k, max_size=k))


@st.composite
def triples(draw):
    k = draw(st.integers(0, 5))
    return (draw(classes(DivisorClass, k)), draw(classes(DivisorClass, k)),
            draw(classes(CurveClass, k)), draw(classes(CurveClass, k)), draw(coef))


@given(triples())
def test_pairing_is_bilinear(t):
    d1, d2, c1, c2, s = t
    assert pair(d1 + d2, c1) == pair(d1, c1) + pair(d2, c1)
    assert pair(d1, c1 + c2) == pair(d1, c1) + pair(d1, c2)
    assert pair(s * d1, c1) == s * pair(d1, c1) == pair(d1, s * c1)


@given(st.integers(1, 6))
def test_basic_intersections(k):
    h, e1 = lattice.line(k), lattice.exceptional_line(1, k)
    H, E1 = lattice.hyperplane(k), lattice.exceptional(1, k)
    assert pair(H, h) == 1 and pair(H, e1) == 0
    assert pair(E1, e1) == -1 and pair(E1, h) == 0
    assert pair(E1, lattice.line_through(1, k)) == 1


def test_quadric_volume_formula():
    for k in range(9):
        cfg = BlowupConfig.quadric(3, k)
        assert top_self_intersection(anticanonical(cfg), cfg) == 54 - 8 * k


def test_exceptional_self_intersection_sign():
    # E^n = (-1)^(n-1): with D = -E stored as e = (1,), D^n = -1 for all n
    for n in range(2, 7):
        cfg = BlowupConfig.projective_space(n, 1)
        assert top_self_intersection(DivisorClass(0, (1,)), cfg) == -1
        assert top_self_intersection(lattice.exceptional(1, 1), cfg) == (-1) ** (n - 1)


def test_mismatch_and_types():
    with pytest.raises(DimensionMismatch):
        DivisorClass(1, (0,)) + DivisorClass(1, (0, 0))
    with pytest.raises(TypeError):
        pair(CurveClass(1, ()), DivisorClass(1, ()))
    assert DivisorClass(1, (2,)).__add__(CurveClass(1, (2,))) is NotImplemented


@given(classes(DivisorClass, 3), classes(CurveClass, 3))
def test_json_round_trip(d, c):
    assert DivisorClass.from_json(d.to_json()) == d
    assert CurveClass.from_json(c.to_json()) == c


def test_rendering():
    assert str(DivisorClass(1, (2,))) == "H - 2E"
    assert str(DivisorClass(0, (-1, 0))) == "E1"
    assert str(CurveClass(2, (1, 1, 1))) == "2h - e1 - e2 - e3"
    assert str(DivisorClass(0, (0,))) == "0"
    assert str(DivisorClass(Fraction(1, 2), (Fraction(-3, 2),))) == "1/2H + 3/2E"


def test_configs():
    g14 = BlowupConfig.grassmannian(1, 4, 0)
    assert (g14.n, g14.degree, g14.index, g14.codim) == (6, 5, 5, 3)
    assert BlowupConfig.grassmannian(1, 3, 0).is_quadric
    assert lattice.grassmannian_degree(2, 5) == 42
    assert BlowupConfig.grassmannian(0, 4, 2).family == lattice.PROJECTIVE_SPACE
    sec = BlowupConfig.g14_section(3, 1)
    assert (sec.n, sec.index, sec.codim) == (3, 2, 3)
    for bad in (dict(n=1, k=0, degree=1, index=2, codim=0),
                dict(n=3, k=-1, degree=1, index=2, codim=0),
                dict(n=3, k=0, degree=1, index=4, codim=1),
                dict(n=3, k=0, degree=2, index=3, codim=1)):
        with pytest.raises(ValueError):
            BlowupConfig(**bad)
    assert BlowupConfig.cubic(4, 2).with_k(3).k == 3
    assert anticanonical(BlowupConfig.quadric(3, 2)) == DivisorClass(3, (2, 2))
