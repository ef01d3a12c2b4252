from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from grassmori import sbld
from grassmori.cones import RationalCone
from grassmori.grassmann import GrassmannIndex
from grassmori.lattice import DivisorClass


def D(a, b):
    return DivisorClass(a, (b,))


def test_examples():
    g = GrassmannIndex(2, 5)
    ch = sbld.locate(g, D(1, 1))
    assert ch.label == sbld.C_0 and ch.base_locus == sbld.EMPTY
    ch = sbld.locate(g, D(1, 3))
    assert (ch.label, ch.index, ch.base_locus) == (sbld.C_I, 2, sbld.SCHUBERT)
    ch = sbld.locate(g, DivisorClass(0, (-1,)))
    assert (ch.label, ch.base_locus) == (sbld.C_MINUS_1, sbld.EXCEPTIONAL)
    assert sbld.locate(g, D(1, 4)).label == sbld.NOT_EFFECTIVE
    assert sbld.locate(g, D(-1, 0)).label == sbld.NOT_EFFECTIVE
    assert sbld.locate(g, D(0, 1)).label == sbld.NOT_EFFECTIVE
    with pytest.raises(ValueError):
        sbld.locate(g, D(0, 0))
    with pytest.raises(ValueError):
        sbld.locate(g, DivisorClass(1, (0, 0)))


def test_base_locus_dims():
    g = GrassmannIndex(1, 4)
    assert sbld.base_locus_dim(g, sbld.locate(g, D(1, 0))) == sbld.NEG_INF
    assert sbld.base_locus_dim(g, sbld.locate(g, D(1, 2))) == 4
    assert sbld.base_locus_dim(g, sbld.locate(g, D(0, -1))) == g.dim - 1
    for r in (1, 2, 3):
        h = GrassmannIndex(r, 2 * r + 1)
        assert sbld.base_locus_dim(h, sbld.locate(h, D(1, r + 1))) == h.dim - 1
    with pytest.raises(ValueError):
        sbld.base_locus_dim(g, sbld.locate(g, D(1, 5)))


def test_chamber_invariants():
    with pytest.raises(ValueError):
        sbld.Chamber(sbld.C_I, 1, sbld.EMPTY)
    with pytest.raises(ValueError):
        sbld.Chamber(sbld.C_0, 1, sbld.EMPTY)


def test_cone_suite_examples():
    s = sbld.cone_suite(GrassmannIndex(1, 3))
    assert s.Mov == RationalCone(2, [(1, 0), (1, 1)])
    s = sbld.cone_suite(GrassmannIndex(1, 4))
    assert s.Mov == RationalCone(2, [(1, 0), (1, 2)])
    assert s.mov == RationalCone(2, [(1, 0), (2, 1)])
    p = sbld.cone_suite(GrassmannIndex(0, 4))
    assert p.Eff == RationalCone(2, [(0, -1), (1, 1)])
    assert [str(w) for w in sbld.wall_classes(GrassmannIndex(0, 4))] == ["E", "H", "H - E"]


@pytest.mark.parametrize("r", range(1, 5))
def test_cone_suite_containments(r):
    for n in range(2 * r + 1, 13):
        s = sbld.cone_suite(GrassmannIndex(r, n))
        assert s.Nef == RationalCone(2, [(1, 0), (1, 1)])
        assert s.Nef <= s.Mov <= s.Eff
        assert s.mov <= s.NE


grass = st.integers(0, 4).flatmap(lambda r: st.tuples(st.just(r), st.integers(2 * r + 1, 2 * r + 6)))
pairs = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).filter(lambda t: t != (0, 0))


@given(grass, pairs, st.fractions(min_value=Fraction(1, 10), max_value=10))
def test_locate_depends_only_on_ray(rn, ab, s):
    g = GrassmannIndex(*rn)
    a, b = ab
    assert sbld.locate(g, D(a, b)) == sbld.locate(g, D(s * a, s * b))


def _rank(g, ch):
    if ch.label == sbld.C_0:
        return -1
    return sbld.base_locus_dim(g, ch)


@given(grass, st.fractions(min_value=0, max_value=6), st.fractions(min_value=0, max_value=6))
def test_base_locus_grows_with_slope(rn, t1, t2):
    g = GrassmannIndex(*rn)
    lo, hi = sorted((t1, t2))
    c1 = sbld.locate(g, D(1, lo))
    c2 = sbld.locate(g, D(1, hi))
    if c2.label == sbld.NOT_EFFECTIVE:
        return
    assert c1.label != sbld.NOT_EFFECTIVE
    assert _rank(g, c1) <= _rank(g, c2)
