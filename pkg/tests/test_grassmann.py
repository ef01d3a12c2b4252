import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from grassmori import grassmann as gr
from grassmori.exactlin import rank
from grassmori.grassmann import GrassmannIndex, SubspacePoint
from oracles import plucker_by_definition, schubert_tangent_dim

seeds = st.integers(0, 10**6)


def test_index():
    g = GrassmannIndex(2, 5)
    assert (g.N, g.dim) == (19, 9)
    with pytest.raises(ValueError):
        GrassmannIndex(1, 2)


def test_plucker_examples():
    assert gr.plucker(SubspacePoint([[3, -1, 2]])) == (3, -1, 2)
    p = gr.coordinate_point(GrassmannIndex(1, 3), [0, 1])
    assert gr.plucker(p) == (1, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        SubspacePoint([[1, 2, 3], [2, 4, 6]])


@given(seeds)
def test_plucker_relations_g13(seed):
    q = gr.random_point(GrassmannIndex(1, 3), random.Random(seed))
    assert gr.plucker_relation_3term(gr.plucker(q)) == 0
    assert list(gr.plucker(q)) == plucker_by_definition(q.basis.to_lists())


def _exchange_relations_hold(g, vec):
    """Three-term relations p_{Aij} p_{Akl} - p_{Aik} p_{Ajl} + p_{Ail} p_{Ajk} = 0."""
    coord = dict(zip(g.plucker_indices(), vec))

    def p(idx):
        idx = list(idx)
        if len(set(idx)) < len(idx):
            return 0
        sign = 1
        for i in range(len(idx)):
            for j in range(i + 1, len(idx)):
                if idx[i] > idx[j]:
                    sign = -sign
        return sign * coord[tuple(sorted(idx))]

    for a in combinations(range(g.n + 1), g.r - 1):
        rest = [c for c in range(g.n + 1) if c not in a]
        for i, j, k, l in combinations(rest, 4):
            a_ = list(a)
            if p(a_ + [i, j]) * p(a_ + [k, l]) - p(a_ + [i, k]) * p(a_ + [j, l]) + p(a_ + [i, l]) * p(a_ + [j, k]):
                return False
    return True


@pytest.mark.parametrize("r,n", [(1, 4), (2, 5)])
def test_exchange_relations(r, n):
    g = GrassmannIndex(r, n)
    rng = random.Random(r * 100 + n)
    for _ in range(5):
        assert _exchange_relations_hold(g, gr.plucker(gr.random_point(g, rng)))


@given(seeds)
def test_plucker_is_basis_invariant(seed):
    rng = random.Random(seed)
    g = GrassmannIndex(1, 4)
    q = gr.random_point(g, rng)
    change = [[rng.randint(-5, 5) for _ in range(2)] for _ in range(2)]
    det = change[0][0] * change[1][1] - change[0][1] * change[1][0]
    if det == 0:
        return
    rows = q.basis.to_lists()
    moved = SubspacePoint([[sum(change[i][t] * rows[t][c] for t in range(2)) for c in range(5)] for i in range(2)])
    assert moved == q
    assert [det * x for x in gr.plucker(q)] == list(gr.plucker(moved))


def test_schubert_membership_examples():
    g = GrassmannIndex(1, 4)
    rng = random.Random(3)
    v = gr.random_point(g, rng)
    q = gr.random_point(g, rng)
    assert all(gr.schubert_membership(v, v, m) for m in range(3))
    assert gr.schubert_membership(q, v, 2)
    assert not gr.schubert_membership(q, v, 0)


@pytest.mark.parametrize("r,n", [(1, 3), (1, 4), (2, 5), (2, 6)])
def test_schubert_dimensions_against_tangent_oracle(r, n):
    g = GrassmannIndex(r, n)
    for m in range(r + 2):
        expected = schubert_tangent_dim(r, n, m, seed=m)
        assert gr.schubert_dimension(g, m) == expected
        assert gr.schubert_dimension_by_jacobian(g, m, seed=m) == expected
    assert gr.schubert_dimension(GrassmannIndex(1, 4), 1, verify=True) == 4
    with pytest.raises(ValueError):
        gr.schubert_dimension(g, r + 2)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_divisor_locus(r):
    g = GrassmannIndex(r, 2 * r + 1)
    assert gr.schubert_dimension(g, r) == g.dim - 1


def test_osculating_dimensions():
    g = GrassmannIndex(1, 4)
    p = gr.coordinate_point(g, [0, 1])
    dims = [gr.osculating_dimension(g, p, m) for m in range(4)]
    assert dims[0] == 0 and dims[1] == g.dim
    assert dims[1] < dims[2] == g.N == dims[3]
    g = GrassmannIndex(2, 5)
    q = gr.random_point(g, random.Random(1))
    assert [gr.osculating_dimension(g, q, m) for m in (0, 1, 3)] == [0, 9, 19]


@given(seeds)
def test_osculating_span_matches_schubert_rank_test_g13(seed):
    g = GrassmannIndex(1, 3)
    rng = random.Random(seed)
    p = gr.random_point(g, rng)
    m0 = rng.randint(0, 2)
    q = gr.point_in_schubert_stratum(g, p, m0, rng)
    chart = gr.Chart(g, p)
    for m in range(3):
        span = gr.osculating_span(g, p, m, chart)
        assert gr.in_span(span, gr.plucker(q)) == gr.schubert_membership(q, p, m) == (m >= m0)


def test_chart_point_round_trip():
    g = GrassmannIndex(1, 3)
    p = gr.random_point(g, random.Random(4))
    chart = gr.Chart(g, p)
    assert chart.point([[0, 0], [0, 0]]) == p
    a = [[1, 2], [3, 5]]
    vals = [f.terms for f in chart.plucker_polys]
    q = chart.point(a)
    evaluated = []
    for terms in vals:
        total = Fraction(0)
        for mono, c in terms.items():
            term = c
            for idx, e in enumerate(mono):
                term *= Fraction(a[idx // 2][idx % 2]) ** e
            total += term
        evaluated.append(total)
    assert evaluated == list(gr.plucker(q))


def test_schubert_divisor_g13_by_sampling():
    g = GrassmannIndex(1, 3)
    gamma = gr.LinearCenter([[1, 2, 0, 1], [0, 1, 1, 3]])
    form = gr.schubert_divisor(g, gamma)
    rng = random.Random(11)
    g_rows = gamma.subspace.to_lists()
    for _ in range(10):
        a, b = rng.randint(-5, 5), rng.randint(1, 5)
        meeting = SubspacePoint([[a * x + b * y for x, y in zip(*g_rows)],
                                 [rng.randint(-9, 9) for _ in range(4)]])
        assert form(meeting) == 0
        generic = gr.random_point(g, rng)
        assert (form(generic) == 0) == (rank(generic.basis.stack(gamma.subspace)) < 4)


def test_schubert_divisor_errors():
    g = GrassmannIndex(1, 3)
    with pytest.raises(ValueError):
        gr.schubert_divisor(g, gr.LinearCenter([[1, 0, 0, 0]]))
    with pytest.raises(ValueError):
        gr.multiplicity_at(g, gr.PluckerForm(1, 3, (0,) * 6), gr.coordinate_point(g, [0, 1]))


@pytest.mark.parametrize("r,n", [(1, 3), (1, 4), (1, 5), (2, 5)])
def test_multiplicities(r, n):
    g = GrassmannIndex(r, n)
    p = gr.coordinate_point(g, range(r + 1))
    p0 = gr.borel_base_point(g)
    for j, center in enumerate(gr.borel_centers(g)):
        form = gr.schubert_divisor(g, center)
        assert gr.multiplicity_at(g, form, p) == j
        assert form(p0) != 0


def test_poly_helpers():
    x = gr.Poly.variable(2, 0)
    y = gr.Poly.variable(2, 1)
    f = x * y + x * 3 - x * 3
    assert f.min_degree() == 2 and f.monomials() == [(1, 1)]
    assert gr.poly_determinant([[x, y], [y, x]]) == x * x - y * y
    with pytest.raises(ValueError):
        gr.Poly(2).min_degree()
