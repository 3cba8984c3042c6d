from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from dgin import grassmann as gr
from dgin import monomials as mn
from dgin.errors import DimensionError, PreconditionError, ResourceError
from dgin.extensors import ExtensorTerm, dd_leq, eisenbud_compare

DRL = mn.TermOrder("degrevlex")
DLX = mn.TermOrder("deglex")
ORDERS = [DRL, DLX, mn.TermOrder("lex")]


def P(text, nvars=3):
    return gr.parse_polynomial(text, nvars)


@st.composite
def subspaces(draw, nvars=3):
    m = draw(st.integers(1, 3))
    mons = list(mn.monomials_of_degree(nvars, m))
    q = draw(st.integers(1, min(4, len(mons) - 1)))
    polys = []
    for _ in range(q):
        support = draw(st.lists(st.sampled_from(mons), min_size=1, max_size=4, unique=True))
        coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(support),
                               max_size=len(support)))
        polys.append(gr.HomogeneousPolynomial(dict(zip(support, coeffs)), nvars))
    rows = [oracles.dense(f.terms, mons) for f in polys]
    if oracles.rational_rank(rows) < q:
        return draw(subspaces(nvars))
    return gr.Subspace(polys, nvars, m)


def test_parse_and_format():
    f = P("3*x1^2 - 1/2*x0*x2 + x2^2")
    assert str(f) == "x2^2 + 3*x1^2 - 1/2*x2*x0"
    assert P(str(f)) == f
    assert P("-x0^2").terms == {(2, 0, 0): -1}
    with pytest.raises(DimensionError):
        P("x2^2 + x1")


def test_dependent_basis_rejected():
    with pytest.raises(DimensionError):
        gr.Subspace([P("x2^2 + x1^2"), P("2*x2^2 + 2*x1^2")])


def test_singular_matrix_rejected():
    with pytest.raises(ValueError):
        gr.GLMatrix(((1, 2), (2, 4)))


def test_identity_action():
    V = gr.Subspace([P("x2^2 + x0*x1"), P("x1^2")])
    W = gr.apply_gl(gr.GLMatrix.identity(3), V)
    assert W.basis == V.basis


def test_substitution_rule():
    # x_i -> sum_j g_ij x_j
    g = gr.GLMatrix(((1, 0, 0), (1, 1, 0), (0, 0, 1)))
    assert gr.apply_gl_polynomial(g, P("x1^2")) == P("x1^2 + 2*x1*x0 + x0^2")


def test_rref_basis_leading_terms():
    V = gr.Subspace.parse("x2^2; x0*x2; x1*x2+x1^2", 3)
    B = gr.rref_basis(V, DRL)
    leads = [f.initial_term(DRL) for f in B.basis]
    assert leads == sorted(leads, key=DRL.key, reverse=True)
    assert all(f.terms[f.initial_term(DRL)] == 1 for f in B.basis)


@settings(max_examples=40)
@given(subspaces())
def test_delta_support_matches_minors(V):
    for order in (DRL, DLX):
        mons = mn.all_monomials(V.nvars - 1, V.m, order)
        brute = set(oracles.brute_plucker_support([f.terms for f in V.basis], mons))
        got = {frozenset(t.terms) for t in gr.delta_support(V, order)}
        assert got == brute
        top = max(gr.delta_support(V, order), key=lambda t: [order.key(a) for a in t.terms])
        assert gr.initial_extensor(V, order) == top


@settings(max_examples=40)
@given(subspaces())
def test_ideal_dims_match_dense_rank(V):
    dims = gr.ideal_hilbert_function(V, V.m + 2)
    polys = [f.terms for f in V.basis]
    assert dims == [oracles.brute_ideal_dims(polys, V.nvars, V.m, t)
                    for t in range(V.m, V.m + 3)]


@settings(max_examples=15)
@given(subspaces(), st.sampled_from(ORDERS))
def test_in_below_gin_and_gin_borel(V, order):
    ini = gr.initial_extensor(V, order)
    gin = gr.generic_initial_extensor(V, order, seed=11)
    assert gin.is_borel()
    assert dd_leq(order, ini, gin)


def test_extensor_example():
    V = gr.Subspace.parse("x2^2; x0*x2; x1*x2+x1^2", 3)
    assert gr.initial_extensor(V, DRL).wedge_str() == "x2^2 ∧ x2*x1 ∧ x2*x0"
    assert gr.generic_initial_extensor(V, DRL, seed=4).wedge_str() == "x2^2 ∧ x2*x1 ∧ x1^2"


def test_support_example():
    V = gr.Subspace([P("x2^2"), P("x1*x2 + x0^2")])
    sup = sorted(t.wedge_str() for t in gr.delta_support(V, DRL))
    assert sup == ["x2^2 ∧ x0^2", "x2^2 ∧ x2*x1"]
    assert gr.ideal_hilbert_function(V, 5) == [2, 6, 11, 17]


def test_support_budget():
    V = gr.Subspace.from_monomials(list(mn.monomials_of_degree(4, 4))[:10])
    with pytest.raises(ResourceError):
        gr.delta_support(V, DRL, budget=1000)


def test_gin_examples_and_seeds():
    gens = [P("x2^2"), P("x1*x2 + x0^2")]
    assert str(gr.gin_ideal(gens, DRL, seed=0, degree_bound=4)) == "(x2^2, x2*x1, x1^3)"
    assert str(gr.gin_ideal(gens, DLX, seed=0, degree_bound=4)) == "(x2^2, x2*x1, x2*x0^2, x1^4)"
    assert str(gr.initial_ideal(gens, DRL, degree_bound=4)) == "(x2^2, x2*x1, x2*x0^2, x0^4)"


def test_gin_needs_degree_bound():
    with pytest.raises(PreconditionError):
        gr.gin_ideal([P("x2^2")], DRL)
    with pytest.raises(PreconditionError):
        gr.generic_initial_extensor(gr.Subspace([P("x2^2")]), DRL, trials=1)


def test_draws_are_reproducible():
    a = gr._Draws(7, 3).take(3)
    b = gr._Draws(7, 3).take(5)[:3]
    assert a == b
    assert gr._Draws(8, 3).take(1) != a[:1]


def test_random_gl_entries_bounded():
    g = gr.random_gl(np.random.default_rng(0), 4)
    assert all(abs(x) <= gr.COEFF_BOUND and x.denominator == 1 for row in g.entries for x in row)


def test_echelon_rank_against_sympy():
    rng = np.random.default_rng(2)
    for _ in range(20):
        rows = rng.integers(-2, 3, size=(6, 8)).tolist()
        rows[3] = [a + b for a, b in zip(rows[0], rows[1])]
        ech = gr.Echelon()
        for r in rows:
            ech.add({i: Fraction(v) for i, v in enumerate(r)})
        assert ech.rank == oracles.rational_rank(rows)


def test_determinant():
    assert gr.determinant([[2, 1], [1, 3]]) == 5
    assert gr.determinant([[0, 1], [1, 0]]) == -1


def test_extensor_term_from_subspace_is_normal():
    t = ExtensorTerm.of([(0, 1, 1), (0, 0, 2)], DRL)
    assert eisenbud_compare(DRL, t, t) == 0
