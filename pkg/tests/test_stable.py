import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from dgin import monomials as mn
from dgin.errors import (
    DegenerateSaturationWarning,
    DimensionError,
    PreconditionError,
    UnsupportedInputError,
)
from dgin.hilbert import HilbertPolynomial, as_polynomial
from dgin.stable import (
    DegreeSlice,
    MonomialIdeal,
    _interpolated_polynomial,
    ek_expand,
    growth_vector,
    hilbert_function,
    hilbert_polynomial,
    is_borel_fixed,
    plain_expand,
    saturate,
    truncate,
    x0x1_saturation,
)
from frozen import HF_3T2


def borel_closure(terms):
    out, todo = set(), list(terms)
    while todo:
        a = todo.pop()
        if a not in out:
            out.add(a)
            todo.extend(mn.elementary_borel_moves(a))
    return out


@st.composite
def borel_slices(draw, nvars=4, max_m=4):
    m = draw(st.integers(1, max_m))
    pool = list(mn.monomials_of_degree(nvars, m))
    seeds = draw(st.lists(st.sampled_from(pool), min_size=1, max_size=4))
    return DegreeSlice(m, nvars, frozenset(borel_closure(seeds)))


@pytest.mark.parametrize("text", sorted(HF_3T2))
def test_frozen_hilbert_functions(text):
    J = MonomialIdeal.parse(text, 4)
    assert [hilbert_function(J, t) for t in range(7)] == HF_3T2[text]
    assert hilbert_polynomial(J) == as_polynomial("3t+2")


@given(borel_slices())
def test_ek_expand_matches_plain_expand(s):
    assert ek_expand(s) == plain_expand(s)
    assert len(ek_expand(s)) == len(s.ideal().truncate(s.m + 1))


@given(borel_slices())
def test_growth_formula_matches_counting(s):
    J = s.ideal()
    p = hilbert_polynomial(J)
    assert p == _interpolated_polynomial(J, 200)
    for t in range(s.m, s.m + 4):
        assert p(t) == oracles.brute_hilbert_function(J.gens, 4, t)


@given(borel_slices())
def test_borel_test_agrees_with_oracle(s):
    J = s.ideal()
    assert is_borel_fixed(J)
    assert oracles.brute_is_borel(J.gens, 4, s.m + 1)


def test_non_borel_detected():
    J = MonomialIdeal.parse("x1^2", 3)
    assert not is_borel_fixed(J)
    assert not oracles.brute_is_borel(J.gens, 3, 2)


def test_ek_expand_needs_borel():
    with pytest.raises(PreconditionError):
        ek_expand(DegreeSlice.of([(0, 2, 0)]))


def test_growth_vector_of_empty_slice():
    with pytest.raises(PreconditionError):
        growth_vector(DegreeSlice(2, 3, frozenset()))


def test_saturate():
    J = MonomialIdeal.parse("x2^2, x2*x1, x2*x0, x1^3", 3)
    assert str(saturate(J)) == "(x2, x1^3)"
    with pytest.raises(UnsupportedInputError):
        saturate(MonomialIdeal.parse("x2^2, x1*x2, x0^2*x2, x0^4", 3))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        J = MonomialIdeal.parse("x2, x1, x0^3", 3)
        assert saturate(J).is_unit()
        assert any(issubclass(w.category, DegenerateSaturationWarning) for w in caught)


def test_x0x1_saturation():
    J = MonomialIdeal.parse("x3^2, x3*x2, x2^3, x3*x1^2", 4)
    assert str(x0x1_saturation(J)) == "(x3, x2^3)"
    with pytest.raises(DimensionError):
        x0x1_saturation(MonomialIdeal.parse("x2, x1^2", 3))


def test_degenerate_hilbert_polynomials():
    assert hilbert_polynomial(MonomialIdeal.unit(3)) == HilbertPolynomial()
    assert hilbert_polynomial(MonomialIdeal((), 3)) == as_polynomial("1/2t^2+3/2t+1")


def test_non_borel_hilbert_polynomial_interpolates():
    J = MonomialIdeal.parse("x2^2, x1^2", 3)
    assert hilbert_polynomial(J) == as_polynomial("4")


def test_truncate_counts():
    J = MonomialIdeal.parse("x2, x1^2", 3)
    assert len(truncate(J, 3)) == 10 - 2
