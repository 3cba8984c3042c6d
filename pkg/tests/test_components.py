import pytest

from dgin import monomials as mn
from dgin.components import (
    component_lower_bound,
    conjecture_min_deglex_check,
    max_hilbert_function,
    necessary_condition_filter,
)
from dgin.errors import UnsupportedInputError
from dgin.extensors import dd_leq
from dgin.stable import MonomialIdeal
from frozen import B1_7T5, B2_7T5, B3_7T5, B4_7T5, B4_3T2, HF_3T2, LEX_7T5

DRL = mn.TermOrder("degrevlex")
WEIGHT = mn.parse_order("weight:1,2,9,12")


@pytest.fixture(scope="module")
def reports():
    return {name: component_lower_bound("7t-5", 3, mn.parse_order(name))
            for name in ("degrevlex", "weight:1,2,9,12", "deglex")}


def _maximal_strings(rep):
    return {str(rep.ideals[i]) for i in rep.maximal}


def test_degrevlex_bound(reports):
    rep = reports["degrevlex"]
    assert rep.count == 112 and rep.r == 16
    assert _maximal_strings(rep) == {B1_7T5, B2_7T5, B3_7T5, B4_7T5}
    assert (rep.bound_basic, rep.bound_refined) == (4, None)


def test_weight_bound(reports):
    rep = reports["weight:1,2,9,12"]
    assert _maximal_strings(rep) == {B1_7T5, B2_7T5}
    assert (rep.bound_basic, rep.bound_refined) == (2, 3)


def test_deglex_lex_is_unique_max(reports):
    rep = reports["deglex"]
    assert _maximal_strings(rep) == {LEX_7T5}
    assert rep.maximal == [rep.lex_index]
    assert rep.bound_refined is None


def test_report_invariants(reports):
    for rep in reports.values():
        assert rep.bound_basic >= 1
        assert sum(rep.maximal_flags) == rep.bound_basic
        assert rep.bound_refined in (None, rep.bound_basic + 1)
        assert len(rep.growth_vector) == 4
        data = rep.to_json()
        assert data["count"] == 112 and len(data["ideals"]) == 112
        assert set(data["ideals"][0]) == {"generators", "regularity", "hilbert_function",
                                          "saturated", "x0x1_sat"}


def test_filter_cover(reports):
    for name, rep in reports.items():
        covered = set()
        for g in rep.maximal:
            covered.update(necessary_condition_filter(rep.slices, rep.slices[g], rep.order).possible)
        assert covered == set(range(rep.count))


def test_filter_examples(reports):
    rep = reports["degrevlex"]
    idx = {str(J): i for i, J in enumerate(rep.ideals)}
    part = necessary_condition_filter(rep.slices, rep.slices[idx[B2_7T5]], DRL)
    assert idx[B1_7T5] in part.excluded
    lex = reports["deglex"]
    part = necessary_condition_filter(lex.slices, lex.slices[lex.lex_index], lex.order)
    assert part.excluded == ()


def test_3t2_unique_maximum():
    rep = component_lower_bound("3t+2", 3, DRL)
    assert rep.bound_basic == 1
    assert str(rep.ideals[rep.maximal[0]]) == B4_3T2
    part = necessary_condition_filter(rep.slices, rep.slices[rep.maximal[0]], DRL)
    assert part.possible == (0, 1, 2, 3)


def test_single_member_census():
    rep = component_lower_bound("2", 3, DRL)
    assert rep.count == 1 and rep.bound_basic == 1 and rep.bound_refined is None


def test_max_hilbert_function_3t2():
    res = max_hilbert_function("3t+2", 3)
    assert not res.violations
    ((ideal, hf),) = res.maxima()
    assert str(ideal) == B4_3T2
    assert hf == HF_3T2[B4_3T2][:6]


def test_max_hilbert_function_needs_degrevlex():
    with pytest.raises(UnsupportedInputError):
        max_hilbert_function("3t+2", 3, order=mn.TermOrder("deglex"))


def test_monotonicity_on_7t5():
    res = max_hilbert_function("7t-5", 3)
    assert res.log and not res.violations


def test_conjecture_checker():
    for p in ("3t+2", "2"):
        ev = conjecture_min_deglex_check(p, 3)
        assert ev.verdict() in ("consistent", "counterexamples found")
        assert ev.consistent == (not ev.counterexamples)
