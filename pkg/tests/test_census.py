import pytest

from dgin.census import (
    borel_subideals,
    census,
    census_record,
    enumerate_borel,
    enumerate_borel_by_slices,
)
from dgin.errors import AdmissibilityError, ResourceError
from dgin.hilbert import as_polynomial
from dgin.stable import MonomialIdeal, is_borel_fixed, is_saturated
from frozen import B1_3T2, B2_3T2, B3_3T2, B4_3T2, SMALL_CENSUS


@pytest.mark.parametrize("key", sorted(SMALL_CENSUS))
def test_small_census_matches_slice_search(key):
    p, n = key
    fast = enumerate_borel(p, n)
    slow = enumerate_borel_by_slices(p, n)
    assert len(fast) == SMALL_CENSUS[key]
    assert fast == slow


def test_members_are_saturated_borel_with_right_polynomial(census_3t2):
    for J in census_3t2:
        assert is_borel_fixed(J) and is_saturated(J)
        assert J.hilbert_polynomial() == as_polynomial("3t+2")


def test_3t2_listing(census_3t2):
    expected = {MonomialIdeal.parse(s, 4) for s in (B1_3T2, B2_3T2, B3_3T2, B4_3T2)}
    assert set(census_3t2) == expected


def test_7t5_count(census_7t5):
    assert len(census_7t5) == 112
    assert len(set(census_7t5)) == 112
    p = as_polynomial("7t-5")
    assert all(J.hilbert_polynomial() == p for J in census_7t5)


def test_parallel_agrees():
    assert enumerate_borel("2t+2", 3, jobs=2) == enumerate_borel("2t+2", 3, jobs=1)


def test_point_in_plane():
    (J,) = enumerate_borel("1", 2)
    assert str(J) == "(x2, x1)"


def test_census_record_and_gotzmann():
    r, ideals = census("2", 2)
    assert r == 2
    rec = census_record(ideals[0], r)
    assert rec == {"generators": ["x2", "x1^2"], "regularity": 2,
                   "hilbert_function": [1, 2, 2], "saturated": True}


def test_resource_cap():
    with pytest.raises(ResourceError):
        enumerate_borel("7t-5", 3, cap=10)


def test_inadmissible_polynomial():
    with pytest.raises(AdmissibilityError):
        enumerate_borel("t^2+1", 3)


def test_borel_subideals_colength_zero():
    gens = ((0, 1, 0), (0, 0, 1))
    assert borel_subideals(gens, 3, 0) == [gens]
