"""Every law on every connected graded poset with at most six elements, all subgroups."""

import pytest
from property_sweep import (
    MAX_SIZE,
    RANDOM_CASES,
    counting_result,
    graded_cases,
    graded_result,
    random_cases,
    random_result,
)

from ordergamma.poset import Consistency


def test_enumeration_sizes():
    from collections import Counter

    sizes = Counter(len(lp) for lp in graded_cases())
    # connected posets with all maximal chains of equal length, up to isomorphism
    assert [sizes[n] for n in range(1, MAX_SIZE + 1)] == [1, 1, 3, 8, 25, 83]


def test_random_labelings_are_sign_graded_and_varied():
    cases = random_cases()
    assert len(cases) >= 200
    assert all(lp.consistency is Consistency.GRADED for lp in cases)
    assert sum(not lp.all_positive for lp in cases) >= 50
    assert max(len(lp) for lp in cases) == MAX_SIZE


@pytest.mark.parametrize("index", range(len(graded_cases())))
def test_laws_on_graded_poset(index):
    failures, checks = graded_result(index)
    assert checks > 0
    assert failures == []


@pytest.mark.parametrize("index", range(RANDOM_CASES))
def test_laws_on_random_sign_graded(index):
    failures, checks = random_result(index)
    assert checks > 0
    assert failures == []


@pytest.mark.parametrize("index", range(len(graded_cases())))
def test_counting_matches_enumeration(index):
    ok, cases = counting_result(index)
    assert ok
