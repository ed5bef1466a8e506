import itertools
import math

import pytest
from hypothesis import given, strategies as st

from selfdescribing import combinatorics as cb


def words_census(n, k):
    count = 0
    for neg in itertools.combinations(range(n + k), k):
        w = [-1 if i in neg else 1 for i in range(n + k)]
        count += all(h >= 0 for h in itertools.accumulate(w))
    return count


@given(st.integers(0, 200), st.integers(-3, 200))
def test_binomial_against_math_comb(n, k):
    assert cb.binomial(n, k) == (math.comb(n, k) if 0 <= k else 0)


def test_catalan_examples():
    assert cb.catalan(0) == 1
    assert cb.catalan(3) == 5
    assert cb.catalan(10) == 16796


def test_catalan_forms_agree():
    assert all(cb.catalan(n) == cb.catalan_recursive(n) for n in range(31))


def test_fuss_catalan():
    assert cb.fuss_catalan(1, 5) == 42
    assert cb.fuss_catalan(2, 2) == 3
    assert cb.fuss_catalan(2, 3) == 12
    assert all(cb.fuss_catalan(1, n) == cb.catalan(n) for n in range(30))


def test_ballot_count_examples():
    assert cb.ballot_count(3, 2) == words_census(3, 2) == 5
    assert cb.ballot_count(7, 0) == 1
    assert cb.ballot_count(4, 4) == 14 == cb.catalan(4)
    with pytest.raises(ValueError):
        cb.ballot_count(2, 3)


@pytest.mark.parametrize("n", range(9))
def test_ballot_count_census(n):
    for k in range(n + 1):
        assert cb.ballot_count(n, k) == words_census(n, k)


def test_unit_increase_closed():
    assert cb.unit_increase_count_closed(2, 0) == 2
    assert cb.unit_increase_count_closed(2, 2) == 1
    assert all(cb.unit_increase_count_closed(n, n) == 1 for n in range(20))


def test_name_distribution_closed():
    assert cb.name_distribution_closed(2, 1) == 1
    assert cb.name_distribution_closed(4, 2) == 4
    assert all(cb.name_distribution_closed(n, 0) == cb.catalan(n) for n in range(20))


@pytest.mark.parametrize("n", range(31))
def test_row_sums(n):
    assert sum(cb.name_distribution_closed(n, r) for r in range(n + 1)) == cb.catalan(n + 1)
    assert sum(cb.unit_increase_count_closed(n, r) for r in range(n + 1)) == cb.catalan(n + 1)


def test_exact_division_guard():
    with pytest.raises(ArithmeticError):
        cb._exact_div(7, 2)
