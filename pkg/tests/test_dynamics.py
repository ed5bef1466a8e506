import pytest

from selfdescribing import dynamics as dy
from selfdescribing.combinatorics import catalan
from selfdescribing.sequences import DomainError, delta, gamma, lex_compare

from oracles import all_A


def test_orbit_delta_example():
    t = dy.orbit((0, 0, 1), "delta")
    assert (t.steps_to_cycle, t.period, t.cycle) == (1, 1, ((0, 0, 2),))
    assert t.visited == ((0, 0, 1), (0, 0, 2))


def test_orbit_gamma_two_cycle():
    t = dy.orbit((0, 1, 0), "gamma")
    assert (t.steps_to_cycle, t.period) == (0, 2)
    assert t.cycle == ((0, 0, 2), (0, 1, 0))


def test_orbit_gamma_root():
    t = dy.orbit((0,), "gamma")
    assert (t.period, t.cycle) == (1, ((0,),))


def test_orbit_cycle_closes():
    for s in all_A(5):
        for e in ("delta", "gamma", "mu", "delta_fast"):
            t = dy.orbit(s, e)
            f = dy.Endomorphism(e)
            assert t.period == len(t.cycle)
            for i, c in enumerate(t.cycle):
                assert f(c) == t.cycle[(i + 1) % t.period]
            assert t.cycle[0] == min(t.cycle)


def test_orbit_budget():
    with pytest.raises(dy.BudgetExceeded):
        dy.orbit((0, 0, 1), "delta", max_steps=1)
    assert dy.orbit((0, 0, 1), "delta", max_steps=2).period == 1


def test_orbit_requires_A():
    with pytest.raises(DomainError):
        dy.orbit((1, 0), "delta")


def test_stabilize_delta_examples():
    assert dy.stabilize_delta((0, 1, 1)) == ((0, 1, 1), 0)
    assert dy.stabilize_delta((0, 0, 1)) == ((0, 0, 2), 1)
    fixed, steps = dy.stabilize_delta((0, 1, 2, 0))
    assert delta(fixed) == fixed and steps <= 6


def test_find_double_point_examples():
    assert dy.find_double_point_gamma((0, 0, 1)) == ((0, 1, 0), 1)
    assert dy.find_double_point_gamma((0, 1, 2)) == ((0, 1, 2), 0)
    assert dy.find_double_point_gamma((0,)) == ((0,), 0)


def test_is_fixed_examples():
    assert dy.is_fixed((0, 1, 0), "delta")
    assert not dy.is_fixed((0, 0, 1), "delta")
    assert dy.is_fixed((0,), "gamma")


def test_bounds_exhaustive(A7):
    for n in range(7):
        for s in all_A(n):
            fixed, steps = dy.stabilize_delta(s)
            assert steps <= n * (n + 1) // 2 and delta(fixed) == fixed
            term, gsteps = dy.find_double_point_gamma(s)
            assert gsteps <= n * (n + 1) and gamma(gamma(term)) == term
    for s in A7:
        t = dy.orbit(s, "delta")
        assert all(lex_compare(a, b) < 0 for a, b in zip(t.visited, t.visited[1:]))


@pytest.mark.parametrize("n", range(8))
def test_fixed_census_matches_python_filter(n):
    assert dy.count_fixed_points_delta(n) == sum(1 for s in all_A(n) if delta(s) == s)


@pytest.mark.parametrize("n", range(8))
def test_double_census_matches_python_filter(n):
    assert dy.count_double_points_gamma(n) == sum(1 for s in all_A(n) if gamma(gamma(s)) == s)


def test_fixed_counts_are_catalan():
    assert [dy.count_fixed_points_delta(n) for n in range(10)] == [catalan(n + 1) for n in range(10)]


def test_double_counts():
    got = [dy.count_double_points_gamma(n) for n in range(9)]
    assert got[:7] == [1, 2, 4, 10, 26, 70, 216]
    # not published; frozen from this census and a pure-Python recount
    assert got[7:] == [682, 2264]
    assert all(got[n] > 2 ** n for n in range(3, 9))
    assert all(got[n] == 2 ** n for n in range(3))


def test_census_cap():
    with pytest.raises(dy.CapExceeded):
        dy.count_fixed_points_delta(11)
    assert dy.count_fixed_points_delta(3, cap=3) == 14


@pytest.mark.parametrize("workers", [1, 2, 3, 8])
def test_census_independent_of_workers(workers):
    assert dy.count_fixed_points_delta(8, workers=workers) == 4862
    assert dy.count_double_points_gamma(8, workers=workers) == 2264
