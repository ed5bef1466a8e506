import pytest

from selfdescribing import family as fm
from selfdescribing.combinatorics import catalan
from selfdescribing.sequences import delta

from oracles import all_A


def names(nodes):
    return [x.full_name for x in nodes]


def test_root():
    root = fm.family_root()
    assert root.full_name == (0,) and root.generation == 0
    assert len(fm.children(root)) == 2


def test_children_examples():
    assert names(fm.children(fm.family_root())) == [(0, 0), (0, 1)]
    a, b = fm.children(fm.family_root())
    assert names(fm.children(a)) == [(0, 0, 0), (0, 0, 2)]
    assert names(fm.children(b)) == [(0, 1, 0), (0, 1, 1), (0, 1, 2)]
    for kid in fm.children(a) + fm.children(b):
        assert delta(kid.full_name) == kid.full_name


def test_node_invariants():
    for n in range(7):
        for x in fm.enumerate_family(n):
            assert x.sibship[-1] == x.full_name[-1]
            kids = fm.children(x)
            assert len(kids) == x.seniority + 2
            assert kids[-1].name == n + 1


def test_enumerate_family_examples():
    assert names(fm.enumerate_family(1)) == [(0, 0), (0, 1)]
    assert sorted(names(fm.enumerate_family(2))) == [(0, 0, 0), (0, 0, 2), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert sum(1 for _ in fm.enumerate_family(5)) == 132


@pytest.mark.parametrize("n", range(8))
def test_family_equals_fixed_points(n):
    fam = names(fm.enumerate_family(n))
    assert len(fam) == len(set(fam))
    assert set(fam) == {s for s in all_A(n) if delta(s) == s}


def test_membership_examples():
    assert fm.is_family_member((0, 0, 2))
    assert not fm.is_family_member((0, 0, 1))
    assert fm.is_family_member((0, 1, 1))
    assert not fm.is_family_member((1,))


def test_membership_agrees_with_delta(A7):
    for s in A7:
        assert fm.is_family_member(s) == (delta(s) == s)


def test_name_distribution():
    assert fm.name_distribution(2).counts == {0: 2, 1: 1, 2: 2}
    assert fm.name_distribution(0).counts == {0: 1}
    assert fm.name_distribution(4).counts[0] == 14
    for n in range(10):
        d = fm.name_distribution(n)
        assert d.total == catalan(n + 1)
        assert all(d.counts[r] == catalan(r) * catalan(n - r) for r in range(n + 1))
