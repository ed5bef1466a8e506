import itertools

import pytest
from hypothesis import given, strategies as st

from selfdescribing import bijections as bj
from selfdescribing import family as fm
from selfdescribing.combinatorics import catalan, fuss_catalan, unit_increase_count_closed
from selfdescribing.sequences import DomainError

from oracles import all_A


def m_increase_box(m, n):
    box = itertools.product(*(range(m * i + 1) for i in range(n + 1)))
    return [a for a in box if a[0] == 0 and all(a[i + 1] <= a[i] + m for i in range(n))]


@st.composite
def unit_increase(draw, max_gen=15):
    n = draw(st.integers(0, max_gen))
    a = [0]
    for _ in range(n):
        a.append(draw(st.integers(0, a[-1] + 1)))
    return tuple(a)


def test_enumerate_unit_increase_examples():
    assert list(bj.enumerate_unit_increase(0)) == [(0,)]
    assert list(bj.enumerate_unit_increase(1)) == [(0, 0), (0, 1)]
    assert list(bj.enumerate_unit_increase(2)) == [(0, 0, 0), (0, 0, 1), (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert sum(1 for _ in bj.enumerate_unit_increase(4)) == 42


@pytest.mark.parametrize("n", range(8))
def test_unit_increase_is_filter_of_A(n):
    assert list(bj.enumerate_unit_increase(n)) == [s for s in all_A(n) if bj.is_unit_increase(s)]


def test_unit_increase_distribution():
    for n in range(11):
        ends = [0] * (n + 1)
        for a in bj.enumerate_unit_increase(n):
            ends[a[-1]] += 1
        assert ends == [unit_increase_count_closed(n, r) for r in range(n + 1)]


def test_enumerate_m_increase_examples():
    assert list(bj.enumerate_m_increase(2, 1)) == [(0, 0), (0, 1), (0, 2)]
    assert list(bj.enumerate_m_increase(1, 2)) == list(bj.enumerate_unit_increase(2))
    assert sum(1 for _ in bj.enumerate_m_increase(2, 2)) == 12


@pytest.mark.parametrize("m", [1, 2, 3])
def test_m_increase_counts(m):
    for n in range(6):
        seqs = list(bj.enumerate_m_increase(m, n))
        assert seqs == m_increase_box(m, n)
        assert len(seqs) == fuss_catalan(m, n + 1)


def test_encode_examples():
    assert bj.encode_ballot((0, 1, 0)) == (1, 1, -1, -1)
    assert bj.encode_ballot((0, 1, 2)) == (1, 1)
    assert bj.encode_ballot((0,)) == ()
    with pytest.raises(DomainError):
        bj.encode_ballot((0, 2))


def test_decode_examples():
    assert bj.decode_ballot((1, 1, -1, -1)) == (0, 1, 0)
    assert bj.decode_ballot((1, -1, 1, -1)) == (0, 0, 0)
    assert bj.decode_ballot(()) == (0,)


@pytest.mark.parametrize("word", [(-1,), (1, -1, -1), (1, 2), (1, 1, -1, -1, -1, -1, 1)])
def test_decode_malformed(word):
    with pytest.raises(DomainError):
        bj.decode_ballot(word)


@pytest.mark.parametrize("n", range(9))
def test_ballot_roundtrip_exhaustive(n):
    for a in bj.enumerate_unit_increase(n):
        w = bj.encode_ballot(a)
        assert bj.decode_ballot(w) == a
        assert w.count(1) == n and w.count(-1) == n - a[-1]
        assert min(itertools.accumulate(w), default=0) >= 0


@given(unit_increase())
def test_ballot_roundtrip_property(a):
    assert bj.decode_ballot(bj.encode_ballot(a)) == a
    assert bj.encode_ballot_m(a, 1) == bj.encode_ballot(a)


def test_encode_m_examples():
    assert bj.encode_ballot_m((0, 2), 2) == (2,)
    assert bj.encode_ballot_m((0, 0), 2) == (2, -1, -1)


@pytest.mark.parametrize("m", [2, 3])
def test_m_roundtrip(m):
    for n in range(6):
        for a in bj.enumerate_m_increase(m, n):
            w = bj.encode_ballot_m(a, m)
            assert bj.decode_ballot_m(w, m) == a
            assert w.count(m) == n and w.count(-1) == m * n - a[-1]
            assert min(itertools.accumulate(w), default=0) >= 0


def test_ballot_text():
    assert bj.format_ballot((1, 1, -1, -1)) == "++--"
    assert bj.format_ballot((2, -1, -1), 2) == "[2]--"
    assert bj.parse_ballot("++--") == ((1, 1, -1, -1), 1)
    assert bj.parse_ballot("[2]--") == ((2, -1, -1), 2)
    assert bj.parse_ballot("") == ((), 1)
    for bad in ["+x", "[2]+", "[0]", "[2"]:
        with pytest.raises(ValueError):
            bj.parse_ballot(bad)


def test_west_labels():
    assert bj.west_tree_labels((0, 1, 2)) == (2, 3, 4)
    assert bj.west_tree_labels((0, 0, 0)) == (2, 2, 2)
    assert bj.west_tree_labels((0, 2), m=2) == (3, 5)


def test_west_paths_exhaustive():
    for n in range(9):
        paths = [bj.west_tree_labels(a) for a in bj.enumerate_unit_increase(n)]
        assert all(bj.is_west_path(p) for p in paths)
        assert len(set(paths)) == catalan(n + 1)
    for m in (2, 3):
        for a in bj.enumerate_m_increase(m, 4):
            assert bj.is_west_path(bj.west_tree_labels(a, m), m)


def test_family_unit_increase_correspondence():
    for n in range(9):
        fam = [x.full_name for x in fm.enumerate_family(n)]
        img = [bj.family_to_unit_increase(s) for s in fam]
        # same ordered tree, so breadth-first positions line up
        assert sorted(img) == list(bj.enumerate_unit_increase(n))
        assert [bj.unit_increase_to_family(a) for a in img] == fam
    with pytest.raises(DomainError):
        bj.family_to_unit_increase((0, 0, 1))
