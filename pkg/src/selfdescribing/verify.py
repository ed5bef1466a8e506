"""Exhaustive invariant checks over small generations.

Each check compares two independent routes to the same fact (a closed form
against a census, the naming rules against delta, a compiled kernel against
the plain definition, ...).  ``quick`` caps every generation at 6; ``full``
uses each check's own range, clipped by the brute-force cap.
"""

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, List

from . import bijections as bj
from . import combinatorics as cb
from . import dynamics as dy
from . import family as fm
from . import sequences as sq

QUICK_MAX = 6

# published double-point counts, generations 0..6
DOUBLE_POINT_COUNTS = (1, 2, 4, 10, 26, 70, 216)


@dataclass
class CheckResult:
    name: str
    passed: bool
    seconds: float
    detail: str = ""


class _Scale:
    def __init__(self, full: bool, cap: int):
        self.full = full
        self.cap = cap

    def brute(self, n: int) -> int:
        """Largest generation to brute-force for a check that nominally goes to ``n``."""
        return min(n, self.cap) if self.full else min(n, QUICK_MAX, self.cap)

    def closed(self, n: int) -> int:
        return n if self.full else min(n, QUICK_MAX)


def _all_A(top):
    for n in range(top + 1):
        yield from sq.enumerate_A(n)


def check_delta_image(sc):
    rng = random.Random(0)
    for s in _all_A(sc.brute(7)):
        if not sq.validate_in_A(sq.delta(s)):
            return False
    for _ in range(2000):
        raw = tuple(rng.randrange(50) for _ in range(rng.randrange(1, 30)))
        if not sq.validate_in_A(sq.delta(raw)):
            return False
    return True


def check_delta_fast(sc):
    return all(sq.delta_fast(s) == sq.delta(s) for s in _all_A(sc.brute(7)))


def check_delta_kernel(sc):
    for n in range(sc.brute(7) + 1):
        rows = sq.rows_of_A(n)
        if [tuple(r) for r in rows.tolist()] != list(sq.enumerate_A(n)):
            return False
        if [tuple(r) for r in sq.delta_rows(rows).tolist()] != [sq.delta(s) for s in sq.enumerate_A(n)]:
            return False
    return True


def check_mirror(sc):
    for s in _all_A(sc.brute(7)):
        if sq.gamma(s) != sq.mu(sq.delta(s)) or sq.mu(sq.mu(s)) != s:
            return False
    return True


def check_delta_never_decreases(sc):
    for s in _all_A(sc.brute(7)):
        c = sq.lex_compare(s, sq.delta(s))
        if c > 0 or (c == 0) != fm.is_family_member(s):
            return False
    return True


def check_delta_stabilization(sc):
    for s in _all_A(sc.brute(7)):
        n = sq.generation(s)
        t = dy.orbit(s, "delta")
        if t.period != 1 or t.steps_to_cycle > n * (n + 1) // 2:
            return False
        chain = t.visited
        if any(sq.lex_compare(a, b) >= 0 for a, b in zip(chain, chain[1:])):
            return False
    return True


def check_gamma_stabilization(sc):
    for s in _all_A(sc.brute(7)):
        n = sq.generation(s)
        t = dy.orbit(s, "gamma")
        if t.period not in (1, 2) or t.steps_to_cycle > n * (n + 1):
            return False
    return True


def check_gamma_fixed_points(sc):
    for s in _all_A(sc.brute(7)):
        if dy.is_fixed(s, "gamma") != (s == (0,)):
            return False
    return True


def check_fixed_counts(sc):
    return all(dy.count_fixed_points_delta(n, cap=sc.cap) == cb.catalan(n + 1)
               for n in range(sc.brute(9) + 1))


def check_double_counts(sc):
    for n in range(sc.brute(8) + 1):
        c = dy.count_double_points_gamma(n, cap=sc.cap)
        if n < len(DOUBLE_POINT_COUNTS) and c != DOUBLE_POINT_COUNTS[n]:
            return False
        if n >= 3 and c <= 2 ** n:
            return False
    return True


def check_family_is_fixed_set(sc):
    for n in range(sc.brute(9) + 1):
        names = [x.full_name for x in fm.enumerate_family(n)]
        if len(names) != len(set(names)) or len(names) != cb.catalan(n + 1):
            return False
        if n <= 7:
            fixed = {s for s in sq.enumerate_A(n) if sq.delta(s) == s}
            if set(names) != fixed:
                return False
    return True


def check_membership(sc):
    return all(fm.is_family_member(s) == dy.is_fixed(s, "delta") for s in _all_A(sc.brute(7)))


def check_name_distribution(sc):
    for n in range(sc.brute(9) + 1):
        d = fm.name_distribution(n)
        if any(d.counts[r] != cb.name_distribution_closed(n, r) for r in range(n + 1)):
            return False
    return True


def check_oldest_child_recursion(sc):
    return all(fm.name_distribution(n + 1).counts[0] == fm.name_distribution(n).total
               for n in range(sc.brute(8) + 1))


def check_sibship_rules(sc):
    for n in range(sc.brute(8) + 1):
        for x in fm.enumerate_family(n):
            kids = fm.children(x)
            if len(kids) != x.seniority + 2 or kids[-1].name != n + 1:
                return False
            if any(k.seniority != i for i, k in enumerate(kids)):
                return False
    return True


def check_catalan_forms(sc):
    top = sc.closed(30)
    for n in range(top + 1):
        if cb.catalan(n) != cb.catalan_recursive(n):
            return False
        if sum(cb.name_distribution_closed(n, r) for r in range(n + 1)) != cb.catalan(n + 1):
            return False
        if sum(cb.unit_increase_count_closed(n, r) for r in range(n + 1)) != cb.catalan(n + 1):
            return False
    return True


def _ballot_census(n, k):
    count = 0
    for pos in itertools.combinations(range(n + k), k):
        height, ok, neg = 0, True, set(pos)
        for i in range(n + k):
            height += -1 if i in neg else 1
            if height < 0:
                ok = False
                break
        count += ok
    return count


def check_ballot_count(sc):
    return all(cb.ballot_count(n, k) == _ballot_census(n, k)
               for n in range(sc.brute(8) + 1) for k in range(n + 1))


def check_unit_increase_distribution(sc):
    for n in range(sc.brute(10) + 1):
        seqs = list(bj.enumerate_unit_increase(n))
        if seqs != sorted(set(seqs)) or not all(bj.is_unit_increase(a) for a in seqs):
            return False
        ends = [0] * (n + 1)
        for a in seqs:
            ends[a[-1]] += 1
        if ends != [cb.unit_increase_count_closed(n, r) for r in range(n + 1)]:
            return False
        if len(seqs) != cb.catalan(n + 1):
            return False
    return True


def check_unit_increase_brute(sc):
    # unit-increase members of A_n found by filtering, not by the generator
    for n in range(sc.brute(7) + 1):
        brute = [s for s in sq.enumerate_A(n) if bj.is_unit_increase(s)]
        if brute != list(bj.enumerate_unit_increase(n)):
            return False
    return True


def check_ballot_roundtrip(sc):
    for n in range(sc.brute(8) + 1):
        for a in bj.enumerate_unit_increase(n):
            w = bj.encode_ballot(a)
            if bj.decode_ballot(w) != a:
                return False
            if w.count(1) != n or w.count(-1) != n - a[-1]:
                return False
            if any(h < 0 for h in itertools.accumulate(w)):
                return False
    return True


def check_m_increase(sc):
    for m in (1, 2, 3):
        for n in range(sc.brute(6) + 1):
            seqs = list(bj.enumerate_m_increase(m, n))
            # independent census over the box a_i <= m*i
            box = itertools.product(*(range(m * i + 1) for i in range(n + 1)))
            if sum(bj.is_m_increase(a, m) for a in box) != len(seqs):
                return False
            if len(seqs) != cb.fuss_catalan(m, n + 1):
                return False
            if m == 1 and len(seqs) != cb.catalan(n + 1):
                return False
            for a in seqs:
                w = bj.encode_ballot_m(a, m)
                if bj.decode_ballot_m(w, m) != a:
                    return False
                if w.count(m) != n or w.count(-1) != m * n - a[-1]:
                    return False
                if any(h < 0 for h in itertools.accumulate(w)):
                    return False
    return True


def check_west_tree(sc):
    for n in range(sc.brute(8) + 1):
        paths = set()
        for a in bj.enumerate_unit_increase(n):
            p = bj.west_tree_labels(a)
            if not bj.is_west_path(p):
                return False
            paths.add(p)
        if len(paths) != cb.catalan(n + 1):
            return False
    return True


def check_family_unit_bijection(sc):
    for n in range(sc.brute(8) + 1):
        fam = [x.full_name for x in fm.enumerate_family(n)]
        img = [bj.family_to_unit_increase(s) for s in fam]
        if sorted(img) != list(bj.enumerate_unit_increase(n)):
            return False
        if [bj.unit_increase_to_family(a) for a in img] != fam:
            return False
    return True


CHECKS: List[Callable] = [
    check_delta_image,
    check_delta_fast,
    check_delta_kernel,
    check_mirror,
    check_delta_never_decreases,
    check_delta_stabilization,
    check_gamma_stabilization,
    check_gamma_fixed_points,
    check_fixed_counts,
    check_double_counts,
    check_family_is_fixed_set,
    check_membership,
    check_name_distribution,
    check_oldest_child_recursion,
    check_sibship_rules,
    check_catalan_forms,
    check_ballot_count,
    check_unit_increase_distribution,
    check_unit_increase_brute,
    check_ballot_roundtrip,
    check_m_increase,
    check_west_tree,
    check_family_unit_bijection,
]


def run_checks(level: str = "quick", cap: int = dy.DEFAULT_CAP) -> List[CheckResult]:
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    sc = _Scale(level == "full", cap)
    results = []
    for check in CHECKS:
        name = check.__name__[len("check_"):]
        t0 = time.perf_counter()
        try:
            ok, detail = bool(check(sc)), ""
        except Exception as exc:  # a crash is a failed invariant
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, ok, time.perf_counter() - t0, detail))
    return results
