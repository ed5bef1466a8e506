"""The Catalan family tree, grown from its sibling-naming rules.

Every member remembers the names of itself and its older siblings (its
*sibship*).  A member with ``k`` older siblings has ``k + 2`` children; in
generation ``n`` they are named after the parent's sibship, oldest first,
and the youngest is named ``n``.

>>> [c.full_name for c in children(family_root())]
[(0, 0), (0, 1)]
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

from .sequences import Seq


@dataclass(frozen=True)
class FamilyNode:
    full_name: Seq
    sibship: Tuple[int, ...]

    @property
    def name(self) -> int:
        return self.full_name[-1]

    @property
    def generation(self) -> int:
        return len(self.full_name) - 1

    @property
    def seniority(self) -> int:
        """0 for the oldest sibling."""
        return len(self.sibship) - 1

    def child_names(self) -> Tuple[int, ...]:
        return self.sibship + (self.generation + 1,)


@dataclass(frozen=True)
class NameDistribution:
    generation: int
    counts: Dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def family_root() -> FamilyNode:
    return FamilyNode((0,), (0,))


def children(x: FamilyNode) -> List[FamilyNode]:
    """Children of ``x``, oldest first.

    >>> [c.full_name for c in children(FamilyNode((0, 1), (0, 1)))]
    [(0, 1, 0), (0, 1, 1), (0, 1, 2)]
    """
    names = x.child_names()
    return [FamilyNode(x.full_name + (r,), names[: i + 1]) for i, r in enumerate(names)]


def enumerate_family(n: int) -> Iterator[FamilyNode]:
    """Lazily yield generation ``n`` in breadth-first, oldest-first order."""
    if n < 0:
        raise ValueError("generation must be non-negative")
    if n == 0:
        yield family_root()
        return
    for parent in enumerate_family(n - 1):
        yield from children(parent)


def is_family_member(s: Sequence[int]) -> bool:
    """Membership by walking the naming rules down from the root.

    Does not use delta.

    >>> is_family_member((0, 0, 2)), is_family_member((0, 0, 1))
    (True, False)
    """
    if len(s) == 0 or s[0] != 0:
        return False
    sibship: Tuple[int, ...] = (0,)
    for n in range(1, len(s)):
        names = sibship + (n,)
        # sibship names are strictly increasing, so each name occurs once
        try:
            k = names.index(s[n])
        except ValueError:
            return False
        sibship = names[: k + 1]
    return True


def name_distribution(n: int) -> NameDistribution:
    """Count generation-``n`` members by their own name."""
    c = Counter(node.name for node in enumerate_family(n))
    return NameDistribution(n, {r: c.get(r, 0) for r in range(n + 1)})
