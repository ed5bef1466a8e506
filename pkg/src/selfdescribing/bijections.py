"""Unit-increase and m-increase sequences and their ballot-word encodings.

A sequence has *m-increase* when ``a_0 = 0`` and ``0 <= a_{i+1} <= a_i + m``.
For ``m = 1`` these are the unit-increase sequences, a subset of ``A``.

Ballot words are tuples of ints: ``m`` for the positive symbol and ``-1``
for the negative one.  Their text form writes ``+``/``-`` when ``m = 1`` and
``[m]``/``-`` otherwise, e.g. ``"++--"`` or ``"[2]--"``.

>>> encode_ballot((0, 1, 0))
(1, 1, -1, -1)
>>> format_ballot(encode_ballot_m((0, 0), 2), 2)
'[2]--'
"""

import re
from typing import Iterator, Sequence, Tuple

from .sequences import DomainError, Seq, format_sequence

Word = Tuple[int, ...]

_BALLOT_RE = re.compile(r"(?:\+|-|\[\d+\])*\Z")
_TOKEN_RE = re.compile(r"\+|-|\[(\d+)\]")


def is_m_increase(a: Sequence[int], m: int = 1) -> bool:
    if len(a) == 0 or a[0] != 0:
        return False
    return all(0 <= a[i + 1] <= a[i] + m for i in range(len(a) - 1))


def is_unit_increase(a: Sequence[int]) -> bool:
    return is_m_increase(a, 1)


def _require_m_increase(a, m):
    if m < 1:
        raise ValueError("m must be >= 1")
    if not is_m_increase(a, m):
        raise DomainError(f"{format_sequence(a)} does not have {m}-increase")


def enumerate_m_increase(m: int, n: int) -> Iterator[Seq]:
    """Yield the generation-``n`` sequences with ``m``-increase in lexicographic order.

    >>> list(enumerate_m_increase(2, 1))
    [(0, 0), (0, 1), (0, 2)]
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    prefix = [0]
    # stack of next candidate values for each open position
    nxt = []
    while True:
        if len(prefix) == n + 1:
            yield tuple(prefix)
        else:
            nxt.append(0)
            prefix.append(0)
            continue
        # backtrack to the deepest position that can still be bumped
        while nxt:
            prefix.pop()
            v = nxt.pop() + 1
            if v <= prefix[-1] + m:
                nxt.append(v)
                prefix.append(v)
                break
        else:
            return


def enumerate_unit_increase(n: int) -> Iterator[Seq]:
    return enumerate_m_increase(1, n)


def encode_ballot_m(a: Sequence[int], m: int) -> Word:
    """Each gap ``b_i = a_i - a_{i+1} + m`` becomes ``m`` followed by ``b_i`` (-1)'s.

    >>> encode_ballot_m((0, 2), 2)
    (2,)
    """
    _require_m_increase(a, m)
    word = []
    for i in range(len(a) - 1):
        word.append(m)
        word.extend([-1] * (a[i] - a[i + 1] + m))
    return tuple(word)


def encode_ballot(a: Sequence[int]) -> Word:
    return encode_ballot_m(a, 1)


def decode_ballot_m(word: Sequence[int], m: int) -> Seq:
    """Inverse of :func:`encode_ballot_m`.

    >>> decode_ballot_m((1, -1, 1, -1), 1)
    (0, 0, 0)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if word and word[0] != m:
        raise DomainError("ballot word must start with a positive symbol")
    a = [0]
    height = 0
    for sym in word:
        if sym == m:
            a.append(a[-1] + m)
        elif sym == -1:
            a[-1] -= 1
            if a[-1] < 0:
                raise DomainError("ballot word decodes to a negative term")
        else:
            raise DomainError(f"unexpected symbol {sym} for m={m}")
        height += sym
        if height < 0:
            raise DomainError("ballot word has a negative partial sum")
    return tuple(a)


def decode_ballot(word: Sequence[int]) -> Seq:
    return decode_ballot_m(word, 1)


def format_ballot(word: Sequence[int], m: int = 1) -> str:
    pos = "+" if m == 1 else f"[{m}]"
    return "".join(pos if sym > 0 else "-" for sym in word)


def parse_ballot(text: str) -> Tuple[Word, int]:
    """Parse a ballot word; returns ``(word, m)``.

    A word without positive symbols is taken to have ``m = 1``.

    >>> parse_ballot("[3]-")
    ((3, -1), 3)
    """
    if not _BALLOT_RE.match(text):
        raise ValueError(f"malformed ballot word {text!r}")
    word = []
    weights = set()
    for tok in _TOKEN_RE.finditer(text):
        if tok.group(0) == "-":
            word.append(-1)
        else:
            w = 1 if tok.group(0) == "+" else int(tok.group(1))
            if w < 1:
                raise ValueError(f"malformed ballot word {text!r}")
            weights.add(w)
            word.append(w)
    if len(weights) > 1:
        raise ValueError(f"mixed positive weights in {text!r}")
    return tuple(word), (weights.pop() if weights else 1)


def west_tree_labels(a: Sequence[int], m: int = 1) -> Seq:
    """Path in the West-style tree: shift every term by ``m + 1``.

    >>> west_tree_labels((0, 1, 2))
    (2, 3, 4)
    >>> west_tree_labels((0, 2), m=2)
    (3, 5)
    """
    _require_m_increase(a, m)
    return tuple(t + m + 1 for t in a)


def is_west_path(path: Sequence[int], m: int = 1) -> bool:
    """Root labelled ``m+1``; a vertex ``x`` has children ``m+1, ..., m+x``."""
    if len(path) == 0 or path[0] != m + 1:
        return False
    return all(m + 1 <= path[i + 1] <= m + path[i] for i in range(len(path) - 1))


def family_to_unit_increase(s: Sequence[int]) -> Seq:
    """Map a family full name to the unit-increase sequence at the same tree position.

    Both trees are ordered isomorphic: a node with ``k`` older siblings has
    ``k + 2`` children, and a unit-increase node ending in ``k`` has ``k + 2``
    children.  The image records, along the path, the seniority of each node.

    >>> family_to_unit_increase((0, 1, 2))
    (0, 1, 2)
    >>> family_to_unit_increase((0, 0, 2))
    (0, 0, 1)
    """
    if len(s) == 0 or s[0] != 0:
        raise DomainError(f"{format_sequence(s)} is not a family member")
    out = [0]
    sibship: Tuple[int, ...] = (0,)
    for n in range(1, len(s)):
        names = sibship + (n,)
        if s[n] not in names:
            raise DomainError(f"{format_sequence(s)} is not a family member")
        k = names.index(s[n])
        out.append(k)
        sibship = names[: k + 1]
    return tuple(out)


def unit_increase_to_family(a: Sequence[int]) -> Seq:
    """Inverse of :func:`family_to_unit_increase`."""
    _require_m_increase(a, 1)
    out = [0]
    sibship: Tuple[int, ...] = (0,)
    for n in range(1, len(a)):
        names = sibship + (n,)
        out.append(names[a[n]])
        sibship = names[: a[n] + 1]
    return tuple(out)
