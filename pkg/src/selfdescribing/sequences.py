"""Finite integer sequences and the transforms delta, mu and gamma.

A sequence is a tuple ``(a_0, ..., a_n)`` of non-negative ints; ``n`` is its
generation.  The domain ``A`` is the set of sequences with ``0 <= a_i <= i``;
``A_n`` is its generation-``n`` slice, which has ``(n+1)!`` members.

>>> delta((0, 0, 1))
(0, 0, 2)
>>> gamma((0, 1, 0))
(0, 0, 2)
>>> mu((0, 1, 1))
(0, 0, 1)
"""

import math
import re
from typing import Iterator, Optional, Sequence, Tuple

import numpy as np

from . import _kernels

Seq = Tuple[int, ...]

_SEQ_RE = re.compile(r"\d+(?:,\d+)*\Z")


class DomainError(ValueError):
    """A sequence lies outside the domain an operation is defined on."""


def parse_sequence(text: str) -> Seq:
    """Parse the ``"t0,t1,...,tn"`` text form.

    >>> parse_sequence("0,1,1")
    (0, 1, 1)
    >>> parse_sequence("0, 1")
    Traceback (most recent call last):
    ...
    ValueError: malformed sequence '0, 1'
    """
    if not _SEQ_RE.match(text):
        raise ValueError(f"malformed sequence {text!r}")
    return tuple(int(t) for t in text.split(","))


def format_sequence(s: Sequence[int]) -> str:
    return ",".join(str(t) for t in s)


def generation(s: Sequence[int]) -> int:
    return len(s) - 1


def validate_in_A(s: Sequence[int]) -> bool:
    """True iff ``0 <= s[i] <= i`` for every index."""
    return len(s) >= 1 and all(0 <= t <= i for i, t in enumerate(s))


def _require_in_A(s):
    if not validate_in_A(s):
        raise DomainError(f"{format_sequence(s)} is not in A")


def _require_raw(s):
    if len(s) == 0:
        raise DomainError("empty sequence")
    if any(t < 0 for t in s):
        raise DomainError(f"{format_sequence(s)} has a negative term")


def delta(s: Sequence[int]) -> Seq:
    """Replace each term by the number of earlier terms strictly below it.

    Defined for any non-negative sequence; the image always lies in ``A``.

    >>> delta((5, 3, 7))
    (0, 0, 2)
    """
    _require_raw(s)
    return tuple(sum(1 for j in range(i) if s[j] < x) for i, x in enumerate(s))


def delta_fast(s: Sequence[int]) -> Seq:
    """Same result as :func:`delta` in O(n log n) using a Fenwick tree.

    Values larger than the length are rank-compressed first so the tree
    stays O(n) in size; equal values keep equal ranks, so ties still count
    as "not smaller".

    >>> delta_fast((0, 0, 1))
    (0, 0, 2)
    >>> delta_fast((10**12, 7, 10**12 + 1))
    (0, 0, 2)
    """
    if len(s) == 0:
        raise DomainError("empty sequence")
    values = np.fromiter(s, dtype=np.int64, count=len(s))
    if values.min() < 0:
        raise DomainError(f"{format_sequence(s)} has a negative term")
    size = values.shape[0] + 1
    if values.max() >= size:
        _, values = np.unique(values, return_inverse=True)
        values = values.astype(np.int64).ravel()
    return tuple(_kernels.fenwick_delta(values, size).tolist())


def mu(s: Sequence[int]) -> Seq:
    """Mirror involution ``i - a_i``; raises :class:`DomainError` off ``A``."""
    _require_in_A(s)
    return tuple(i - t for i, t in enumerate(s))


def gamma(s: Sequence[int]) -> Seq:
    """Count earlier terms that are ``>=`` each term.  Equals ``mu(delta(s))``.

    >>> gamma((0, 0, 1))
    (0, 1, 0)
    """
    _require_in_A(s)
    return tuple(sum(1 for j in range(i) if s[j] >= x) for i, x in enumerate(s))


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Three-way lexicographic comparison of two same-length sequences.

    Returns -1, 0 or 1.

    >>> lex_compare((0, 1, 0), (0, 0, 2))
    1
    """
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def size_of_A(n: int) -> int:
    return math.factorial(n + 1)


def unrank(n: int, rank: int) -> Seq:
    """The sequence at position ``rank`` of the lexicographic order on ``A_n``.

    >>> unrank(2, 3)
    (0, 1, 0)
    """
    if not 0 <= rank < size_of_A(n):
        raise IndexError(f"rank {rank} out of range for generation {n}")
    digits = [0] * (n + 1)
    for i in range(n, -1, -1):
        rank, digits[i] = divmod(rank, i + 1)
    return tuple(digits)


def rank(s: Sequence[int]) -> int:
    """Inverse of :func:`unrank`."""
    _require_in_A(s)
    r = 0
    for i, t in enumerate(s):
        r = r * (i + 1) + t
    return r


def enumerate_A(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Seq]:
    """Lazily yield ``A_n`` in lexicographic order.

    ``start``/``stop`` select a contiguous block of ranks, so the full range
    ``[0, (n+1)!)`` can be split between independent consumers.

    >>> list(enumerate_A(1))
    [(0, 0), (0, 1)]
    >>> list(enumerate_A(2, start=2, stop=4))
    [(0, 0, 2), (0, 1, 0)]
    """
    if n < 0:
        raise ValueError("generation must be non-negative")
    total = size_of_A(n)
    stop = total if stop is None else min(stop, total)
    if start >= stop:
        return
    digits = list(unrank(n, start))
    for _ in range(stop - start):
        yield tuple(digits)
        i = n
        while i > 0 and digits[i] == i:
            digits[i] = 0
            i -= 1
        if i > 0:
            digits[i] += 1


def partition_ranks(total: int, parts: int):
    """Split ``range(total)`` into ``parts`` contiguous ``(lo, hi)`` blocks.

    >>> partition_ranks(10, 3)
    [(0, 4), (4, 7), (7, 10)]
    """
    parts = max(1, parts)
    q, r = divmod(total, parts)
    bounds, lo = [], 0
    for k in range(parts):
        hi = lo + q + (1 if k < r else 0)
        bounds.append((lo, hi))
        lo = hi
    return bounds


def rows_of_A(n: int, start: int = 0, stop: Optional[int] = None) -> np.ndarray:
    """A block of ``A_n`` as an int64 array, one sequence per row."""
    if n > _kernels.KERNEL_MAX_GENERATION:
        raise ValueError(f"generation {n} exceeds kernel limit")
    total = size_of_A(n)
    stop = total if stop is None else min(stop, total)
    return _kernels.unrank_rows(n, start, max(start, stop))


def delta_rows(rows) -> np.ndarray:
    """Row-wise :func:`delta` on a 2-d array by direct quadratic counting."""
    return _kernels.delta_rows(np.ascontiguousarray(rows, dtype=np.int64))


def gamma_rows(rows) -> np.ndarray:
    return _kernels.gamma_rows(np.ascontiguousarray(rows, dtype=np.int64))
