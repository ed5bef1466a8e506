"""Orbits of the sequence transforms, periodic points and brute-force censuses."""

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Tuple

from . import _kernels
from . import sequences as sq
from .sequences import Seq

DEFAULT_CAP = 10


class BudgetExceeded(RuntimeError):
    """No repeated sequence was found within the allowed number of steps."""


class CapExceeded(ValueError):
    """A brute-force request is above the configured generation cap."""


class Endomorphism(str, enum.Enum):
    DELTA = "delta"
    DELTA_FAST = "delta_fast"
    GAMMA = "gamma"
    MU = "mu"

    def __call__(self, s):
        # looked up on the module at call time so tests can patch it
        return getattr(sq, self.value)(s)

    def default_max_steps(self, n: int) -> int:
        """Application budget implied by the quadratic stabilization bound."""
        if self in (Endomorphism.DELTA, Endomorphism.DELTA_FAST):
            return n * (n + 1) // 2 + 1
        if self is Endomorphism.GAMMA:
            # n(n+1) steps into the 2-cycle plus two more to see it close
            return n * (n + 1) + 2
        return 2


@dataclass(frozen=True)
class OrbitTrace:
    start: Seq
    steps_to_cycle: int
    period: int
    cycle: Tuple[Seq, ...]
    visited: Tuple[Seq, ...]

    @property
    def terminal(self) -> Seq:
        """First point of the orbit that lies on the cycle."""
        return self.visited[self.steps_to_cycle]


def orbit(s, e="delta", max_steps: Optional[int] = None) -> OrbitTrace:
    """Iterate ``e`` from ``s`` until a sequence repeats.

    The reported cycle starts at its lexicographically smallest member.

    >>> t = orbit((0, 1, 0), "gamma")
    >>> t.steps_to_cycle, t.period, t.cycle
    (0, 2, ((0, 0, 2), (0, 1, 0)))
    """
    e = Endomorphism(e)
    s = tuple(s)
    if not sq.validate_in_A(s):
        raise sq.DomainError(f"{sq.format_sequence(s)} is not in A")
    if max_steps is None:
        max_steps = e.default_max_steps(sq.generation(s))
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    visited = [s]
    seen = {s: 0}
    cur = s
    for _ in range(max_steps):
        cur = tuple(e(cur))
        if cur in seen:
            k = seen[cur]
            cycle = visited[k:]
            lo = cycle.index(min(cycle))
            cycle = cycle[lo:] + cycle[:lo]
            return OrbitTrace(s, k, len(cycle), tuple(cycle), tuple(visited))
        seen[cur] = len(visited)
        visited.append(cur)
    raise BudgetExceeded(
        f"no repeat within {max_steps} applications of {e.value} from {sq.format_sequence(s)}"
    )


def stabilize_delta(s) -> Tuple[Seq, int]:
    """Iterate delta to its fixed point; returns ``(fixed, steps)``.

    >>> stabilize_delta((0, 0, 1))
    ((0, 0, 2), 1)
    """
    t = orbit(s, Endomorphism.DELTA)
    return t.terminal, t.steps_to_cycle


def find_double_point_gamma(s) -> Tuple[Seq, int]:
    """Iterate gamma until a point of period 1 or 2 is reached.

    >>> find_double_point_gamma((0, 0, 1))
    ((0, 1, 0), 1)
    """
    t = orbit(s, Endomorphism.GAMMA)
    return t.terminal, t.steps_to_cycle


def is_fixed(s, e="delta") -> bool:
    s = tuple(s)
    if not sq.validate_in_A(s):
        raise sq.DomainError(f"{sq.format_sequence(s)} is not in A")
    return tuple(Endomorphism(e)(s)) == s


def _census(kernel, n, cap, workers):
    if n < 0:
        raise ValueError("generation must be non-negative")
    if n > cap:
        raise CapExceeded(f"generation {n} is above the cap {cap}")
    if n > _kernels.KERNEL_MAX_GENERATION:
        raise CapExceeded(f"generation {n} is above the kernel limit")
    blocks = sq.partition_ranks(sq.size_of_A(n), workers)
    if workers <= 1:
        return sum(int(kernel(n, lo, hi)) for lo, hi in blocks)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(int(c) for c in pool.map(lambda b: kernel(n, *b), blocks))


def count_fixed_points_delta(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    """Number of delta-fixed sequences in ``A_n``, by exhaustive search.

    The rank range is split into ``workers`` contiguous blocks whose counts
    are summed, so the answer does not depend on ``workers``.
    """
    return _census(_kernels.count_delta_fixed, n, cap, workers)


def count_double_points_gamma(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> int:
    """Number of ``s`` in ``A_n`` with ``gamma(gamma(s)) == s``, by exhaustive search."""
    return _census(_kernels.count_gamma_double, n, cap, workers)
