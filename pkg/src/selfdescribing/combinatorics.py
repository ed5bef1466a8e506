"""Exact closed-form counts.  Integers only; every division is checked exact."""

from functools import lru_cache


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative method.

    After step ``i`` the accumulator equals C(n-k+i, i), so each division
    is exact.

    >>> binomial(9, 3)
    84
    """
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for i in range(1, k + 1):
        acc = _exact_div(acc * (n - k + i), i)
    return acc


def catalan(n: int) -> int:
    """c_n = C(2n, n) / (n + 1).

    >>> [catalan(n) for n in range(8)]
    [1, 1, 2, 5, 14, 42, 132, 429]
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return _exact_div(binomial(2 * n, n), n + 1)


@lru_cache(maxsize=None)
def catalan_recursive(n: int) -> int:
    """c_0 = 1, c_{n+1} = sum of c_i c_{n-i}."""
    if n == 0:
        return 1
    return sum(catalan_recursive(i) * catalan_recursive(n - 1 - i) for i in range(n))


def fuss_catalan(m: int, n: int) -> int:
    """C((m+1)n, n) / (mn + 1); the number of (m+1)-ary trees with n internal nodes.

    >>> fuss_catalan(2, 3)
    12
    """
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    return _exact_div(binomial((m + 1) * n, n), m * n + 1)


def ballot_count(n: int, k: int) -> int:
    """Words of ``n`` (+1)'s and ``k`` (-1)'s whose partial sums stay >= 0.

    >>> ballot_count(3, 2)
    5
    """
    if n < 0 or not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return _exact_div((n + 1 - k) * binomial(n + k, n), n + 1)


def unit_increase_count_closed(n: int, r: int) -> int:
    """Unit-increase sequences of generation ``n`` ending in ``r``: (r+1)/(n+1) C(2n-r, n)."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    return _exact_div((r + 1) * binomial(2 * n - r, n), n + 1)


def name_distribution_closed(n: int, r: int) -> int:
    """Family members of generation ``n`` named ``r``: c_r c_{n-r}."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got n={n}, r={r}")
    return catalan(r) * catalan(n - r)
