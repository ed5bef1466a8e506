"""Compiled inner loops.

Everything here works on int64 numpy arrays and is called through the
public wrappers in :mod:`sequences` and :mod:`dynamics`.  Ranks are int64,
so the odometer kernels are limited to generation 19 (20! < 2**63).
"""

import numpy as np
from numba import njit

KERNEL_MAX_GENERATION = 19


@njit(cache=True, nogil=True)
def fenwick_delta(values, size):
    # values already lie in [0, size)
    tree = np.zeros(size + 1, dtype=np.int64)
    out = np.empty(values.shape[0], dtype=np.int64)
    for i in range(values.shape[0]):
        v = values[i]
        # count of earlier terms with value < v, i.e. prefix sum over [0, v)
        c = 0
        k = v
        while k > 0:
            c += tree[k]
            k -= k & -k
        out[i] = c
        k = v + 1
        while k <= size:
            tree[k] += 1
            k += k & -k
    return out


@njit(cache=True, nogil=True)
def delta_rows(rows):
    m, length = rows.shape
    out = np.empty_like(rows)
    for r in range(m):
        for i in range(length):
            x = rows[r, i]
            c = 0
            for j in range(i):
                if rows[r, j] < x:
                    c += 1
            out[r, i] = c
    return out


@njit(cache=True, nogil=True)
def gamma_rows(rows):
    m, length = rows.shape
    out = np.empty_like(rows)
    for r in range(m):
        for i in range(length):
            x = rows[r, i]
            c = 0
            for j in range(i):
                if rows[r, j] >= x:
                    c += 1
            out[r, i] = c
    return out


@njit(cache=True, nogil=True)
def unrank_into(n, rank, digits):
    # digit i has radix i + 1; the last digit is least significant
    for i in range(n, -1, -1):
        digits[i] = rank % (i + 1)
        rank //= i + 1


@njit(cache=True, nogil=True)
def odometer_step(n, digits):
    i = n
    while i > 0 and digits[i] == i:
        digits[i] = 0
        i -= 1
    if i > 0:
        digits[i] += 1


@njit(cache=True, nogil=True)
def unrank_rows(n, lo, hi):
    out = np.empty((hi - lo, n + 1), dtype=np.int64)
    digits = np.empty(n + 1, dtype=np.int64)
    if hi > lo:
        unrank_into(n, lo, digits)
    for r in range(hi - lo):
        out[r, :] = digits
        odometer_step(n, digits)
    return out


@njit(cache=True, nogil=True)
def _is_delta_fixed(digits, n):
    for i in range(1, n + 1):
        x = digits[i]
        c = 0
        for j in range(i):
            if digits[j] < x:
                c += 1
        if c != x:
            return False
    return True


@njit(cache=True, nogil=True)
def _is_gamma_double(digits, image, n):
    for i in range(n + 1):
        x = digits[i]
        c = 0
        for j in range(i):
            if digits[j] >= x:
                c += 1
        image[i] = c
    for i in range(n + 1):
        x = image[i]
        c = 0
        for j in range(i):
            if image[j] >= x:
                c += 1
        if c != digits[i]:
            return False
    return True


@njit(cache=True, nogil=True)
def count_delta_fixed(n, lo, hi):
    digits = np.empty(n + 1, dtype=np.int64)
    unrank_into(n, lo, digits)
    total = 0
    for _ in range(hi - lo):
        if _is_delta_fixed(digits, n):
            total += 1
        odometer_step(n, digits)
    return total


@njit(cache=True, nogil=True)
def count_gamma_double(n, lo, hi):
    digits = np.empty(n + 1, dtype=np.int64)
    image = np.empty(n + 1, dtype=np.int64)
    unrank_into(n, lo, digits)
    total = 0
    for _ in range(hi - lo):
        if _is_gamma_double(digits, image, n):
            total += 1
        odometer_step(n, digits)
    return total
