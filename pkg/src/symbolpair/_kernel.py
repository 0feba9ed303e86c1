"""Compiled inner loop for exhaustive codeword enumeration.

The kernel walks a contiguous range of message indices with an odometer,
keeping one partial sum per generator row so each step only redoes the rows
whose digit changed; the last row is swept in a tight loop.

A width-b cyclic window is all-zero exactly when it lies inside a cyclic run
of zeros, so a run of length L contributes max(0, L - b + 1) zero windows.
For short codes the b-weight of every nonzero pattern is tabulated up front
and looked up by bitmask; longer codes walk the runs directly.

Functions are compiled with ``nogil`` so partitions can run on threads.
"""

from __future__ import annotations

import numpy as np
from numba import njit

MASK_TABLE_MAX_N = 16


@njit(cache=True, nogil=True, inline="always")
def _add(a, b, add_table, p, m, xor):
    if xor:
        return a ^ b
    if add_table.shape[0] > 0:
        return add_table[a, b]
    r = 0
    scale = 1
    for _ in range(m):
        r += ((a % p + b % p) % p) * scale
        a //= p
        b //= p
        scale *= p
    return r


@njit(cache=True, nogil=True)
def _zero_windows(c, n, b, runs):
    """Count all-zero width-b cyclic windows of a vector with a nonzero entry."""
    first = 0
    while c[first] == 0:
        first += 1
    total = 0
    length = 0
    for step in range(1, n + 1):
        j = first + step
        if j >= n:
            j -= n
        if c[j] == 0:
            length += 1
        else:
            if length >= b:
                total += length - b + 1
            length = 0
    return total


@njit(cache=True, nogil=True)
def mask_weight_table(n, bs):
    """w_b for every nonzero pattern (bit j set iff entry j is nonzero)."""
    table = np.zeros((bs.shape[0], 1 << n), dtype=np.int64)
    c = np.zeros(n, dtype=np.int64)
    runs = np.zeros(n + 1, dtype=np.int64)
    for mask in range(1, 1 << n):
        for j in range(n):
            c[j] = (mask >> j) & 1
        for t in range(bs.shape[0]):
            table[t, mask] = n - _zero_windows(c, n, bs[t], runs)
    return table


@njit(cache=True, nogil=True)
def weight_counts(base, scaled, start, stop, bs, add_table, p, m, xor, wtab, counts):
    """Accumulate b-weight histograms into ``counts`` (shape len(bs) x n+1).

    Enumerates ``base + sum_i digit_i * row_i`` for message indices in
    [start, stop) of the space with ``scaled.shape[1]`` symbols per digit;
    ``scaled[i, c]`` is the precomputed vector c * row_i.  ``wtab`` is the
    table from :func:`mask_weight_table`, or has zero columns to disable it.
    """
    r = scaled.shape[0]
    s = scaled.shape[1]
    n = base.shape[0]
    nb = bs.shape[0]
    use_table = wtab.shape[1] > 0
    runs = np.zeros(n + 1, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    if stop <= start:
        return

    if r == 0:
        nonzero = False
        for j in range(n):
            cw[j] = base[j]
            if base[j] != 0:
                nonzero = True
        for t in range(nb):
            if not nonzero:
                counts[t, 0] += 1
            else:
                counts[t, n - _zero_windows(cw, n, bs[t], runs)] += 1
        return

    digits = np.zeros(r, dtype=np.int64)
    idx = start
    for i in range(r - 1, -1, -1):
        digits[i] = idx % s
        idx //= s
    # partial[i] = base + rows 0..i-1
    partial = np.zeros((r, n), dtype=np.int64)
    for j in range(n):
        partial[0, j] = base[j]
    for i in range(r - 1):
        for j in range(n):
            partial[i + 1, j] = _add(partial[i, j], scaled[i, digits[i], j], add_table, p, m, xor)

    last = r - 1
    idx = start
    while True:
        c0 = digits[last]
        c1 = s
        if stop - idx < c1 - c0:
            c1 = c0 + (stop - idx)
        for c in range(c0, c1):
            mask = 0
            nonzero = False
            for j in range(n):
                v = _add(partial[last, j], scaled[last, c, j], add_table, p, m, xor)
                cw[j] = v
                if v != 0:
                    nonzero = True
                    if use_table:
                        mask |= 1 << j
            if not nonzero:
                for t in range(nb):
                    counts[t, 0] += 1
            elif use_table:
                for t in range(nb):
                    counts[t, wtab[t, mask]] += 1
            else:
                for t in range(nb):
                    counts[t, n - _zero_windows(cw, n, bs[t], runs)] += 1
        idx += c1 - c0
        if idx >= stop:
            break
        digits[last] = 0
        level = last - 1
        while True:
            digits[level] += 1
            if digits[level] < s:
                break
            digits[level] = 0
            level -= 1
        for i in range(level, last):
            for j in range(n):
                partial[i + 1, j] = _add(partial[i, j], scaled[i, digits[i], j], add_table, p, m, xor)
