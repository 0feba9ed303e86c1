"""Parallel exhaustive enumeration of a linear code's b-weight histograms.

Work is split into contiguous message ranges; each range produces a partial
count matrix and the partials are merged by addition, so the totals do not
depend on the number of workers or on completion order.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ._kernel import MASK_TABLE_MAX_N, mask_weight_table, weight_counts
from .codes import DEFAULT_GUARD, LinearCode, check_guard, partition_ranges
from .errors import BadWindow

log = logging.getLogger(__name__)

_TABLE_LIMIT = 4096


@dataclass(frozen=True)
class Histograms:
    """Exact b-weight counts over a whole code."""

    n: int
    counts: dict[int, tuple[int, ...]]
    enumerated: int  # messages actually visited by the kernel

    def __getitem__(self, b: int) -> tuple[int, ...]:
        return self.counts[b]


def enumeration_cost(code: LinearCode, scalar_classes: bool = False) -> int:
    s, k = code.scalars, code.k
    if scalar_classes:
        return (s**k - 1) // (s - 1)
    return s**k


def _scaled_rows(code: LinearCode) -> np.ndarray:
    f = code.field
    s = code.scalars
    if f.q <= _TABLE_LIMIT:
        mul = f.mul_table
        return np.stack([mul[:s, :][:, row] for row in code.generator]).astype(np.int64)
    out = np.zeros((code.k, s, code.n), dtype=np.int64)
    for i, row in enumerate(code.generator):
        for c in range(s):
            out[i, c] = [f.mul_idx(c, int(v)) for v in row]
    return out


def weight_histograms(
    code: LinearCode,
    bs: Sequence[int],
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    scalar_classes: bool = False,
) -> Histograms:
    """Histogram of w_b over all codewords, for each b in ``bs``.

    With ``scalar_classes`` only one representative per set of nonzero scalar
    multiples is visited (the message whose leading nonzero symbol is 1);
    scalar multiples share their support, so every nonzero count is scaled by
    ``scalars - 1``.  This is exact for any code linear over its scalars.
    """
    n = code.n
    bs = [int(b) for b in bs]
    for b in bs:
        if not 1 <= b <= n:
            raise BadWindow(f"window b={b} outside [1, n={n}]")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    cost = enumeration_cost(code, scalar_classes)
    check_guard(cost, guard)

    f = code.field
    s, k = code.scalars, code.k
    scaled = _scaled_rows(code)
    xor = f.p == 2
    add_table = f.add_table if (f.q <= _TABLE_LIMIT and not xor) else np.zeros((0, 0), dtype=np.int64)
    bs_arr = np.array(bs, dtype=np.int64)
    if n <= MASK_TABLE_MAX_N:
        wtab = mask_weight_table(n, bs_arr)
    else:
        wtab = np.zeros((len(bs), 0), dtype=np.int64)

    tasks: list[tuple[np.ndarray, np.ndarray, int, int]] = []
    if scalar_classes:
        for lead in range(k):
            base = scaled[lead, 1].copy()
            sub = np.ascontiguousarray(scaled[lead + 1:])
            for start, stop in partition_ranges(s ** (k - 1 - lead), workers):
                if stop > start:
                    tasks.append((base, sub, start, stop))
    else:
        base = np.zeros(n, dtype=np.int64)
        for start, stop in partition_ranges(s**k, workers):
            if stop > start:
                tasks.append((base, scaled, start, stop))

    def run(task) -> np.ndarray:
        base, sub, start, stop = task
        counts = np.zeros((len(bs), n + 1), dtype=np.int64)
        weight_counts(base, sub, start, stop, bs_arr, add_table, f.p, f.m, xor, wtab, counts)
        return counts

    log.debug("enumerating %d messages of %r in %d tasks", cost, code, len(tasks))
    if workers == 1:
        partials = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(run, tasks))

    total = [[0] * (n + 1) for _ in bs]
    for part in partials:
        for t in range(len(bs)):
            for w in range(n + 1):
                total[t][w] += int(part[t, w])
    if scalar_classes:
        for row in total:
            for w in range(n + 1):
                row[w] *= s - 1
            row[0] += 1
    return Histograms(n, {b: tuple(row) for b, row in zip(bs, total)}, cost)
