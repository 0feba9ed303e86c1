"""The b-symbol metric: cyclic read vectors, weights, distances and distributions.

Vectors may be :class:`~symbolpair.codes.Codeword` objects or plain sequences
of element indices (or field elements); only whether an entry is zero, or
whether two entries are equal, matters here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .codes import DEFAULT_GUARD, LinearCode
from .enumeration import weight_histograms
from .errors import BadWindow, LengthMismatch, ParseError


def _check_window(n: int, b: int) -> None:
    if not 1 <= b <= n:
        raise BadWindow(f"window b={b} must satisfy 1 <= b <= n={n}")


def read_vector(x: Sequence, b: int) -> tuple[tuple, ...]:
    """pi_b(x): the n cyclic windows (x_i, ..., x_{i+b-1})."""
    vals = tuple(x)
    n = len(vals)
    _check_window(n, b)
    return tuple(tuple(vals[(i + j) % n] for j in range(b)) for i in range(n))


def b_weight(x: Sequence, b: int) -> int:
    """Number of cyclic width-b windows of x that are not all zero."""
    return sum(1 for w in read_vector(x, b) if any(w))


def hamming_weight(x: Sequence) -> int:
    return sum(1 for v in x if v)


def b_distance(x: Sequence, y: Sequence, b: int) -> int:
    """Number of positions where the width-b windows of x and y differ."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths {len(x)} and {len(y)} differ")
    rx, ry = read_vector(x, b), read_vector(y, b)
    return sum(1 for u, v in zip(rx, ry) if tuple(map(int, u)) != tuple(map(int, v)))


@dataclass(frozen=True)
class WeightDistribution:
    """Exact counts N_w for w = 0..n under the b-symbol metric."""

    metric_b: int
    n: int
    source: str  # "brute_force" or "formula"
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.counts) != self.n + 1:
            raise ValueError(f"need {self.n + 1} counts, got {len(self.counts)}")
        if self.source not in ("brute_force", "formula"):
            raise ValueError(f"unknown source {self.source!r}")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_dict(self) -> dict:
        return {
            "metric_b": self.metric_b,
            "n": self.n,
            "source": self.source,
            "counts": [str(c) for c in self.counts],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> WeightDistribution:
        try:
            return cls(int(d["metric_b"]), int(d["n"]), d["source"], tuple(int(c) for c in d["counts"]))
        except (KeyError, TypeError, ValueError) as e:
            raise ParseError(f"bad weight distribution: {e}") from e


def b_weight_distribution(
    code: LinearCode,
    b: int,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    scalar_classes: bool = False,
) -> WeightDistribution:
    """Brute-force distribution of w_b over every codeword of ``code``."""
    _check_window(code.n, b)
    hist = weight_histograms(code, [b], guard=guard, workers=workers, scalar_classes=scalar_classes)
    return WeightDistribution(b, code.n, "brute_force", hist[b])


def min_b_distance(
    code: LinearCode,
    b: int,
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
    scalar_classes: bool = False,
) -> int:
    """Minimum b-distance, i.e. the smallest b-weight of a nonzero codeword."""
    dist = b_weight_distribution(code, b, guard, workers, scalar_classes)
    return next(w for w in range(1, code.n + 1) if dist.counts[w])

