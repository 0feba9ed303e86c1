"""Closed-form b-weights of the simplex code family, and their verification.

Every nonzero codeword of a cyclic or standard simplex code has the same
b-weight; the same holds for the variation simplex code in the cases with a
known closed form.  The closed forms below are plain integer functions of
(p, m, b), so they can be evaluated far beyond what enumeration reaches.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .codes import DEFAULT_GUARD, SIMPLEX_FAMILIES
from .enumeration import weight_histograms
from .errors import BadDegree, BadWindow, FormulaUnavailable, WrongCharacteristic
from .field import FieldSpec, is_prime
from .report import TheoremReport

FAMILIES = tuple(SIMPLEX_FAMILIES)


@dataclass(frozen=True)
class SimplexParams:
    p: int
    m: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise WrongCharacteristic(f"p={self.p} is not prime")
        if self.m < 1:
            raise BadDegree(f"m={self.m} must be >= 1")

    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def h(self) -> int:
        return (self.q - 1) // (self.p - 1)

    @classmethod
    def of(cls, field: FieldSpec) -> SimplexParams:
        return cls(field.p, field.m)


def cyclic_simplex_b_weight(params: SimplexParams, b: int) -> int:
    """q - p^(m-b) for b < m, q - 1 for m <= b <= q-1."""
    q = params.q
    if not 1 <= b <= q - 1:
        raise BadWindow(f"b={b} outside [1, q-1={q - 1}]")
    if b < params.m:
        return q - params.p ** (params.m - b)
    return q - 1


def standard_simplex_b_weight(params: SimplexParams, b: int) -> int:
    """The cyclic value divided by p - 1; the code has length h."""
    if not 1 <= b <= min(params.q - 1, params.h):
        raise BadWindow(f"b={b} outside [1, h={params.h}]")
    return cyclic_simplex_b_weight(params, b) // (params.p - 1)


def variation_simplex_pair_weight(params: SimplexParams) -> int:
    """q - p^(m-1) + p^(m-2), for m >= 2."""
    if params.m < 2:
        raise BadDegree("the pair weight formula needs m >= 2")
    p, m = params.p, params.m
    return params.q - p ** (m - 1) + p ** (m - 2)


def variation_simplex_odd_b_weight_p3(params: SimplexParams, s: int) -> int:
    """w_(2s+1) over GF(3^m): q - 3^(m-s-1) for s < m, q - 1 for s >= m."""
    if params.p != 3:
        raise WrongCharacteristic(f"needs p = 3, got p={params.p}")
    q = params.q
    if s < 1 or 2 * s + 1 > q - 1:
        raise BadWindow(f"s={s} needs 1 <= s and 2s+1 <= q-1={q - 1}")
    if s < params.m:
        return q - params.p ** (params.m - s - 1)
    return q - 1


def variation_simplex_p_weight(params: SimplexParams) -> int:
    """w_p = q - p^(m-2) for odd p and m > 1."""
    if params.p == 2:
        raise WrongCharacteristic("needs an odd prime p")
    if params.m <= 1:
        raise BadDegree("needs m > 1")
    return params.q - params.p ** (params.m - 2)


def closed_form_weight(family: str, params: SimplexParams, b: int) -> int | None:
    """The common nonzero b-weight predicted for ``family``, or None if unknown.

    Raises BadWindow when b does not fit the code length.
    """
    p, m, q = params.p, params.m, params.q
    if family == "cyclic":
        return cyclic_simplex_b_weight(params, b)
    if family == "standard":
        return standard_simplex_b_weight(params, b)
    if family != "variation":
        raise FormulaUnavailable(f"unknown simplex family {family!r}")
    if not 1 <= b <= q - 1:
        raise BadWindow(f"b={b} outside [1, q-1={q - 1}]")
    # with p = 2 or m = 1 every block has one entry and the code is the cyclic one
    if p == 2 or m == 1:
        return cyclic_simplex_b_weight(params, b)
    if b == 1:
        # Hamming weight does not see the coordinate order
        return cyclic_simplex_b_weight(params, 1)
    if b == 2:
        return variation_simplex_pair_weight(params)
    if p == 3 and b % 2 == 1:
        return variation_simplex_odd_b_weight_p3(params, (b - 1) // 2)
    if b == p:
        return variation_simplex_p_weight(params)
    return None


def verify_simplex(
    field: FieldSpec,
    family: str,
    bs: Iterable[int],
    guard: int = DEFAULT_GUARD,
    workers: int = 1,
) -> TheoremReport:
    """Enumerate all codewords of a simplex-family code and check its b-weights.

    For each b the report holds the predicted weight (None where no closed
    form is known) and the observed value: the common weight when every
    nonzero codeword agrees, otherwise a {weight: count} multiset.  A b is a
    mismatch when a prediction exists and the observation is not exactly
    "all q-1 nonzero codewords have that weight".
    """
    if family not in SIMPLEX_FAMILIES:
        raise FormulaUnavailable(f"unknown simplex family {family!r}")
    code = SIMPLEX_FAMILIES[family](field)
    params = SimplexParams.of(field)
    bs = list(bs)
    for b in bs:
        if not 1 <= b <= code.n:
            raise BadWindow(f"b={b} outside [1, n={code.n}]")
    hist = weight_histograms(code, bs, guard=guard, workers=workers)

    formula: list[int | None] = []
    observed: list[object] = []
    mismatches: list[int] = []
    for b in bs:
        predicted = closed_form_weight(family, params, b)
        counts = hist[b]
        nonzero = {w: c for w, c in enumerate(counts) if w > 0 and c}
        if len(nonzero) == 1:
            (value,) = nonzero
            seen: object = value
        else:
            seen = nonzero
        formula.append(predicted)
        observed.append(seen)
        if predicted is not None and nonzero != {predicted: params.q - 1}:
            mismatches.append(b)
    return TheoremReport(
        params={"family": family, "p": params.p, "m": params.m, "q": params.q, "n": code.n},
        formula=formula,
        brute_force=observed,
        labels=bs,
        mismatches=mismatches,
    )
