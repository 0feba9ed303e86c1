"""Linear code constructions and codeword enumeration.

A :class:`LinearCode` stores its generator as a ``k x n`` integer array of
field-element indices.  Reed-Solomon and shortened codes are linear over the
full field GF(q); the simplex family consists of trace images and is only
linear over the prime subfield GF(p), which ``linear_over_prime`` records.
Messages are vectors over the linearity field, so the message space has
``scalars ** k`` elements where ``scalars`` is q or p.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Any, Iterator, Sequence

import numpy as np

from .errors import BadDimension, CodeError, DuplicatePoints, EnumerationTooLarge, ShortenTooLarge
from .field import FieldElement, FieldSpec

DEFAULT_GUARD = 1 << 24


class CodeKind(str, Enum):
    RS = "RS"
    CYCLIC_SIMPLEX = "CyclicSimplex"
    STANDARD_SIMPLEX = "StandardSimplex"
    VARIATION_SIMPLEX = "VariationSimplex"
    SHORTENED = "Shortened"
    RAW = "Raw"


@dataclass(frozen=True, eq=False)
class Codeword:
    """A length-n vector over the field, stored as element indices."""

    field: FieldSpec = dc_field(repr=False)
    values: tuple[int, ...]

    @property
    def entries(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __eq__(self, other) -> bool:
        if isinstance(other, Codeword):
            return self.field == other.field and self.values == other.values
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.values)

    def __add__(self, other: Codeword) -> Codeword:
        f = self.field
        return Codeword(f, tuple(f.add_idx(a, b) for a, b in zip(self.values, other.values, strict=True)))

    def __sub__(self, other: Codeword) -> Codeword:
        f = self.field
        return Codeword(f, tuple(f.sub_idx(a, b) for a, b in zip(self.values, other.values, strict=True)))

    def scale(self, c: int) -> Codeword:
        f = self.field
        return Codeword(f, tuple(f.mul_idx(c, v) for v in self.values))


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldSpec
    generator: np.ndarray
    kind: CodeKind = CodeKind.RAW
    linear_over_prime: bool = False
    meta: dict[str, Any] = dc_field(default_factory=dict)

    def __post_init__(self) -> None:
        gen = np.array(self.generator, dtype=np.int64, copy=True)
        if gen.ndim != 2:
            raise BadDimension("generator must be a 2-d matrix")
        if gen.size and (gen.min() < 0 or gen.max() >= self.field.q):
            raise CodeError("generator entries must be element indices in [0, q)")
        if self.linear_over_prime and gen.size and gen.max() >= self.field.p:
            raise CodeError("a GF(p)-linear generator must have prime-subfield entries")
        if gen.shape[0] < 1:
            raise BadDimension("a code needs dimension k >= 1")
        if _rank(self.field, gen) != gen.shape[0]:
            raise BadDimension("generator rows are linearly dependent")
        gen.flags.writeable = False
        object.__setattr__(self, "generator", gen)

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    @property
    def scalars(self) -> int:
        """Size of the field the code is linear over."""
        return self.field.p if self.linear_over_prime else self.field.q

    @property
    def alphabet_size(self) -> int:
        """Size of the smallest alphabet all codewords live in."""
        return self.field.p if self.linear_over_prime else self.field.q

    @property
    def size(self) -> int:
        return self.scalars**self.k

    def encode(self, message: Sequence[int]) -> Codeword:
        """Codeword sum(message[i] * row_i); message entries are scalar indices."""
        if len(message) != self.k:
            raise BadDimension(f"message length {len(message)} != k={self.k}")
        f = self.field
        acc = [0] * self.n
        for c, row in zip(message, self.generator):
            c = int(c)
            if not 0 <= c < self.scalars:
                raise CodeError(f"message symbol {c} outside the scalar field")
            if c:
                acc = [f.add_idx(a, f.mul_idx(c, int(r))) for a, r in zip(acc, row)]
        return Codeword(f, tuple(acc))

    def rows(self) -> list[Codeword]:
        return [Codeword(self.field, tuple(int(v) for v in row)) for row in self.generator]

    def __repr__(self) -> str:
        return f"LinearCode(kind={self.kind.value}, n={self.n}, k={self.k}, q={self.field.q})"


# ---------------------------------------------------------------------------
# Linear algebra over the field (index matrices)
# ---------------------------------------------------------------------------

def _rref(field: FieldSpec, mat) -> tuple[list[list[int]], list[int]]:
    rows = [[int(v) for v in r] for r in mat]
    pivots: list[int] = []
    if not rows:
        return rows, pivots
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv_idx(rows[r][col])
        rows[r] = [field.mul_idx(inv, v) for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = rows[i][col]
                rows[i] = [field.sub_idx(a, field.mul_idx(c, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _rank(field: FieldSpec, mat) -> int:
    return len(_rref(field, mat)[1])


def _left_null_space(field: FieldSpec, mat: np.ndarray) -> list[list[int]]:
    """Basis of {u : u @ mat == 0} for a k x t matrix."""
    k, t = mat.shape
    if t == 0:
        return [[1 if i == j else 0 for j in range(k)] for i in range(k)]
    red, pivots = _rref(field, mat.T)
    free = [c for c in range(k) if c not in pivots]
    basis = []
    for fcol in free:
        u = [0] * k
        u[fcol] = 1
        for row, pc in zip(red, pivots):
            u[pc] = field.neg_idx(row[fcol])
        basis.append(u)
    return basis


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def powers_points(field: FieldSpec, n: int) -> list[FieldElement]:
    """(1, g, g^2, ..., g^(n-1))."""
    return [FieldElement(field, field.exp_idx(i)) for i in range(n)]


def rs_code(
    field: FieldSpec,
    points: Sequence[FieldElement | int],
    k: int,
    allow_full_length: bool = False,
) -> LinearCode:
    """Reed-Solomon code: evaluations of polynomials of degree < k at ``points``.

    Row i of the generator is (a_1^i, ..., a_n^i).  Lengths up to q-1 are
    accepted; ``allow_full_length`` also admits n == q.
    """
    pts = [field.element(a).index for a in points]
    n = len(pts)
    if len(set(pts)) != n:
        raise DuplicatePoints("evaluation points must be pairwise distinct")
    limit = field.q if allow_full_length else field.q - 1
    if n < 1 or n > limit:
        raise BadDimension(f"RS length n={n} must satisfy 1 <= n <= {limit}")
    if not 1 <= k <= n:
        raise BadDimension(f"RS dimension k={k} must satisfy 1 <= k <= n={n}")
    gen = np.array([[field.pow_idx(a, i) for a in pts] for i in range(k)], dtype=np.int64)
    return LinearCode(field, gen, CodeKind.RS, meta={"points": tuple(pts)})


def _simplex_row(field: FieldSpec, exponents: Sequence[int], alpha: int) -> list[int]:
    tr = field.trace_table
    return [int(tr[field.mul_idx(field.exp_idx(e), alpha)]) for e in exponents]


def _simplex_code(field: FieldSpec, exponents: Sequence[int], kind: CodeKind) -> LinearCode:
    p, m = field.p, field.m
    # message (a_0, ..., a_{m-1}) encodes alpha = a_0 + a_1 x + ... ; rows are alpha = x^i
    gen = np.array([_simplex_row(field, exponents, p**i) for i in range(m)], dtype=np.int64)
    return LinearCode(field, gen, kind, linear_over_prime=True, meta={"exponents": tuple(exponents)})


def cyclic_simplex(field: FieldSpec) -> LinearCode:
    """Codewords c_alpha = (Tr(alpha), Tr(g alpha), ..., Tr(g^(q-2) alpha))."""
    return _simplex_code(field, range(field.q - 1), CodeKind.CYCLIC_SIMPLEX)


def standard_simplex(field: FieldSpec) -> LinearCode:
    """The first h = (q-1)/(p-1) coordinates of the cyclic simplex code."""
    h = (field.q - 1) // (field.p - 1)
    return _simplex_code(field, range(h), CodeKind.STANDARD_SIMPLEX)


def variation_exponents(field: FieldSpec) -> list[int]:
    """Exponent order i, i+h, ..., i+(p-2)h for blocks i = 0..h-1."""
    p = field.p
    h = (field.q - 1) // (p - 1)
    return [i + j * h for i in range(h) for j in range(p - 1)]


def variation_simplex(field: FieldSpec) -> LinearCode:
    return _simplex_code(field, variation_exponents(field), CodeKind.VARIATION_SIMPLEX)


SIMPLEX_FAMILIES = {
    "cyclic": cyclic_simplex,
    "standard": standard_simplex,
    "variation": variation_simplex,
}


def simplex_codeword(code: LinearCode, alpha: FieldElement) -> Codeword:
    """The codeword of a simplex-family code indexed by the field element alpha."""
    if not code.linear_over_prime:
        raise CodeError("simplex_codeword needs a simplex-family code")
    return code.encode(alpha.coeffs)


def shorten(code: LinearCode, T: Sequence[int]) -> LinearCode:
    """The code shortened on coordinate set ``T``.

    Keeps the codewords that vanish on T and deletes those coordinates.  The
    new generator is computed by elimination, so its row count is the true
    dimension of the shortened code.
    """
    T = sorted(set(int(t) for t in T))
    if any(not 0 <= t < code.n for t in T):
        raise CodeError(f"shortening set {T} outside [0, {code.n})")
    if len(T) >= code.k:
        raise ShortenTooLarge(f"|T|={len(T)} must be < k={code.k}")
    if not T:
        return code
    f = code.field
    G = code.generator
    keep = [j for j in range(code.n) if j not in T]
    basis = _left_null_space(f, G[:, T])
    rows = []
    for u in basis:
        acc = [0] * code.n
        for c, row in zip(u, G):
            if c:
                acc = [f.add_idx(a, f.mul_idx(c, int(r))) for a, r in zip(acc, row)]
        rows.append([acc[j] for j in keep])
    return LinearCode(
        f,
        np.array(rows, dtype=np.int64),
        CodeKind.SHORTENED,
        linear_over_prime=code.linear_over_prime,
        meta={"T": tuple(T), "parent": code},
    )


def raw_code(field: FieldSpec, generator, linear_over_prime: bool = False) -> LinearCode:
    return LinearCode(field, np.asarray(generator, dtype=np.int64), CodeKind.RAW, linear_over_prime)


def mds_params(code: LinearCode) -> tuple[int, int, int] | None:
    """(n, k, q) when the construction guarantees an MDS code, else None."""
    if code.kind is CodeKind.RS:
        return code.n, code.k, code.field.q
    if code.kind is CodeKind.SHORTENED:
        parent = code.meta["parent"]
        if mds_params(parent) is not None:
            return code.n, code.k, code.field.q
    return None


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def partition_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """Split [0, total) into ``parts`` contiguous, nearly equal ranges."""
    if parts < 1:
        raise ValueError("parts must be >= 1")
    base, extra = divmod(total, parts)
    out = []
    start = 0
    for i in range(parts):
        stop = start + base + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def check_guard(count: int, guard: int) -> None:
    if count > guard:
        raise EnumerationTooLarge(f"enumeration of {count} messages exceeds the guard {guard}")


def message_digits(index: int, base: int, k: int) -> tuple[int, ...]:
    """Message vector for a lexicographic index; digit 0 is most significant."""
    out = [0] * k
    for i in range(k - 1, -1, -1):
        index, out[i] = divmod(index, base)
    return tuple(out)


def enumerate_codewords(
    code: LinearCode,
    guard: int = DEFAULT_GUARD,
    part: tuple[int, int] | None = None,
) -> Iterator[Codeword]:
    """Yield every codeword once, in lexicographic message order.

    ``part=(i, W)`` restricts the stream to the i-th of W contiguous message
    ranges; concatenating the W streams reproduces the full stream.
    """
    total = code.size
    check_guard(total, guard)
    start, stop = 0, total
    if part is not None:
        i, w = part
        start, stop = partition_ranges(total, w)[i]
    f = code.field
    s = code.scalars
    if f.q <= 4096:
        add = f.add_table
        mul = f.mul_table
        scaled = [mul[:s, :][:, row] for row in code.generator]  # scaled[i][c] = c * row_i
        for msg in itertools.islice(itertools.product(range(s), repeat=code.k), start, stop):
            acc = np.zeros(code.n, dtype=np.int64)
            for i, c in enumerate(msg):
                if c:
                    acc = add[acc, scaled[i][c]]
            yield Codeword(f, tuple(int(v) for v in acc))
    else:
        for idx in range(start, stop):
            yield code.encode(message_digits(idx, s, code.k))
