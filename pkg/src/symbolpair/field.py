"""Exact arithmetic in GF(p^m).

Elements are polynomials over GF(p) reduced modulo a monic irreducible
polynomial of degree m.  Internally every element is also identified with
the integer ``c0 + c1*p + ... + c_{m-1}*p^(m-1)``; that integer index is what
the code and enumeration layers pass around.  Under this identification the
prime subfield GF(p) is exactly the indices ``0..p-1``.

Exponential and logarithm tables with respect to the designated primitive
element are built once when the field is constructed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    DlogOfZero,
    FieldError,
    FieldTooLarge,
    NotMonic,
    NotPrime,
    NotPrimitive,
    ParseError,
    ReducibleModulus,
)

MAX_FIELD_SIZE = 1 << 20


# ---------------------------------------------------------------------------
# Integer helpers
# ---------------------------------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, m)`` with ``q == p**m``; raise NotPrime otherwise."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    fs = prime_factors(q)
    if len(fs) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = fs[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# ---------------------------------------------------------------------------
# Polynomials over GF(p), little-endian coefficient lists
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    f = _trim(list(f))
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df and a:
        shift = len(a) - 1 - df
        c = (a[-1] * inv_lead) % p
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _poly_powmod(base: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        base = _poly_mod(_poly_mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or irreducibility test for a monic polynomial over GF(p)."""
    f = _trim([c % p for c in modulus])
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    h = [0, 1]
    for _ in range(m // 2):
        h = _poly_powmod(h, p, f, p)
        g = _poly_gcd(f, _poly_sub(h, [0, 1], p), p)
        if len(g) != 1:
            return False
    return True


def _monic_candidates(p: int, m: int) -> Iterable[list[int]]:
    # ordered by the integer index of the lower coefficients
    for idx in range(p**m):
        low = [(idx // p**i) % p for i in range(m)]
        yield low + [1]


# ---------------------------------------------------------------------------
# Field and elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """The field GF(p^m) with a fixed modulus and primitive element.

    ``modulus`` holds the m+1 little-endian coefficients of a monic
    irreducible polynomial; ``generator`` holds the m coefficients of the
    designated primitive element g.  Use :func:`make_field` to build one
    with automatic choices.
    """

    p: int
    m: int
    modulus: tuple[int, ...]
    generator: tuple[int, ...]
    _exp: np.ndarray = dc_field(init=False, repr=False, compare=False)
    _log: np.ndarray = dc_field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        p, m = self.p, self.m
        if not is_prime(p):
            raise NotPrime(f"p={p} is not prime")
        if m < 1:
            raise FieldError(f"extension degree must be >= 1, got {m}")
        if p**m > MAX_FIELD_SIZE:
            raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported size {MAX_FIELD_SIZE}")
        mod = tuple(int(c) % p for c in self.modulus)
        if len(mod) != m + 1:
            raise FieldError(f"modulus must have {m + 1} coefficients, got {len(mod)}")
        if mod[-1] != 1:
            raise NotMonic(f"modulus {list(mod)} is not monic")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(mod)} is reducible over GF({p})")
        gen = tuple(int(c) % p for c in self.generator)
        if len(gen) != m:
            raise FieldError(f"generator must have {m} coefficients, got {len(gen)}")
        object.__setattr__(self, "modulus", mod)
        object.__setattr__(self, "generator", gen)

        q = p**m
        g = _encode(gen, p)
        exp = np.zeros(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for i in range(q - 1):
            if log[x] != -1:
                raise NotPrimitive(f"g={list(gen)} has order {i}, not {q - 1}")
            exp[i] = x
            log[x] = i
            x = _mul_slow(x, g, p, m, mod)
        if x != 1:
            raise NotPrimitive(f"g={list(gen)} is not primitive")
        exp.flags.writeable = False
        log.flags.writeable = False
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)

    # -- basic data ---------------------------------------------------------
    @property
    def q(self) -> int:
        return self.p**self.m

    @property
    def g(self) -> FieldElement:
        return self.element(self.generator)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def __str__(self) -> str:
        return format_field(self)

    # -- conversions --------------------------------------------------------
    def element(self, value: int | Sequence[int] | FieldElement) -> FieldElement:
        """Build an element from an index, a coefficient vector or an element.

        Coefficient vectors may be shorter than m and may contain negative
        integers; both are normalised.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if not 0 <= v < self.q:
                raise FieldError(f"element index {v} out of range for GF({self.q})")
            return FieldElement(self, v)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            if any(coeffs[self.m:]):
                raise FieldError(f"too many coefficients for GF({self.p}^{self.m}): {list(value)}")
            coeffs = coeffs[: self.m]
        return FieldElement(self, _encode(coeffs, self.p))

    def coeffs(self, index: int) -> tuple[int, ...]:
        return tuple((index // self.p**i) % self.p for i in range(self.m))

    def elements(self) -> list[FieldElement]:
        return [FieldElement(self, i) for i in range(self.q)]

    # -- index-level arithmetic (used by the code layer) --------------------
    def add_idx(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, scale = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * scale
            a //= p
            b //= p
            scale *= p
        return out

    def neg_idx(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, scale = 0, 1
        while a:
            out += ((-a) % p) * scale
            a //= p
            scale *= p
        return out

    def sub_idx(self, a: int, b: int) -> int:
        return self.add_idx(a, self.neg_idx(b))

    def mul_idx(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])

    def inv_idx(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return int(self._exp[(-self._log[a]) % (self.q - 1)])

    def pow_idx(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return int(self._exp[(int(self._log[a]) * e) % (self.q - 1)])

    def exp_idx(self, i: int) -> int:
        """Index of g**i."""
        return int(self._exp[i % (self.q - 1)])

    def log_idx(self, a: int) -> int:
        if a == 0:
            raise DlogOfZero("discrete log of zero")
        return int(self._log[a])

    # -- tables for vectorised consumers ------------------------------------
    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, indexed by element index.

        Built from the traces of the basis monomials by GF(p)-linearity.
        """
        p, m, q = self.p, self.m, self.q
        basis = np.array([trace(self.element([0] * i + [1])) for i in range(m)], dtype=np.int64)
        idx = np.arange(q, dtype=np.int64)
        digits = np.stack([(idx // p**i) % p for i in range(m)], axis=1)
        table = (digits @ basis) % p
        table.flags.writeable = False
        return table

    @cached_property
    def add_table(self) -> np.ndarray:
        q, p, m = self.q, self.p, self.m
        idx = np.arange(q, dtype=np.int64)
        if p == 2:
            table = idx[:, None] ^ idx[None, :]
        else:
            table = np.zeros((q, q), dtype=np.int64)
            for i in range(m):
                da = (idx // p**i) % p
                table += ((da[:, None] + da[None, :]) % p) * p**i
        table.flags.writeable = False
        return table

    @cached_property
    def mul_table(self) -> np.ndarray:
        q = self.q
        log = self._log
        table = np.zeros((q, q), dtype=np.int64)
        nz = np.arange(1, q)
        s = (log[nz][:, None] + log[nz][None, :]) % (q - 1)
        table[1:, 1:] = self._exp[s]
        table.flags.writeable = False
        return table


def _encode(coeffs: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _mul_slow(a: int, b: int, p: int, m: int, modulus: Sequence[int]) -> int:
    """Multiply two element indices by polynomial arithmetic (no tables)."""
    if p == 2:
        poly = _encode(modulus, 2)
        out = 0
        while b:
            if b & 1:
                out ^= a
            b >>= 1
            a <<= 1
            if a >> m & 1:
                a ^= poly
        return out
    ca = [(a // p**i) % p for i in range(m)]
    cb = [(b // p**i) % p for i in range(m)]
    r = _poly_mod(_poly_mul(ca, cb, p), modulus, p)
    return _encode(r, p)


@dataclass(frozen=True)
class FieldElement:
    """An element of a :class:`FieldSpec`, stored by integer index."""

    field: FieldSpec = dc_field(repr=False)
    index: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def __int__(self) -> int:
        return self.index

    def __index__(self) -> int:
        return self.index

    def __bool__(self) -> bool:
        return self.index != 0

    def __repr__(self) -> str:
        return f"FieldElement({format_element(self)})"

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("operands belong to different fields")
            return other.index
        if isinstance(other, int):
            # integers act through the prime subfield
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.add_idx(self.index, o))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_idx(self.index))

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.sub_idx(self.index, o))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul_idx(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.field, self.field.mul_idx(self.index, self.field.inv_idx(o)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow_idx(self.index, e))


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def make_field(
    p: int,
    m: int = 1,
    modulus: Sequence[int] | None = None,
    g: Sequence[int] | None = None,
) -> FieldSpec:
    """Construct GF(p^m).

    With ``modulus=None`` the smallest monic irreducible polynomial is used,
    and with ``g=None`` the smallest primitive element.  "Smallest" means
    smallest integer index, i.e. coefficient vectors compared from the
    highest degree down.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree must be >= 1, got {m}")
    if p**m > MAX_FIELD_SIZE:
        raise FieldTooLarge(f"GF({p}^{m}) exceeds the supported size {MAX_FIELD_SIZE}")
    if modulus is None:
        modulus = next(f for f in _monic_candidates(p, m) if is_irreducible(f, p))
    else:
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != m + 1:
            raise FieldError(f"modulus must have degree {m}, got {len(modulus)} coefficients")
        if modulus[-1] != 1:
            raise NotMonic(f"modulus {modulus} is not monic")
        if not is_irreducible(modulus, p):
            raise ReducibleModulus(f"modulus {modulus} is reducible over GF({p})")
    if g is None:
        g = _smallest_primitive(p, m, modulus)
    return FieldSpec(p, m, tuple(modulus), tuple(int(c) % p for c in g))


def _smallest_primitive(p: int, m: int, modulus: Sequence[int]) -> list[int]:
    q = p**m
    if q == 2:
        return [1]
    exps = [(q - 1) // r for r in prime_factors(q - 1)]
    for cand in range(1, q):
        c = [(cand // p**i) % p for i in range(m)]
        if all(_poly_powmod(c, e, modulus, p) != [1] for e in exps):
            return c
    raise FieldError("no primitive element found")  # unreachable for a field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return FieldElement(a.field, a.field.inv_idx(a.index))


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def trace(a: FieldElement) -> int:
    """Absolute trace a + a^p + ... + a^(p^(m-1)), returned as an integer in [0, p)."""
    f = a.field
    acc = 0
    x = a.index
    for _ in range(f.m):
        acc = f.add_idx(acc, x)
        x = f.pow_idx(x, f.p)
    if acc >= f.p:
        raise FieldError(f"trace of {a!r} escaped the prime subfield")  # broken modulus
    return acc


def dlog(a: FieldElement) -> int:
    """The exponent i in [0, q-1) with g**i == a."""
    return a.field.log_idx(a.index)


# ---------------------------------------------------------------------------
# String formats
# ---------------------------------------------------------------------------

def format_element(a: FieldElement) -> str:
    return ",".join(str(c) for c in a.coeffs)


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    try:
        coeffs = [int(t) for t in text.split(",")]
    except ValueError as e:
        raise ParseError(f"bad element {text!r}") from e
    if len(coeffs) > field.m:
        raise ParseError(f"element {text!r} has more than {field.m} coefficients")
    return field.element(coeffs + [0] * (field.m - len(coeffs)))


def format_field(field: FieldSpec) -> str:
    mod = ",".join(str(c) for c in field.modulus)
    g = ",".join(str(c) for c in field.generator)
    return f"GF({field.p}^{field.m}; {mod}; g={g})"


_FIELD_RE = re.compile(
    r"^\s*GF\(\s*(\d+)\s*(?:\^\s*(\d+)\s*)?(?:;\s*([-\d,\s]+?)\s*)?(?:;\s*g\s*=\s*([-\d,\s]+?)\s*)?\)\s*$"
)


def parse_field(text: str) -> FieldSpec:
    """Parse ``GF(p^m; c0,...,cm; g=e0,...,e{m-1})``; modulus and g are optional.

    ``GF(q)`` with a prime power q is accepted as well.
    """
    mt = _FIELD_RE.match(text)
    if not mt:
        raise ParseError(f"bad field string {text!r}")
    if mt.group(2) is None:
        p, m = prime_power(int(mt.group(1)))
    else:
        p, m = int(mt.group(1)), int(mt.group(2))
    modulus = parse_int_list(mt.group(3)) if mt.group(3) else None
    g = parse_int_list(mt.group(4)) if mt.group(4) else None
    return make_field(p, m, modulus, g)


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError as e:
        raise ParseError(f"bad integer list {text!r}") from e
