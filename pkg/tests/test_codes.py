from __future__ import annotations

import itertools

import numpy as np
import pytest

from oracles import ref_trace
from symbolpair import (
    CodeKind,
    cyclic_simplex,
    enumerate_codewords,
    make_field,
    powers_points,
    raw_code,
    rs_code,
    shorten,
    simplex_codeword,
    standard_simplex,
    variation_simplex,
)
from symbolpair.codes import mds_params, message_digits, partition_ranges, variation_exponents
from symbolpair.errors import (
    BadDimension,
    CodeError,
    DuplicatePoints,
    EnumerationTooLarge,
    ShortenTooLarge,
)

# reference codewords for alpha = g, with -1 written as 2
REFERENCE_GF8_CG = (1, 1, 0, 1, 0, 0, 1)
REFERENCE_GF27_CG = (0, 2, 0, 2, 1, 2, 2, 1, 0, 2, 2, 2, 0, 0, 1, 0, 1, 2, 1, 1, 2, 0, 1, 1, 1, 0)
REFERENCE_GF27_CG_VARIATION = (0, 0, 2, 1, 0, 0, 2, 1, 1, 2, 2, 1, 2, 1, 1, 2, 0, 0, 2, 1, 2, 1, 2, 1, 0, 0)


def test_powers_points(gf8):
    pts = powers_points(gf8, 4)
    assert [a.index for a in pts] == [gf8.exp_idx(i) for i in range(4)]
    assert pts[0] == gf8.one and pts[1] == gf8.g


def test_rs_generator_is_vandermonde(gf8):
    pts = powers_points(gf8, 4)
    code = rs_code(gf8, pts, 3)
    assert (code.n, code.k, code.kind) == (4, 3, CodeKind.RS)
    for i in range(3):
        assert [int(v) for v in code.generator[i]] == [(a**i).index for a in pts]
    assert mds_params(code) == (4, 3, 8)


def test_rs_validation(gf8):
    pts = powers_points(gf8, 4)
    with pytest.raises(DuplicatePoints):
        rs_code(gf8, [pts[0], pts[0]], 1)
    with pytest.raises(BadDimension):
        rs_code(gf8, pts, 5)
    with pytest.raises(BadDimension):
        rs_code(gf8, pts, 0)
    with pytest.raises(BadDimension):
        rs_code(gf8, gf8.elements(), 2)
    assert rs_code(gf8, gf8.elements(), 2, allow_full_length=True).n == 8


def test_generator_is_read_only(gf8):
    code = rs_code(gf8, powers_points(gf8, 4), 2)
    with pytest.raises(ValueError):
        code.generator[0, 0] = 3


def test_rank_deficient_generator_rejected(gf8):
    with pytest.raises(CodeError):
        raw_code(gf8, [[1, 2, 3], [2, 4, 6]])


def test_encode_is_linear(gf27):
    code = rs_code(gf27, powers_points(gf27, 5), 3)
    u = code.encode([1, 5, 7])
    v = code.encode([2, 0, 11])
    w = code.encode([gf27.add_idx(a, b) for a, b in zip([1, 5, 7], [2, 0, 11])])
    assert u + v == w
    assert (u - u).values == (0,) * 5


def test_cyclic_simplex_reference_word_gf8(gf8):
    code = cyclic_simplex(gf8)
    assert (code.n, code.k) == (7, 3)
    assert simplex_codeword(code, gf8.g).values == REFERENCE_GF8_CG


def test_simplex_reference_words_gf27(gf27):
    assert simplex_codeword(cyclic_simplex(gf27), gf27.g).values == REFERENCE_GF27_CG
    assert simplex_codeword(variation_simplex(gf27), gf27.g).values == REFERENCE_GF27_CG_VARIATION


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (3, 3), (5, 2)])
def test_simplex_entries_are_traces(p, m):
    f = make_field(p, m)
    code = cyclic_simplex(f)
    for alpha in f.elements():
        expected = tuple(ref_trace(f.mul_idx(f.exp_idx(i), alpha.index), p, m, f.modulus) for i in range(f.q - 1))
        assert simplex_codeword(code, alpha).values == expected


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_simplex_family_shapes(p, m):
    f = make_field(p, m)
    q, h = p**m, (p**m - 1) // (p - 1)
    cyc, std, var = cyclic_simplex(f), standard_simplex(f), variation_simplex(f)
    assert (cyc.n, std.n, var.n) == (q - 1, h, q - 1)
    assert cyc.k == std.k == var.k == m
    assert cyc.size == q
    # variation is a coordinate permutation of cyclic, block by block
    exps = variation_exponents(f)
    assert sorted(exps) == list(range(q - 1))
    for alpha in f.elements():
        c, v = simplex_codeword(cyc, alpha).values, simplex_codeword(var, alpha).values
        assert v == tuple(c[e] for e in exps)
        assert simplex_codeword(std, alpha).values == c[:h]


def test_p2_variation_equals_cyclic(gf8):
    assert np.array_equal(variation_simplex(gf8).generator, cyclic_simplex(gf8).generator)
    assert np.array_equal(standard_simplex(gf8).generator, cyclic_simplex(gf8).generator)


def _words(code):
    return {cw.values for cw in enumerate_codewords(code)}


def test_shorten_keeps_zero_coordinates(gf27):
    parent = rs_code(gf27, powers_points(gf27, 5), 4)
    child = shorten(parent, [0, 3])
    assert (child.n, child.k) == (3, 2)
    assert child.kind is CodeKind.SHORTENED
    expected = {tuple(v for j, v in enumerate(c) if j not in (0, 3)) for c in _words(parent) if c[0] == 0 and c[3] == 0}
    assert _words(child) == expected


def test_shorten_composes(gf9):
    parent = rs_code(gf9, powers_points(gf9, 6), 4)
    once = shorten(parent, [1, 4])
    twice = shorten(shorten(parent, [1]), [3])  # coordinate 4 is 3 after deleting 1
    assert _words(once) == _words(twice)


def test_shorten_validation(gf8):
    code = rs_code(gf8, powers_points(gf8, 5), 3)
    with pytest.raises(ShortenTooLarge):
        shorten(code, [0, 1, 2])
    with pytest.raises(CodeError):
        shorten(code, [7])
    assert shorten(code, []) is code


def test_enumeration_order_and_partitions(gf8):
    code = rs_code(gf8, powers_points(gf8, 4), 2)
    words = list(enumerate_codewords(code))
    assert len(words) == 64 and len(set(words)) == 64
    assert words == [code.encode(m) for m in itertools.product(range(8), repeat=2)]
    for parts in (1, 3, 7):
        joined = [w for i in range(parts) for w in enumerate_codewords(code, part=(i, parts))]
        assert joined == words


def test_enumeration_guard(gf8):
    code = rs_code(gf8, powers_points(gf8, 4), 3)
    with pytest.raises(EnumerationTooLarge):
        next(enumerate_codewords(code, guard=511))
    assert sum(1 for _ in enumerate_codewords(code, guard=512)) == 512


def test_partition_ranges():
    assert partition_ranges(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert partition_ranges(2, 4) == [(0, 1), (1, 2), (2, 2), (2, 2)]
    with pytest.raises(ValueError):
        partition_ranges(5, 0)


def test_message_digits():
    assert message_digits(0, 8, 3) == (0, 0, 0)
    assert message_digits(8 * 8 * 3 + 5, 8, 3) == (3, 0, 5)
