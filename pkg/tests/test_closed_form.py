from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_distribution, textbook_mds_weights
from symbolpair import (
    MdsParams,
    binom,
    make_field,
    mds_hamming_distribution,
    mds_pair_distribution,
    pair_polynomial_in_q,
    powers_points,
    raw_code,
    rs_code,
    shorten,
    singleton_pair_check,
    verify_pair_distribution,
)
from symbolpair.errors import BadDimension, NotMds

PRIME_POWERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]


def test_binom_vanishes_outside_range():
    assert binom(5, 2) == 10
    assert binom(5, 0) == 1
    assert binom(2, 5) == 0
    assert binom(-1, 0) == 0
    assert binom(4, -1) == 0


def test_params():
    assert MdsParams(4, 3, 8).d == 2
    with pytest.raises(BadDimension):
        MdsParams(3, 4, 8)
    with pytest.raises(BadDimension):
        MdsParams(3, 0, 8)


@pytest.mark.parametrize(
    "n,k,q,expected",
    [
        (4, 3, 8, [1, 0, 0, 28, 483]),
        (5, 4, 27, [1, 0, 0, 130, 3380, 527930]),
    ],
)
def test_reference_pair_distributions(n, k, q, expected):
    assert mds_pair_distribution(MdsParams(n, k, q)) == expected


def test_hamming_matches_textbook_form():
    for q in PRIME_POWERS:
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert mds_hamming_distribution(MdsParams(n, k, q)) == textbook_mds_weights(n, k, q)


def test_dimension_one_is_constant_pair_weight():
    # every nonzero word of an [n,1,n] code has full support
    for q in (2, 3, 8, 27):
        for n in range(1, 8):
            assert mds_pair_distribution(MdsParams(n, 1, q)) == [1] + [0] * (n - 1) + [q - 1]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(PRIME_POWERS), st.integers(1, 14), st.data())
def test_pair_distribution_normalised(q, n, data):
    k = data.draw(st.integers(1, n))
    B = mds_pair_distribution(MdsParams(n, k, q))
    assert len(B) == n + 1
    assert sum(B) == q**k
    assert B[0] == 1
    # nothing of pair weight below d+1 except the zero word (and w = n when d = n)
    d = n - k + 1
    assert all(B[w] == 0 for w in range(1, min(d + 1, n)))


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([q for q in PRIME_POWERS if q >= 5]), st.integers(2, 10), st.data())
def test_nonnegative_when_code_exists(q, n, data):
    if n > q + 1:
        n = q + 1
    k = data.draw(st.integers(1, n))
    assert min(mds_pair_distribution(MdsParams(n, k, q))) >= 0
    assert min(mds_hamming_distribution(MdsParams(n, k, q))) >= 0


def test_polynomials_in_q():
    qs = [5, 7, 8, 9, 11, 13]
    assert pair_polynomial_in_q(4, 3, 4, qs) == [3, -4, 0, 1]
    assert pair_polynomial_in_q(4, 3, 3, qs) == [-4, 4]
    assert pair_polynomial_in_q(5, 4, 3, qs) == [-5, 5]
    assert pair_polynomial_in_q(5, 4, 4, qs) == [5, -10, 5]
    assert pair_polynomial_in_q(5, 4, 5, qs) == [-1, 5, -5, 0, 1]


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9])
def test_formula_matches_oracle_small(q):
    f = make_field(*{4: (2, 2), 5: (5, 1), 7: (7, 1), 8: (2, 3), 9: (3, 2)}[q])
    for n in range(2, q):
        for k in range(1, n + 1):
            if q**k > 5000:
                continue
            code = rs_code(f, powers_points(f, n), k)
            assert brute_distribution(code, 2) == mds_pair_distribution(MdsParams(n, k, q))
            assert brute_distribution(code, 1) == mds_hamming_distribution(MdsParams(n, k, q))


def test_verify_pair_distribution_match(gf8):
    report = verify_pair_distribution(rs_code(gf8, powers_points(gf8, 4), 3))
    assert report.ok and report.verdict == "MATCH"
    assert report.formula == report.brute_force == [1, 0, 0, 28, 483]
    assert report.params == {"n": 4, "k": 3, "q": 8, "d": 2, "b": 2}
    d = report.to_dict()
    assert d["formula"] == ["1", "0", "0", "28", "483"]
    assert d["mismatches"] == [] and d["verdict"] == "MATCH"


def test_verify_pair_distribution_on_shortened(gf27):
    code = shorten(rs_code(gf27, powers_points(gf27, 5), 4), [0, 2])
    report = verify_pair_distribution(code)
    assert report.ok
    assert (report.params["n"], report.params["k"]) == (3, 2)


def test_verify_pair_distribution_rejects_non_mds(gf8):
    # repetition of a coordinate drops the distance
    with pytest.raises(NotMds):
        verify_pair_distribution(raw_code(gf8, [[1, 1, 0, 0], [0, 0, 1, 2]]))


def test_singleton_pair_bound(gf8):
    rep = singleton_pair_check(rs_code(gf8, powers_points(gf8, 5), 3))
    assert rep.d2 == 4
    assert rep.holds and rep.mds_pair
    assert rep.bound == rep.size == 8**3


def test_singleton_pair_bound_dimension_one(gf8):
    # an [n,1] code has d2 = n, so |C| = q falls short of q^2
    rep = singleton_pair_check(rs_code(gf8, powers_points(gf8, 5), 1))
    assert rep.d2 == 5
    assert rep.holds and not rep.mds_pair
