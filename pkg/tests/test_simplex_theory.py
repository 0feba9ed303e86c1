from __future__ import annotations

import pytest

from oracles import window_weight
from symbolpair import (
    SimplexParams,
    closed_form_weight,
    cyclic_simplex_b_weight,
    enumerate_codewords,
    make_field,
    standard_simplex_b_weight,
    variation_simplex_odd_b_weight_p3,
    variation_simplex_p_weight,
    variation_simplex_pair_weight,
    verify_simplex,
)
from symbolpair.codes import SIMPLEX_FAMILIES
from symbolpair.errors import BadDegree, BadWindow, FormulaUnavailable, WrongCharacteristic


def test_params():
    sp = SimplexParams(3, 3)
    assert (sp.q, sp.h) == (27, 13)
    with pytest.raises(WrongCharacteristic):
        SimplexParams(4, 1)
    with pytest.raises(BadDegree):
        SimplexParams(3, 0)


def test_cyclic_values():
    sp = SimplexParams(2, 3)
    assert [cyclic_simplex_b_weight(sp, b) for b in range(1, 8)] == [4, 6, 7, 7, 7, 7, 7]
    assert [cyclic_simplex_b_weight(SimplexParams(2, 2), b) for b in range(1, 4)] == [2, 3, 3]
    assert cyclic_simplex_b_weight(SimplexParams(3, 3), 2) == 24
    with pytest.raises(BadWindow):
        cyclic_simplex_b_weight(sp, 8)


def test_standard_values():
    assert standard_simplex_b_weight(SimplexParams(3, 3), 1) == 9
    assert standard_simplex_b_weight(SimplexParams(3, 3), 2) == 12
    assert standard_simplex_b_weight(SimplexParams(3, 3), 3) == 13
    with pytest.raises(BadWindow):
        standard_simplex_b_weight(SimplexParams(3, 2), 5)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_cyclic_is_p_minus_1_times_standard(p, m):
    sp = SimplexParams(p, m)
    for b in range(1, min(sp.q - 1, sp.h) + 1):
        assert cyclic_simplex_b_weight(sp, b) == (p - 1) * standard_simplex_b_weight(sp, b)


def test_variation_values():
    assert variation_simplex_pair_weight(SimplexParams(3, 3)) == 21
    assert variation_simplex_pair_weight(SimplexParams(5, 2)) == 21
    assert variation_simplex_pair_weight(SimplexParams(2, 3)) == cyclic_simplex_b_weight(SimplexParams(2, 3), 2)
    assert variation_simplex_odd_b_weight_p3(SimplexParams(3, 3), 1) == 24
    assert variation_simplex_odd_b_weight_p3(SimplexParams(3, 3), 3) == 26
    assert variation_simplex_p_weight(SimplexParams(3, 3)) == 24
    assert variation_simplex_p_weight(SimplexParams(5, 2)) == 24
    with pytest.raises(BadDegree):
        variation_simplex_pair_weight(SimplexParams(3, 1))
    with pytest.raises(WrongCharacteristic):
        variation_simplex_odd_b_weight_p3(SimplexParams(5, 2), 1)
    with pytest.raises(WrongCharacteristic):
        variation_simplex_p_weight(SimplexParams(2, 3))
    with pytest.raises(BadDegree):
        variation_simplex_p_weight(SimplexParams(5, 1))


def test_closed_form_dispatch():
    sp = SimplexParams(3, 3)
    assert closed_form_weight("variation", sp, 1) == 18
    assert closed_form_weight("variation", sp, 2) == 21
    assert closed_form_weight("variation", sp, 3) == 24
    assert closed_form_weight("variation", sp, 4) is None
    assert closed_form_weight("variation", SimplexParams(2, 4), 3) == 14
    with pytest.raises(FormulaUnavailable):
        closed_form_weight("other", sp, 2)


def _observed(field, family, b):
    code = SIMPLEX_FAMILIES[family](field)
    weights = {window_weight(cw.values, b) for cw in enumerate_codewords(code) if any(cw.values)}
    return weights


@pytest.mark.parametrize("family", ["cyclic", "standard", "variation"])
@pytest.mark.parametrize("p,m", [(2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_formulas_against_oracle(family, p, m):
    f = make_field(p, m)
    sp = SimplexParams(p, m)
    n = SIMPLEX_FAMILIES[family](f).n
    for b in range(1, min(n, sp.q - 1) + 1):
        predicted = closed_form_weight(family, sp, b)
        if predicted is not None:
            assert _observed(f, family, b) == {predicted}


def test_verify_simplex_report():
    rep = verify_simplex(make_field(2, 3, [1, 0, 1, 1]), "cyclic", range(1, 8))
    assert rep.ok
    assert rep.formula == rep.brute_force == [4, 6, 7, 7, 7, 7, 7]
    assert rep.params["family"] == "cyclic"


def test_verify_simplex_reports_unknown_cases():
    rep = verify_simplex(make_field(3, 3, [1, 2, 0, 1]), "variation", [2, 4])
    assert rep.ok
    assert rep.formula[0] == 21 and rep.formula[1] is None
    assert rep.brute_force[0] == 21


def test_verify_simplex_rejects_bad_window(gf8):
    with pytest.raises(BadWindow):
        verify_simplex(gf8, "cyclic", [8])
