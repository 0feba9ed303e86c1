from __future__ import annotations

import json

import pytest

from symbolpair import code_from_description, describe_code, load_code
from symbolpair.codes import CodeKind
from symbolpair.errors import ParseError

GF8 = "GF(2^3; 1,0,1,1; g=0,1,0)"


def test_rs_description():
    code = code_from_description({"kind": "RS", "field": GF8, "n": 4, "k": 3, "points": "powers:4"})
    assert (code.n, code.k, code.kind) == (4, 3, CodeKind.RS)


def test_points_as_list():
    code = code_from_description({"kind": "RS", "field": GF8, "k": 2, "points": ["1,0,0", "0,1,0", "0,0,1"]})
    assert code.meta["points"] == (1, 2, 4)


def test_shortening_in_description():
    code = code_from_description({"kind": "RS", "field": GF8, "n": 5, "k": 3, "points": "powers:5", "T": [0]})
    assert (code.n, code.k, code.kind) == (4, 2, CodeKind.SHORTENED)


def test_roundtrip_through_describe(tmp_path):
    for desc in [
        {"kind": "RS", "field": GF8, "k": 2, "points": "powers:6", "T": [1]},
        {"kind": "CyclicSimplex", "field": "GF(3^2)"},
        {"kind": "VariationSimplex", "field": "GF(3^3; 1,-1,0,1)"},
        {"kind": "Raw", "field": "GF(5)", "generator": [["1", "2", "3"]]},
    ]:
        code = code_from_description(desc)
        path = tmp_path / "c.json"
        path.write_text(json.dumps(describe_code(code)))
        again = load_code(path)
        assert again.kind == code.kind
        assert (again.generator == code.generator).all()


@pytest.mark.parametrize(
    "desc",
    [
        {"field": GF8},
        {"kind": "RS", "field": GF8, "points": "powers:4"},
        {"kind": "RS", "field": GF8, "k": 2, "points": "powers:x"},
        {"kind": "RS", "field": GF8, "n": 5, "k": 2, "points": "powers:4"},
        {"kind": "Raw", "field": GF8},
        {"kind": "Shortened", "field": GF8},
        {"kind": "Mystery", "field": GF8},
    ],
)
def test_bad_descriptions(desc):
    with pytest.raises(ParseError):
        code_from_description(desc)


def test_load_code_rejects_bad_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_code(path)
