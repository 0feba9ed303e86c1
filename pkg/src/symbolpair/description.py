"""JSON code descriptions.

A description is an object such as::

    {"kind": "RS", "field": "GF(2^3; 1,0,1,1; g=0,1,0)", "n": 4, "k": 3,
     "points": "powers:4", "T": [0]}

``points`` is either a list of element strings ("c0,c1,...") or the
shorthand ``"powers:n"`` for (1, g, ..., g^(n-1)).  ``T`` optionally shortens
the constructed code; ``Shortened`` descriptions carry their ``parent``.
``Raw`` codes give a ``generator`` as rows of element
strings.  Simplex kinds need only the field.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .codes import (
    CodeKind,
    LinearCode,
    SIMPLEX_FAMILIES,
    powers_points,
    raw_code,
    rs_code,
    shorten,
)
from .errors import ParseError
from .field import FieldElement, FieldSpec, format_element, format_field, parse_element, parse_field

_SIMPLEX_KINDS = {
    CodeKind.CYCLIC_SIMPLEX.value: "cyclic",
    CodeKind.STANDARD_SIMPLEX.value: "standard",
    CodeKind.VARIATION_SIMPLEX.value: "variation",
}


def parse_points(field: FieldSpec, spec: str | list[str]) -> list[FieldElement]:
    if isinstance(spec, str):
        if spec.startswith("powers:"):
            try:
                n = int(spec.split(":", 1)[1])
            except ValueError as e:
                raise ParseError(f"bad points shorthand {spec!r}") from e
            return powers_points(field, n)
        spec = spec.split(";")
    return [parse_element(field, s) for s in spec]


def code_from_description(desc: dict[str, Any]) -> LinearCode:
    try:
        kind = desc["kind"]
        field = parse_field(desc["field"])
    except KeyError as e:
        raise ParseError(f"code description lacks {e}") from e
    if kind == CodeKind.RS.value:
        if "points" not in desc or "k" not in desc:
            raise ParseError("an RS description needs 'points' and 'k'")
        code = rs_code(field, parse_points(field, desc["points"]), int(desc["k"]))
    elif kind in _SIMPLEX_KINDS:
        code = SIMPLEX_FAMILIES[_SIMPLEX_KINDS[kind]](field)
    elif kind == CodeKind.SHORTENED.value:
        if "parent" not in desc or "T" not in desc:
            raise ParseError("a Shortened description needs 'parent' and 'T'")
        code = code_from_description(desc["parent"])
    elif kind == CodeKind.RAW.value:
        rows = desc.get("generator")
        if not rows:
            raise ParseError("a Raw description needs 'generator'")
        gen = [[parse_element(field, e).index for e in row] for row in rows]
        code = raw_code(field, gen, bool(desc.get("linear_over_prime", False)))
    else:
        raise ParseError(f"unknown code kind {kind!r}")
    shortened = kind == CodeKind.SHORTENED.value
    if not shortened:
        _check_size(desc, code)
    if desc.get("T"):
        code = shorten(code, [int(t) for t in desc["T"]])
    if shortened:
        _check_size(desc, code)
    return code


def _check_size(desc: dict[str, Any], code: LinearCode) -> None:
    # n and k describe the construction; for Shortened they describe the result
    if "n" in desc and int(desc["n"]) != code.n:
        raise ParseError(f"description says n={desc['n']} but the code has n={code.n}")
    if "k" in desc and int(desc["k"]) != code.k:
        raise ParseError(f"description says k={desc['k']} but the code has k={code.k}")


def load_code(path: str | Path) -> LinearCode:
    try:
        desc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ParseError(f"{path}: {e}") from e
    return code_from_description(desc)


def generator_strings(code: LinearCode) -> list[list[str]]:
    f = code.field
    return [[format_element(FieldElement(f, int(v))) for v in row] for row in code.generator]


def describe_code(code: LinearCode) -> dict[str, Any]:
    """Description of ``code`` including its generator matrix."""
    out: dict[str, Any] = {
        "kind": code.kind.value,
        "field": format_field(code.field),
        "n": code.n,
        "k": code.k,
    }
    if code.kind is CodeKind.RS:
        out["points"] = [format_element(FieldElement(code.field, a)) for a in code.meta["points"]]
    if code.kind is CodeKind.SHORTENED:
        out["T"] = list(code.meta["T"])
        out["parent"] = describe_code(code.meta["parent"])
    out["linear_over_prime"] = code.linear_over_prime
    out["generator"] = generator_strings(code)
    return out
