"""Side-by-side formula vs. brute-force reports."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


def _jsonable(v: Any) -> Any:
    # counts can exceed 64 bits, so every integer goes out as a decimal string
    if isinstance(v, bool) or v is None:
        return v
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class TheoremReport:
    """Per-index comparison of closed-form values with enumerated ones.

    ``formula[i]`` may be None where no closed form applies; such entries are
    reported but never counted as mismatches.
    """

    params: dict[str, Any]
    formula: list[Any]
    brute_force: list[Any]
    labels: list[int]
    mismatches: list[int] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "MISMATCH" if self.mismatches else "MATCH"

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict[str, Any]:
        out = {
            "params": dict(self.params),
            "labels": list(self.labels),
            "formula": _jsonable(self.formula),
            "brute_force": _jsonable(self.brute_force),
            "mismatches": list(self.mismatches),
            "verdict": self.verdict,
        }
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_dict(), indent=indent)
