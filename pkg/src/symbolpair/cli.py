"""Command-line front end.

    symbolpair field   --p 2 --m 3 --mod 1,0,1,1
    symbolpair dist    --rs --q 8 --mod 1,0,1,1 --points powers:4 --k 3 --b 2 --source both
    symbolpair simplex --p 2 --m 3 --family cyclic --b 1..7
    symbolpair sweep   --n 2..12 --k 1..n --q 2,3,4,5,7,8,9,16

Every command accepts ``--format json|table|csv``, ``--guard``, ``--workers``
and ``--out FILE``.  The exit status is 0 exactly when every requested
verification matched.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Callable, Sequence

from .closed_form import MdsParams, mds_hamming_distribution, mds_pair_distribution, verify_pair_distribution
from .codes import (
    DEFAULT_GUARD,
    SIMPLEX_FAMILIES,
    CodeKind,
    LinearCode,
    mds_params,
    rs_code,
    shorten,
)
from .description import describe_code, load_code, parse_points
from .errors import FormulaUnavailable, ParseError, SymbolPairError
from .field import FieldSpec, format_element, format_field, make_field, parse_field, parse_int_list, prime_power, trace
from .metrics import WeightDistribution, b_weight_distribution
from .report import TheoremReport
from .simplex_theory import SimplexParams, closed_form_weight, verify_simplex

log = logging.getLogger("symbolpair")

HARD_GUARD_CAP = 1 << 28
TRACE_TABLE_MAX_Q = 64

_FAMILY_OF_KIND = {
    CodeKind.CYCLIC_SIMPLEX: "cyclic",
    CodeKind.STANDARD_SIMPLEX: "standard",
    CodeKind.VARIATION_SIMPLEX: "variation",
}


# ---------------------------------------------------------------------------
# Argument helpers
# ---------------------------------------------------------------------------

def parse_range(text: str, n: int | None = None) -> list[int]:
    """Parse "a..b", "a,b,c" or "a"; the letter n stands for ``n`` if given."""
    out: list[int] = []

    def value(tok: str) -> int:
        tok = tok.strip()
        if tok == "n":
            if n is None:
                raise ParseError("'n' is only allowed in the --k range")
            return n
        try:
            return int(tok)
        except ValueError as e:
            raise ParseError(f"bad integer {tok!r} in range {text!r}") from e

    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(value(lo), value(hi) + 1))
        else:
            out.append(value(part))
    return out


def _guard(text: str) -> int:
    v = int(text)
    if not 1 <= v <= HARD_GUARD_CAP:
        raise argparse.ArgumentTypeError(f"guard must be in [1, {HARD_GUARD_CAP}]")
    return v


def _workers(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("workers must be >= 1")
    return v


def _field_from_args(args: argparse.Namespace) -> FieldSpec:
    if args.field:
        return parse_field(args.field)
    if args.q is not None:
        p, m = prime_power(args.q)
        if args.p is not None and args.p != p:
            raise ParseError(f"--p {args.p} disagrees with --q {args.q}")
    else:
        if args.p is None:
            raise ParseError("give --field, --q or --p/--m")
        p, m = args.p, args.m
    modulus = parse_int_list(args.mod) if args.mod else None
    g = parse_int_list(args.g) if args.g else None
    return make_field(p, m, modulus, g)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _table(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _csv(headers: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(headers)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def render_distribution(dist: WeightDistribution, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(dist.to_dict())
    rows = [(w, c, dist.source) for w, c in enumerate(dist.counts)]
    if fmt == "csv":
        return _csv(["w", "count", "source"], rows)
    head = f"b={dist.metric_b}  n={dist.n}  source={dist.source}  total={dist.total}"
    return head + "\n" + _table(["w", "count", "source"], rows)


def render_report(report: TheoremReport, fmt: str, label: str = "w") -> str:
    if fmt == "json":
        return report.to_json()

    def show(v: Any) -> str:
        if v is None:
            return "-"
        if isinstance(v, dict):
            return " ".join(f"{w}x{c}" for w, c in v.items())
        return str(v)

    if fmt == "csv":
        rows = []
        for x, f, b in zip(report.labels, report.formula, report.brute_force):
            rows.append((x, show(f), "formula"))
            rows.append((x, show(b), "brute_force"))
        return _csv([label, "count" if label == "w" else "weight", "source"], rows)
    params = "  ".join(f"{k}={v}" for k, v in report.params.items())
    rows = [
        (x, show(f), show(b), "MISMATCH" if x in report.mismatches else ("-" if f is None else "ok"))
        for x, f, b in zip(report.labels, report.formula, report.brute_force)
    ]
    out = [params, _table([label, "formula", "brute_force", "status"], rows), f"verdict: {report.verdict}"]
    out.extend(f"warning: {w}" for w in report.warnings)
    return "\n".join(out)


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def field_report(field: FieldSpec) -> dict[str, Any]:
    out: dict[str, Any] = {
        "field": format_field(field),
        "p": field.p,
        "m": field.m,
        "q": field.q,
        "modulus": list(field.modulus),
        "g": list(field.generator),
    }
    if field.q <= TRACE_TABLE_MAX_Q:
        out["trace_table"] = [
            {"exponent": i, "element": format_element(field.g**i), "trace": trace(field.g**i)}
            for i in range(field.q - 1)
        ]
    return out


def cmd_field(args: argparse.Namespace) -> int:
    field = _field_from_args(args)
    rep = field_report(field)
    if args.format == "json":
        text = json.dumps(rep)
    else:
        rows = [(r["exponent"], r["element"], r["trace"]) for r in rep.get("trace_table", [])]
        if args.format == "csv":
            text = _csv(["exponent", "element", "trace"], rows)
        else:
            head = "\n".join(f"{k}: {rep[k]}" for k in ("field", "p", "m", "q", "modulus", "g"))
            text = head + ("\n" + _table(["g^i", "element", "Tr"], rows) if rows else "")
    _emit(text, args)
    return 0


def formula_distribution(code: LinearCode, b: int) -> WeightDistribution:
    """Closed-form b-weight distribution, where one is known for ``code``."""
    params = mds_params(code)
    if params is not None:
        mp = MdsParams(*params)
        if b == 1:
            return WeightDistribution(1, code.n, "formula", tuple(mds_hamming_distribution(mp)))
        if b == 2:
            return WeightDistribution(2, code.n, "formula", tuple(mds_pair_distribution(mp)))
        raise FormulaUnavailable(f"no closed form for MDS codes with b={b}")
    family = _FAMILY_OF_KIND.get(code.kind)
    if family is not None:
        sp = SimplexParams.of(code.field)
        w = closed_form_weight(family, sp, b)
        if w is None:
            raise FormulaUnavailable(f"no closed form for the {family} simplex code with b={b}")
        counts = [0] * (code.n + 1)
        counts[0] = 1
        counts[w] += sp.q - 1
        return WeightDistribution(b, code.n, "formula", tuple(counts))
    raise FormulaUnavailable(f"no closed form for a {code.kind.value} code")


def _code_from_args(args: argparse.Namespace) -> LinearCode:
    if args.code:
        return load_code(args.code)
    field = _field_from_args(args)
    if args.simplex:
        code = SIMPLEX_FAMILIES[args.simplex](field)
    elif args.rs:
        if not args.points or args.k is None:
            raise ParseError("--rs needs --points and --k")
        code = rs_code(field, parse_points(field, args.points), args.k)
    else:
        raise ParseError("choose a code with --code, --rs or --simplex")
    if args.T:
        code = shorten(code, parse_int_list(args.T))
    return code


def cmd_dist(args: argparse.Namespace) -> int:
    code = _code_from_args(args)
    b = args.b
    log.info("code %r, b=%d, source=%s", code, b, args.source)
    if args.source == "formula":
        _emit(render_distribution(formula_distribution(code, b), args.format), args)
        return 0
    if args.source == "brute":
        dist = b_weight_distribution(code, b, guard=args.guard, workers=args.workers)
        _emit(render_distribution(dist, args.format), args)
        return 0
    if b == 2 and mds_params(code) is not None:
        report = verify_pair_distribution(code, guard=args.guard, workers=args.workers)
    else:
        formula = formula_distribution(code, b)
        brute = b_weight_distribution(code, b, guard=args.guard, workers=args.workers)
        report = TheoremReport(
            params={"kind": code.kind.value, "n": code.n, "k": code.k, "q": code.field.q, "b": b},
            formula=list(formula.counts),
            brute_force=list(brute.counts),
            labels=list(range(code.n + 1)),
            mismatches=[w for w in range(code.n + 1) if formula.counts[w] != brute.counts[w]],
        )
    _emit(render_report(report, args.format), args)
    return 0 if report.ok else 1


def cmd_simplex(args: argparse.Namespace) -> int:
    field = _field_from_args(args)
    report = verify_simplex(field, args.family, parse_range(args.b), guard=args.guard, workers=args.workers)
    _emit(render_report(report, args.format, label="b"), args)
    return 0 if report.ok else 1


def sweep(ns: Sequence[int], k_text: str, qs: Sequence[int]) -> dict[str, Any]:
    """Check normalisation and nonnegativity of the pair distribution on a grid."""
    results = []
    violations = []
    for q in qs:
        prime_power(q)
        for n in ns:
            for k in parse_range(k_text, n):
                if not 1 <= k <= n:
                    continue
                params = MdsParams(n, k, q)
                B = mds_pair_distribution(params)
                normalised = sum(B) == q**k
                nonnegative = min(B) >= 0
                ok = normalised and nonnegative
                results.append({"q": q, "n": n, "k": k, "B": [str(x) for x in B], "ok": ok})
                if not ok:
                    violations.append({
                        "q": q, "n": n, "k": k,
                        "normalised": normalised,
                        "nonnegative": nonnegative,
                        # a negative Hamming count means no MDS code has these parameters
                        "hamming_negative": min(mds_hamming_distribution(params)) < 0,
                    })
    return {
        "points": len(results),
        "violations": violations,
        "verdict": "PASS" if not violations else "FAIL",
        "results": results,
    }


def cmd_sweep(args: argparse.Namespace) -> int:
    ns = parse_range(args.n)
    qs = parse_range(args.q)
    summary = sweep(ns, args.k, qs)
    if args.format == "json":
        text = json.dumps(summary)
    else:
        rows = [(r["q"], r["n"], r["k"], " ".join(r["B"]), "ok" if r["ok"] else "FAIL") for r in summary["results"]]
        if args.format == "csv":
            text = _csv(["q", "n", "k", "B", "status"], rows)
        else:
            text = _table(["q", "n", "k", "B_0..B_n", "status"], rows) if rows else "(empty grid)"
            text += f"\n{summary['points']} points, verdict: {summary['verdict']}"
    _emit(text, args)
    return 0 if not summary["violations"] else 1


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table", "csv"), default="table")
    common.add_argument("--guard", type=_guard, default=DEFAULT_GUARD,
                        help=f"max messages to enumerate (<= {HARD_GUARD_CAP})")
    common.add_argument("--workers", type=_workers, default=1)
    common.add_argument("--out", metavar="FILE")
    common.add_argument("-v", "--verbose", action="store_true")

    fieldopts = argparse.ArgumentParser(add_help=False)
    fieldopts.add_argument("--field", help='e.g. "GF(2^3; 1,0,1,1; g=0,1,0)"')
    fieldopts.add_argument("--p", type=int)
    fieldopts.add_argument("--m", type=int, default=1)
    fieldopts.add_argument("--q", type=int)
    fieldopts.add_argument("--mod", help="modulus coefficients c0,...,cm (negatives reduced mod p)")
    fieldopts.add_argument("--g", help="primitive element coefficients")

    parser = argparse.ArgumentParser(prog="symbolpair", description="Symbol-pair and b-symbol weight tools.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", parents=[common, fieldopts], help="describe a finite field")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("dist", parents=[common, fieldopts], help="weight distribution of a code")
    p.add_argument("--code", help="JSON code description file")
    p.add_argument("--rs", action="store_true", help="Reed-Solomon code")
    p.add_argument("--simplex", choices=tuple(SIMPLEX_FAMILIES))
    p.add_argument("--points", help='"powers:n" or element strings separated by ";"')
    p.add_argument("--k", type=int)
    p.add_argument("--T", help="coordinates to shorten on, e.g. 0,2")
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--source", choices=("formula", "brute", "both"), default="both")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("simplex", parents=[common, fieldopts], help="check simplex b-weights")
    p.add_argument("--family", choices=tuple(SIMPLEX_FAMILIES), required=True)
    p.add_argument("--b", default="2", help='b values, e.g. "1..7" or "2,3"')
    p.set_defaults(func=cmd_simplex)

    p = sub.add_parser("sweep", parents=[common], help="formula normalisation sweep")
    p.add_argument("--n", default="2..12")
    p.add_argument("--k", default="1..n")
    p.add_argument("--q", default="2,3,4,5,7,8,9,16")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    func: Callable[[argparse.Namespace], int] = args.func
    try:
        return func(args)
    except SymbolPairError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
