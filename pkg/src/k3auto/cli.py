"""Command line front end.

Four verbs:

* ``classify``   print the sixteen-case table (filter by Picard rank)
* ``analyze``    type an invariant fibration given as two JSON files
* ``examples``   run one of the built-in worked examples and check it
* ``lefschetz``  check or enumerate fixed-locus counts

Every verb honours ``--format {table,json,csv}``; the ``K3AUTO_FORMAT``
environment variable supplies the default.  Output is deterministic:
identical inputs give byte-identical output.

Exit codes: 0 success (and all reported checks pass), 1 bad input or a
failed check, 2 a geometric invariant is violated.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .classify import (CSV_HEADER, enumerate_cases, render_csv, render_table,
                       rows_to_json, validate_row)
from .lefschetz import (FixedLocusConfig, derive_prop1_constraints,
                        holo_target, holo_total)
from .weierstrass import (ActionAnalysis, DiagonalAutomorphism,
                          InvariantError, WeierstrassFibration,
                          analyze_action, worked_example)

FORMATS = ("table", "json", "csv")

PIC_CHOICES = ("10", "14", "18", "all")


def _resolve_format(flag_value: Optional[str]) -> str:
    value = flag_value if flag_value is not None \
        else os.environ.get("K3AUTO_FORMAT", "table")
    if value not in FORMATS:
        raise ValueError("format must be one of %s, not %r"
                         % ("/".join(FORMATS), value))
    return value


def _json_dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2) + "\n"


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as err:
        raise ValueError("cannot read %s: %s" % (path, err))
    except json.JSONDecodeError as err:
        raise ValueError("%s is not valid JSON: %s" % (path, err))


def _poly_str(p) -> str:
    text = repr(p)
    return text[5:-1] if text.startswith("Poly(") else text


def _mark(ok: bool) -> str:
    return "pass" if ok else "FAIL"


# -- classify ---------------------------------------------------------------


def cmd_classify(args) -> int:
    fmt = _resolve_format(args.format)
    if args.pic not in PIC_CHOICES:
        raise ValueError("usage: classify --pic {10|14|18|all}, not %r"
                         % args.pic)
    rows = enumerate_cases()
    if args.pic != "all":
        want = int(args.pic)
        rows = [row for row in rows if row.rk_pic == want]
    if fmt == "csv":
        sys.stdout.write(render_csv(rows))
    elif fmt == "json":
        sys.stdout.write(_json_dump(rows_to_json(rows)))
    else:
        sys.stdout.write(render_table(rows))
    return 0


# -- analyze ----------------------------------------------------------------


def _analysis_table(analysis: ActionAnalysis) -> str:
    f = analysis.fibration
    lines = ["form: %s" % f.form,
             "a(t) = %s" % _poly_str(f.a),
             "b(t) = %s" % _poly_str(f.b)]
    inventory = ", ".join("%s x %d" % (tag, count)
                          for tag, count in analysis.inventory.items())
    lines.append("singular fibers: %s (Euler sum %d)"
                 % (inventory, analysis.euler_sum))
    lines.append("two-form multiplier: zeta^%d" % analysis.two_form_exponent)
    for rep in analysis.invariant_fibers:
        if rep.fixed_points:
            points = "; ".join("%s (%d,%d)"
                               % ((p.description,) + p.pair)
                               for p in rep.fixed_points)
        else:
            points = "from dual graph" if rep.points_from == "dual-graph" \
                else "none isolated"
        lines.append("fiber at %s: %s | %s | points %s | "
                     "(n2,n3,n4)=%s | fixed rational curves %d"
                     % (rep.place, rep.kodaira, rep.label, points,
                        rep.point_counts, rep.rational_fixed_curves))
    lines.append("action: (%s, %s)" % analysis.action)
    lines.append("matched row: %d" % analysis.matched_row.index)
    lines.append(render_csv([analysis.matched_row]).rstrip("\n"))
    for name in sorted(analysis.checks):
        lines.append("check %s: %s" % (name, _mark(analysis.checks[name])))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    fmt = _resolve_format(args.format)
    fibration = WeierstrassFibration.from_json(_load_json(args.fibration))
    automorphism = DiagonalAutomorphism.from_json(
        _load_json(args.automorphism))
    analysis = analyze_action(fibration, automorphism)
    if fmt == "json":
        sys.stdout.write(_json_dump(analysis.to_json()))
    elif fmt == "csv":
        sys.stdout.write(render_csv([analysis.matched_row]))
    else:
        sys.stdout.write(_analysis_table(analysis))
    return 0 if all(analysis.checks.values()) else 1


# -- examples ---------------------------------------------------------------


def _parse_params(text: Optional[str]) -> Optional[List[Fraction]]:
    if text is None:
        return None
    try:
        return [Fraction(piece.strip()) for piece in text.split(",")]
    except (ValueError, ZeroDivisionError) as err:
        raise ValueError("bad --params %r: %s" % (text, err))


def cmd_examples(args) -> int:
    fmt = _resolve_format(args.format)
    analysis = worked_example(args.id, preset=args.preset,
                              params=_parse_params(args.params),
                              use_tau=args.tau)
    row_checks = validate_row(analysis.matched_row)
    passed = all(analysis.checks.values()) and all(row_checks.values())
    if fmt == "json":
        payload = {"example": args.id, "preset": args.preset,
                   "tau": args.tau,
                   "matched_row": analysis.matched_row.index,
                   "action": list(analysis.action),
                   "fiber_counts": dict(analysis.inventory),
                   "checks": dict(analysis.checks),
                   "row_checks": dict(row_checks),
                   "passed": passed}
        sys.stdout.write(_json_dump(payload))
    elif fmt == "csv":
        sys.stdout.write(render_csv([analysis.matched_row]))
    else:
        tag = "example %d preset %s" % (args.id, args.preset)
        if args.tau:
            tag += " (second generator)"
        lines = ["%s: matched row %d" % (tag, analysis.matched_row.index),
                 "action: (%s, %s)" % analysis.action]
        for name in sorted(analysis.checks):
            lines.append("check %s: %s"
                         % (name, _mark(analysis.checks[name])))
        for name in sorted(row_checks):
            lines.append("row check %s: %s" % (name, _mark(row_checks[name])))
        lines.append("result: %s" % _mark(passed))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if passed else 1


# -- lefschetz --------------------------------------------------------------


def _linear_str(coeffs: Sequence[int], names: Sequence[str],
                rhs: int) -> str:
    parts: List[str] = []
    for c, name in zip(coeffs, names):
        if c == 0:
            continue
        if c == 1:
            term = name
        elif c == -1:
            term = "-" + name
        else:
            term = "%d*%s" % (c, name)
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append("- " + term[1:])
        else:
            parts.append("+ " + term)
    return "%s = %d" % (" ".join(parts) if parts else "0", rhs)


_COUNT_NAMES = ("n2", "n3", "n4", "alpha")


def _lefschetz_check(data, fmt: str) -> int:
    config = FixedLocusConfig.from_json(data)
    values = (config.n2, config.n3, config.n4, config.alpha)
    entries = []
    for row in derive_prop1_constraints():
        coeffs, rhs = row[:4], row[4]
        residual = sum(c * v for c, v in zip(coeffs, values)) - rhs
        entries.append({"equation": _linear_str(coeffs, _COUNT_NAMES, rhs),
                        "residual": residual, "ok": residual == 0})
    total, holo_ok = holo_total(config, 1)
    holo_residual = total - holo_target(1)
    passed = holo_ok and all(e["ok"] for e in entries)
    if fmt == "json":
        payload = {"mode": "check", "n2": config.n2, "n3": config.n3,
                   "n4": config.n4, "alpha": config.alpha, "N": config.N,
                   "constraints": entries,
                   "holomorphic": {"ok": holo_ok,
                                   "residual": repr(holo_residual)},
                   "passed": passed}
        sys.stdout.write(_json_dump(payload))
    elif fmt == "csv":
        lines = ["check,detail,residual,ok"]
        for e in entries:
            lines.append('constraint,"%s",%d,%s'
                         % (e["equation"], e["residual"],
                            "pass" if e["ok"] else "fail"))
        lines.append('holomorphic,"sum = 1 + zeta^7","%s",%s'
                     % (repr(holo_residual),
                        "pass" if holo_ok else "fail"))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = []
        for e in entries:
            lines.append("constraint %s: %s (residual %d)"
                         % (e["equation"], _mark(e["ok"]), e["residual"]))
        lines.append("holomorphic sum = 1 + zeta^7: %s (residual %s)"
                     % (_mark(holo_ok), repr(holo_residual)))
        lines.append("result: %s" % _mark(passed))
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if passed else 1


def _as_count(data, key: str) -> int:
    value = data[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError("%r must be a non-negative integer, not %r"
                         % (key, value))
    return value


def enumerate_point_counts(alpha: int,
                           pins: Dict[str, int]) -> List[Tuple[int, int, int]]:
    """All (n2, n3, n4) >= 0 with N <= 14 matching the two point
    constraints for the given curve-genus defect, honouring pinned counts."""
    solutions = []
    for n2 in range(0, 15):
        n3 = 2 + 4 * alpha - n2
        n4 = 2 - n2 + n3 + 2 * alpha
        if n3 < 0 or n4 < 0 or n2 + n3 + n4 > 14:
            continue
        if any(pins.get(k, v) != v
               for k, v in (("n2", n2), ("n3", n3), ("n4", n4))):
            continue
        solutions.append((n2, n3, n4))
    return solutions


def _lefschetz_enumerate(data, fmt: str) -> int:
    alpha = _as_count(data, "alpha")
    pins = {key: _as_count(data, key)
            for key in ("n2", "n3", "n4") if key in data}
    solutions = enumerate_point_counts(alpha, pins)
    if fmt == "json":
        payload = {"mode": "enumerate", "alpha": alpha, "pins": pins,
                   "solutions": [list(s) for s in solutions]}
        sys.stdout.write(_json_dump(payload))
    elif fmt == "csv":
        lines = ["n2,n3,n4,N"]
        for n2, n3, n4 in solutions:
            lines.append("%d,%d,%d,%d" % (n2, n3, n4, n2 + n3 + n4))
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = ["alpha = %d" % alpha]
        if pins:
            lines.append("pinned: " + ", ".join(
                "%s = %d" % (k, pins[k]) for k in sorted(pins)))
        if solutions:
            for n2, n3, n4 in solutions:
                lines.append("n2 = %d, n3 = %d, n4 = %d (N = %d)"
                             % (n2, n3, n4, n2 + n3 + n4))
        else:
            lines.append("no solutions")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_lefschetz(args) -> int:
    fmt = _resolve_format(args.format)
    data = _load_json(args.config)
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    if "curves" in data:
        return _lefschetz_check(data, fmt)
    if "alpha" in data:
        return _lefschetz_enumerate(data, fmt)
    raise ValueError("config needs either curve data with point counts "
                     "or an 'alpha' value to enumerate")


# -- driver -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="k3auto",
        description="order-8 purely non-symplectic K3 automorphisms: "
                    "classification table, fibration analysis, fixed-point "
                    "accounting")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="print the classification table")
    p.add_argument("--pic", default="all",
                   help="Picard rank filter: 10, 14, 18 or all")
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("analyze", help="type an invariant fibration")
    p.add_argument("--fibration", required=True,
                   help="JSON file with the Weierstrass data")
    p.add_argument("--automorphism", required=True,
                   help="JSON file with the scaling exponents")
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("examples", help="run a built-in worked example")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--preset", default="generic")
    p.add_argument("--params", default=None,
                   help="comma-separated rational parameters")
    p.add_argument("--tau", action="store_true",
                   help="use the second generator (example 3 only)")
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("lefschetz", help="fixed-point count bookkeeping")
    p.add_argument("--config", required=True,
                   help="JSON file: curve data with counts to check, or "
                        "an alpha value to enumerate")
    p.add_argument("--format", default=None)
    p.set_defaults(func=cmd_lefschetz)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantError as err:
        sys.stderr.write("invariant violated: %s\n" % err)
        return 2
    except KeyError as err:
        sys.stderr.write("error: missing field %s\n" % err)
        return 1
    except ValueError as err:
        sys.stderr.write("error: %s\n" % err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
