"""Command-line front end.

    occlogic analyze <file> [--stats] [--json]
    occlogic entail <file> -q "<formula>" -r <relation> [--json]
    occlogic duality-check <file> [--json]
    occlogic compare <file> --queries <file> [--json]

Exit codes: 0 success or "yes", 1 "no" or a failed check, 2 bad input,
3 a size cap was exceeded.  Occurrences print as ``p@f<formula>#<i><sign>``
with 0-based formula index and 1-based per-formula index.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Any

from .duality import verify_duality
from .formula import Base, ParseError, format_formula, parse, parse_query
from .inference import ClassRenaming, Verdict
from .lpm import LPmInterp
from .osem import OInterp
from .query import RELATIONS, Limits, decide, decide_all, violations
from .relations import (
    OccRelation,
    canonical_relation,
    cmcrs,
    enumerate_bmcrs,
    enumerate_mcrs,
    enumerate_mirs,
    enumerate_mises,
    omis_of,
    pn_pairs,
    relation_consistent,
)
from .semantics import CapExceeded

SCHEMA_VERSION = 1

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_CAP = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# serialization

def _label(base: Base, k: int) -> str:
    return base.occurrence(k).label


def relation_json(base: Base, r: OccRelation) -> dict:
    return {
        "blocks": [[_label(base, k) for k in b] for b in r.blocks],
        "pn": [[_label(base, a), _label(base, b)] for a, b in sorted(pn_pairs(base, r))],
    }


def pairs_json(base: Base, pairs) -> list:
    return [[_label(base, a), _label(base, b)] for a, b in sorted(pairs)]


def base_json(base: Base) -> dict:
    return {
        "formulas": base.text(),
        "core": [format_formula(f) for f in base.formulas],
        "occurrences": [
            {"label": o.label, "var": o.var, "formula": o.formula, "index": o.index,
             "ordinal": o.ordinal, "var_index": o.var_index,
             "polarity": "positive" if o.positive else "negative"}
            for o in base.occurrences
        ],
    }


def _jsonable(base: Base, value: Any):
    if isinstance(value, OccRelation):
        return relation_json(base, value)
    if isinstance(value, ClassRenaming):
        return {_label(base, b[0]) if len(b) == 1 else ",".join(_label(base, k) for k in b): name
                for b, name in sorted(value.names.items())}
    if isinstance(value, OInterp):
        return value.labelled(base)
    if isinstance(value, LPmInterp):
        return {v: sorted(s) for v, s in value.values}
    if isinstance(value, dict):
        return {str(k): _jsonable(base, v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(base, v) for v in value]
    return value


def verdict_json(base: Base, v: Verdict) -> dict:
    return {"relation": v.relation, "verdict": "yes" if v.holds else "no",
            "witness": _jsonable(base, v.witness)}


def analyze_report(base: Base, limits: Limits, stats: bool = False) -> dict:
    cap = limits.occ_cap
    mirs = enumerate_mirs(base, cap)
    mcrs = enumerate_mcrs(base, cap)
    bmcrs = enumerate_bmcrs(base, cap)
    omises = sorted({omis_of(base, m) for m in mirs}, key=sorted)
    mises = enumerate_mises(base)
    duality = verify_duality(base, cap)
    report = {
        "schema": f"occlogic.analyze/{SCHEMA_VERSION}",
        "base": base_json(base),
        "consistent": relation_consistent(base, canonical_relation(base)),
        "mirs": [relation_json(base, m) for m in mirs],
        "mcrs": [relation_json(base, m) for m in mcrs],
        "bmcrs": [relation_json(base, m) for m in bmcrs],
        "cmcrs": [pairs_json(base, c) for c in cmcrs(base, cap)],
        "omises": [sorted(s) for s in omises],
        "mises": [sorted(s) for s in mises],
        "duality": {"mcr_direction": duality.mcr_direction,
                    "mir_direction": duality.mir_direction},
    }
    if stats:
        report["stats"] = {
            "formulas": len(base.formulas),
            "variables": len(base.variables),
            "occurrences": len(base.occurrences),
            "mirs": len(mirs),
            "mcrs": len(mcrs),
            "bmcrs": len(bmcrs),
            "omises": len(omises),
            "mises": len(mises),
        }
    return report


# ---------------------------------------------------------------------------
# human-readable rendering

def _blocks_text(rel: dict) -> str:
    return "{" + ", ".join("{" + ", ".join(b) + "}" for b in rel["blocks"]) + "}"


def _pairs_text(pairs: list) -> str:
    return "{" + ", ".join(f"({a}, {b})" for a, b in pairs) + "}"


def render_analyze(report: dict) -> str:
    lines = ["Base:"]
    for i, f in enumerate(report["base"]["formulas"]):
        lines.append(f"  f{i}: {f}")
    lines.append("Occurrences:")
    for o in report["base"]["occurrences"]:
        lines.append(f"  {o['ordinal']:>3}  {o['label']}")
    lines.append(f"Consistent: {'yes' if report['consistent'] else 'no'}")
    for key, title in (("mirs", "MIRs"), ("mcrs", "MCRs"), ("bmcrs", "BMCRs")):
        lines.append(f"{title} ({len(report[key])}):")
        for rel in report[key]:
            extra = f"  PN={_pairs_text(rel['pn'])}" if key != "mirs" else ""
            lines.append(f"  {_blocks_text(rel)}{extra}")
    lines.append(f"C-MCRs ({len(report['cmcrs'])}):")
    for c in report["cmcrs"]:
        lines.append(f"  {_pairs_text(c)}")
    for key, title in (("omises", "O-MISes"), ("mises", "MISes")):
        lines.append(f"{title} ({len(report[key])}):")
        for s in report[key]:
            lines.append("  {" + ", ".join(f"f{i}" for i in s) + "}")
    d = report["duality"]
    lines.append(f"Duality: MCR side {'pass' if d['mcr_direction'] else 'FAIL'}, "
                 f"MIR side {'pass' if d['mir_direction'] else 'FAIL'}")
    if "stats" in report:
        lines.append("Stats: " + ", ".join(f"{k}={v}" for k, v in report["stats"].items()))
    if "timing" in report:
        lines.append(f"Time: {report['timing']:.3f}s")
    return "\n".join(lines)


def render_verdict(v: dict) -> str:
    lines = [v["verdict"]]
    w = v["witness"]
    if w:
        lines.append(json.dumps(w, indent=2, sort_keys=True, ensure_ascii=False))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# commands

def _load(path: str) -> Base:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def _emit(doc: dict, as_json: bool, render) -> None:
    if as_json:
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write(render(doc) + "\n")


def cmd_analyze(args, limits: Limits) -> int:
    start = time.perf_counter()
    base = _load(args.file)
    report = analyze_report(base, limits, stats=args.stats)
    if args.timing:
        report["timing"] = time.perf_counter() - start
    _emit(report, args.json, render_analyze)
    return EXIT_YES


def cmd_entail(args, limits: Limits) -> int:
    base = _load(args.file)
    phi = parse_query(args.query)
    v = decide(base, phi, args.relation, limits)
    doc = {"schema": f"occlogic.entail/{SCHEMA_VERSION}", "query": format_formula(phi),
           **verdict_json(base, v)}
    _emit(doc, args.json, render_verdict)
    return EXIT_YES if v.holds else EXIT_NO


def cmd_duality(args, limits: Limits) -> int:
    base = _load(args.file)
    r = verify_duality(base, limits.occ_cap)
    doc = {
        "schema": f"occlogic.duality/{SCHEMA_VERSION}",
        "passed": r.passed,
        "mcr_direction": {
            "passed": r.mcr_direction,
            "mir_hitting_sets": [pairs_json(base, h) for h in r.mir_hitting_sets],
            "mcrs_without_hitting_set": [relation_json(base, x) for x in r.mcr_only],
            "h_maximal_not_mcr": [relation_json(base, x) for x in r.hmax_only],
        },
        "mir_direction": {
            "passed": r.mir_direction,
            "cmcr_hitting_sets": [pairs_json(base, h) for h in r.cmcr_hitting_sets],
            "mirs_without_hitting_set": [relation_json(base, x) for x in r.mir_only],
            "h_minimal_not_mir": [relation_json(base, x) for x in r.hmin_only],
        },
    }
    _emit(doc, args.json, render_duality)
    return EXIT_YES if r.passed else EXIT_NO


def render_duality(doc: dict) -> str:
    lines = [f"duality: {'pass' if doc['passed'] else 'FAIL'}"]
    for key, title in (("mcr_direction", "MCR <-> H-maximal"), ("mir_direction", "MIR <-> H-minimal")):
        part = doc[key]
        lines.append(f"  {title}: {'pass' if part['passed'] else 'FAIL'}")
        for name, items in part.items():
            if name == "passed" or not items:
                continue
            lines.append(f"    {name}:")
            for it in items:
                lines.append("      " + (_blocks_text(it) if isinstance(it, dict) else _pairs_text(it)))
    return "\n".join(lines)


def cmd_compare(args, limits: Limits) -> int:
    base = _load(args.file)
    with open(args.queries, encoding="utf-8") as fh:
        texts = [ln.split("#", 1)[0].strip() for ln in fh]
    rows = []
    for lineno, text in enumerate(texts, start=1):
        if not text:
            continue
        try:
            phi = parse_query(text)
        except ParseError as exc:
            raise ParseError(str(exc).split(": ", 1)[-1], lineno, exc.col) from None
        verdicts = decide_all(base, phi, limits)
        rows.append({"query": format_formula(phi), "source": text,
                     "verdicts": {r: "yes" if verdicts[r] else "no" for r in RELATIONS},
                     "violations": violations(verdicts)})
    doc = {"schema": f"occlogic.compare/{SCHEMA_VERSION}", "relations": list(RELATIONS),
           "rows": rows}
    _emit(doc, args.json, render_compare)
    return EXIT_NO if any(r["violations"] for r in rows) else EXIT_YES


def render_compare(doc: dict) -> str:
    width = max([len(r["source"]) for r in doc["rows"]] + [5])
    head = "query".ljust(width) + "  " + "  ".join(f"{r:>9}" for r in doc["relations"])
    lines = [head, "-" * len(head)]
    for row in doc["rows"]:
        cells = "  ".join(f"{row['verdicts'][r]:>9}" for r in doc["relations"])
        lines.append(f"{row['source'].ljust(width)}  {cells}")
        for v in row["violations"]:
            lines.append(f"  ERROR: violates {v}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------

def _env_int(name: str, default: int) -> int:
    value = os.environ.get(name)
    return int(value) if value else default


def build_parser() -> argparse.ArgumentParser:
    defaults = Limits()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bool-cap", type=int,
                        default=_env_int("OCCLOGIC_BOOL_CAP", defaults.bool_cap),
                        help="max variables in Boolean model enumeration (env OCCLOGIC_BOOL_CAP)")
    common.add_argument("--lpm-cap", type=int,
                        default=_env_int("OCCLOGIC_LPM_CAP", defaults.lpm_cap),
                        help="max variables in LP_m model search (env OCCLOGIC_LPM_CAP)")
    common.add_argument("--occ-cap", type=int,
                        default=_env_int("OCCLOGIC_OCC_CAP", defaults.occ_cap),
                        help="max occurrences for relation enumeration (env OCCLOGIC_OCC_CAP)")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = argparse.ArgumentParser(prog="occlogic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="MIRs, MCRs and derived objects")
    p.add_argument("file")
    p.add_argument("--stats", action="store_true", help="add raw counts")
    p.add_argument("--timing", action="store_true", help="add wall-clock time (breaks byte-identical output)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("entail", parents=[common], help="decide one query under one relation")
    p.add_argument("file")
    p.add_argument("-q", "--query", required=True)
    p.add_argument("-r", "--relation", required=True, choices=RELATIONS)
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("duality-check", parents=[common], help="check the MIR/MCR hitting-set duality")
    p.add_argument("file")
    p.set_defaults(func=cmd_duality)

    p = sub.add_parser("compare", parents=[common], help="verdicts of every relation on a query list")
    p.add_argument("file")
    p.add_argument("--queries", required=True)
    p.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limits = Limits(args.bool_cap, args.lpm_cap, args.occ_cap)
    try:
        return args.func(args, limits)
    except (ParseError, OSError) as exc:
        print(f"occlogic: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"occlogic: resource cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
