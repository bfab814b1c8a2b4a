"""Command-line interface.

Subcommands: span, minlen, witness, postman, verify-family, verify-fixtures,
search-gap. Exit status 0 on success, 1 when a verification check fails, 2 on
input errors. Output is deterministic: identical invocations produce
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from typing import Optional

from .errors import GraphSpanError, MalformedInput, VerificationFailure
from .families import (
    family_closed_minlen_checks,
    family_closed_span_checks,
    find_minimal_direct_gap,
)
from .graph import FamilySpec, Graph, complete, generate, kn_plus, parse_edge_list, parse_graph6
from .minlen import DEFAULT_STATE_BUDGET, min_length
from .postman import shortest_covering_walk
from .spans import RULES, TARGETS, Rule, Target, span, witness_sweeps
from .walks import Walk, classify, format_walk, is_opposite_lazy, pair_distance, parse_walk

SCHEMA = "graphspan/v1"

_RULE_CHOICES = {
    "strong": Rule.TRADITIONAL,
    "direct": Rule.ACTIVE,
    "cartesian": Rule.LAZY,
}
_RULE_LABEL = {Rule.TRADITIONAL: "strong", Rule.ACTIVE: "direct", Rule.LAZY: "cartesian"}


def _selected_rules(name: str) -> tuple[Rule, ...]:
    if name == "all":
        return RULES
    return (_RULE_CHOICES[name],)


def _selected_targets(name: str) -> tuple[Target, ...]:
    if name == "both":
        return TARGETS
    return (Target(name),)


def _load_graph(args) -> tuple[Graph, str]:
    if args.family:
        spec = FamilySpec.from_string(args.family)
        return generate(spec), str(spec)
    with open(args.file, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        return parse_edge_list(text), f"file:{args.file}"
    except MalformedInput:
        for raw in text.splitlines():
            line = raw.strip()
            if line and not line.startswith("#"):
                return parse_graph6(line), f"file:{args.file}"
        raise


def _graph_doc(g: Graph, source: str) -> dict:
    return {"source": source, "order": g.n, "size": g.m}


def _emit(doc: dict, fmt: str, text_lines: list[str]) -> None:
    if fmt == "structured":
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_span(args) -> int:
    g, source = _load_graph(args)
    rules = _selected_rules(args.rule)
    targets = _selected_targets(args.target)
    reports = [span(g, r, t) for r in rules for t in targets]

    lines = [f"graph: {source} (order {g.n}, size {g.m})"]
    header = f"{'rule':<12}" + "".join(f"{t.value:>10}" for t in targets)
    lines.append(header)
    for r in rules:
        row = f"{_RULE_LABEL[r]:<12}"
        for t in targets:
            rep = next(x for x in reports if x.rule is r and x.target is t)
            row += f"{rep.value:>10}"
        lines.append(row)

    doc = {
        "schema": SCHEMA,
        "command": "span",
        "graph": _graph_doc(g, source),
        "reports": [
            {
                "rule": _RULE_LABEL[rep.rule],
                "target": rep.target.value,
                "value": rep.value,
            }
            for rep in reports
        ],
    }
    _emit(doc, args.format, lines)
    return 0


def _cmd_minlen(args) -> int:
    g, source = _load_graph(args)
    rules = _selected_rules(args.rule)
    targets = _selected_targets(args.target)
    lines = [f"graph: {source} (order {g.n}, size {g.m})"]
    entries = []
    for r in rules:
        for t in targets:
            rep = min_length(g, r, t, state_budget=args.budget)
            entry = {
                "rule": _RULE_LABEL[r],
                "target": t.value,
                "value": rep.length,
                "span": rep.span_value,
                "explored_states": rep.explored_states,
                "capped": rep.capped,
            }
            if rep.witness is not None:
                entry["witness"] = {
                    "f": format_walk(rep.witness[0]),
                    "g": format_walk(rep.witness[1]),
                }
            entries.append(entry)
            mark = " (capped: lower bound only)" if rep.capped else ""
            lines.append(
                f"{_RULE_LABEL[r]:<12}{t.value:<10}L={rep.length}{mark}"
                f"  span={rep.span_value}  explored={rep.explored_states}"
            )
            if rep.witness is not None:
                lines.append(f"  f: {format_walk(rep.witness[0])}")
                lines.append(f"  g: {format_walk(rep.witness[1])}")
    doc = {
        "schema": SCHEMA,
        "command": "minlen",
        "graph": _graph_doc(g, source),
        "reports": entries,
    }
    _emit(doc, args.format, lines)
    return 0


def _cmd_witness(args) -> int:
    g, source = _load_graph(args)
    rules = _selected_rules(args.rule)
    targets = _selected_targets(args.target)
    lines = []
    entries = []
    for r in rules:
        for t in targets:
            f, h = witness_sweeps(g, r, t)
            value = pair_distance(g, f, h)
            lines.append(f"# {_RULE_LABEL[r]} {t.value} (distance {value})")
            lines.append(format_walk(f))
            lines.append(format_walk(h))
            entries.append(
                {
                    "rule": _RULE_LABEL[r],
                    "target": t.value,
                    "value": value,
                    "witness": {"f": format_walk(f), "g": format_walk(h)},
                }
            )
    doc = {
        "schema": SCHEMA,
        "command": "witness",
        "graph": _graph_doc(g, source),
        "reports": entries,
    }
    _emit(doc, args.format, lines)
    return 0


def _cmd_postman(args) -> int:
    g, source = _load_graph(args)
    mode = "closed" if args.mode == "closed" else "free_endpoints"
    res = shortest_covering_walk(g, mode)
    lines = [
        f"graph: {source} (order {g.n}, size {g.m})",
        f"mode: {mode}",
        f"length_edges: {res.length_edges}",
        format_walk(res.walk),
    ]
    doc = {
        "schema": SCHEMA,
        "command": "postman",
        "graph": _graph_doc(g, source),
        "mode": mode,
        "length_edges": res.length_edges,
        "duplicated": [list(e) for e in res.duplicated],
        "walk": format_walk(res.walk),
    }
    _emit(doc, args.format, lines)
    return 0


def _cmd_verify_family(args) -> int:
    rows = []
    ok = True
    for family, rule, target, want, got in family_closed_span_checks():
        status = "PASS" if want == got else "FAIL"
        ok &= status == "PASS"
        rows.append(("span", family, rule, target, want, got, status))
    for family, rule, target, want, got in family_closed_minlen_checks(args.budget):
        if got == "capped":
            status = "CAPPED"
        else:
            status = "PASS" if want == got else "FAIL"
            ok &= status == "PASS"
        rows.append(("minlen", family, rule, target, want, got, status))

    lines = [
        f"{'check':<8}{'graph':<22}{'rule':<14}{'target':<10}{'table':>6}{'engine':>8}  status"
    ]
    for kind, family, rule, target, want, got, status in rows:
        lines.append(
            f"{kind:<8}{family:<22}{rule:<14}{target:<10}{want:>6}{str(got):>8}  {status}"
        )
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    doc = {
        "schema": SCHEMA,
        "command": "verify-family",
        "ok": ok,
        "checks": [
            {
                "kind": kind,
                "graph": family,
                "rule": rule,
                "target": target,
                "expected": want,
                "actual": got,
                "status": status,
            }
            for kind, family, rule, target, want, got, status in rows
        ],
    }
    _emit(doc, args.format, lines)
    return 0 if ok else 1


_FIXTURES = (
    {
        "name": "lazy 21-sweep pair on the once-subdivided K5",
        "files": ("knplus5_lazy_sweeps_f.walk", "knplus5_lazy_sweeps_g.walk"),
        "graph": lambda: kn_plus(5),
        "length": 21,
        "distance": 2,
        "kind": "lazy_sweep",
    },
    {
        "name": "11-sweep pair on K5",
        "files": ("k5_sweeps_f.walk", "k5_sweeps_g.walk"),
        "graph": lambda: complete(5),
        "length": 11,
        "distance": 1,
        "kind": "sweep",
    },
    {
        "name": "opposite lazy 21-sweep pair on K5",
        "files": ("k5_opposite_lazy_f.walk", "k5_opposite_lazy_g.walk"),
        "graph": lambda: complete(5),
        "length": 21,
        "distance": 1,
        "kind": "opposite_lazy_sweep",
    },
)


def load_fixture_walks(names: tuple[str, str], n: int) -> tuple[Walk, Walk]:
    pkg = resources.files("graphspan") / "fixtures"
    f = parse_walk((pkg / names[0]).read_text(encoding="utf-8"), n)
    h = parse_walk((pkg / names[1]).read_text(encoding="utf-8"), n)
    return f, h


def verify_fixture_pair(fix: dict) -> list[str]:
    """Return a list of problems with one shipped walk pair (empty if valid)."""
    g = fix["graph"]()
    f, h = load_fixture_walks(fix["files"], g.n)
    problems = []
    if f.l != fix["length"] or h.l != fix["length"]:
        problems.append(f"lengths {f.l}/{h.l}, expected {fix['length']}")
    cf, ch = classify(g, f), classify(g, h)
    if fix["kind"] == "sweep":
        if not (cf.is_sweep and ch.is_sweep):
            problems.append("walks are not sweeps")
    else:
        if not (cf.is_lazy_sweep and ch.is_lazy_sweep):
            problems.append("walks are not lazy sweeps")
    if fix["kind"] == "opposite_lazy_sweep" and not is_opposite_lazy(g, f, h):
        problems.append("pair is not opposite lazy")
    d = pair_distance(g, f, h)
    if d != fix["distance"]:
        problems.append(f"pair distance {d}, expected {fix['distance']}")
    return problems


def _cmd_verify_fixtures(args) -> int:
    ok = True
    lines = []
    checks = []
    for fix in _FIXTURES:
        problems = verify_fixture_pair(fix)
        status = "PASS" if not problems else "FAIL"
        ok &= status == "PASS"
        lines.append(f"{fix['name']}: {status}")
        for p in problems:
            lines.append(f"  {p}")
        checks.append({"name": fix["name"], "status": status, "problems": problems})
    lines.append(f"result: {'PASS' if ok else 'FAIL'}")
    doc = {"schema": SCHEMA, "command": "verify-fixtures", "ok": ok, "checks": checks}
    _emit(doc, args.format, lines)
    return 0 if ok else 1


def _cmd_search_gap(args) -> int:
    hit = find_minimal_direct_gap()
    sv = span(hit, Rule.ACTIVE, Target.VERTICES).value
    se = span(hit, Rule.ACTIVE, Target.EDGES).value
    lines = [
        "first graph with direct vertex span != direct edge span:",
        f"order {hit.n}, size {hit.m} (the once-subdivided K4)",
        f"edges: {' '.join(f'{u}-{v}' for u, v in hit.edges)}",
        f"direct vertex span {sv}, direct edge span {se}",
    ]
    doc = {
        "schema": SCHEMA,
        "command": "search-gap",
        "graph": {"order": hit.n, "size": hit.m, "edges": [list(e) for e in hit.edges]},
        "direct_vertex_span": sv,
        "direct_edge_span": se,
    }
    _emit(doc, args.format, lines)
    return 0


# ---------------------------------------------------------------------------


def _add_input_args(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec, e.g. kn_plus:5 or complete_bipartite:2,3")
    src.add_argument("--file", help="path to an edge-list or graph6 file")


def _add_common_args(p: argparse.ArgumentParser, rule_target: bool = True) -> None:
    if rule_target:
        p.add_argument("--rule", choices=[*_RULE_CHOICES, "all"], default="all")
        p.add_argument("--target", choices=["vertices", "edges", "both"], default="both")
    p.add_argument("--format", choices=["text", "structured"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphspan",
        description="Safety-distance spans, witness walks, and minimal walk lengths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("span", help="compute span values")
    _add_input_args(p)
    _add_common_args(p)
    p.set_defaults(func=_cmd_span)

    p = sub.add_parser("minlen", help="compute minimal walk lengths")
    _add_input_args(p)
    _add_common_args(p)
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET,
                   help="state budget for the search (default 2**27)")
    p.set_defaults(func=_cmd_minlen)

    p = sub.add_parser("witness", help="emit witness walk pairs")
    _add_input_args(p)
    _add_common_args(p)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("postman", help="shortest covering walk")
    _add_input_args(p)
    p.add_argument("--mode", choices=["closed", "free"], default="free")
    _add_common_args(p, rule_target=False)
    p.set_defaults(func=_cmd_postman)

    p = sub.add_parser("verify-family", help="cross-check closed forms against the engines")
    p.add_argument("--budget", type=int, default=DEFAULT_STATE_BUDGET)
    _add_common_args(p, rule_target=False)
    p.set_defaults(func=_cmd_verify_family)

    p = sub.add_parser("verify-fixtures", help="validate the shipped walk-table fixtures")
    _add_common_args(p, rule_target=False)
    p.set_defaults(func=_cmd_verify_fixtures)

    p = sub.add_parser("search-gap", help="scan for the smallest direct-span gap graph")
    _add_common_args(p, rule_target=False)
    p.set_defaults(func=_cmd_search_gap)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"verification failed ({args.command}): {exc}", file=sys.stderr)
        return 1
    except GraphSpanError as exc:
        print(f"input error ({args.command}): {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error ({args.command}): {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
