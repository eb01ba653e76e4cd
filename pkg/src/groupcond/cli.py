"""Command-line front end.

Exit status: 0 when the condition holds or every check passes, 1 when a
condition definitively fails (or a scan check fails), 2 or more on any
operational error (bad input, cap exceeded, unknown class label).
"""
from __future__ import annotations

import argparse
import sys

from . import __version__
from .catalog import entries_from_directory, scan
from .characters import load_character_table, match_classes, structure_constant_count
from .conditions import (
    brute_count_triples,
    find_3po_triple,
    find_3ppo_triple,
    find_3ss_witness,
    find_kaplan_levy_triple,
    find_thompson_triple,
)
from .errors import GroupError
from .group import DEFAULT_CAP, load_group
from .report import SCHEMA_VERSION, analyze_group, render_structured
from .structure import conjugacy_classes

CONDITIONS = {
    "thompson": (find_thompson_triple, "no triple of pairwise coprime orders"),
    "kl": (find_kaplan_levy_triple, "no Kaplan-Levy triple"),
    "3po": (find_3po_triple, "no triple of distinct prime orders"),
    "3ppo": (find_3ppo_triple, "no triple of prime-power orders for three distinct primes"),
    "3ss": (None, "no Sylow triple with |P1 P2 P3| < |P1||P2||P3|"),
}


class UsageError(Exception):
    pass


def _emit(args, doc: dict, text: str):
    if args.format == "structured":
        print(render_structured({"schemaVersion": SCHEMA_VERSION, **doc}))
    else:
        print(text)


def cmd_analyze(args) -> int:
    G = load_group(args.path, args.max_order)
    rep = analyze_group(G, args.mode)
    doc = {"command": "analyze", "report": rep.to_dict(include_timings=args.timings)}
    if not args.timings:
        rep.timings = {}
    _emit(args, doc, rep.render_text())
    return 0


def cmd_check(args) -> int:
    G = load_group(args.path, args.max_order)
    finder, failure = CONDITIONS[args.condition]
    w = find_3ss_witness(G, args.mode) if finder is None else finder(G)
    holds = w is not None
    doc = {
        "command": "check",
        "group": G.name,
        "condition": args.condition,
        "holds": holds,
        "witness": w.as_dict() if holds else None,
        "message": "condition holds" if holds else failure,
    }
    if holds:
        wd = w.as_dict()
        text = f"{G.name}: {args.condition} holds\n" + "\n".join(f"  {k}: {v}" for k, v in wd.items())
    else:
        text = f"{G.name}: {failure}"
    _emit(args, doc, text)
    return 0 if holds else 1


def resolve_selector(sel: str, classes, table=None, matching=None):
    """Find a computed class by bare element order, computed label, or table label."""
    if sel.isdigit():
        hits = [c for c in classes if c.element_order == int(sel)]
        if len(hits) == 1:
            return hits[0]
        if not hits:
            raise UsageError(f"no class of element order {sel}")
        raise UsageError(f"several classes have order {sel}; use one of "
                         + ", ".join(c.label for c in hits))
    for c in classes:
        if c.label == sel:
            return c
    if table is not None:
        for i, info in enumerate(table.classes):
            if info.label == sel:
                return matching[i]
    raise UsageError(f"unknown class label {sel!r}")


def cmd_count_triples(args) -> int:
    G = load_group(args.path, args.max_order)
    classes = conjugacy_classes(G)
    table = matching = None
    if args.method in ("character", "both"):
        if not args.table:
            raise UsageError(f"method {args.method} needs --table")
    if args.table:
        table = load_character_table(open(args.table, encoding="utf-8").read())
        matching = match_classes(G, table)
    sels = [s.strip() for s in args.classes.split(",")]
    if len(sels) != 3:
        raise UsageError("--classes needs exactly three comma-separated selectors")
    chosen = [resolve_selector(s, classes, table, matching) for s in sels]

    doc = {"command": "count-triples", "group": G.name, "classes": [c.label for c in chosen],
           "method": args.method, "counts": {}}
    if args.method in ("brute", "both"):
        doc["counts"]["brute"] = brute_count_triples(G, *chosen)
    if args.method in ("character", "both"):
        idx = [matching.table_index(c) for c in chosen]
        doc["tableClasses"] = [table.classes[i].label for i in idx]
        doc["counts"]["character"] = structure_constant_count(table, *idx)
        doc["matchingAmbiguous"] = matching.ambiguous
        if matching.ambiguous:
            alt = {structure_constant_count(table, *[_index_in(m, c) for c in chosen])
                   for m in matching.alternatives}
            doc["countEquivalentAcrossMatchings"] = len(alt) == 1
    status = 0
    if args.method == "both":
        doc["agree"] = doc["counts"]["brute"] == doc["counts"]["character"]
        status = 0 if doc["agree"] else 1
    text = f"{G.name}: classes {', '.join(doc['classes'])}\n" + "\n".join(
        f"  {k}: {v}" for k, v in doc["counts"].items())
    if "agree" in doc:
        text += "\n  " + ("agree" if doc["agree"] else "MISMATCH")
    _emit(args, doc, text)
    return status


def _index_in(mapping: dict, cls) -> int:
    return next(i for i, c in mapping.items() if c == cls)


def cmd_scan(args) -> int:
    entries = entries_from_directory(args.directory) if args.directory else None
    result = scan(entries, args.max_order, args.mode)
    doc = {"command": "scan", **result.to_dict()}
    _emit(args, doc, result.render_text())
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-order", type=int, default=DEFAULT_CAP,
                        help="abort generation past this many elements (default %(default)s)")
    common.add_argument("--mode", choices=("fast", "exhaustive"), default="exhaustive",
                        help="3SS search over all Sylow conjugates or canonical ones only")
    common.add_argument("--format", choices=("text", "structured"), default="text")
    common.add_argument("--table", help="character table file")
    common.add_argument("--timings", action="store_true", help="include per-check timings")

    parser = argparse.ArgumentParser(prog="groupcond", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("analyze", parents=[common], help="evaluate every condition on one group")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", parents=[common], help="decide one condition and print a witness")
    p.add_argument("path")
    p.add_argument("condition", choices=sorted(CONDITIONS))
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("count-triples", parents=[common],
                       help="count (x, y, z) in three classes with x y z = 1")
    p.add_argument("path")
    p.add_argument("--classes", required=True, help="three selectors, e.g. 2,3A,5A")
    p.add_argument("--method", choices=("brute", "character", "both"), default="brute")
    p.set_defaults(func=cmd_count_triples)

    p = sub.add_parser("scan", parents=[common], help="check every group in the catalog")
    p.add_argument("directory", nargs="?", help="directory of *.group files (default: built-in catalog)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"groupcond: {exc}", file=sys.stderr)
        return 2
    except (GroupError, OSError) as exc:
        print(f"groupcond: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
