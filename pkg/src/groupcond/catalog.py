"""Built-in group catalog and the scan that checks every condition across it.

The scan checks, per group: expected facts (order, solvability, simplicity),
Thompson presence = nonsolvability, 3PPO = 3SS, 3PO => 3PPO, a Kaplan-Levy
triple for every nonsolvable group and 3PO for every nonabelian simple group.
A solvable 3PPO group or a nonsolvable group that is not 3PPO raises a
COUNTEREXAMPLE alarm, since either would settle whether 3PPO characterises
nonsolvability.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path
from typing import Iterable, Optional

from .errors import GroupError
from .group import DEFAULT_CAP, group_from_definition
from .report import analyze_group
from .structure import is_simple

__all__ = ["CatalogEntry", "ScanRow", "ScanResult", "builtin_catalog", "entries_from_directory",
           "scan", "data_path"]


def data_path(*parts) -> Path:
    """Path of a file shipped in the package's data directory."""
    return Path(str(files("groupcond").joinpath("data", *parts)))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    definition: dict
    expected: dict = field(default_factory=dict)


def builtin_catalog() -> list[CatalogEntry]:
    doc = json.loads(data_path("catalog.json").read_text(encoding="utf-8"))
    return [CatalogEntry(e["name"], e["definition"], e.get("expected", {})) for e in doc["entries"]]


def entries_from_directory(directory) -> list[CatalogEntry]:
    """One entry per ``*.group`` file; an optional ``expected`` object in the file is honoured."""
    out = []
    for path in sorted(Path(directory).glob("*.group")):
        try:
            doc = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            doc = {"name": path.stem, "_error": str(exc)}
        out.append(CatalogEntry(str(doc.get("name") or path.stem), doc, doc.get("expected", {})))
    return out


@dataclass
class ScanRow:
    name: str
    order: Optional[int] = None
    solvable: Optional[bool] = None
    simple: Optional[bool] = None
    thompson: Optional[bool] = None
    kaplan_levy: Optional[bool] = None
    three_po: Optional[bool] = None
    three_ppo: Optional[bool] = None
    three_ss: Optional[bool] = None
    flags: list = field(default_factory=list)
    alarms: list = field(default_factory=list)
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "name": self.name, "order": self.order, "solvable": self.solvable, "simple": self.simple,
            "thompson": self.thompson, "kaplanLevy": self.kaplan_levy, "threePO": self.three_po,
            "threePPO": self.three_ppo, "threeSS": self.three_ss, "flags": self.flags,
            "alarms": self.alarms, "error": self.error,
        }


@dataclass
class ScanResult:
    rows: list[ScanRow]

    @property
    def alarms(self) -> list[str]:
        return [a for r in self.rows for a in r.alarms]

    @property
    def ok(self) -> bool:
        return all(not r.flags and r.error is None for r in self.rows)

    @property
    def exit_code(self) -> int:
        if any(r.error is not None for r in self.rows):
            return 2
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        return {"rows": [r.to_dict() for r in self.rows], "alarms": self.alarms, "ok": self.ok}

    def render_text(self) -> str:
        def yn(v):
            return "-" if v is None else ("yes" if v else "no")

        head = f"{'group':<10} {'order':>5}  {'solvable':<8} {'thompson':<8} {'3PO':<4} {'3PPO':<4} {'3SS':<4}"
        lines = [head, "-" * len(head)]
        for r in self.rows:
            if r.error is not None:
                lines.append(f"{r.name:<10} ERROR {r.error}")
                continue
            lines.append(f"{r.name:<10} {r.order:>5}  {yn(r.solvable):<8} {yn(r.thompson):<8} "
                         f"{yn(r.three_po):<4} {yn(r.three_ppo):<4} {yn(r.three_ss):<4}")
            lines += [f"    FLAG {f}" for f in r.flags]
        for a in self.alarms:
            lines.append(f"*** COUNTEREXAMPLE ALARM: {a} ***")
        lines.append(f"{len(self.rows)} groups, {sum(bool(r.flags) for r in self.rows)} flagged, "
                     f"{sum(r.error is not None for r in self.rows)} errored, {len(self.alarms)} alarms")
        return "\n".join(lines)


def scan_entry(entry: CatalogEntry, cap: int = DEFAULT_CAP, mode: str = "exhaustive") -> ScanRow:
    row = ScanRow(entry.name)
    if "_error" in entry.definition:
        row.error = entry.definition["_error"]
        return row
    try:
        G = group_from_definition(entry.definition, cap)
    except GroupError as exc:
        row.error = str(exc)
        return row
    rep = analyze_group(G, mode)
    row.order = G.order
    row.solvable = rep.solvable
    row.simple = is_simple(G)
    row.thompson = rep.thompson["present"]
    row.kaplan_levy = rep.kaplan_levy["present"]
    row.three_po = rep.three_po["holds"]
    row.three_ppo = rep.three_ppo["holds"]
    row.three_ss = rep.three_ss["holds"]
    row.flags = list(rep.consistency_flags)

    for key, actual in (("order", row.order), ("solvable", row.solvable), ("simple", row.simple)):
        if key in entry.expected and entry.expected[key] != actual:
            row.flags.append(f"expected {key}={entry.expected[key]}, computed {actual}")
    if row.simple and not G.is_abelian() and not row.three_po:
        row.flags.append("nonabelian simple group is not 3PO")

    if row.solvable and row.three_ppo:
        row.alarms.append(f"{entry.name} is solvable and 3PPO")
    if not row.solvable and not row.three_ppo:
        row.alarms.append(f"{entry.name} is nonsolvable but not 3PPO")
    return row


def scan(entries: Optional[Iterable[CatalogEntry]] = None, cap: int = DEFAULT_CAP,
         mode: str = "exhaustive") -> ScanResult:
    if entries is None:
        entries = builtin_catalog()
    return ScanResult([scan_entry(e, cap, mode) for e in entries])
