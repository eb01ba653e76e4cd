"""Condition reports: every check on one group, collected into a serialisable record."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field, fields

from .conditions import (
    find_3po_triple,
    find_3ppo_triple,
    find_3ss_witness,
    find_kaplan_levy_triple,
    find_thompson_triple,
)
from .group import FiniteGroup
from .numtheory import prime_divisors
from .structure import derived_series

__all__ = ["SCHEMA_VERSION", "ConditionReport", "analyze_group", "render_structured", "consistency_flags"]

SCHEMA_VERSION = 1

FEWER_PRIMES_NOTE = ("fewer than three distinct primes divide the group order, "
                     "so 3PO, 3PPO and 3SS are false by definition")


@dataclass
class ConditionReport:
    group_name: str
    order: int
    prime_divisors: list[int]
    solvable: bool
    derived_series_orders: list[int]
    thompson: dict
    kaplan_levy: dict
    three_po: dict
    three_ppo: dict
    three_ss: dict
    consistency_flags: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    _KEYS = {
        "group_name": "groupName", "order": "order", "prime_divisors": "primeDivisors",
        "solvable": "solvable", "derived_series_orders": "derivedSeriesOrders",
        "thompson": "thompson", "kaplan_levy": "kaplanLevy", "three_po": "threePO",
        "three_ppo": "threePPO", "three_ss": "threeSS",
        "consistency_flags": "consistencyFlags", "notes": "notes", "timings": "timings",
    }

    def to_dict(self, include_timings: bool = False) -> dict:
        out = {self._KEYS[f.name]: getattr(self, f.name) for f in fields(self)}
        if not include_timings:
            del out["timings"]
        return out

    @classmethod
    def from_dict(cls, d: dict) -> ConditionReport:
        kwargs = {name: d[key] for name, key in cls._KEYS.items() if key in d}
        return cls(**kwargs)

    def render_text(self) -> str:
        def line(label, summary, key="holds"):
            s = f"{label:<12} {'yes' if summary[key] else 'no'}"
            w = summary.get("witness")
            if w:
                s += f"  orders={tuple(w.get('orders', w.get('sylowOrders')))}"
                if "prime" in w:
                    s += f" p={w['prime']}"
                if "productSetSize" in w:
                    s += f" |P1P2P3|={w['productSetSize']} < {w['fullProduct']}"
            return s

        out = [
            f"group        {self.group_name}",
            f"order        {self.order} (primes {', '.join(map(str, self.prime_divisors))})",
            f"solvable     {'yes' if self.solvable else 'no'}  derived series "
            + " > ".join(map(str, self.derived_series_orders)),
            line("thompson", self.thompson, "present"),
            line("kaplan-levy", self.kaplan_levy, "present"),
            line("3PO", self.three_po),
            line("3PPO", self.three_ppo),
            line("3SS", self.three_ss),
        ]
        out += [f"note         {n}" for n in self.notes]
        out += [f"FLAG         {f}" for f in self.consistency_flags]
        if self.timings:
            out.append("timings      " + ", ".join(f"{k}={v:.3f}s" for k, v in self.timings.items()))
        return "\n".join(out)


def consistency_flags(solvable: bool, thompson: bool, kl: bool, po: bool, ppo: bool, ss: bool) -> list[str]:
    """Expected implications that fail for one group (normally empty)."""
    flags = []
    if po and not ppo:
        flags.append("3PO holds but 3PPO does not")
    if ppo and not thompson:
        flags.append("3PPO holds but no Thompson triple exists")
    if thompson == solvable:
        flags.append("Thompson triple presence disagrees with nonsolvability")
    if ppo != ss:
        flags.append("3PPO and 3SS disagree")
    if not solvable and not kl:
        flags.append("nonsolvable group without a Kaplan-Levy triple")
    return flags


def analyze_group(G: FiniteGroup, mode: str = "exhaustive") -> ConditionReport:
    timings = {}

    def timed(name, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        timings[name] = time.perf_counter() - t0
        return out

    series = timed("solvable", derived_series, G)
    solvable = series[-1].order == 1
    th = timed("thompson", find_thompson_triple, G)
    kl = timed("kaplanLevy", find_kaplan_levy_triple, G)
    po = timed("threePO", find_3po_triple, G)
    ppo = timed("threePPO", find_3ppo_triple, G)
    ss = timed("threeSS", find_3ss_witness, G, mode)

    primes = prime_divisors(G.order)
    notes = [FEWER_PRIMES_NOTE] if len(primes) < 3 else []
    three_ss = {"holds": ss is not None, "mode": mode, "witness": ss.as_dict() if ss else None}
    return ConditionReport(
        group_name=G.name,
        order=G.order,
        prime_divisors=primes,
        solvable=solvable,
        derived_series_orders=[H.order for H in series],
        thompson={"present": th is not None, "witness": th.as_dict() if th else None},
        kaplan_levy={"present": kl is not None, "witness": kl.as_dict() if kl else None},
        three_po={"holds": po is not None, "witness": po.as_dict() if po else None},
        three_ppo={"holds": ppo is not None, "witness": ppo.as_dict() if ppo else None},
        three_ss=three_ss,
        consistency_flags=consistency_flags(solvable, th is not None, kl is not None,
                                            po is not None, ppo is not None, ss is not None),
        notes=notes,
        timings=timings,
    )


def render_structured(doc: dict) -> str:
    """Canonical JSON rendering used for every structured output document."""
    return json.dumps(doc, indent=2, sort_keys=True)
