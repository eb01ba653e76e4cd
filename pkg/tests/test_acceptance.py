"""Acceptance checks.  Each test prints one line: ``[PASS] A<n> ...`` or ``[FAIL] A<n> ...``."""
import json
import time
from itertools import product

import pytest

from groupcond import cli
from groupcond.algebraic import AlgebraicValue, parse_algebraic
from groupcond.characters import (
    character_sum,
    character_sum_terms,
    load_character_table,
    match_classes,
    structure_constant_count,
)
from groupcond.conditions import (
    brute_count_triples,
    collision_to_ppo_triple,
    find_3ppo_triple,
    find_3ss_witness,
    find_kaplan_levy_triple,
    find_thompson_triple,
    is_3po,
    is_3ppo,
    is_3ss,
    ppo_triple_to_sylow_witness,
    triple_order_profiles,
)
from groupcond.errors import TableInvalidError
from groupcond.numtheory import prime_power_base
from groupcond.structure import conjugacy_classes, is_simple, is_solvable

from conftest import CATALOG


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] A{n} {detail}")
        assert ok, detail
    return emit


def by_order(G, n):
    return [c for c in conjugacy_classes(G) if c.element_order == n]


def test_a1_sl25_not_3po(sl25, table_path, verdict):
    t0 = time.perf_counter()
    (c2,), (c3,) = by_order(sl25, 2), by_order(sl25, 3)
    fives = by_order(sl25, 5)
    brute = [brute_count_triples(sl25, c2, c3, c5) for c5 in fives]
    T = load_character_table(table_path("2a5"))
    idx = [T.class_index(lab) for lab in ("1A_1", "3A_0", "5A_0", "5B_0")]
    char = [structure_constant_count(T, idx[0], idx[1], k) for k in idx[2:]]
    sums = [character_sum(T, idx[0], idx[1], k) for k in idx[2:]]
    po = is_3po(sl25)
    elapsed = time.perf_counter() - t0
    ok = (len(fives) == 2 and brute == [0, 0] and char == [0, 0]
          and all(s.is_zero() for s in sums) and not po and elapsed < 5)
    verdict(1, ok, f"SL(2,5): brute={brute} character={char} exact-zero sums="
                   f"{[s.is_zero() for s in sums]} is_3po={po} ({elapsed:.2f}s < 5s)")


def test_a2_character_sum_terms(table_path, verdict):
    T = load_character_table(table_path("2a5"))
    i2, i3, i5a, i5b = (T.class_index(lab) for lab in ("1A_1", "3A_0", "5A_0", "5B_0"))
    b5 = parse_algebraic("(-1+r5)/2")
    b5s = parse_algebraic("(-1-r5)/2")
    golden = [AlgebraicValue.coerce(v) for v in (1, 0, 0, -1, 0)] + [b5, b5s, AlgebraicValue.coerce(1),
                                                                      AlgebraicValue.coerce(0)]
    terms = character_sum_terms(T, i2, i3, i5a)
    s_a, s_b = character_sum(T, i2, i3, i5a), character_sum(T, i2, i3, i5b)
    ok = terms == golden and s_a == 0 and s_b == 0
    verdict(2, ok, "2.A5 terms (1A_1,3A_0,5A_0) = " + " + ".join(f"({t})" for t in terms)
            + f"; sums {s_a}, {s_b}")


def test_a3_3ppo_equals_3ss(groups, verdict):
    t0 = time.perf_counter()
    mismatches, trips = [], []
    for name, G in groups.items():
        ppo, ss = is_3ppo(G), is_3ss(G, "exhaustive")
        if ppo != ss:
            mismatches.append(name)
        w = find_3ss_witness(G, "exhaustive")
        if w is None:
            continue
        t = collision_to_ppo_triple(w)
        t.validate()
        back = ppo_triple_to_sylow_witness(G, find_3ppo_triple(G))
        back.validate()
        if back.product_set_size >= back.full_product or t.flavor != "3ppo":
            trips.append(name)
    elapsed = time.perf_counter() - t0
    ok = len(groups) == 12 and not mismatches and not trips and elapsed < 120
    verdict(3, ok, f"3PPO = 3SS on {len(groups) - len(mismatches)}/{len(groups)} groups; "
                   f"round-trip failures {trips} ({elapsed:.1f}s < 120s)")


def test_a4_thompson(groups, verdict):
    mismatches = [n for n, G in groups.items() if (find_thompson_triple(G) is not None) == is_solvable(G)]
    solvable = sum(is_solvable(G) for G in groups.values())
    ok = not mismatches and solvable == 6 and len(groups) == 12
    verdict(4, ok, f"Thompson triple iff nonsolvable: {solvable} solvable, {len(groups) - solvable} "
                   f"nonsolvable, mismatches {mismatches}")


def test_a5_kaplan_levy(groups, verdict):
    failures = []
    for name, G in groups.items():
        if is_solvable(G):
            continue
        t = find_kaplan_levy_triple(G)
        if t is None:
            failures.append(name)
            continue
        ox, oy, oz = t.orders
        p = t.prime
        good = (prime_power_base(ox) == 2 and p % 2 == 1 and prime_power_base(oy) == p
                and oz % 2 != 0 and oz % p != 0 and oz > 1)
        if not good:
            failures.append(name)
    simple = sorted(n for n, G in groups.items() if is_simple(G) and not G.is_abelian())
    not_po = [n for n in simple if not is_3po(groups[n])]
    ok = not failures and simple == ["A5", "A6", "PSL(2,7)"] and not not_po
    verdict(5, ok, f"Kaplan-Levy failures {failures}; nonabelian simple {simple}, not 3PO {not_po}")


def test_a6_sl25_profile(sl25, verdict):
    t0 = time.perf_counter()
    t = find_3ppo_triple(sl25)
    profiles = triple_order_profiles(sl25, "3ppo")
    elapsed = time.perf_counter() - t0
    ok = (t is not None and sorted(t.orders) == [3, 4, 5] and set(profiles) == {(3, 4, 5)}
          and elapsed < 10)
    verdict(6, ok, f"SL(2,5) 3PPO witness orders {t and t.orders}; all profiles {profiles} "
                   f"({elapsed:.2f}s < 10s)")


PAIRS = [("SL(2,5)", "2a5"), ("A5", "a5"), ("S3", "s3"), ("S4", "s4")]


def test_a7_counting_oracle(groups, table_path, verdict):
    t0 = time.perf_counter()
    bad, total, notes = [], 0, []
    for gname, tname in PAIRS:
        G = groups[gname]
        T = load_character_table(table_path(tname))
        m = match_classes(G, T)
        n = len(T.classes)
        for i, j, k in product(range(n), repeat=3):
            total += 1
            if structure_constant_count(T, i, j, k) != brute_count_triples(G, m[i], m[j], m[k]):
                bad.append((gname, i, j, k))
        if m.ambiguous:
            notes.append(f"{gname}: {len(m.alternatives)} matchings")
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    verdict(7, ok, f"{total} class triples, {len(bad)} disagreements; ambiguous {notes} "
                   f"({elapsed:.1f}s < 60s)")


def test_a8_table_validation(table_path, verdict):
    shipped = {}
    for name in ("2a5", "a5", "s3", "s4"):
        T = load_character_table(table_path(name))
        shipped[name] = sum(d * d for d in T.degrees) == T.group_order
    doc = json.loads(table_path("2a5").read_text(encoding="utf-8"))
    doc["characters"][3][2] = "1"
    try:
        load_character_table(doc)
        rejected = None
    except TableInvalidError as exc:
        rejected = exc.reason
    ok = all(shipped.values()) and rejected is not None
    verdict(8, ok, f"shipped tables valid {shipped}; perturbed 2.A5 entry rejected ({rejected})")


def test_a9_scan(capsys, verdict):
    code = cli.main(["scan", "--format", "structured"])
    doc = json.loads(capsys.readouterr().out)
    ok = code == 0 and doc["alarms"] == [] and len(doc["rows"]) == len(CATALOG) == 12
    verdict(9, ok, f"catalog scan: {len(doc['rows'])} groups, {len(doc['alarms'])} alarms, exit {code}")
