import copy
import itertools
import json

import pytest

from groupcond.algebraic import parse_algebraic
from groupcond.characters import (
    character_sum,
    character_sum_terms,
    load_character_table,
    match_classes,
    structure_constant_count,
)
from groupcond.conditions import brute_count_triples
from groupcond.errors import TableInconsistentError, TableInvalidError, WrongTableError
from groupcond.structure import conjugacy_classes

PAIRS = [("2a5", "SL(2,5)"), ("a5", "A5"), ("s3", "S3"), ("s4", "S4")]


def raw(table_path, name):
    return json.loads(table_path(name).read_text())


@pytest.mark.parametrize("name, n, order", [("2a5", 9, 120), ("a5", 5, 60), ("s3", 3, 6), ("s4", 5, 24)])
def test_shipped_tables_load(table_path, name, n, order):
    T = load_character_table(table_path(name))
    assert len(T.classes) == n == len(T.characters)
    assert sum(d * d for d in T.degrees) == order


def test_2a5_degrees_and_labels(table_path):
    T = load_character_table(table_path("2a5"))
    assert T.degrees == [1, 3, 3, 4, 5, 2, 2, 4, 6]
    for label in ("1A_1", "3A_0", "5A_0", "5B_0"):
        T.class_index(label)


def test_accepts_text_and_mapping(table_path):
    text = table_path("s3").read_text()
    assert load_character_table(text) == load_character_table(json.loads(text))


def mutated(doc, fn):
    d = copy.deepcopy(doc)
    fn(d)
    return d


@pytest.mark.parametrize("mutate, reason", [
    (lambda d: d["characters"][2].pop(), "shape"),
    (lambda d: d["characters"].pop(), "shape"),
    (lambda d: d["characters"][1].__setitem__(1, "1"), "orthogonality"),
    (lambda d: d["characters"][2].__setitem__(0, "3"), "degree-sum"),
    (lambda d: d["classes"][1].__setitem__("size", 2), "class-sizes"),
    (lambda d: d["classes"][1].__setitem__("inverseClassIndex", 2), "inverse-map"),
    (lambda d: d["classes"][2].__setitem__("powerMap", {"2": 1}), "power-map"),
    (lambda d: d["characters"][1].__setitem__(2, "E(3)"), "unsupported"),
    (lambda d: d["characters"][1].__setitem__(2, "1+"), "parse"),
    (lambda d: d.pop("groupOrder"), "parse"),
])
def test_invalid_s3_tables(table_path, mutate, reason):
    bad = mutated(raw(table_path, "s3"), mutate)
    with pytest.raises(TableInvalidError) as exc:
        load_character_table(bad)
    assert exc.value.reason == reason


def test_every_single_entry_perturbation_of_2a5_is_rejected(table_path):
    doc = raw(table_path, "2a5")
    for k, row in enumerate(doc["characters"]):
        for j in range(len(row)):
            bad = copy.deepcopy(doc)
            bad["characters"][k][j] = str(parse_algebraic(row[j]) + 1)
            with pytest.raises(TableInvalidError):
                load_character_table(bad)


def test_swapped_b5_entries_rejected(table_path):
    doc = raw(table_path, "2a5")
    row = doc["characters"][5]
    row[5], row[7] = row[7], row[5]  # 5A_0 <-> 5B_0 in one row only
    with pytest.raises(TableInvalidError):
        load_character_table(doc)


def test_not_json(table_path):
    with pytest.raises(TableInvalidError):
        load_character_table("{")


def test_complex_table_loads():
    w, w2 = "(-1+i*r3)/2", "(-1-i*r3)/2"
    doc = {
        "groupName": "C3", "groupOrder": 3,
        "classes": [
            {"label": "1A", "size": 1, "elementOrder": 1, "inverseClassIndex": 0},
            {"label": "3A", "size": 1, "elementOrder": 3, "inverseClassIndex": 2},
            {"label": "3B", "size": 1, "elementOrder": 3, "inverseClassIndex": 1},
        ],
        "characters": [["1", "1", "1"], ["1", w, w2], ["1", w2, w]],
    }
    T = load_character_table(doc)
    assert structure_constant_count(T, 1, 1, 1) == 1
    assert structure_constant_count(T, 1, 2, 0) == 1
    assert structure_constant_count(T, 1, 1, 2) == 0


def test_sl25_character_sums(table_path):
    T = load_character_table(table_path("2a5"))
    i2, i3, i5a, i5b = (T.class_index(l) for l in ("1A_1", "3A_0", "5A_0", "5B_0"))
    terms = character_sum_terms(T, i2, i3, i5a)
    b5, b5s = parse_algebraic("(-1+r5)/2"), parse_algebraic("(-1-r5)/2")
    assert terms == [1, 0, 0, -1, 0, b5, b5s, 1, 0]
    assert character_sum(T, i2, i3, i5a) == 0
    assert character_sum(T, i2, i3, i5b) == 0
    assert structure_constant_count(T, i2, i3, i5a) == 0
    assert structure_constant_count(T, i2, i3, i5b) == 0


@pytest.mark.parametrize("name", ["2a5", "a5", "s3", "s4"])
def test_identity_triple(table_path, name):
    T = load_character_table(table_path(name))
    assert character_sum(T, 0, 0, 0) == T.group_order
    assert structure_constant_count(T, 0, 0, 0) == 1


def test_index_out_of_range(table_path):
    T = load_character_table(table_path("s3"))
    with pytest.raises(IndexError):
        character_sum(T, 0, 0, 3)


def test_inconsistent_table_detected(table_path):
    # build a table object that skips validation and carries a wrong class size
    from dataclasses import replace
    T = load_character_table(table_path("s3"))
    bad = replace(T, classes=(T.classes[0], replace(T.classes[1], size=2), T.classes[2]))
    with pytest.raises(TableInconsistentError):
        structure_constant_count(bad, 1, 1, 0)


@pytest.mark.parametrize("tname, gname", PAIRS)
def test_character_count_equals_brute_count(table_path, groups, tname, gname):
    T = load_character_table(table_path(tname))
    G = groups[gname]
    m = match_classes(G, T)
    n = len(T.classes)
    for i, j, k in itertools.product(range(n), repeat=3):
        brute = brute_count_triples(G, m[i], m[j], m[k])
        assert structure_constant_count(T, i, j, k) == brute
        assert (character_sum(T, i, j, k) == 0) == (brute == 0)


def test_matching_sl25(table_path, sl25):
    T = load_character_table(table_path("2a5"))
    m = match_classes(sl25, T)
    assert len(m) == 9
    assert len(set(m.values())) == 9
    assert m.ambiguous and len(m.alternatives) == 2
    a, b = T.class_index("5A_0"), T.class_index("5B_0")
    for alt in m.alternatives:
        rep = alt[a].representative
        assert rep ** 2 in alt[b]
    # the two alternatives differ exactly on the order-5 and order-10 pairs
    diff = {T.classes[i].label for i in range(9) if m.alternatives[0][i] != m.alternatives[1][i]}
    assert diff == {"5A_0", "5A_1", "5B_0", "5B_1"}


def test_matching_alternatives_are_count_equivalent(table_path, groups):
    T = load_character_table(table_path("2a5"))
    G = groups["SL(2,5)"]
    m = match_classes(G, T)
    n = len(T.classes)
    for alt in m.alternatives:
        for i, j, k in itertools.product(range(n), repeat=3):
            assert structure_constant_count(T, i, j, k) == brute_count_triples(G, alt[i], alt[j], alt[k])


def test_matching_errors(table_path, groups):
    with pytest.raises(WrongTableError):
        match_classes(groups["A5"], load_character_table(table_path("2a5")))
    with pytest.raises(WrongTableError):
        match_classes(groups["C6"], load_character_table(table_path("s3")))


def test_matching_s3_unique(table_path, s3):
    m = match_classes(s3, load_character_table(table_path("s3")))
    assert not m.ambiguous
    assert [c.label for c in m.values()] == [c.label for c in conjugacy_classes(s3)]
