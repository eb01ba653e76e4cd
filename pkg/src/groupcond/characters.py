"""Character tables with exact entries, class-multiplication counts and class matching.

Table documents are JSON::

    {
      "groupName": "A5",
      "groupOrder": 60,
      "classes": [
        {"label": "1A", "size": 1, "elementOrder": 1, "inverseClassIndex": 0,
         "powerMap": {"2": 0}},
        ...
      ],
      "characters": [["1", "1", ...], ["3", "-1", "0", "(1-r5)/2", "(1+r5)/2"], ...]
    }

Class indices are 0-based.  ``powerMap`` maps an exponent k (as a string) to
the index of the class containing g**k.  Entries use the grammar of
:func:`groupcond.algebraic.parse_algebraic`; plain JSON integers are accepted
too.  The identity class must come first.
"""
from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from math import gcd

from .algebraic import AlgebraicParseError, AlgebraicValue, parse_algebraic
from .errors import TableInconsistentError, TableInvalidError, WrongTableError
from .group import FiniteGroup
from .structure import ConjugacyClass, class_of, conjugacy_classes

__all__ = [
    "ClassInfo",
    "CharacterTable",
    "ClassMatching",
    "load_character_table",
    "character_sum",
    "character_sum_terms",
    "structure_constant_count",
    "match_classes",
]


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    element_order: int
    inverse_class_index: int
    power_map: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CharacterTable:
    group_name: str
    group_order: int
    classes: tuple[ClassInfo, ...]
    characters: tuple[tuple[AlgebraicValue, ...], ...]

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].rational_part()) for row in self.characters]

    def class_index(self, label: str) -> int:
        for i, c in enumerate(self.classes):
            if c.label == label:
                return i
        raise KeyError(f"no class labelled {label!r} in table {self.group_name}")

    def validate(self):
        """Check shape, degrees, class sizes, column orthogonality, inverse and power maps."""
        n = len(self.classes)
        if n == 0:
            raise TableInvalidError("shape", "table has no classes")
        if len(self.characters) != n:
            raise TableInvalidError("shape", f"{len(self.characters)} characters for {n} classes")
        for k, row in enumerate(self.characters):
            if len(row) != n:
                raise TableInvalidError("shape", f"character {k + 1} has {len(row)} entries, expected {n}")
        first = self.classes[0]
        if first.size != 1 or first.element_order != 1:
            raise TableInvalidError("shape", "class 0 must be the identity class")
        for k, row in enumerate(self.characters):
            if not row[0].is_integer() or row[0].rational_part() <= 0:
                raise TableInvalidError("shape", f"character {k + 1} has degree {row[0]}")
        if sum(c.size for c in self.classes) != self.group_order:
            raise TableInvalidError("class-sizes", "class sizes do not sum to the group order")
        if sum(d * d for d in self.degrees) != self.group_order:
            raise TableInvalidError(
                "degree-sum", f"sum of squared degrees is {sum(d * d for d in self.degrees)}, "
                f"not {self.group_order}")
        self._check_inverse_map()
        self._check_power_maps()
        cols = list(zip(*self.characters))
        for i in range(n):
            for j in range(i, n):
                s = sum((a * b.conjugate() for a, b in zip(cols[i], cols[j])), AlgebraicValue())
                want = Fraction(self.group_order, self.classes[i].size) if i == j else 0
                if s != want:
                    raise TableInvalidError(
                        "orthogonality",
                        f"columns {self.classes[i].label} and {self.classes[j].label} give {s}, expected {want}")

    def _check_inverse_map(self):
        n = len(self.classes)
        for i, c in enumerate(self.classes):
            j = c.inverse_class_index
            if not 0 <= j < n:
                raise TableInvalidError("inverse-map", f"class {c.label}: inverse index {j} out of range")
            other = self.classes[j]
            if other.inverse_class_index != i:
                raise TableInvalidError("inverse-map", f"class {c.label}: inverse map is not an involution")
            if other.element_order != c.element_order or other.size != c.size:
                raise TableInvalidError("inverse-map", f"class {c.label} and its inverse class differ")
            for row in self.characters:
                if row[j] != row[i].conjugate():
                    raise TableInvalidError(
                        "inverse-map", f"character values on {c.label} and its inverse are not conjugate")

    def _check_power_maps(self):
        n = len(self.classes)
        for c in self.classes:
            for k, j in c.power_map.items():
                if not 0 <= j < n:
                    raise TableInvalidError("power-map", f"class {c.label}: power map target {j} out of range")
                want = c.element_order // gcd(c.element_order, k)
                if self.classes[j].element_order != want:
                    raise TableInvalidError(
                        "power-map", f"class {c.label}: {k}th powers have order {want}, "
                        f"but class {self.classes[j].label} has order {self.classes[j].element_order}")


def _int_field(rec, name, where):
    v = rec.get(name)
    if isinstance(v, bool) or not isinstance(v, int):
        raise TableInvalidError("parse", f"{where}: field {name!r} must be an integer")
    return v


def load_character_table(document) -> CharacterTable:
    """Parse and validate a table from JSON text, a parsed mapping, or a path-like object."""
    if hasattr(document, "read_text"):
        document = document.read_text(encoding="utf-8")
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise TableInvalidError("parse", str(exc)) from None
    if not isinstance(document, Mapping):
        raise TableInvalidError("parse", "table document must be a JSON object")
    try:
        raw_classes = document["classes"]
        raw_chars = document["characters"]
        name = str(document.get("groupName", ""))
        order = document["groupOrder"]
    except KeyError as exc:
        raise TableInvalidError("parse", f"missing field {exc.args[0]!r}") from None
    if isinstance(order, bool) or not isinstance(order, int) or order < 1:
        raise TableInvalidError("parse", "groupOrder must be a positive integer")
    if not isinstance(raw_classes, list) or not isinstance(raw_chars, list):
        raise TableInvalidError("parse", "classes and characters must be lists")
    classes = []
    for i, rec in enumerate(raw_classes):
        if not isinstance(rec, Mapping):
            raise TableInvalidError("parse", f"class record {i} is not an object")
        where = f"class {i}"
        pm = rec.get("powerMap", {})
        if not isinstance(pm, Mapping):
            raise TableInvalidError("parse", f"{where}: powerMap must be an object")
        try:
            power_map = {int(k): int(v) for k, v in pm.items()}
        except (TypeError, ValueError):
            raise TableInvalidError("parse", f"{where}: powerMap keys and values must be integers") from None
        classes.append(ClassInfo(
            label=str(rec.get("label", i)),
            size=_int_field(rec, "size", where),
            element_order=_int_field(rec, "elementOrder", where),
            inverse_class_index=_int_field(rec, "inverseClassIndex", where),
            power_map=power_map,
        ))
    rows = []
    for k, row in enumerate(raw_chars):
        if not isinstance(row, list):
            raise TableInvalidError("parse", f"character {k + 1} is not a list")
        try:
            rows.append(tuple(parse_algebraic(v) for v in row))
        except AlgebraicParseError as exc:
            reason = "unsupported" if "cyclotomic" in str(exc) else "parse"
            raise TableInvalidError(reason, f"character {k + 1}: {exc}") from None
    table = CharacterTable(name, order, tuple(classes), tuple(rows))
    table.validate()
    return table


def _check_index(T: CharacterTable, *idx):
    for i in idx:
        if not 0 <= i < len(T.classes):
            raise IndexError(f"class index {i} out of range for table {T.group_name}")


def character_sum_terms(T: CharacterTable, i: int, j: int, k: int) -> list[AlgebraicValue]:
    """Per-character terms chi(g_i) chi(g_j) chi(g_k) / chi(1), in table order."""
    _check_index(T, i, j, k)
    return [row[i] * row[j] * row[k] / row[0] for row in T.characters]


def character_sum(T: CharacterTable, i: int, j: int, k: int) -> AlgebraicValue:
    return sum(character_sum_terms(T, i, j, k), AlgebraicValue())


def structure_constant_count(T: CharacterTable, i: int, j: int, k: int) -> int:
    """#{(x, y, z) in C_i x C_j x C_k : x y z = 1} from the character table.

    Evaluates (|C_i||C_j||C_k| / |G|) * sum_chi chi(g_i) chi(g_j) conj(chi(g_k^-1)) / chi(1).
    """
    _check_index(T, i, j, k)
    kinv = T.classes[k].inverse_class_index
    s = sum((row[i] * row[j] * row[kinv].conjugate() / row[0] for row in T.characters), AlgebraicValue())
    c = T.classes
    value = s * Fraction(c[i].size * c[j].size * c[k].size, T.group_order)
    if not value.is_integer() or value.rational_part() < 0:
        raise TableInconsistentError(
            f"class triple ({c[i].label}, {c[j].label}, {c[k].label}) gives {value}, "
            "not a nonnegative integer")
    return int(value.rational_part())


@dataclass
class ClassMatching(Mapping):
    """Bijection from table class index to computed conjugacy class.

    ``alternatives`` lists every bijection consistent with element orders,
    class sizes, inverse classes and declared power maps; ``mapping`` is the
    first of them.  More than one alternative means the table cannot tell
    those classes apart (e.g. 5A/5B of A5).
    """

    mapping: dict
    alternatives: list = field(default_factory=list)

    @property
    def ambiguous(self) -> bool:
        return len(self.alternatives) > 1

    def __getitem__(self, i):
        return self.mapping[i]

    def __iter__(self):
        return iter(self.mapping)

    def __len__(self):
        return len(self.mapping)

    def table_index(self, cls: ConjugacyClass) -> int:
        for i, c in self.mapping.items():
            if c == cls:
                return i
        raise KeyError(cls.label)


def match_classes(G: FiniteGroup, T: CharacterTable) -> ClassMatching:
    """Match table classes to computed classes by (element order, size), then power maps."""
    if G.order != T.group_order:
        raise WrongTableError(f"group order {G.order} differs from table order {T.group_order}")
    computed = conjugacy_classes(G)
    buckets_c: dict[tuple, list] = {}
    for c in computed:
        buckets_c.setdefault((c.element_order, c.size), []).append(c)
    buckets_t: dict[tuple, list] = {}
    for i, c in enumerate(T.classes):
        buckets_t.setdefault((c.element_order, c.size), []).append(i)
    if {k: len(v) for k, v in buckets_c.items()} != {k: len(v) for k, v in buckets_t.items()}:
        raise WrongTableError(
            f"class profile of {G.name or 'the group'} does not match table {T.group_name}")

    # class of g^k for every class and every exponent the table declares (plus -1)
    exps = {-1} | {k for c in T.classes for k in c.power_map}
    power_of = {(c, k): class_of(G, c.representative ** k) for c in computed for k in exps}

    keys = sorted(buckets_t)
    choices = [list(permutations(buckets_c[key])) for key in keys]
    valid = []
    for combo in product(*choices):
        mapping = {}
        for key, perm in zip(keys, combo):
            mapping.update(zip(buckets_t[key], perm))
        if _consistent(T, mapping, power_of):
            valid.append(dict(sorted(mapping.items())))
    if not valid:
        raise WrongTableError(f"no class bijection respects the power maps of table {T.group_name}")
    return ClassMatching(valid[0], valid)


def _consistent(T, mapping, power_of) -> bool:
    for i, info in enumerate(T.classes):
        c = mapping[i]
        if power_of[(c, -1)] != mapping[info.inverse_class_index]:
            return False
        for k, j in info.power_map.items():
            if power_of[(c, k)] != mapping[j]:
                return False
    return True
