"""Fully enumerated finite groups.

A :class:`FiniteGroup` stores its elements in breadth-first insertion order.
Elements are addressed internally by their position in that tuple; the
Cayley table, inverse map and element orders are numpy arrays over those
positions and are computed lazily on first use.  Searches that need a
reproducible "first" answer walk ``group.canonical``, the positions sorted by
canonical element key.
"""
from __future__ import annotations

import json
from collections import deque
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import numpy as np

from .elements import GroupElement, MatrixElement, Permutation
from .errors import DefinitionError, IncompatibleElementsError, NotInGroupError, OrderCapExceededError

__all__ = ["DEFAULT_CAP", "FiniteGroup", "generate_group", "group_from_definition", "load_group"]

DEFAULT_CAP = 100_000

# rows of the Cayley table computed per numpy batch
_ROW_CHUNK = 64


class FiniteGroup:
    """A finite group given by the complete list of its elements."""

    def __init__(self, elements: Sequence[GroupElement], generators: Sequence[GroupElement] = (),
                 name: str = ""):
        self.elements = tuple(elements)
        if not self.elements:
            raise DefinitionError("a group needs at least its identity")
        self.identity = self.elements[0].identity_like()
        self.generators = tuple(generators)
        self.name = name
        self._index = {g: i for i, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise DefinitionError("duplicate elements")
        if self.identity not in self._index:
            raise DefinitionError("identity missing from element list")
        for g in self.generators:
            self.index(g)

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._index

    @property
    def shape(self) -> tuple:
        return self.identity.shape

    @property
    def kind(self) -> str:
        return self.identity.kind

    def index(self, g: GroupElement) -> int:
        try:
            return self._index[g]
        except (KeyError, TypeError):
            raise NotInGroupError(f"{g} is not an element of {self.name or 'the group'}") from None

    @cached_property
    def identity_index(self) -> int:
        return self._index[self.identity]

    @cached_property
    def canonical(self) -> np.ndarray:
        """Element positions sorted by canonical key."""
        return np.array(sorted(range(self.order), key=lambda i: self.elements[i].key), dtype=np.intp)

    @cached_property
    def rank(self) -> np.ndarray:
        """rank[i] is the position of element i in canonical order."""
        r = np.empty(self.order, dtype=np.intp)
        r[self.canonical] = np.arange(self.order)
        return r

    @cached_property
    def table(self) -> np.ndarray:
        """Cayley table: ``table[a, b]`` is the position of elements[a] * elements[b]."""
        return _cayley_table(self)

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmax(self.table == self.identity_index, axis=1)

    @cached_property
    def orders(self) -> np.ndarray:
        n, e = self.order, self.identity_index
        out = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        k = 1
        while not out.all():
            out[(cur == e) & (out == 0)] = k
            cur = self.table[cur, np.arange(n)]
            k += 1
        return out

    def element_order(self, g: GroupElement) -> int:
        return int(self.orders[self.index(g)])

    def is_abelian(self) -> bool:
        t = self.table
        return bool((t == t.T).all())


def _codes(rows: np.ndarray, base: int) -> np.ndarray:
    weights = base ** np.arange(rows.shape[-1] - 1, -1, -1, dtype=np.int64)
    return rows @ weights


def _cayley_table(G: FiniteGroup) -> np.ndarray:
    n = G.order
    if G.kind == "permutation":
        deg = G.shape[1]
        digits, base = deg, deg
        data = np.array([g.images for g in G.elements], dtype=np.int64) - 1
    else:
        d, p = G.shape[1], G.shape[2]
        digits, base = d * d, p
        data = np.array([g.entries for g in G.elements], dtype=np.int64).reshape(n, d, d)

    if digits * np.log2(max(base, 2)) > 62:
        return _cayley_table_slow(G)

    flat = data.reshape(n, -1)
    codes = _codes(flat, base)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((n, n), dtype=np.int32)
    for start in range(0, n, _ROW_CHUNK):
        rows = slice(start, min(start + _ROW_CHUNK, n))
        if G.kind == "permutation":
            # prod[a, b, i] = data[b, data[a, i]]  (apply a, then b)
            prod = data[np.arange(n)[None, :, None], data[rows][:, None, :]]
        else:
            prod = np.einsum("aij,bjk->abik", data[rows], data) % base
        pc = _codes(prod.reshape(prod.shape[0], n, -1), base)
        pos = np.searchsorted(sorted_codes, pc)
        table[rows] = order[pos]
    return table


def _cayley_table_slow(G: FiniteGroup) -> np.ndarray:
    n = G.order
    table = np.empty((n, n), dtype=np.int32)
    for a, ga in enumerate(G.elements):
        for b, gb in enumerate(G.elements):
            table[a, b] = G._index[ga._mul(gb)]
    return table


def generate_group(generators: Iterable[GroupElement], cap: int = DEFAULT_CAP, *,
                   identity: GroupElement | None = None, name: str = "") -> FiniteGroup:
    """Enumerate the group generated by ``generators`` by breadth-first closure.

    Elements are discovered by right-multiplying known elements by each
    generator in turn, starting from the identity.  Pass ``identity`` to fix
    the shape when ``generators`` is empty.

    Raises OrderCapExceededError as soon as more than ``cap`` elements appear.
    """
    gens = list(generators)
    if not gens and identity is None:
        raise DefinitionError("an empty generating set needs an explicit identity")
    one = (identity if identity is not None else gens[0]).identity_like()
    for g in gens:
        if g.shape != one.shape:
            raise IncompatibleElementsError(f"generator {g} does not match shape {one.shape}")
    seen = {one: None}
    queue = deque([one])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = g._mul(s)
            if h not in seen:
                seen[h] = None
                if len(seen) > cap:
                    raise OrderCapExceededError(cap)
                queue.append(h)
    return FiniteGroup(list(seen), gens, name=name)


def group_from_definition(doc: Mapping, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Build a group from a parsed definition document.

    Permutation form::

        {"name": "A5", "kind": "permutation", "degree": 5,
         "generators": ["(1 2 3 4 5)", "(1 2 3)"]}

    Matrix form::

        {"name": "SL(2,5)", "kind": "matrix", "dimension": 2, "modulus": 5,
         "generators": [[[1, 1], [0, 1]], [[0, 1], [4, 0]]]}
    """
    if not isinstance(doc, Mapping):
        raise DefinitionError("group definition must be a JSON object")
    kind = doc.get("kind")
    name = str(doc.get("name", ""))
    raw = doc.get("generators", [])
    if not isinstance(raw, list):
        raise DefinitionError("'generators' must be a list")
    try:
        if kind == "permutation":
            degree = int(doc["degree"])
            if degree < 1:
                raise DefinitionError("degree must be positive")
            gens = [Permutation.from_cycles(_as_str(s), degree) for s in raw]
            identity = Permutation.identity(degree)
        elif kind == "matrix":
            dim, mod = int(doc["dimension"]), int(doc["modulus"])
            gens = []
            for m in raw:
                if not isinstance(m, list) or len(m) != dim or any(
                        not isinstance(r, list) or len(r) != dim for r in m):
                    raise DefinitionError(f"generator {m!r} is not a {dim}x{dim} matrix")
                gens.append(MatrixElement(m, mod))
            identity = MatrixElement.identity(dim, mod)
        else:
            raise DefinitionError(f"unknown kind {kind!r}; expected 'permutation' or 'matrix'")
    except KeyError as exc:
        raise DefinitionError(f"missing field {exc.args[0]!r}") from None
    except (TypeError, ValueError) as exc:
        if isinstance(exc, DefinitionError):
            raise
        raise DefinitionError(str(exc)) from None
    return generate_group(gens, cap, identity=identity, name=name)


def _as_str(s) -> str:
    if not isinstance(s, str):
        raise DefinitionError(f"permutation generator {s!r} must be a cycle string")
    return s


def load_group(path, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """Read a JSON group definition file and enumerate it."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DefinitionError(f"{path}: {exc}") from None
    return group_from_definition(doc, cap)
