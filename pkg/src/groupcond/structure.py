"""Conjugacy classes, subgroups, derived series and Sylow subgroups.

Everything here works on the Cayley table of a fully enumerated group.
Subgroups and classes remember their parent group and hold member positions
in canonical order, so iteration over them is deterministic.
"""
from __future__ import annotations

import string
from functools import cached_property
from typing import Iterable

import numpy as np

from .elements import GroupElement
from .errors import NotInGroupError, NotPElementError, PrimeNotDividingError
from .group import FiniteGroup
from .numtheory import p_part, prime_power_base

__all__ = [
    "Subgroup",
    "ConjugacyClass",
    "whole_group",
    "conjugacy_classes",
    "centralizer_order",
    "subgroup_generated",
    "derived_subgroup",
    "derived_series",
    "is_solvable",
    "normal_closure",
    "is_simple",
    "normalizer",
    "sylow_subgroup",
    "sylow_containing",
    "sylow_conjugates",
]


class _MemberSet:
    """Shared machinery for a canonically ordered set of positions in a parent group."""

    def __init__(self, parent: FiniteGroup, members):
        self.parent = parent
        mask = np.zeros(parent.order, dtype=bool)
        mask[np.asarray(list(members) if not isinstance(members, np.ndarray) else members,
                        dtype=np.intp)] = True
        self.mask = mask
        idx = np.flatnonzero(mask)
        self.indices = idx[np.argsort(parent.rank[idx])]

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        if isinstance(g, GroupElement):
            return g in self.parent and bool(self.mask[self.parent.index(g)])
        return bool(self.mask[g])

    @property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(self.parent.elements[i] for i in self.indices)

    @property
    def members(self) -> frozenset:
        """Canonical keys of the members."""
        return frozenset(self.parent.elements[i].key for i in self.indices)

    @cached_property
    def _frozen(self) -> frozenset:
        return frozenset(self.indices.tolist())


class Subgroup(_MemberSet):
    def __init__(self, parent: FiniteGroup, members, generators: Iterable[GroupElement] = ()):
        super().__init__(parent, members)
        self.generators = tuple(generators)

    @property
    def order(self) -> int:
        return len(self.indices)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and bool((self.mask == other.mask).all())

    def __hash__(self):
        return hash((id(self.parent), self._frozen))

    def __repr__(self):
        return f"Subgroup(order={self.order} of {self.parent.name or self.parent.order})"

    def sort_key(self) -> tuple:
        return tuple(self.parent.rank[self.indices].tolist())


class ConjugacyClass(_MemberSet):
    def __init__(self, parent: FiniteGroup, members, label: str = ""):
        super().__init__(parent, members)
        self.label = label

    @property
    def representative(self) -> GroupElement:
        """Canonically smallest member."""
        return self.parent.elements[self.indices[0]]

    @property
    def size(self) -> int:
        return len(self.indices)

    @property
    def element_order(self) -> int:
        return int(self.parent.orders[self.indices[0]])

    def __eq__(self, other):
        if not isinstance(other, ConjugacyClass):
            return NotImplemented
        return self.parent is other.parent and bool((self.mask == other.mask).all())

    def __hash__(self):
        return hash((id(self.parent), self._frozen))

    def __repr__(self):
        return f"ConjugacyClass({self.label}, size={self.size}, order={self.element_order})"


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, np.arange(G.order), G.generators)


def _as_subgroup(H) -> Subgroup:
    return whole_group(H) if isinstance(H, FiniteGroup) else H


def _closure(G: FiniteGroup, gens) -> np.ndarray:
    """Mask of the subgroup generated by positions ``gens``."""
    gens = np.unique(np.asarray(gens, dtype=np.intp))
    mask = np.zeros(G.order, dtype=bool)
    mask[G.identity_index] = True
    gens = gens[gens != G.identity_index]
    if gens.size == 0:
        return mask
    mask[gens] = True
    frontier = gens
    t = G.table
    while frontier.size:
        prods = np.unique(t[np.ix_(frontier, gens)])
        frontier = prods[~mask[prods]]
        mask[frontier] = True
    return mask


def _letters(k: int) -> str:
    s = ""
    k += 1
    while k:
        k, r = divmod(k - 1, 26)
        s = string.ascii_uppercase[r] + s
    return s


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Classes ordered by (element order, size, smallest member key), labelled 1A, 2A, 2B, ...

    The result is cached on the group object.
    """
    cached = G.__dict__.get("_classes")
    if cached is not None:
        return cached
    t, inv = G.table, G.inverses
    everything = np.arange(G.order)
    assigned = np.zeros(G.order, dtype=bool)
    raw = []
    for g in G.canonical:
        if assigned[g]:
            continue
        # h^-1 g h over all h
        orbit = np.unique(t[t[inv, g], everything])
        assigned[orbit] = True
        raw.append(orbit)
    orders = G.orders
    raw.sort(key=lambda orb: (int(orders[orb[0]]), len(orb), int(G.rank[orb].min())))
    classes, letter_count = [], {}
    for orb in raw:
        o = int(orders[orb[0]])
        n = letter_count.get(o, 0)
        letter_count[o] = n + 1
        classes.append(ConjugacyClass(G, orb, label=f"{o}{_letters(n)}"))
    G.__dict__["_classes"] = classes
    return classes


def class_of(G: FiniteGroup, g: GroupElement) -> ConjugacyClass:
    i = G.index(g)
    return next(c for c in conjugacy_classes(G) if c.mask[i])


def centralizer_order(G: FiniteGroup, g: GroupElement) -> int:
    i = G.index(g)
    t = G.table
    return int((t[:, i] == t[i, :]).sum())


def subgroup_generated(G: FiniteGroup, S: Iterable[GroupElement]) -> Subgroup:
    S = list(S)
    idx = [G.index(s) for s in S]
    return Subgroup(G, np.flatnonzero(_closure(G, idx)), S)


def derived_subgroup(H) -> Subgroup:
    """Subgroup generated by every commutator a^-1 b^-1 a b with a, b in H."""
    H = _as_subgroup(H)
    G = H.parent
    t, inv, h = G.table, G.inverses, H.indices
    comm = t[t[np.ix_(inv[h], inv[h])], t[np.ix_(h, h)]]
    gens = np.unique(comm)
    sub = Subgroup(G, np.flatnonzero(_closure(G, gens)))
    sub.generators = tuple(G.elements[i] for i in gens)
    return sub


def derived_series(G) -> list[Subgroup]:
    """G = G0 > G1 > ... down to the first term equal to its own derived subgroup."""
    series = [_as_subgroup(G)]
    while True:
        nxt = derived_subgroup(series[-1])
        if nxt.order == series[-1].order:
            return series
        series.append(nxt)


def is_solvable(G) -> bool:
    return derived_series(G)[-1].order == 1


def normal_closure(G: FiniteGroup, S: Iterable[GroupElement]) -> Subgroup:
    idx = [G.index(s) for s in S]
    t, inv = G.table, G.inverses
    conj = np.unique(t[t[inv[:, None], np.asarray(idx, dtype=np.intp)[None, :]], np.arange(G.order)[:, None]]) \
        if idx else np.array([], dtype=np.intp)
    return Subgroup(G, np.flatnonzero(_closure(G, conj)))


def is_simple(G: FiniteGroup) -> bool:
    """True iff G is nontrivial and every nontrivial class generates G as a normal subgroup."""
    if G.order == 1:
        return False
    for c in conjugacy_classes(G):
        if c.element_order == 1:
            continue
        # a class is closed under conjugation, so it generates a normal subgroup
        if _closure(G, c.indices).sum() != G.order:
            return False
    return True


def normalizer(G: FiniteGroup, H: Subgroup) -> Subgroup:
    """{g in G : g H g^-1 = H}."""
    t, inv = G.table, G.inverses
    g = np.arange(G.order)
    conj = t[t[np.ix_(g, H.indices)], inv[:, None]]
    keep = H.mask[conj].all(axis=1)
    return Subgroup(G, np.flatnonzero(keep))


def _sylow_ascent(G: FiniteGroup, P_mask: np.ndarray, p: int) -> Subgroup:
    target = p_part(G.order, p)
    is_p = np.array([prime_power_base(int(o)) == p or o == 1 for o in G.orders])
    P = Subgroup(G, np.flatnonzero(P_mask))
    while P.order < target:
        N = normalizer(G, P)
        cand = N.indices[is_p[N.indices] & ~P.mask[N.indices]]
        # N(P)/P has order divisible by p while P is not Sylow, so cand is nonempty
        x = cand[0]
        P = Subgroup(G, np.flatnonzero(_closure(G, np.concatenate([P.indices, [x]]))))
    return P


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """Sylow p-subgroup by normalizer ascent from the canonically first p-element."""
    if G.order % p or prime_power_base(p) != p:
        raise PrimeNotDividingError(f"{p} is not a prime dividing |G| = {G.order}")
    orders = G.orders
    first = next(int(i) for i in G.canonical if prime_power_base(int(orders[i])) == p)
    return _sylow_ascent(G, _closure(G, [first]), p)


def sylow_containing(G: FiniteGroup, x: GroupElement) -> Subgroup:
    """A Sylow subgroup containing the nontrivial prime-power-order element x."""
    i = G.index(x)
    p = prime_power_base(int(G.orders[i]))
    if p == 0:
        raise NotPElementError(f"{x} is trivial or its order {int(G.orders[i])} is not a prime power")
    return _sylow_ascent(G, _closure(G, [i]), p)


def sylow_conjugates(G: FiniteGroup, P: Subgroup) -> list[Subgroup]:
    """Distinct conjugates g P g^-1, sorted by their canonical member ranks."""
    if P.parent is not G:
        raise NotInGroupError("subgroup belongs to a different group")
    t, inv = G.table, G.inverses
    found = {}
    for g in G.canonical:
        conj = t[t[g, P.indices], inv[g]]
        key = frozenset(conj.tolist())
        if key not in found:
            found[key] = Subgroup(G, conj)
    return sorted(found.values(), key=Subgroup.sort_key)
