"""Triple conditions: Thompson, Kaplan-Levy, 3PO, 3PPO and 3SS.

Every search walks elements in canonical-key order (x first, then y) and
returns the first hit, with z = (xy)^-1 computed rather than searched.  The
3SS search walks Sylow subgroups in the order given by
:func:`~groupcond.structure.sylow_conjugates`.

Conversions between 3PPO triples and 3SS witnesses follow the two directions
of the equivalence proof: a triple x1 x2 x3 = 1 inside Sylow subgroups is a
collision with (1, 1, 1) in the product set, and a collision
x1 x2 x3 = y1 y2 y3 yields the triple
``(y1^-1 x1, x2 y2^-1, y2 x3 y3^-1 y2^-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd, prod
from typing import Callable, Optional

import numpy as np

from .elements import GroupElement
from .errors import IncompatibleSubgroupsError, InvalidWitnessError, NotInGroupError
from .group import FiniteGroup
from .numtheory import is_prime, p_part, prime_divisors, prime_power_base
from .structure import (
    ConjugacyClass,
    Subgroup,
    sylow_conjugates,
    sylow_containing,
    sylow_subgroup,
)

__all__ = [
    "FLAVORS",
    "TripleWitness",
    "SylowWitness",
    "find_thompson_triple",
    "find_kaplan_levy_triple",
    "find_3po_triple",
    "find_3ppo_triple",
    "is_3po",
    "is_3ppo",
    "is_3ss",
    "triple_order_profiles",
    "product_set_size",
    "find_3ss_witness",
    "conjugate_product_sizes",
    "collision_to_ppo_triple",
    "ppo_triple_to_sylow_witness",
    "brute_count_triples",
]

FLAVORS = ("thompson", "kaplan-levy", "3po", "3ppo")


def _is_two_power(n: int) -> bool:
    return n > 1 and n & (n - 1) == 0


def check_orders(orders, flavor: str, prime: Optional[int] = None) -> Optional[str]:
    """Return a description of the first violated order constraint, or None."""
    a, b, c = orders
    if min(orders) < 2:
        return "an element is trivial"
    if flavor == "thompson":
        if gcd(a, b) != 1 or gcd(a, c) != 1 or gcd(b, c) != 1:
            return f"orders {orders} are not pairwise coprime"
    elif flavor == "kaplan-levy":
        p = prime_power_base(b)
        if not _is_two_power(a):
            return f"order({a}) of x is not a power of 2"
        if p in (0, 2):
            return f"order({b}) of y is not a power of an odd prime"
        if prime is not None and p != prime:
            return f"order of y is not a power of the declared prime {prime}"
        if gcd(c, 2 * p) != 1:
            return f"order({c}) of z is not coprime to {2 * p}"
    elif flavor == "3po":
        if not all(is_prime(o) for o in orders) or len(set(orders)) != 3:
            return f"orders {orders} are not three distinct primes"
    elif flavor == "3ppo":
        bases = [prime_power_base(o) for o in orders]
        if 0 in bases or len(set(bases)) != 3:
            return f"orders {orders} are not powers of three distinct primes"
    else:
        raise ValueError(f"unknown flavor {flavor!r}")
    return None


@dataclass(frozen=True)
class TripleWitness:
    """Nontrivial x, y, z with x y z = 1 and orders meeting ``flavor``'s constraint.

    ``prime`` is the odd prime p of a Kaplan-Levy triple, otherwise None.
    """

    x: GroupElement
    y: GroupElement
    z: GroupElement
    orders: tuple[int, int, int]
    flavor: str
    prime: Optional[int] = None

    @classmethod
    def build(cls, x, y, z, flavor, prime=None) -> TripleWitness:
        w = cls(x, y, z, (x.order(), y.order(), z.order()), flavor, prime)
        w.validate()
        return w

    def validate(self):
        x, y, z = self.x, self.y, self.z
        if not (x.shape == y.shape == z.shape):
            raise InvalidWitnessError("triple elements have different shapes")
        if not (x * y * z).is_identity():
            raise InvalidWitnessError("x y z is not the identity")
        actual = (x.order(), y.order(), z.order())
        if actual != tuple(self.orders):
            raise InvalidWitnessError(f"recorded orders {self.orders} differ from actual {actual}")
        problem = check_orders(actual, self.flavor, self.prime)
        if problem:
            raise InvalidWitnessError(problem)

    def as_dict(self) -> dict:
        d = {
            "flavor": self.flavor,
            "orders": list(self.orders),
            "elements": [str(self.x), str(self.y), str(self.z)],
        }
        if self.prime is not None:
            d["prime"] = self.prime
        return d


@dataclass(frozen=True)
class SylowWitness:
    """Sylow subgroups P1, P2, P3 for distinct primes with |P1 P2 P3| < |P1||P2||P3|.

    ``collision`` holds two distinct triples of P1 x P2 x P3 with equal products.
    ``choices_examined`` counts the (P2, P3) conjugate pairs tried before this one
    was accepted, including itself.
    """

    primes: tuple[int, int, int]
    subgroups: tuple[Subgroup, Subgroup, Subgroup]
    product_set_size: int
    collision: tuple[tuple[GroupElement, ...], tuple[GroupElement, ...]]
    choices_examined: int = field(default=1, compare=False)

    @property
    def full_product(self) -> int:
        return prod(P.order for P in self.subgroups)

    def validate(self):
        P = self.subgroups
        G = P[0].parent
        if len(set(self.primes)) != 3:
            raise InvalidWitnessError(f"primes {self.primes} are not distinct")
        for p, S in zip(self.primes, P):
            if S.parent is not G:
                raise InvalidWitnessError("subgroups come from different groups")
            if S.order != p_part(G.order, p):
                raise InvalidWitnessError(f"subgroup of order {S.order} is not a Sylow {p}-subgroup")
        if product_set_size(*P) != self.product_set_size:
            raise InvalidWitnessError("recorded product set size is wrong")
        if self.product_set_size >= self.full_product:
            raise InvalidWitnessError("product set is not smaller than |P1||P2||P3|")
        xs, ys = self.collision
        for a, b, S in zip(xs, ys, P):
            if a not in S or b not in S:
                raise InvalidWitnessError("collision element outside its Sylow subgroup")
            if a == b:
                raise InvalidWitnessError("collision triples agree in some component")
        if xs[0] * xs[1] * xs[2] != ys[0] * ys[1] * ys[2]:
            raise InvalidWitnessError("collision triples have different products")

    def as_dict(self) -> dict:
        xs, ys = self.collision
        return {
            "primes": list(self.primes),
            "sylowOrders": [P.order for P in self.subgroups],
            "productSetSize": self.product_set_size,
            "fullProduct": self.full_product,
            "collision": [[str(g) for g in xs], [str(g) for g in ys]],
            "choicesExamined": self.choices_examined,
        }


# -- triple searches ---------------------------------------------------------

def _search(G: FiniteGroup, xs: np.ndarray, ys: np.ndarray,
            accept: Callable[[int, np.ndarray, np.ndarray], np.ndarray]):
    """First (x, y, z) with x in xs, y in ys (canonical order) and accept(x, ys, zs) true."""
    t, inv = G.table, G.inverses
    e = G.identity_index
    for x in xs:
        zs = inv[t[x, ys]]
        ok = accept(x, ys, zs) & (zs != e)
        if ok.any():
            j = int(np.argmax(ok))
            return int(x), int(ys[j]), int(zs[j])
    return None


def _all_hits(G: FiniteGroup, xs, ys, accept):
    t, inv = G.table, G.inverses
    e = G.identity_index
    for x in xs:
        zs = inv[t[x, ys]]
        ok = accept(x, ys, zs) & (zs != e)
        for j in np.flatnonzero(ok):
            yield int(x), int(ys[j]), int(zs[j])


def _canonical_where(G: FiniteGroup, mask: np.ndarray) -> np.ndarray:
    c = G.canonical
    return c[mask[c]]


def _base_array(G: FiniteGroup) -> np.ndarray:
    """Prime p for each element of order p**a (a >= 1), else 0."""
    lookup = {int(o): prime_power_base(int(o)) for o in np.unique(G.orders)}
    return np.array([lookup[int(o)] for o in G.orders], dtype=np.int64)


def _witness(G, hit, flavor, prime=None) -> Optional[TripleWitness]:
    if hit is None:
        return None
    x, y, z = (G.elements[i] for i in hit)
    o = G.orders
    w = TripleWitness(x, y, z, (int(o[hit[0]]), int(o[hit[1]]), int(o[hit[2]])), flavor, prime)
    w.validate()
    return w


def _plan(G: FiniteGroup, flavor: str):
    """Yield (xs, ys, accept, prime) search blocks for ``flavor`` in priority order."""
    o = G.orders
    base = _base_array(G)
    nontrivial = o > 1
    if flavor == "thompson":
        xs = _canonical_where(G, nontrivial)

        def accept(x, ys, zs):
            ox, oy, oz = o[x], o[ys], o[zs]
            return (np.gcd(ox, oy) == 1) & (np.gcd(ox, oz) == 1) & (np.gcd(oy, oz) == 1)
        yield xs, xs, accept, None
    elif flavor == "kaplan-levy":
        xs = _canonical_where(G, base == 2)
        for p in prime_divisors(G.order):
            if p == 2:
                continue
            ys = _canonical_where(G, base == p)

            def accept(x, ys, zs, p=p):
                return (o[zs] > 1) & (np.gcd(o[zs], 2 * p) == 1)
            yield xs, ys, accept, p
    elif flavor == "3po":
        prime_order = np.array([is_prime(int(v)) for v in o])
        xs = _canonical_where(G, prime_order)

        def accept(x, ys, zs):
            ox, oy, oz = o[x], o[ys], o[zs]
            return prime_order[zs] & (ox != oy) & (ox != oz) & (oy != oz)
        yield xs, xs, accept, None
    elif flavor == "3ppo":
        xs = _canonical_where(G, base > 0)

        def accept(x, ys, zs):
            bx, by, bz = base[x], base[ys], base[zs]
            return (bz > 0) & (bx != by) & (bx != bz) & (by != bz)
        yield xs, xs, accept, None
    else:
        raise ValueError(f"unknown flavor {flavor!r}")


def _find(G: FiniteGroup, flavor: str) -> Optional[TripleWitness]:
    if flavor in ("3po", "3ppo") and len(prime_divisors(G.order)) < 3:
        return None
    for xs, ys, accept, prime in _plan(G, flavor):
        w = _witness(G, _search(G, xs, ys, accept), flavor, prime)
        if w is not None:
            return w
    return None


def find_thompson_triple(G: FiniteGroup) -> Optional[TripleWitness]:
    """Nontrivial x, y, z of pairwise coprime orders with x y z = 1, or None."""
    return _find(G, "thompson")


def find_kaplan_levy_triple(G: FiniteGroup) -> Optional[TripleWitness]:
    """x of 2-power order, y of odd p-power order, z of order coprime to 2p, x y z = 1.

    Odd primes p are tried in increasing order.
    """
    return _find(G, "kaplan-levy")


def find_3po_triple(G: FiniteGroup) -> Optional[TripleWitness]:
    return _find(G, "3po")


def find_3ppo_triple(G: FiniteGroup) -> Optional[TripleWitness]:
    return _find(G, "3ppo")


def is_3po(G: FiniteGroup) -> bool:
    return find_3po_triple(G) is not None


def is_3ppo(G: FiniteGroup) -> bool:
    return find_3ppo_triple(G) is not None


def triple_order_profiles(G: FiniteGroup, flavor: str) -> dict[tuple[int, ...], int]:
    """Count every (x, y, z) of the given flavor with x y z = 1, grouped by sorted order profile."""
    out: dict[tuple[int, ...], int] = {}
    if flavor in ("3po", "3ppo") and len(prime_divisors(G.order)) < 3:
        return out
    o = G.orders
    for xs, ys, accept, _ in _plan(G, flavor):
        for hit in _all_hits(G, xs, ys, accept):
            key = tuple(sorted(int(o[i]) for i in hit))
            out[key] = out.get(key, 0) + 1
    return out


# -- product sets and 3SS ----------------------------------------------------

def _products(P1: Subgroup, P2: Subgroup, P3: Subgroup) -> np.ndarray:
    """Positions of x1 x2 x3, flattened in lexicographic (x1, x2, x3) canonical order."""
    parents = {id(P.parent) for P in (P1, P2, P3)}
    if len(parents) != 1:
        raise IncompatibleSubgroupsError("subgroups belong to different groups")
    t = P1.parent.table
    first = t[np.ix_(P1.indices, P2.indices)].ravel()
    return t[np.ix_(first, P3.indices)].ravel()


def product_set_size(P1: Subgroup, P2: Subgroup, P3: Subgroup) -> int:
    """|P1 P2 P3|: the number of distinct products x1 x2 x3."""
    return int(np.unique(_products(P1, P2, P3)).size)


def _first_collision(P1, P2, P3):
    prods = _products(P1, P2, P3)
    _, first_pos = np.unique(prods, return_index=True)
    dup = np.ones(prods.size, dtype=bool)
    dup[first_pos] = False
    if not dup.any():
        return None
    later = int(np.argmax(dup))
    earlier = int(np.argmax(prods == prods[later]))
    shape = (len(P1), len(P2), len(P3))
    G = P1.parent

    def triple(flat):
        i, j, k = np.unravel_index(flat, shape)
        return (G.elements[P1.indices[i]], G.elements[P2.indices[j]], G.elements[P3.indices[k]])
    return triple(earlier), triple(later)


def _prime_triples(G: FiniteGroup):
    return list(combinations(prime_divisors(G.order), 3))


def find_3ss_witness(G: FiniteGroup, mode: str = "exhaustive") -> Optional[SylowWitness]:
    """Search Sylow triples P1 (fixed), P2, P3 (over conjugates) for a shrunken product set.

    ``mode="fast"`` tries only the canonical Sylow subgroup for each prime.
    """
    if mode not in ("exhaustive", "fast"):
        raise ValueError(f"mode must be 'exhaustive' or 'fast', not {mode!r}")
    examined = 0
    for primes in _prime_triples(G):
        P1, Q2, Q3 = (sylow_subgroup(G, p) for p in primes)
        if mode == "fast":
            pairs = [(Q2, Q3)]
        else:
            pairs = [(a, b) for a in sylow_conjugates(G, Q2) for b in sylow_conjugates(G, Q3)]
        full = P1.order * Q2.order * Q3.order
        for P2, P3 in pairs:
            examined += 1
            size = product_set_size(P1, P2, P3)
            if size < full:
                w = SylowWitness(primes, (P1, P2, P3), size, _first_collision(P1, P2, P3), examined)
                w.validate()
                return w
    return None


def is_3ss(G: FiniteGroup, mode: str = "exhaustive") -> bool:
    return find_3ss_witness(G, mode) is not None


def conjugate_product_sizes(G: FiniteGroup, primes: tuple[int, int, int]) -> list[dict]:
    """Product set size for every (P2, P3) conjugate pair with P1 fixed.

    Used to see whether strict shrinkage depends on the choice of conjugates.
    """
    P1, Q2, Q3 = (sylow_subgroup(G, p) for p in primes)
    C2, C3 = sylow_conjugates(G, Q2), sylow_conjugates(G, Q3)
    full = P1.order * Q2.order * Q3.order
    rows = []
    for i, P2 in enumerate(C2):
        for j, P3 in enumerate(C3):
            size = product_set_size(P1, P2, P3)
            rows.append({"p2_conjugate": i, "p3_conjugate": j, "size": size, "strict": size < full})
    return rows


# -- the two directions of the equivalence ----------------------------------

def collision_to_ppo_triple(w: SylowWitness) -> TripleWitness:
    """Turn equal products x1 x2 x3 = y1 y2 y3 into a 3PPO triple."""
    xs, ys = w.collision
    if len(xs) != 3 or len(ys) != 3:
        raise InvalidWitnessError("collision must hold two triples")
    if tuple(xs) == tuple(ys):
        raise InvalidWitnessError("collision triples are identical")
    if xs[0] * xs[1] * xs[2] != ys[0] * ys[1] * ys[2]:
        raise InvalidWitnessError("collision triples have different products")
    x1, x2, x3 = xs
    y1, y2, y3 = ys
    a = y1.inverse() * x1
    b = x2 * y2.inverse()
    c = y2 * x3 * y3.inverse() * y2.inverse()
    try:
        t = TripleWitness.build(a, b, c, "3ppo")
    except InvalidWitnessError as exc:
        raise InvalidWitnessError(f"collision does not yield a 3PPO triple: {exc}") from None
    bases = tuple(prime_power_base(o) for o in t.orders)
    if bases != tuple(w.primes):
        raise InvalidWitnessError(f"triple primes {bases} differ from witness primes {w.primes}")
    return t


def ppo_triple_to_sylow_witness(G: FiniteGroup, t: TripleWitness) -> SylowWitness:
    """Place each element of a 3PPO triple in a Sylow subgroup; (x1, x2, x3) collides with (1, 1, 1)."""
    for g in (t.x, t.y, t.z):
        if g not in G:
            raise InvalidWitnessError(f"{g} is not in the group")
    orders = tuple(G.element_order(g) for g in (t.x, t.y, t.z))
    problem = check_orders(orders, "3ppo")
    if problem or not (t.x * t.y * t.z).is_identity():
        raise InvalidWitnessError(problem or "x y z is not the identity")
    primes = tuple(prime_power_base(o) for o in orders)
    Ps = tuple(sylow_containing(G, g) for g in (t.x, t.y, t.z))
    one = G.identity
    w = SylowWitness(primes, Ps, product_set_size(*Ps), ((t.x, t.y, t.z), (one, one, one)))
    w.validate()
    return w


def brute_count_triples(G: FiniteGroup, C1: ConjugacyClass, C2: ConjugacyClass,
                        C3: ConjugacyClass) -> int:
    """#{(x, y, z) in C1 x C2 x C3 : x y z = 1}, by testing (xy)^-1 against C3."""
    for C in (C1, C2, C3):
        if C.parent is not G:
            raise NotInGroupError(f"class {C.label} does not belong to {G.name or 'this group'}")
    z = G.inverses[G.table[np.ix_(C1.indices, C2.indices)]]
    return int(C3.mask[z].sum())
