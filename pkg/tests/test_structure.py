import pytest

from groupcond.errors import NotInGroupError, NotPElementError, PrimeNotDividingError
from groupcond.numtheory import p_part, prime_divisors
from groupcond.structure import (
    centralizer_order,
    conjugacy_classes,
    derived_series,
    derived_subgroup,
    is_simple,
    is_solvable,
    normal_closure,
    normalizer,
    subgroup_generated,
    sylow_conjugates,
    sylow_containing,
    sylow_subgroup,
)

from conftest import CATALOG, mat, naive_closure, perm


def naive_orbits(G):
    """Conjugacy classes by element-level orbit enumeration."""
    left = set(G.elements)
    out = []
    while left:
        g = min(left)
        orb = {g.conjugate(h) for h in G.elements}
        left -= orb
        out.append(orb)
    return out


def naive_derived(elements, identity):
    comms = {a.inverse() * b.inverse() * a * b for a in elements for b in elements}
    return naive_closure(list(comms), identity)


def test_s3_classes(s3):
    cl = conjugacy_classes(s3)
    assert [(c.element_order, c.size) for c in cl] == [(1, 1), (2, 3), (3, 2)]
    assert [c.label for c in cl] == ["1A", "2A", "3A"]


def test_sl25_has_nine_classes(sl25):
    assert len(conjugacy_classes(sl25)) == 9


def test_a5_class_sizes_match_orbit_oracle(a5):
    oracle = sorted(len(o) for o in naive_orbits(a5))
    assert oracle == [1, 12, 12, 15, 20]
    assert sorted(c.size for c in conjugacy_classes(a5)) == oracle
    assert [c.size for c in conjugacy_classes(a5)] == [1, 15, 20, 12, 12]


@pytest.mark.parametrize("name", ["S4", "A5", "SL(2,5)", "PSL(2,7)", "S5"])
def test_classes_match_orbit_oracle(name, groups):
    G = groups[name]
    oracle = {frozenset(o) for o in naive_orbits(G)}
    got = {frozenset(c.elements) for c in conjugacy_classes(G)}
    assert got == oracle


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_class_equation_and_centralizers(name, groups):
    G = groups[name]
    cl = conjugacy_classes(G)
    assert sum(c.size for c in cl) == G.order
    for c in cl:
        assert c.size * centralizer_order(G, c.representative) == G.order
        assert {g.order() for g in c} == {c.element_order}


def test_class_ordering_is_sorted(groups):
    for G in groups.values():
        cl = conjugacy_classes(G)
        keys = [(c.element_order, c.size, c.representative.key) for c in cl]
        assert keys == sorted(keys)


def test_centralizer_examples(s3, sl25):
    assert centralizer_order(s3, s3.identity) == 6
    assert centralizer_order(s3, perm("(1 2)", 3)) == 2
    assert centralizer_order(sl25, mat([[4, 0], [0, 4]], 5)) == 120
    with pytest.raises(NotInGroupError):
        centralizer_order(s3, perm("(1 2)", 4))


def test_subgroup_generated(a5, s4):
    assert subgroup_generated(a5, []).order == 1
    assert subgroup_generated(a5, [perm("(1 2 3 4 5)", 5)]).order == 5
    comms = {a.inverse() * b.inverse() * a * b for a in s4 for b in s4}
    H = subgroup_generated(s4, comms)
    assert H.order == 12
    assert set(H.elements) == naive_closure(list(comms), s4.identity)
    with pytest.raises(NotInGroupError):
        subgroup_generated(a5, [perm("(1 2)", 5)])


def test_derived_subgroup_examples(groups):
    assert derived_subgroup(groups["C6"]).order == 1
    assert derived_subgroup(groups["S3"]).order == 3
    A5 = groups["A5"]
    assert derived_subgroup(A5).order == 60
    assert set(derived_subgroup(A5).elements) == naive_derived(A5.elements, A5.identity)


@pytest.mark.parametrize("name", ["S4", "A4", "S5", "SL(2,5)", "F20"])
def test_derived_series_matches_oracle(name, groups):
    G = groups[name]
    series = derived_series(G)
    cur = set(G.elements)
    for H in series:
        assert set(H.elements) == cur
        cur = naive_derived(list(cur), G.identity)


def test_solvability(groups):
    assert [H.order for H in derived_series(groups["S4"])] == [24, 12, 4, 1]
    assert is_solvable(groups["S4"])
    assert not is_solvable(groups["SL(2,5)"])
    assert [H.order for H in derived_series(groups["A5"])] == [60]
    for name, e in CATALOG.items():
        assert is_solvable(groups[name]) == e.expected["solvable"], name
        assert is_simple(groups[name]) == e.expected["simple"], name


def test_normal_closure(s4):
    assert normal_closure(s4, [perm("(1 2)(3 4)", 4)]).order == 4
    assert normal_closure(s4, [perm("(1 2)", 4)]).order == 24


def test_normalizer_examples(s3, a5):
    A3 = subgroup_generated(s3, [perm("(1 2 3)", 3)])
    assert normalizer(s3, A3).order == 6
    H = subgroup_generated(s3, [perm("(1 2)", 3)])
    assert normalizer(s3, H) == H
    P5 = subgroup_generated(a5, [perm("(1 2 3 4 5)", 5)])
    N = normalizer(a5, P5)
    direct = [g for g in a5 if {x.conjugate(g) for x in P5} == set(P5.elements)]
    assert N.order == 10 and set(N.elements) == set(direct)


@pytest.mark.parametrize("name, p, order", [("S4", 2, 8), ("SL(2,5)", 5, 5), ("A5", 2, 4)])
def test_sylow_subgroup_examples(name, p, order, groups):
    assert sylow_subgroup(groups[name], p).order == order


def test_sylow_errors(s4, groups):
    with pytest.raises(PrimeNotDividingError):
        sylow_subgroup(s4, 5)
    with pytest.raises(PrimeNotDividingError):
        sylow_subgroup(s4, 4)
    with pytest.raises(NotPElementError):
        sylow_containing(s4, s4.identity)
    with pytest.raises(NotPElementError):
        sylow_containing(groups["S5"], perm("(1 2 3)(4 5)", 5))


def test_sylow_containing_examples(sl25, a5, s4):
    minus_one = mat([[4, 0], [0, 4]], 5)
    P = sylow_containing(sl25, minus_one)
    assert P.order == 8 and minus_one in P
    x = perm("(1 2 3 4 5)", 5)
    P5 = sylow_containing(a5, x)
    assert set(P5.elements) == {x ** k for k in range(5)}
    t = perm("(1 2)", 4)
    P2 = sylow_containing(s4, t)
    assert P2.order == 8 and t in P2


def test_sylow_conjugate_counts(a5, s4, groups):
    assert len(sylow_conjugates(a5, sylow_subgroup(a5, 5))) == 6
    assert len(sylow_conjugates(s4, sylow_subgroup(s4, 2))) == 3
    A4 = groups["A4"]
    assert len(sylow_conjugates(A4, sylow_subgroup(A4, 2))) == 1


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_sylow_invariants(name, groups):
    G = groups[name]
    for p in prime_divisors(G.order):
        P = sylow_subgroup(G, p)
        assert P.order == p_part(G.order, p)
        assert all(p_part(g.order(), p) == g.order() for g in P)
        assert set(P.elements) == naive_closure(list(P.elements), G.identity)
        conj = sylow_conjugates(G, P)
        assert len(conj) % p == 1 % p
        assert len(conj) == G.order // normalizer(G, P).order
        assert all(Q.order == P.order for Q in conj)
    for g in G:
        if g.order() > 1 and len(prime_divisors(g.order())) == 1:
            P = sylow_containing(G, g)
            assert g in P
            assert P.order == p_part(G.order, prime_divisors(g.order())[0])


def test_sylow_is_deterministic(groups):
    from groupcond.group import group_from_definition
    again = group_from_definition(CATALOG["A6"].definition)
    for p in (2, 3, 5):
        assert set(sylow_subgroup(groups["A6"], p).elements) == set(sylow_subgroup(again, p).elements)
