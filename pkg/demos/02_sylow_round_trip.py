"""Move between prime-power triples and small Sylow product sets, in both directions.

A collision x1 x2 x3 = y1 y2 y3 inside P1 P2 P3 yields a triple, and a
triple (x, y, z) gives the collision (x, y, z) ~ (1, 1, 1).
"""
from groupcond import (
    collision_to_ppo_triple,
    find_3ppo_triple,
    find_3ss_witness,
    group_from_definition,
    ppo_triple_to_sylow_witness,
)
from groupcond.catalog import builtin_catalog

for entry in builtin_catalog():
    G = group_from_definition(entry.definition)
    w = find_3ss_witness(G)
    if w is None:
        print(f"{entry.name:<9} no Sylow triple with a short product set")
        continue
    t = collision_to_ppo_triple(w)
    back = ppo_triple_to_sylow_witness(G, find_3ppo_triple(G))
    print(f"{entry.name:<9} primes {w.primes}: |P1P2P3| = {w.product_set_size} < {w.full_product}"
          f" after {w.choices_examined} conjugate choice(s)")
    print(f"{'':<9} collision gives orders {t.orders};"
          f" a triple gives |P1P2P3| = {back.product_set_size} < {back.full_product}")
