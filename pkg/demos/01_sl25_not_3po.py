"""SL(2,5) has no triple of elements with distinct prime orders multiplying to 1.

Run with ``python3 demos/01_sl25_not_3po.py``.
"""
from groupcond import (
    MatrixElement,
    brute_count_triples,
    character_sum_terms,
    conjugacy_classes,
    find_3ppo_triple,
    generate_group,
    is_3po,
    load_character_table,
    structure_constant_count,
)
from groupcond.catalog import data_path

# SL(2,5) from two generators over GF(5)
G = generate_group([MatrixElement([[1, 1], [0, 1]], 5), MatrixElement([[0, 1], [4, 0]], 5)], name="SL(2,5)")
print(f"{G.name}: {G.order} elements")

classes = conjugacy_classes(G)
for c in classes:
    print(f"  class {c.label:<4} size {c.size:>2}  order {c.element_order:>2}  rep {c.representative}")

# The only involution is -I, which is central, so every (2, 3, 5) class triple is empty.
two = next(c for c in classes if c.element_order == 2)
three = next(c for c in classes if c.element_order == 3)
for five in (c for c in classes if c.element_order == 5):
    print(f"brute count ({two.label}, {three.label}, {five.label}): {brute_count_triples(G, two, three, five)}")

# The same counts from the exact character table of 2.A5
T = load_character_table(data_path("tables", "2a5.table"))
i2, i3, i5a, i5b = (T.class_index(lab) for lab in ("1A_1", "3A_0", "5A_0", "5B_0"))
print("terms for (1A_1, 3A_0, 5A_0):", ", ".join(str(t) for t in character_sum_terms(T, i2, i3, i5a)))
print("character counts:", structure_constant_count(T, i2, i3, i5a), structure_constant_count(T, i2, i3, i5b))

print("is 3PO:", is_3po(G))
w = find_3ppo_triple(G)
print("but a prime-power triple exists, orders", w.orders)
print("  x =", w.x, " y =", w.y, " z =", w.z)
