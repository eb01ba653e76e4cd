"""How the product set size depends on which Sylow conjugates are picked.

P1 stays fixed at the canonical Sylow subgroup while P2 and P3 range over all
their conjugates.  For A5 the canonical choice gives the full 60, so only an
exhaustive search sees that A5 qualifies.
"""
from collections import Counter
from itertools import combinations

from groupcond import find_3ss_witness, group_from_definition
from groupcond.catalog import builtin_catalog
from groupcond.conditions import conjugate_product_sizes
from groupcond.numtheory import prime_divisors

for entry in builtin_catalog():
    G = group_from_definition(entry.definition)
    primes = prime_divisors(G.order)
    if len(primes) < 3:
        continue
    print(f"{entry.name} (order {G.order})")
    for triple in combinations(primes, 3):
        sizes = Counter(r["size"] for r in conjugate_product_sizes(G, triple))
        print(f"  primes {triple}: " + ", ".join(f"{s} x{n}" for s, n in sorted(sizes.items())))
    fast = find_3ss_witness(G, "fast") is not None
    full = find_3ss_witness(G, "exhaustive") is not None
    print(f"  canonical subgroups only: {fast}   all conjugates: {full}")
