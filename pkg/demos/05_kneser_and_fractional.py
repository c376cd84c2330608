"""
Kneser graphs and the fractional chromatic number
=================================================

Walks in KG(m, n) are governed by how many points two subsets share. The
fractional chromatic number is computed as an exact linear program over the
maximal independent sets, and the optimal cover gives a Kneser colouring.
"""

from graphpowers import (
    are_isomorphic,
    complete_graph,
    cycle_graph,
    find_homomorphism,
    fractional_chromatic_number,
    fractional_embedding,
    frac_power,
    kneser,
    kneser_walk_condition,
    petersen,
    walk_power,
)
from graphpowers.invariants import kneser_coloring_from_cover
from graphpowers.suites import kneser_walk_mismatches

print("Petersen^3 is K10:", are_isomorphic(walk_power(petersen(), 3), complete_graph(10)))
print("KG(5,2,1) is K10:", are_isomorphic(kneser(5, 2, 1), complete_graph(10)))

# walks of length l between 3-subsets of [7] that share k points
for l in range(1, 6):
    row = ["yes" if kneser_walk_condition(7, 3, k, l) else " no" for k in range(4)]
    print(f"l={l}: k=0..3 ->", " ".join(row))
print("mismatches against matrix powers in KG(7,3):", len(kneser_walk_mismatches(7, 3, 8)))

fv = fractional_chromatic_number(cycle_graph(9))
print("chi_f(C9) =", fv, "cover:", {tuple(sorted(s)): str(w) for s, w in fv.primal.items()})

# lift a KG(5,2) colouring of C5 to the subdivision
c5 = cycle_graph(5)
m, n, f = kneser_coloring_from_cover(c5, fractional_chromatic_number(c5))
emb = fractional_embedding(c5, f, m, n, 1)
print(f"C5 -> KG({m},{n}) lifted to sets of size {len(emb[0])} meeting in {len(emb[0] & emb[1])}")

cert = find_homomorphism(frac_power(complete_graph(10), 1, 3), petersen())
print("K10^(1/3) -> Petersen:", cert is not None)
