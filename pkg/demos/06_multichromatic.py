"""
Multichromatic numbers of subdivisions
======================================

An n-tuple colouring assigns n colours to each vertex with disjoint sets on
adjacent vertices. For subdivisions by 3, two colours per vertex from five
suffice exactly when the original graph is 10-colourable.
"""

from math import comb

from graphpowers import complete_graph, cycle_graph, find_homomorphism, multichromatic_number, petersen, subdivide
from graphpowers.invariants import tuple_coloring

m, colouring = tuple_coloring(subdivide(complete_graph(4), 3), 2)
print("chi_2(K4^(1/3)) =", m)
print("first few colour pairs:", [sorted(colouring[v]) for v in range(4)])

print("chi_2(C9) =", multichromatic_number(cycle_graph(9), 2))

for k in (4, 10, 11):
    ok = find_homomorphism(subdivide(complete_graph(k), 3), petersen()) is not None
    print(f"K{k}^(1/3) -> KG(5,2): {ok}   chi(K{k}) <= C(5,2) = {comb(5, 2)}: {k <= 10}")
