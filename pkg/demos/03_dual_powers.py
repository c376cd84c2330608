"""
Dual powers
===========

The dual power is built from tuples of neighbourhood subsets. For circular
cliques below 4 it is homomorphically equivalent to another circular clique,
and it turns questions about fractional powers into plain homomorphism
questions.
"""

from graphpowers import (
    circular_complete,
    complete_graph,
    cycle_graph,
    dual_power,
    dual_power_base,
    find_homomorphism,
    frac_power,
    homomorphically_equivalent,
)
from graphpowers.constructions import dual_vertices

base = dual_power_base(cycle_graph(5), 1)
print(base, "first vertices:", [base.label(v) for v in range(4)])
print("C5^~(1/3) <-> K(15/7):", homomorphically_equivalent(base, circular_complete(15, 7)))

k73 = dual_power_base(circular_complete(7, 3), 1)
print("K(7/3)^~(1/3) <-> K(21/10):", homomorphically_equivalent(k73, circular_complete(21, 10)))

# vertex counts grow fast, so construction is capped
print("tuples for C7, s=2:", len(dual_vertices(cycle_graph(7), 2)))

# both sides of the adjunction for G = K3, H = C5
g, h = complete_graph(3), cycle_graph(5)
for r, s in [(1, 1), (1, 2)]:
    lhs = find_homomorphism(frac_power(g, 2 * r + 1, 2 * s + 1), h) is not None
    rhs = find_homomorphism(g, dual_power(h, s, r)) is not None
    print(f"K3^({2 * r + 1}/{2 * s + 1}) -> C5: {lhs}   K3 -> C5^~({2 * s + 1}/{2 * r + 1}): {rhs}")
