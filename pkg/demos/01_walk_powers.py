"""
Walk powers of circular cliques
===============================

The walk power G^k joins two vertices when some walk of length exactly k runs
between them. Odd powers of circular cliques are again circular cliques, which
this script checks for a few small cases.
"""

from fractions import Fraction

from graphpowers import are_isomorphic, circular_complete, cycle_graph, odd_girth, walk_power
from graphpowers.graph import LoopCreated

# K(9/4) is just the 9-cycle with vertices listed in steps of 4
k94 = circular_complete(9, 4)
print(k94, "odd girth", odd_girth(k94))
print("K(9/4) is C9:", are_isomorphic(k94, cycle_graph(9)))

# the cube of K(n/d) is K(n/(3d - n)) as long as n/d < 3
for n, d in [(5, 2), (7, 3), (8, 3)]:
    cube = walk_power(circular_complete(n, d), 3)
    d3 = 3 * d - n
    print(f"K({n}/{d})^3 is K({n}/{d3}):", are_isomorphic(cube, circular_complete(n, d3)))

# once the exponent reaches the odd girth a vertex gets a closed walk and the power stops being simple
try:
    walk_power(cycle_graph(5), 5)
except LoopCreated as exc:
    print("C5^5:", exc)

# exponents compose: (C17^3)^5 = C17^15
g = cycle_graph(17)
print("(C17^3)^5 == C17^15:", walk_power(walk_power(g, 3), 5) == walk_power(g, 15))
print("ratio checked exactly:", Fraction(8, 3) < 3)
