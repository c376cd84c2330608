"""
Avoiding the lower parent
=========================

For a value n/d the lower parent is the fraction n'/d' with n' < n and
n d' - n' d = 1. A graph with circular chromatic number 12/5 need not contain
a subgraph of value 7/3: the subdivided K4 is one, since every single-edge
deletion already maps into C9 (value 9/4).
"""

from graphpowers import (
    circular_chromatic_number,
    complete_graph,
    find_homomorphism,
    hajos_chain,
    lower_parent,
    remove,
    subdivide,
)
from graphpowers.invariants import chromatic_number, independence_number, zeta

g = subdivide(complete_graph(4), 3)
value = circular_chromatic_number(g).value
parent = lower_parent(value.numerator, value.denominator)
print("chi_c =", value, "lower parent =", parent)

c9 = subdivide(complete_graph(3), 3)
maps = 0
for e in g.sorted_edges():
    h, _ = remove(g, edges=[e])
    maps += find_homomorphism(h, c9) is not None
print(f"{maps} of {g.size} single-edge deletions map to C9")

# Hajos chains are critical and have circular chromatic number (d(n-1)+1)/d
for d, n in [(2, 4), (3, 4), (2, 5)]:
    hc = hajos_chain(d, n)
    critical = all(chromatic_number(remove(hc, edges=[e])[0]) == n - 1 for e in hc.sorted_edges())
    print(f"H{d}(K{n}): chi = {chromatic_number(hc)}, critical = {critical}, "
          f"alpha = {independence_number(hc)}, zeta = {zeta(hc)}, "
          f"chi_c = {circular_chromatic_number(hc).value}")
