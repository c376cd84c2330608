"""
Circular chromatic number of subdivisions and fractional powers
===============================================================

Replacing every edge by a path of length 2s+1 sends a circular chromatic
number x to (2s+1)x / (sx + 1). The solver computes both sides exactly.
"""

from fractions import Fraction

from graphpowers import circular_chromatic_number, complete_graph, cycle_graph, frac_power, subdivide
from graphpowers.suites import subdivision_formula

for g in [complete_graph(3), complete_graph(4), cycle_graph(5)]:
    x = circular_chromatic_number(g).value
    for s in (1, 2):
        sub = subdivide(g, 2 * s + 1)
        value = circular_chromatic_number(sub)
        print(f"{g.name}: chi_c = {x}, subdivided by {2 * s + 1}: {value} "
              f"(formula {subdivision_formula(x, 0, s)})")

# the witness is an explicit map into K(12/5); colours are vertex indices of the target
cv = circular_chromatic_number(subdivide(complete_graph(4), 3))
print("witness for K4^(1/3):", cv.witness.mapping)

# a general fractional power G^(r/s) = (G^(1/s))^r
g = frac_power(complete_graph(4), 3, 5)
print(g, "chi_c =", circular_chromatic_number(g).value, "expected", Fraction(20, 7))
