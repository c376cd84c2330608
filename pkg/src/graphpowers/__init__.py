"""Exact colouring invariants of graph powers.

Constructions (circular cliques, Kneser graphs, subdivisions, fractional and
dual powers, Hajós chains), an exact homomorphism solver, exact chromatic
invariants with certificates, and instance-level verification suites.
"""

from .constructions import (
    circular_complete,
    dual_power,
    dual_power_base,
    frac_power,
    fractional_embedding,
    hajos_chain,
    hajos_circular_coloring,
    kneser,
    kneser_walk_condition,
    petersen,
    subdivide,
)
from .graph import (
    CapExceeded,
    Graph,
    LoopCreated,
    SearchTimeout,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    make_graph,
    odd_girth,
    remove,
    walk_neighborhood,
    walk_power,
)
from .homomorphism import (
    HomCertificate,
    SearchOptions,
    check_homomorphism,
    find_homomorphism,
    homomorphically_equivalent,
)
from .invariants import (
    chromatic_number,
    circular_chromatic_number,
    fractional_chromatic_number,
    independence_number,
    lower_parent,
    mu,
    multichromatic_number,
    zeta,
)

__version__ = "0.1.0"
