"""Exact chromatic invariants with certificates where they exist."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .constructions import circular_complete, kneser, kneser_subsets
from .graph import CapExceeded, Graph, complete_graph, is_bipartite, remove
from .homomorphism import HomCertificate, SearchOptions, find_homomorphism
from .lp import solve_packing

DEFAULT_MIS_CAP = 5000


@dataclass(frozen=True)
class CircularValue:
    value: Fraction
    witness: HomCertificate

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


@dataclass(frozen=True)
class FractionalValue:
    value: Fraction
    primal: dict  # maximal independent set (frozenset) -> weight
    dual: dict  # vertex -> weight

    def __str__(self):
        return f"{self.value.numerator}/{self.value.denominator}"


def _bit_iter(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def maximal_independent_sets(g: Graph, cap: int = DEFAULT_MIS_CAP) -> list[frozenset]:
    """Bron-Kerbosch with pivoting, run on the complement of g."""
    n = g.order
    all_mask = (1 << n) - 1
    # neighbourhoods in the complement
    co = [all_mask & ~b & ~(1 << v) for v, b in enumerate(g.bits)]
    found: list[frozenset] = []

    def expand(r: int, p: int, x: int):
        if not p and not x:
            if len(found) >= cap:
                raise CapExceeded("maximal independent sets", len(found) + 1, cap)
            found.append(frozenset(_bit_iter(r)))
            return
        pivot = max(_bit_iter(p | x), key=lambda u: (p & co[u]).bit_count())
        for v in _bit_iter(p & ~co[pivot]):
            expand(r | 1 << v, p & co[v], x & co[v])
            p &= ~(1 << v)
            x |= 1 << v

    if n:
        expand(0, all_mask, 0)
    return sorted(found, key=lambda s: sorted(s))


def max_clique(g: Graph) -> list[int]:
    """A maximum clique, by branch and bound with a greedy colouring bound."""
    bits = g.bits
    best: list[int] = []

    def colour_order(p: int) -> list[tuple[int, int]]:
        out = []
        colour = 0
        rest = p
        while rest:
            colour += 1
            avail = rest
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                out.append((v, colour))
                rest &= ~low
                avail &= ~low & ~bits[v]
        return out

    def expand(clique: list[int], p: int):
        nonlocal best
        order = colour_order(p)
        for v, bound in reversed(order):
            if len(clique) + bound <= len(best):
                return
            clique.append(v)
            q = p & bits[v]
            if q:
                expand(clique, q)
            elif len(clique) > len(best):
                best = clique.copy()
            clique.pop()
            p &= ~(1 << v)

    if g.order:
        expand([], (1 << g.order) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    from .graph import complement
    return clique_number(complement(g))


def _greedy_colour_count(g: Graph) -> int:
    # DSatur
    n = g.order
    colour = [-1] * n
    adj = g.adjacency
    sat = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0), key=lambda u: (len(sat[u]), len(adj[u]), -u))
        c = 0
        while c in sat[v]:
            c += 1
        colour[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return max(colour) + 1 if n else 0


def chromatic_number(g: Graph, opts: SearchOptions | None = None) -> int:
    if g.order == 0:
        return 0
    if g.size == 0:
        return 1
    lower = clique_number(g)
    upper = _greedy_colour_count(g)
    for k in range(lower, upper):
        if find_homomorphism(g, complete_graph(k), opts) is not None:
            return k
    return upper


def circular_candidates(order: int, chi: int) -> list[Fraction]:
    """Reduced fractions p/q with p <= order, max(2, chi-1) < p/q <= chi, ascending."""
    low = max(2, chi - 1)
    out = set()
    for p in range(3, order + 1):
        for q in range(1, p // 2 + 1):
            f = Fraction(p, q)
            if f.numerator == p and low < f <= chi:
                out.add(f)
    out.add(Fraction(chi))
    return sorted(out)


def circular_chromatic_number(g: Graph, opts: SearchOptions | None = None) -> CircularValue:
    """Least p/q with g -> K_{p/q}, searched over p <= |V(g)|.

    The candidate list is binary-searched; this is valid because
    K_{p/q} -> K_{p'/q'} whenever p/q <= p'/q'.
    """
    if g.size == 0:
        raise ValueError("circular chromatic number needs at least one edge")
    if is_bipartite(g):
        cert = find_homomorphism(g, circular_complete(2, 1), opts)
        return CircularValue(Fraction(2), cert)
    chi = chromatic_number(g, opts)
    cands = circular_candidates(g.order, chi)
    witness: dict[int, HomCertificate] = {}
    lo, hi = 0, len(cands) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        f = cands[mid]
        cert = find_homomorphism(g, circular_complete(f.numerator, f.denominator), opts)
        if cert is not None:
            witness[mid] = cert
            hi = mid
        else:
            lo = mid + 1
    f = cands[lo]
    if lo not in witness:
        witness[lo] = find_homomorphism(g, circular_complete(f.numerator, f.denominator), opts)
    return CircularValue(f, witness[lo])


def fractional_chromatic_number(g: Graph, cap: int = DEFAULT_MIS_CAP) -> FractionalValue:
    """Exact LP optimum of the fractional cover by maximal independent sets."""
    if g.order == 0:
        return FractionalValue(Fraction(0), {}, {})
    sets = maximal_independent_sets(g, cap)
    value, y, x = solve_packing([sorted(s) for s in sets], g.order)
    primal = {s: w for s, w in zip(sets, x) if w}
    dual = {v: w for v, w in enumerate(y) if w}
    return FractionalValue(value, primal, dual)


def check_fractional_certificate(g: Graph, fv: FractionalValue) -> bool:
    """Primal is a fractional cover and dual a fractional clique, both of total value."""
    bits = g.bits
    for s, w in fv.primal.items():
        if w < 0 or any(bits[u] >> v & 1 for u in s for v in s):
            return False
    for v in range(g.order):
        if sum((w for s, w in fv.primal.items() if v in s), Fraction(0)) < 1:
            return False
    if sum(fv.primal.values(), Fraction(0)) != fv.value:
        return False
    if any(w < 0 for w in fv.dual.values()):
        return False
    if sum(fv.dual.values(), Fraction(0)) != fv.value:
        return False
    for s in maximal_independent_sets(g, cap=10**6):
        if sum((fv.dual.get(v, 0) for v in s), Fraction(0)) > 1:
            return False
    return True


def kneser_coloring_from_cover(g: Graph, fv: FractionalValue) -> tuple[int, int, dict[int, frozenset]]:
    """Turn an optimal fractional cover into a homomorphism g -> KG(m, n) with m/n = chi_f.

    Each independent set of weight a/N receives a colours (N the common
    denominator); every vertex then keeps the first N colours covering it.
    """
    denom = math.lcm(*(w.denominator for w in fv.primal.values())) if fv.primal else 1
    colours_of: dict[int, list[int]] = {v: [] for v in range(g.order)}
    nxt = 1
    for s in sorted(fv.primal, key=sorted):
        for _ in range(int(fv.primal[s] * denom)):
            for v in s:
                colours_of[v].append(nxt)
            nxt += 1
    m = nxt - 1
    f = {v: frozenset(colours_of[v][:denom]) for v in range(g.order)}
    return m, denom, f


def tuple_coloring(g: Graph, n: int, opts: SearchOptions | None = None,
                   mis_cap: int = DEFAULT_MIS_CAP) -> tuple[int, dict[int, frozenset]]:
    """Least m with an n-tuple colouring from {1..m}, and one such colouring."""
    if n < 1:
        raise ValueError("n must be positive")
    if g.size == 0:
        return n, {v: frozenset(range(1, n + 1)) for v in range(g.order)}
    try:
        lower = math.ceil(n * fractional_chromatic_number(g, mis_cap).value)
    except CapExceeded:
        lower = n * clique_number(g)
    m = lower
    while True:
        cert = find_homomorphism(g, kneser(m, n), opts)
        if cert is not None:
            subsets = kneser_subsets(m, n)
            return m, {v: subsets[cert[v]] for v in range(g.order)}
        m += 1


def multichromatic_number(g: Graph, n: int, opts: SearchOptions | None = None,
                          mis_cap: int = DEFAULT_MIS_CAP) -> int:
    return tuple_coloring(g, n, opts, mis_cap)[0]


def mu(g: Graph, opts: SearchOptions | None = None) -> Fraction:
    """chi_c / (3 (chi_c - 2)) for non-bipartite g."""
    if g.size == 0 or is_bipartite(g):
        raise ValueError("mu is defined for non-bipartite graphs only")
    return mu_from_circular(circular_chromatic_number(g, opts).value)


def mu_from_circular(chic: Fraction) -> Fraction:
    return chic / (3 * (chic - 2))


def zeta(g: Graph, opts: SearchOptions | None = None) -> int:
    """Fewest vertex deletions that lower the chromatic number (brute force)."""
    chi = chromatic_number(g, opts)
    if chi == 0:
        raise ValueError("empty graph")
    target = complete_graph(chi - 1)
    for t in range(1, g.order + 1):
        for drop in itertools.combinations(range(g.order), t):
            h, _ = remove(g, drop)
            if chi - 1 > 0 and h.size and clique_number(h) >= chi:
                continue
            if find_homomorphism(h, target, opts) is not None:
                return t
    return g.order


def lower_parent(n: int, d: int) -> Fraction:
    """The unique n'/d' with 0 < n' < n and n d' - n' d = 1."""
    if n < 2 or d < 1 or math.gcd(n, d) != 1:
        raise ValueError(f"need coprime n >= 2, d >= 1; got {n}/{d}")
    n1 = (-pow(d, -1, n)) % n
    d1 = (1 + n1 * d) // n
    return Fraction(n1, d1)
