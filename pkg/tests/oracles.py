"""Brute-force reference implementations used to check the library.

Nothing here imports graphpowers internals beyond reading ``order`` and
``edges``; each oracle enumerates its search space exhaustively.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

import numpy as np


def adjacency_sets(g) -> list[set[int]]:
    adj = [set() for _ in range(g.order)]
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def hom_exists(g, h) -> bool:
    """Enumerate all |V(h)|^|V(g)| maps with numpy and test every edge."""
    if g.order == 0:
        return True
    if h.order == 0:
        return False
    if h.order ** g.order > 20_000_000:
        raise ValueError("instance too large for exhaustive enumeration")
    a = np.zeros((h.order, h.order), dtype=bool)
    for u, v in h.edges:
        a[u, v] = a[v, u] = True
    maps = np.indices((h.order,) * g.order, dtype=np.int8).reshape(g.order, -1).T
    ok = np.ones(len(maps), dtype=bool)
    for u, v in g.edges:
        ok &= a[maps[:, u], maps[:, v]]
    return bool(ok.any())


def walk_pairs(g, k: int) -> set[tuple[int, int]]:
    """Ordered pairs (u, v) joined by a walk of length exactly k, found by
    extending explicit walks one step at a time."""
    adj = adjacency_sets(g)
    out = set()
    for u in range(g.order):
        ends = {u}
        for _ in range(k):
            ends = {w for x in ends for w in adj[x]}
        out.update((u, v) for v in ends)
    return out


def walk_exists(adj: list[set[int]], a: int, b: int, length: int) -> bool:
    """Depth-first enumeration of walks from a; no dynamic programming."""
    if length == 0:
        return a == b
    return any(walk_exists(adj, w, b, length - 1) for w in adj[a])


def isomorphic(g, h) -> bool:
    if g.order != h.order or len(g.edges) != len(h.edges):
        return False
    target = set(h.edges)
    for p in itertools.permutations(range(g.order)):
        if all(((p[u], p[v]) if p[u] < p[v] else (p[v], p[u])) in target for u, v in g.edges):
            return True
    return False


def circular_clique_edges(n: int, d: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if d <= j - i <= n - d]


class _Simple:
    def __init__(self, order, edges):
        self.order = order
        self.edges = frozenset(edges)


def circular_clique(n: int, d: int):
    return _Simple(n, circular_clique_edges(n, d))


def complete(n: int):
    return _Simple(n, itertools.combinations(range(n), 2))


def chromatic_number(g) -> int:
    k = 1 if g.order else 0
    while not hom_exists(g, complete(k)):
        k += 1
    return k


def circular_chromatic_number(g, max_p: int | None = None) -> Fraction:
    """Smallest p/q with p <= max_p (default |V(g)|) such that g -> K_{p/q}."""
    max_p = max_p or g.order
    cands = sorted({Fraction(p, q) for p in range(2, max_p + 1) for q in range(1, p // 2 + 1)
                    if gcd(p, q) == 1})
    for c in cands:
        if hom_exists(g, circular_clique(c.numerator, c.denominator)):
            return c
    raise AssertionError("no circular colouring found")


def independent_sets(g) -> list[frozenset]:
    """All non-empty independent sets, by subset enumeration."""
    adj = adjacency_sets(g)
    out = []
    for mask in range(1, 1 << g.order):
        vs = [v for v in range(g.order) if mask >> v & 1]
        if all(w not in adj[v] for v, w in itertools.combinations(vs, 2)):
            out.append(frozenset(vs))
    return out


def fractional_chromatic_float(g) -> float:
    """Float LP over all independent sets, solved by scipy."""
    from scipy.optimize import linprog

    sets = independent_sets(g)
    a = np.array([[1.0 if v in s else 0.0 for s in sets] for v in range(g.order)])
    res = linprog(np.ones(len(sets)), A_ub=-a, b_ub=-np.ones(g.order), bounds=(0, None),
                  method="highs")
    assert res.status == 0
    return float(res.fun)


def random_graph(rng: np.random.Generator, order: int, p: float):
    edges = [(u, v) for u, v in itertools.combinations(range(order), 2) if rng.random() < p]
    return order, edges
