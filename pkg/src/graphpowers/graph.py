"""Finite simple graphs, walk powers, odd girth and small-graph isomorphism."""

from __future__ import annotations

import itertools
import math
import time
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

import numpy as np

# Exact chromatic values are plain fractions.Fraction objects.
Rational = Fraction
VertexSet = frozenset


class LoopCreated(ValueError):
    """A walk power would put a loop on some vertex."""

    def __init__(self, k: int, vertex: int):
        super().__init__(
            f"vertex {vertex} has a closed walk of length {k}; "
            f"the walk power of order {k} is not a simple graph (is k < odd girth?)"
        )
        self.k = k
        self.vertex = vertex


class CapExceeded(RuntimeError):
    """A construction or enumeration would exceed its configured size cap."""

    def __init__(self, what: str, count: int, cap: int):
        super().__init__(f"{what}: {count} exceeds cap {cap}")
        self.count = count
        self.cap = cap


class SearchTimeout(TimeoutError):
    """A search ran out of budget; the answer is unknown, not negative."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..order-1``.

    ``symmetry`` is a construction-time promise about the automorphism group:
    ``"transitive"`` for vertex-transitive graphs and ``"symmetric"`` when every
    permutation is an automorphism (complete graphs). The homomorphism search
    uses it for symmetry breaking, so only constructors that can guarantee it
    should set it.
    """

    order: int
    edges: frozenset
    labels: tuple | None = field(default=None, compare=False)
    name: str = field(default="", compare=False)
    symmetry: str | None = field(default=None, compare=False)

    @cached_property
    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for row in adj:
            row.sort()
        return adj

    @cached_property
    def bits(self) -> list[int]:
        """Neighbourhoods as integer bitmasks."""
        out = []
        for row in self.adjacency:
            b = 0
            for v in row:
                b |= 1 << v
            out.append(b)
        return out

    def matrix(self) -> np.ndarray:
        a = np.zeros((self.order, self.order), dtype=bool)
        for u, v in self.edges:
            a[u, v] = a[v, u] = True
        return a

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.bits[u] >> v) & 1 == 1

    def label(self, v: int) -> str:
        if self.labels is None:
            return str(v)
        return self.labels[v]

    @property
    def size(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def __repr__(self) -> str:
        name = f"{self.name!r}, " if self.name else ""
        return f"Graph({name}order={self.order}, size={self.size})"


def _normalize_edges(order: int, edge_list: Iterable) -> frozenset:
    out = set()
    for e in edge_list:
        u, v = e
        u, v = int(u), int(v)
        if not (0 <= u < order and 0 <= v < order):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{order - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


def make_graph(order: int, edge_list: Iterable = (), labels=None, name: str = "",
               symmetry: str | None = None) -> Graph:
    if order < 0:
        raise ValueError("order must be non-negative")
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != order:
            raise ValueError("one label per vertex required")
    return Graph(order, _normalize_edges(order, edge_list), labels, name, symmetry)


def complete_graph(n: int) -> Graph:
    return make_graph(n, itertools.combinations(range(n), 2), name=f"K{n}",
                      symmetry="symmetric")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return make_graph(n, ((i, (i + 1) % n) for i in range(n)), name=f"C{n}",
                      symmetry="transitive")


def path_graph(n: int) -> Graph:
    return make_graph(n, ((i, i + 1) for i in range(n - 1)), name=f"P{n}")


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    edges = list(g.edges) + [(u + shift, v + shift) for u, v in h.edges]
    labels = None
    if g.labels is not None or h.labels is not None:
        labels = [g.label(v) for v in range(g.order)] + [h.label(v) for v in range(h.order)]
    return make_graph(g.order + h.order, edges, labels, name=f"{g.name}+{h.name}")


def complement(g: Graph) -> Graph:
    edges = [(u, v) for u, v in itertools.combinations(range(g.order), 2)
             if not g.has_edge(u, v)]
    return make_graph(g.order, edges, g.labels, name=f"co-{g.name}")


def relabel(g: Graph, name: str | None = None, symmetry: str | None = None) -> Graph:
    return Graph(g.order, g.edges, g.labels, g.name if name is None else name, symmetry)


def walk_power(g: Graph, k: int) -> Graph:
    """Graph on V(g) joining u != v whenever a walk of length exactly k joins them.

    Raises LoopCreated if some vertex has a closed walk of length k, which for
    odd k means k >= og(g) and for even k means g has an edge.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if k == 1:
        return g
    a = g.matrix().astype(np.int64)
    reach = a.copy()
    for _ in range(k - 1):
        reach = (reach @ a > 0).astype(np.int64)
    diag = np.flatnonzero(np.diag(reach))
    if diag.size:
        raise LoopCreated(k, int(diag[0]))
    us, vs = np.nonzero(np.triu(reach, 1))
    return make_graph(g.order, zip(us.tolist(), vs.tolist()), g.labels,
                      name=f"({g.name})^{k}")


def walk_neighborhood(g: Graph, v: int, i: int) -> VertexSet:
    """Endpoints of all walks of length i starting at v."""
    if not 0 <= v < g.order:
        raise ValueError(f"vertex {v} out of range")
    if i < 0:
        raise ValueError("walk length must be non-negative")
    frontier = 1 << v
    bits = g.bits
    for _ in range(i):
        nxt = 0
        x = frontier
        while x:
            low = x & -x
            nxt |= bits[low.bit_length() - 1]
            x ^= low
        frontier = nxt
    return VertexSet(_members(frontier))


def _members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def odd_girth(g: Graph) -> float | int:
    """Length of a shortest odd cycle, or math.inf for bipartite graphs."""
    best = math.inf
    adj = g.adjacency
    for s in range(g.order):
        dist = [-1] * g.order
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
                elif dist[w] == dist[u]:
                    best = min(best, 2 * dist[u] + 1)
    return best


def is_bipartite(g: Graph) -> bool:
    return odd_girth(g) == math.inf


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.order
    out = []
    for s in range(g.order):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def remove(g: Graph, vertices: Iterable[int] = (), edges: Iterable = ()) -> tuple[Graph, list[int]]:
    """Delete vertices and edges from g.

    Returns the new graph and ``kept``, where ``kept[i]`` is the old index of new
    vertex ``i``. Reindexing is dense and order-preserving.
    """
    drop = set(vertices)
    for v in drop:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} not in graph")
    cut = set()
    for u, v in edges:
        e = (u, v) if u < v else (v, u)
        if e not in g.edges:
            raise ValueError(f"edge {e} not in graph")
        cut.add(e)
    kept = [v for v in range(g.order) if v not in drop]
    index = {old: new for new, old in enumerate(kept)}
    new_edges = [(index[u], index[v]) for u, v in g.edges
                 if u in index and v in index and (u, v) not in cut]
    labels = None if g.labels is None else [g.labels[v] for v in kept]
    return make_graph(len(kept), new_edges, labels, name=g.name), kept


def _refine(g: Graph, colors: list[int]) -> list[int]:
    # colour refinement to a stable partition; colours are canonical integers
    adj = g.adjacency
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(g.order)]
        table = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [table[s] for s in sigs]
        if len(table) == len(set(colors)):
            return new
        colors = new


def are_isomorphic(g: Graph, h: Graph, time_budget: float | None = None) -> bool:
    """Decide isomorphism by colour refinement followed by backtracking.

    Refinement is run jointly on the disjoint union so that colour classes are
    comparable between the two graphs.
    """
    if g.order != h.order or g.size != h.size:
        return False
    if sorted(map(len, g.adjacency)) != sorted(map(len, h.adjacency)):
        return False
    n = g.order
    if n == 0:
        return True
    union = disjoint_union(g, h)
    colors = _refine(union, [len(union.adjacency[v]) for v in range(2 * n)])
    cg, ch = colors[:n], colors[n:]
    if sorted(cg) != sorted(ch):
        return False

    # BFS order inside each component, rarest colour class first
    freq = {c: cg.count(c) for c in set(cg)}
    order: list[int] = []
    seen = [False] * n
    for s in sorted(range(n), key=lambda v: (freq[cg[v]], v)):
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adjacency[u], key=lambda v: (freq[cg[v]], v)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(ch[v], []).append(v)
    gbits, hbits = g.bits, h.bits
    image = [-1] * n
    used = 0
    deadline = None if time_budget is None else time.monotonic() + time_budget
    nodes = 0

    def extend(pos: int) -> bool:
        nonlocal used, nodes
        if pos == n:
            return True
        nodes += 1
        if deadline is not None and nodes % 1024 == 0 and time.monotonic() > deadline:
            raise SearchTimeout("isomorphism search exceeded its time budget")
        u = order[pos]
        for x in by_color[cg[u]]:
            if (used >> x) & 1:
                continue
            ok = True
            for p in range(pos):
                w = order[p]
                if ((gbits[u] >> w) & 1) != ((hbits[x] >> image[w]) & 1):
                    ok = False
                    break
            if not ok:
                continue
            image[u] = x
            used |= 1 << x
            if extend(pos + 1):
                return True
            used &= ~(1 << x)
            image[u] = -1
        return False

    return extend(0)
