"""Graph families and functors: circular cliques, Kneser graphs, subdivisions,
fractional and dual powers, Hajós chains, and two explicit colourings."""

from __future__ import annotations

import itertools

from .graph import (
    CapExceeded,
    Graph,
    VertexSet,
    complete_graph,
    make_graph,
    walk_neighborhood,
    walk_power,
)

DEFAULT_DUAL_CAP = 20000

DualVertex = tuple  # tuple[VertexSet, ...] of length s + 1


def circular_complete(n: int, d: int) -> Graph:
    """K_{n/d}: vertices 0..n-1, i ~ j iff d <= |i - j| <= n - d."""
    if d < 1 or n < 2 * d:
        raise ValueError(f"circular clique needs n >= 2d >= 2, got n={n}, d={d}")
    edges = [(i, j) for i, j in itertools.combinations(range(n), 2) if d <= j - i <= n - d]
    sym = "symmetric" if d == 1 else "transitive"
    return make_graph(n, edges, name=f"K({n}/{d})", symmetry=sym)


def circulant(n: int, connections) -> Graph:
    steps = {c % n for c in connections}
    edges = [(i, (i + c) % n) for i in range(n) for c in steps if c % n]
    return make_graph(n, edges, name=f"Circ({n},{sorted(steps)})", symmetry="transitive")


def kneser(m: int, n: int, s: int = 0) -> Graph:
    """Generalised Kneser graph KG(m, n, s) on the n-subsets of {1..m}.

    Distinct subsets A, B are adjacent iff |A & B| <= s; s = 0 is the ordinary
    Kneser graph. Vertices are listed in lexicographic order.
    """
    if n < 0 or m < 0 or n > m:
        raise ValueError(f"need 0 <= n <= m, got m={m}, n={n}")
    subsets = [frozenset(c) for c in itertools.combinations(range(1, m + 1), n)]
    edges = [(i, j) for (i, a), (j, b) in itertools.combinations(enumerate(subsets), 2)
             if len(a & b) <= s]
    labels = ["{" + ",".join(map(str, sorted(a))) + "}" for a in subsets]
    if n == 1 and s == 0:
        sym = "symmetric"
    else:
        sym = "transitive"
    name = f"KG({m},{n})" if s == 0 else f"KG({m},{n},{s})"
    return make_graph(len(subsets), edges, labels, name=name, symmetry=sym)


def kneser_subsets(m: int, n: int) -> list[frozenset]:
    """Vertex i of kneser(m, n, s) is the i-th entry of this list."""
    return [frozenset(c) for c in itertools.combinations(range(1, m + 1), n)]


def petersen() -> Graph:
    return kneser(5, 2)


def subdivide(g: Graph, s: int) -> Graph:
    """G^{1/s}: every edge becomes a path of length s.

    Original vertices keep their indices; the s - 1 internal vertices of the
    path replacing uv (u < v) follow in order, labelled ``(u,v,step)``.
    """
    if s < 1:
        raise ValueError("subdivision length must be >= 1")
    if s == 1:
        return g
    labels = [g.label(v) for v in range(g.order)]
    edges = []
    nxt = g.order
    for u, v in g.sorted_edges():
        prev = u
        for step in range(1, s):
            labels.append(f"({u},{v},{step})")
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return make_graph(nxt, edges, labels, name=f"({g.name})^(1/{s})")


def frac_power(g: Graph, r: int, s: int) -> Graph:
    """G^{r/s} = (G^{1/s})^r."""
    out = walk_power(subdivide(g, s), r)
    return make_graph(out.order, out.edges, out.labels, name=f"({g.name})^({r}/{s})")


def _nonempty_subsets(members: VertexSet):
    items = sorted(members)
    for k in range(1, len(items) + 1):
        for c in itertools.combinations(items, k):
            yield VertexSet(c)


def dual_vertices(g: Graph, s: int, cap: int = DEFAULT_DUAL_CAP) -> list[DualVertex]:
    """All tuples (A_1, ..., A_{s+1}) with A_1 = {v} and
    nonempty A_i contained in N_{i-1}(v)."""
    if s < 0:
        raise ValueError("s must be non-negative")
    count = 0
    per_vertex = []
    for v in range(g.order):
        hoods = [walk_neighborhood(g, v, i) for i in range(1, s + 1)]
        c = 1
        for h in hoods:
            c *= 2 ** len(h) - 1
        count += c
        per_vertex.append(hoods)
    if count > cap:
        raise CapExceeded("dual power vertex count", count, cap)
    out = []
    for v, hoods in enumerate(per_vertex):
        for rest in itertools.product(*(list(_nonempty_subsets(h)) for h in hoods)):
            out.append((VertexSet([v]),) + rest)
    return out


def _joined(g: Graph, a: VertexSet, b: VertexSet) -> bool:
    bits = g.bits
    mask = 0
    for y in b:
        mask |= 1 << y
    return all(bits[x] & mask == mask for x in a)


def _fmt_tuple(t: DualVertex) -> str:
    return "(" + ",".join("{" + ",".join(map(str, sorted(a))) + "}" for a in t) + ")"


def dual_power_base(g: Graph, s: int, cap: int = DEFAULT_DUAL_CAP) -> Graph:
    """The graph whose vertices are dual_vertices(g, s).

    (A_1..A_{s+1}) ~ (B_1..B_{s+1}) iff A_i <= B_{i+1} and B_i <= A_{i+1} for
    i <= s, and every vertex of A_j is adjacent to every vertex of B_j.
    """
    verts = dual_vertices(g, s, cap)
    edges = []
    for (i, a), (j, b) in itertools.combinations(enumerate(verts), 2):
        if any(not (a[t] <= b[t + 1] and b[t] <= a[t + 1]) for t in range(s)):
            continue
        if all(_joined(g, a[t], b[t]) for t in range(s + 1)):
            edges.append((i, j))
    labels = [_fmt_tuple(t) for t in verts]
    return make_graph(len(verts), edges, labels, name=f"({g.name})^~(1/{2 * s + 1})")


def dual_power(g: Graph, r: int, s: int, cap: int = DEFAULT_DUAL_CAP) -> Graph:
    """G^{~(2r+1)/(2s+1)}: the (2r+1)th walk power of dual_power_base(g, s)."""
    out = walk_power(dual_power_base(g, s, cap), 2 * r + 1)
    return make_graph(out.order, out.edges, out.labels,
                      name=f"({g.name})^~({2 * r + 1}/{2 * s + 1})")


def _hajos_layout(d: int, n: int) -> tuple[list[str], dict]:
    # block i holds v_i, u_i2..u_i(n-1), w_i; w_i is shared with v_{i+1}
    labels = ["v1"]
    where = {("v", 1): 0}
    for i in range(1, d + 1):
        for j in range(2, n):
            where[("u", i, j)] = len(labels)
            labels.append(f"u{i}_{j}")
        where[("w", i)] = len(labels)
        labels.append(f"w{i}")
        if i < d:
            where[("v", i + 1)] = where[("w", i)]
    return labels, where


def hajos_chain(d: int, n: int) -> Graph:
    """H_d(K_n): d copies of K_n glued by the Hajós construction."""
    if d < 2 or n < 3:
        raise ValueError(f"need d >= 2 and n >= 3, got d={d}, n={n}")
    labels, where = _hajos_layout(d, n)
    edges = []
    for i in range(1, d + 1):
        block = [where[("v", i)]] + [where[("u", i, j)] for j in range(2, n)] + [where[("w", i)]]
        for a, b in itertools.combinations(block, 2):
            if {a, b} != {where[("v", i)], where[("w", i)]}:
                edges.append((a, b))
    edges.append((where[("v", 1)], where[("w", d)]))
    return make_graph(len(labels), edges, labels, name=f"H{d}(K{n})")


def hajos_circular_coloring(d: int, n: int) -> dict[int, int]:
    """The explicit (d(n-1)+1, d)-colouring of hajos_chain(d, n).

    Colours are 1-based: c(u_ij) = (j-1)d + i, c(w_i) = i, c(v_1) = d(n-1) + 1.
    Subtract one to obtain a map into circular_complete(d(n-1)+1, d).
    """
    if d < 2 or n < 3:
        raise ValueError(f"need d >= 2 and n >= 3, got d={d}, n={n}")
    _, where = _hajos_layout(d, n)
    c = {where[("v", 1)]: d * (n - 1) + 1}
    for i in range(1, d + 1):
        c[where[("w", i)]] = i
        for j in range(2, n):
            c[where[("u", i, j)]] = (j - 1) * d + i
    return c


def is_kneser_homomorphism(g: Graph, f: dict, m: int, n: int, s: int = 0) -> bool:
    """Whether f (vertex -> n-subset of {1..m}) maps g into kneser(m, n, s).

    Checked directly on the sets, so the target never has to be built.
    """
    if set(f) != set(range(g.order)):
        return False
    universe = set(range(1, m + 1))
    for v in range(g.order):
        a = f[v]
        if len(a) != n or not set(a) <= universe:
            return False
    return all(f[u] != f[v] and len(f[u] & f[v]) <= s for u, v in g.edges)


def fractional_embedding(g: Graph, f: dict, m: int, n: int, s: int) -> dict[int, frozenset]:
    """Lift f: g -> KG(m, n) to g -> KG((2s+1)m, sm+n, (m-2n)s).

    Colour i of f becomes the block {(i-1)(2s+1)+1, ..., i(2s+1)}; a vertex
    takes the first s entries of blocks it misses and the last s+1 entries of
    blocks it uses.
    """
    if not is_kneser_homomorphism(g, f, m, n):
        raise ValueError(f"f is not a homomorphism into KG({m},{n})")
    w = 2 * s + 1
    g_map = {}
    for v in range(g.order):
        out = set()
        for i in range(1, m + 1):
            base = (i - 1) * w
            if i in f[v]:
                out.update(range(base + s + 1, base + w + 1))
            else:
                out.update(range(base + 1, base + s + 1))
        g_map[v] = frozenset(out)
    return g_map


def kneser_walk_condition(m: int, n: int, k: int, l: int) -> bool:
    """Whether every pair of n-subsets of [m] meeting in k points is joined by
    a walk of length exactly l in KG(m, n)."""
    if not m > 2 * n >= 2:
        raise ValueError(f"need m > 2n >= 2, got m={m}, n={n}")
    if not 0 <= k <= n or l < 0:
        raise ValueError(f"need 0 <= k <= n and l >= 0, got k={k}, l={l}")
    if l % 2 == 0:
        return 2 * k >= 2 * n - l * (m - 2 * n)
    return 2 * k <= (l - 1) * (m - 2 * n)


__all__ = [
    "DEFAULT_DUAL_CAP",
    "circular_complete",
    "circulant",
    "complete_graph",
    "dual_power",
    "dual_power_base",
    "dual_vertices",
    "frac_power",
    "fractional_embedding",
    "hajos_chain",
    "hajos_circular_coloring",
    "is_kneser_homomorphism",
    "kneser",
    "kneser_subsets",
    "kneser_walk_condition",
    "petersen",
    "subdivide",
]
