"""Exact graph homomorphism search.

The solver is a backtracking search with maintained arc consistency. Domains
are integer bitmasks over the target's vertices; revising the arc (y, x) is a
single AND with the union of target neighbourhoods of the values left for x.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .graph import Graph, SearchTimeout, components


@dataclass(frozen=True)
class SearchOptions:
    time_budget: float = 60.0
    parallel: bool = False
    symmetry: bool = True
    # re-run every negative answer with the vertex-order tie-breaks reversed
    double_check: bool = False

    def __post_init__(self):
        if not self.time_budget > 0:
            raise ValueError("time budget must be positive")


@dataclass(frozen=True)
class HomCertificate:
    source: str
    target: str
    mapping: tuple

    def __getitem__(self, v: int) -> int:
        return self.mapping[v]


def check_homomorphism(cert: HomCertificate | dict | tuple | list, g: Graph, h: Graph) -> bool:
    """True iff every edge of g is sent to an edge of h."""
    mapping = cert.mapping if isinstance(cert, HomCertificate) else cert
    if isinstance(mapping, dict):
        missing = [v for v in range(g.order) if v not in mapping]
    else:
        missing = list(range(len(mapping), g.order))
    if missing:
        raise ValueError(f"assignment is not total: vertices {missing[:5]} unmapped")
    for v in range(g.order):
        if not 0 <= mapping[v] < h.order:
            return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges)


class _Problem:
    """The source graph as a binary constraint network.

    Maximal chains of degree-2 vertices are contracted: a chain of length L
    between branch vertices u and v becomes the constraint "f(u) and f(v) are
    joined by a walk of length L in the target". Internal chain vertices are
    filled in after the search, so contraction loses no solutions.
    """

    def __init__(self, g: Graph, contract: bool = True):
        adj = g.adjacency
        n = g.order
        self.order = n
        self.comps = components(g)
        branch = [not contract or len(adj[v]) != 2 for v in range(n)]
        for comp in self.comps:
            if not any(branch[v] for v in comp):
                branch[comp[0]] = True
        self.branch = branch
        self.chains: list[tuple[int, list[int], int]] = []
        self.cons: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        self.unary: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for u in range(n):
            if not branch[u]:
                continue
            for w in adj[u]:
                if (u, w) in seen:
                    continue
                inner = []
                prev, cur = u, w
                while not branch[cur]:
                    inner.append(cur)
                    a, b = adj[cur]
                    prev, cur = cur, (b if a == prev else a)
                seen.add((cur, prev))
                seen.add((u, w))
                length = len(inner) + 1
                self.chains.append((u, inner, cur))
                if u == cur:
                    self.unary[u].append(length)
                else:
                    self.cons[u].append((cur, length))
                    self.cons[cur].append((u, length))
        self.max_length = max((len(c[1]) + 1 for c in self.chains), default=1)


class _Search:
    def __init__(self, prob: _Problem, h: Graph, opts: SearchOptions, deadline: float,
                 reverse: bool = False, label: str = ""):
        self.prob = prob
        self.h = h
        self.cons = prob.cons
        self.deg = [len(c) for c in prob.cons]
        self.symmetry = h.symmetry if opts.symmetry else None
        self.deadline = deadline
        self.reverse = reverse
        self.label = label
        self.nodes = 0
        self.full = (1 << h.order) - 1
        # walks[L][a]: target vertices reachable from a by a walk of length exactly L
        walks = [[1 << a for a in range(h.order)], list(h.bits)]
        for _ in range(2, prob.max_length + 1):
            prev = walks[-1]
            walks.append([_union(h.bits, prev[a]) for a in range(h.order)])
        self.walks = walks
        self._support: dict[tuple[int, int], int] = {}

    def support(self, dom: int, length: int) -> int:
        cache = self._support
        key = (dom, length)
        r = cache.get(key)
        if r is None:
            r = _union(self.walks[length], dom)
            if len(cache) > 500_000:
                cache.clear()
            cache[key] = r
        return r

    def propagate(self, dom: list[int], queue: list[int]) -> bool:
        pending = set(queue)
        cons = self.cons
        while queue:
            x = queue.pop()
            pending.discard(x)
            dx = dom[x]
            for y, length in cons[x]:
                dy = dom[y]
                nd = dy & self.support(dx, length)
                if nd != dy:
                    if not nd:
                        return False
                    dom[y] = nd
                    if y not in pending:
                        pending.add(y)
                        queue.append(y)
        return True

    def tick(self):
        self.nodes += 1
        if self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout(
                f"homomorphism search {self.label} exceeded its time budget "
                f"after {self.nodes} nodes"
            )

    def pick(self, dom: list[int], comp: list[int]) -> int:
        best = -1
        key = None
        rev = -1 if self.reverse else 1
        for v in comp:
            c = dom[v].bit_count()
            if c > 1:
                k = (c, -self.deg[v], rev * v)
                if key is None or k < key:
                    key, best = k, v
        return best

    def values(self, dom: list[int], comp: list[int], x: int, first: bool) -> list[int]:
        d = dom[x]
        vals = _bits(d)
        if self.symmetry == "transitive" and first and d == self.full:
            return [0]
        if self.symmetry == "symmetric":
            used = 0
            for v in comp:
                dv = dom[v]
                if dv & (dv - 1) == 0:
                    used |= dv
            fresh = [a for a in vals if not (used >> a) & 1]
            return [a for a in vals if (used >> a) & 1] + fresh[:1]
        return vals

    def solve(self, dom: list[int], comp: list[int], first: bool = True) -> list[int] | None:
        self.tick()
        x = self.pick(dom, comp)
        if x < 0:
            return dom
        for a in self.values(dom, comp, x, first):
            trial = dom.copy()
            trial[x] = 1 << a
            if self.propagate(trial, [x]):
                out = self.solve(trial, comp, False)
                if out is not None:
                    return out
        return None

    def initial_domains(self) -> list[int] | None:
        h = self.h
        nonisolated = 0
        for a, b in enumerate(h.bits):
            if b:
                nonisolated |= 1 << a
        prob = self.prob
        dom = []
        for v in range(prob.order):
            if not prob.branch[v]:
                dom.append(0)
                continue
            d = nonisolated if (prob.cons[v] or prob.unary[v]) else self.full
            for length in prob.unary[v]:
                row = self.walks[length]
                d &= sum(1 << a for a in range(h.order) if row[a] >> a & 1)
            if not d:
                return None
            dom.append(d)
        return dom

    def fill_chains(self, image: list[int]):
        walks, hbits = self.walks, self.h.bits
        for u, inner, v in self.prob.chains:
            prev, target = image[u], image[v]
            length = len(inner) + 1
            for i, w in enumerate(inner, start=1):
                options = hbits[prev] & walks[length - i][target]
                prev = (options & -options).bit_length() - 1
                image[w] = prev


def _union(rows: list[int], mask: int) -> int:
    r = 0
    while mask:
        low = mask & -mask
        r |= rows[low.bit_length() - 1]
        mask ^= low
    return r


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _solve_branch(g: Graph, h: Graph, opts: SearchOptions, deadline: float,
                  dom: list[int], comp: list[int], x: int, a: int):
    search = _Search(_Problem(g), h, opts, deadline)
    trial = dom.copy()
    trial[x] = 1 << a
    if not search.propagate(trial, [x]):
        return None
    return search.solve(trial, comp, False)


def _run(g: Graph, h: Graph, opts: SearchOptions, reverse: bool = False,
         contract: bool = True) -> list[int] | None:
    deadline = time.monotonic() + opts.time_budget
    if g.order == 0:
        return []
    if h.order == 0:
        return None
    prob = _Problem(g, contract=contract)
    search = _Search(prob, h, opts, deadline, reverse, f"{g.name or 'G'} -> {h.name or 'H'}")
    dom = search.initial_domains()
    if dom is None:
        return None
    variables = [v for v in range(g.order) if prob.branch[v]]
    if not search.propagate(dom, variables):
        return None
    for comp in prob.comps:
        comp = [v for v in comp if prob.branch[v]]
        if opts.parallel and not reverse:
            result = _solve_parallel(search, g, h, opts, deadline, dom, comp)
        else:
            result = search.solve(dom, comp)
        if result is None:
            return None
        for v in comp:
            dom[v] = result[v]
    image = [dom[v].bit_length() - 1 if prob.branch[v] else -1 for v in range(g.order)]
    search.fill_chains(image)
    return image


def _solve_parallel(search: _Search, g, h, opts, deadline, dom, comp):
    x = search.pick(dom, comp)
    if x < 0:
        return dom
    vals = search.values(dom, comp, x, True)
    with ProcessPoolExecutor() as pool:
        futures = [pool.submit(_solve_branch, g, h, opts, deadline, dom, comp, x, a)
                   for a in vals]
        # results are taken in value order so the certificate matches the serial one
        for fut in futures:
            out = fut.result()
            if out is not None:
                for other in futures:
                    other.cancel()
                return out
    return None


def find_homomorphism(g: Graph, h: Graph, opts: SearchOptions | None = None) -> HomCertificate | None:
    """Search for a homomorphism g -> h.

    Returns a certificate, or None when the search space is exhausted (a proof
    that no homomorphism exists). Raises SearchTimeout when the budget runs out;
    a timeout says nothing about existence.
    """
    opts = opts or SearchOptions()
    mapping = _run(g, h, opts)
    if mapping is None:
        if opts.double_check:
            again = _run(g, h, SearchOptions(opts.time_budget, False, opts.symmetry), reverse=True)
            if again is not None:
                raise RuntimeError("inconsistent search results on recheck")
        return None
    cert = HomCertificate(g.name, h.name, tuple(mapping))
    if not check_homomorphism(cert, g, h):
        raise AssertionError("search produced an invalid homomorphism")
    return cert


def homomorphically_equivalent(g: Graph, h: Graph, opts: SearchOptions | None = None) -> bool:
    return (find_homomorphism(g, h, opts) is not None
            and find_homomorphism(h, g, opts) is not None)


def exists_homomorphism(g: Graph, h: Graph, opts: SearchOptions | None = None) -> bool:
    return find_homomorphism(g, h, opts) is not None
