import itertools
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graphpowers import constructions as cons
from graphpowers.graph import (
    CapExceeded,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    make_graph,
    walk_neighborhood,
)
from graphpowers.homomorphism import check_homomorphism


@pytest.mark.parametrize("n,d", [(5, 1), (5, 2), (7, 3), (9, 4), (10, 3), (12, 5)])
def test_circular_complete_edges(n, d):
    g = cons.circular_complete(n, d)
    assert sorted(g.edges) == oracles.circular_clique_edges(n, d)
    assert g.symmetry == ("symmetric" if d == 1 else "transitive")


def test_circular_complete_rejects():
    with pytest.raises(ValueError):
        cons.circular_complete(3, 2)
    with pytest.raises(ValueError):
        cons.circular_complete(4, 0)


def test_circular_k_n_over_1_is_complete():
    assert cons.circular_complete(6, 1) == complete_graph(6)


@pytest.mark.parametrize("m,n", [(5, 2), (6, 2), (7, 3), (6, 1)])
def test_kneser_counts(m, n):
    g = cons.kneser(m, n)
    assert g.order == comb(m, n)
    assert all(g.degree(v) == comb(m - n, n) for v in range(g.order))
    subsets = cons.kneser_subsets(m, n)
    assert g.label(0) == "{" + ",".join(map(str, sorted(subsets[0]))) + "}"


def test_kneser_generalised():
    assert are_isomorphic(cons.kneser(5, 2, 1), complete_graph(10))
    g = cons.kneser(6, 3, 1)
    assert g.order == 20
    # |A & B| <= 1 for 3-subsets of [6]: the complement (1 subset) plus 9 meeting in one point
    assert all(g.degree(v) == 10 for v in range(g.order))


def test_petersen():
    p = cons.petersen()
    assert p.order == 10 and p.size == 15
    assert all(p.degree(v) == 3 for v in range(10))


@pytest.mark.parametrize("s", [1, 2, 3, 5])
def test_subdivide_counts(s):
    g = complete_graph(4)
    h = cons.subdivide(g, s)
    assert h.order == 4 + (s - 1) * 6
    assert h.size == 6 * s
    if s > 1:
        assert h.label(4) == "(0,1,1)"
    # original vertices keep their indices and stay at mutual distance s
    for u, v in g.edges:
        assert v in walk_neighborhood(h, u, s)


def test_subdivide_triangle_is_c9():
    assert are_isomorphic(cons.subdivide(complete_graph(3), 3), cycle_graph(9))
    assert are_isomorphic(cons.frac_power(complete_graph(3), 1, 3), cycle_graph(9))
    assert cons.subdivide(cycle_graph(5), 1) == cycle_graph(5)


def test_frac_power_matches_walks():
    g = cons.subdivide(cycle_graph(5), 3)
    h = cons.frac_power(cycle_graph(5), 3, 3)
    pairs = oracles.walk_pairs(g, 3)
    assert set(h.edges) == {(u, v) for u, v in pairs if u < v}


def _dual_base_oracle(g, s):
    adj = oracles.adjacency_sets(g)

    def hood(v, i):
        ends = {v}
        for _ in range(i):
            ends = {w for x in ends for w in adj[x]}
        return ends

    def subsets(xs):
        xs = sorted(xs)
        return [frozenset(c) for k in range(1, len(xs) + 1) for c in itertools.combinations(xs, k)]

    verts = []
    for v in range(g.order):
        for rest in itertools.product(*(subsets(hood(v, i)) for i in range(1, s + 1))):
            verts.append((frozenset([v]),) + rest)
    edges = set()
    for i, a in enumerate(verts):
        for j, b in enumerate(verts):
            if i < j and all(a[t] <= b[t + 1] and b[t] <= a[t + 1] for t in range(s)) and all(
                    y in adj[x] for t in range(s + 1) for x in a[t] for y in b[t]):
                edges.add((i, j))
    return verts, edges


@pytest.mark.parametrize("g,s", [(cycle_graph(5), 1), (complete_graph(3), 1),
                                 (cycle_graph(7), 2), (cons.circular_complete(7, 3), 1)])
def test_dual_power_base_matches_definition(g, s):
    verts, edges = _dual_base_oracle(g, s)
    base = cons.dual_power_base(g, s)
    assert cons.dual_vertices(g, s) == verts
    assert set(base.edges) == edges


def test_dual_power_base_s0_is_identity():
    g = cons.petersen()
    assert cons.dual_power_base(g, 0) == g


def test_dual_power_cap():
    with pytest.raises(CapExceeded):
        cons.dual_vertices(cons.petersen(), 2, cap=100)


def test_dual_power_odd_power():
    # the identity-scaled dual power of C5 is homomorphically equivalent to C5
    d = cons.dual_power(cycle_graph(5), 1, 1)
    assert d.order == cons.dual_power_base(cycle_graph(5), 1).order
    assert oracles.hom_exists(cycle_graph(5), d) is True


@pytest.mark.parametrize("d,n", [(2, 3), (2, 4), (3, 4), (2, 5), (4, 3)])
def test_hajos_chain(d, n):
    g = cons.hajos_chain(d, n)
    assert g.order == d * (n - 1) + 1
    assert g.size == d * comb(n, 2) - d + 1
    c = cons.hajos_circular_coloring(d, n)
    top = d * (n - 1) + 1
    assert sorted(c) == list(range(g.order))
    assert all(1 <= x <= top for x in c.values())
    # circular distance at least d on every edge
    assert all(d <= abs(c[u] - c[v]) <= top - d for u, v in g.edges)
    assert check_homomorphism({v: x - 1 for v, x in c.items()}, g, cons.circular_complete(top, d))


def test_hajos_labels():
    g = cons.hajos_chain(2, 4)
    assert [g.label(v) for v in range(g.order)] == ["v1", "u1_2", "u1_3", "w1", "u2_2", "u2_3", "w2"]
    with pytest.raises(ValueError):
        cons.hajos_chain(1, 4)


@pytest.mark.parametrize("m,n", [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)])
def test_kneser_walk_condition_against_walks(m, n):
    g = cons.kneser(m, n)
    subsets = cons.kneser_subsets(m, n)
    adj = oracles.adjacency_sets(g)
    # one pair per intersection size is enough: permuting [m] moves any pair to any other
    # pair with the same intersection size
    rep = {}
    for j, b in enumerate(subsets):
        rep.setdefault(len(subsets[0] & b), j)
    for k, j in rep.items():
        for l in range(7):
            assert cons.kneser_walk_condition(m, n, k, l) == oracles.walk_exists(adj, 0, j, l), (k, l)


def test_kneser_walk_condition_rejects():
    with pytest.raises(ValueError):
        cons.kneser_walk_condition(4, 2, 0, 1)
    with pytest.raises(ValueError):
        cons.kneser_walk_condition(5, 2, 3, 1)


@st.composite
def kneser_maps(draw):
    n = draw(st.integers(1, 3))
    m = draw(st.integers(2 * n, 2 * n + 3))
    order = draw(st.integers(1, 7))
    universe = list(range(1, m + 1))
    f = {v: frozenset(draw(st.permutations(universe))[:n]) for v in range(order)}
    pairs = [(u, v) for u in range(order) for v in range(u + 1, order) if not f[u] & f[v]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    s = draw(st.integers(1, 3))
    return make_graph(order, chosen), f, m, n, s


@settings(max_examples=150, deadline=None)
@given(kneser_maps())
def test_fractional_embedding_sizes(case):
    g, f, m, n, s = case
    emb = cons.fractional_embedding(g, f, m, n, s)
    assert all(len(emb[v]) == s * m + n for v in range(g.order))
    assert all(emb[v] <= set(range(1, (2 * s + 1) * m + 1)) for v in range(g.order))
    assert all(len(emb[u] & emb[v]) == (m - 2 * n) * s for u, v in g.edges)
    assert cons.is_kneser_homomorphism(g, emb, (2 * s + 1) * m, s * m + n, (m - 2 * n) * s)


def test_fractional_embedding_rejects_non_homomorphism():
    g = make_graph(2, [(0, 1)])
    with pytest.raises(ValueError):
        cons.fractional_embedding(g, {0: frozenset({1, 2}), 1: frozenset({2, 3})}, 5, 2, 1)
