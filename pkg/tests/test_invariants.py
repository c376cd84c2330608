import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from graphpowers import constructions as cons
from graphpowers import invariants as inv
from graphpowers.graph import (
    CapExceeded,
    complete_graph,
    cycle_graph,
    disjoint_union,
    is_bipartite,
    make_graph,
    path_graph,
)
from graphpowers.homomorphism import check_homomorphism
from graphpowers.lp import Unbounded, solve_packing


def corpus(seed: int, count: int, lo: int = 3, hi: int = 7, p=(0.3, 0.8)):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        g = make_graph(*oracles.random_graph(rng, int(rng.integers(lo, hi + 1)), float(rng.uniform(*p))))
        if g.size:
            out.append(g)
    return out


def test_maximal_independent_sets_against_subsets():
    for g in corpus(1, 30):
        every = oracles.independent_sets(g)
        maximal = {s for s in every if not any(s < t for t in every)}
        assert set(inv.maximal_independent_sets(g)) == maximal


def test_maximal_independent_sets_cap():
    with pytest.raises(CapExceeded):
        inv.maximal_independent_sets(cycle_graph(30), cap=10)


def test_clique_and_independence():
    p = cons.petersen()
    assert inv.clique_number(p) == 2
    assert inv.independence_number(p) == 4
    assert inv.clique_number(complete_graph(6)) == 6
    for g in corpus(2, 20):
        assert inv.independence_number(g) == max(len(s) for s in oracles.independent_sets(g))


def test_chromatic_number_against_enumeration():
    for g in corpus(3, 40):
        assert inv.chromatic_number(g) == oracles.chromatic_number(g)
    assert inv.chromatic_number(make_graph(0)) == 0
    assert inv.chromatic_number(make_graph(3)) == 1
    assert inv.chromatic_number(cons.petersen()) == 3


def test_circular_candidates():
    assert inv.circular_candidates(5, 3) == [Fraction(5, 2), Fraction(3)]
    cands = inv.circular_candidates(9, 3)
    assert Fraction(9, 4) in cands and Fraction(7, 3) in cands
    assert all(Fraction(2) < c <= 3 for c in cands)


@pytest.mark.parametrize("n,d", [(n, d) for n in range(3, 11) for d in range(1, n // 2 + 1)
                                 if math.gcd(n, d) == 1 and n > 2 * d])
def test_chic_of_circular_cliques(n, d):
    v = inv.circular_chromatic_number(cons.circular_complete(n, d))
    assert v.value == Fraction(n, d)
    assert check_homomorphism(v.witness, cons.circular_complete(n, d), cons.circular_complete(n, d))


def test_chic_against_enumeration():
    for g in corpus(4, 30, 4, 7):
        if is_bipartite(g):
            continue
        assert inv.circular_chromatic_number(g).value == oracles.circular_chromatic_number(g)


def test_chic_witness_and_str():
    v = inv.circular_chromatic_number(cons.subdivide(complete_graph(4), 3))
    assert v.value == Fraction(12, 5)
    assert str(v) == "12/5"
    assert check_homomorphism(v.witness, cons.subdivide(complete_graph(4), 3),
                              cons.circular_complete(12, 5))


@pytest.mark.parametrize("g,value", [
    (cycle_graph(5), Fraction(5, 2)),
    (cycle_graph(9), Fraction(9, 4)),
    (cons.petersen(), Fraction(3)),
    (complete_graph(4), Fraction(4)),
    (cons.hajos_chain(3, 4), Fraction(10, 3)),
    (cons.frac_power(complete_graph(4), 3, 5), Fraction(20, 7)),
])
def test_chic_known_values(g, value):
    assert inv.circular_chromatic_number(g).value == value


def test_chic_edge_cases():
    with pytest.raises(ValueError):
        inv.circular_chromatic_number(make_graph(4))
    v = inv.circular_chromatic_number(path_graph(4))
    assert v.value == 2
    assert check_homomorphism(v.witness, path_graph(4), complete_graph(2))


def test_fractional_against_float_lp():
    for g in corpus(5, 30, 3, 8):
        fv = inv.fractional_chromatic_number(g)
        assert float(fv.value) == pytest.approx(oracles.fractional_chromatic_float(g), abs=1e-9)
        assert inv.check_fractional_certificate(g, fv)


@pytest.mark.parametrize("g,value", [
    (cycle_graph(5), Fraction(5, 2)),
    (cycle_graph(9), Fraction(9, 4)),
    (cons.petersen(), Fraction(5, 2)),
    (complete_graph(5), Fraction(5)),
    (cons.subdivide(complete_graph(4), 3), Fraction(16, 7)),
])
def test_fractional_known_values(g, value):
    fv = inv.fractional_chromatic_number(g)
    assert fv.value == value
    assert inv.check_fractional_certificate(g, fv)
    m, n, f = inv.kneser_coloring_from_cover(g, fv)
    assert Fraction(m, n) == value
    assert cons.is_kneser_homomorphism(g, f, m, n)


def test_fractional_certificate_rejects_tampering():
    g = cycle_graph(5)
    fv = inv.fractional_chromatic_number(g)
    bad = inv.FractionalValue(fv.value, fv.primal, {0: Fraction(5, 2)})
    assert not inv.check_fractional_certificate(g, bad)
    short = inv.FractionalValue(Fraction(2), {s: w * Fraction(4, 5) for s, w in fv.primal.items()},
                                fv.dual)
    assert not inv.check_fractional_certificate(g, short)


def test_invariant_chain():
    for g in corpus(6, 30, 4, 7):
        if is_bipartite(g):
            continue
        chif = inv.fractional_chromatic_number(g).value
        chic = inv.circular_chromatic_number(g).value
        chi = inv.chromatic_number(g)
        assert inv.clique_number(g) <= chif <= chic <= chi
        assert math.ceil(chic) == chi


def test_tuple_colouring():
    m, col = inv.tuple_coloring(cycle_graph(5), 2)
    assert m == 5
    assert cons.is_kneser_homomorphism(cycle_graph(5), col, 5, 2)
    assert inv.multichromatic_number(cons.petersen(), 2) == 5
    assert inv.multichromatic_number(complete_graph(3), 3) == 9
    assert inv.tuple_coloring(make_graph(2), 3) == (3, {0: frozenset({1, 2, 3}), 1: frozenset({1, 2, 3})})
    with pytest.raises(ValueError):
        inv.tuple_coloring(cycle_graph(5), 0)


def test_tuple_colouring_against_enumeration():
    for g in corpus(8, 10, 3, 5):
        m = inv.multichromatic_number(g, 2)
        assert oracles.hom_exists(g, cons.kneser(m, 2))
        assert not oracles.hom_exists(g, cons.kneser(m - 1, 2))


def test_mu_and_zeta():
    assert inv.mu(cycle_graph(5)) == Fraction(5, 2) / (3 * Fraction(1, 2))
    assert inv.mu_from_circular(Fraction(12, 5)) == Fraction(2)
    with pytest.raises(ValueError):
        inv.mu(path_graph(3))
    assert inv.zeta(cycle_graph(5)) == 1
    assert inv.zeta(complete_graph(4)) == 1
    assert inv.zeta(disjoint_union(complete_graph(3), complete_graph(3))) == 2
    with pytest.raises(ValueError):
        inv.zeta(make_graph(0))


@pytest.mark.parametrize("n,d,parent", [(12, 5, Fraction(7, 3)), (27, 11, Fraction(22, 9)),
                                        (5, 2, Fraction(2)), (7, 3, Fraction(2)), (8, 3, Fraction(5, 2)),
                                        (10, 3, Fraction(3))])
def test_lower_parent_examples(n, d, parent):
    assert inv.lower_parent(n, d) == parent


@settings(max_examples=120, deadline=None)
@given(st.integers(3, 45), st.integers(1, 30))
def test_lower_parent_property(n, d):
    if math.gcd(n, d) != 1:
        with pytest.raises(ValueError):
            inv.lower_parent(n, d)
        return
    p = inv.lower_parent(n, d)
    n1, d1 = p.numerator, p.denominator
    assert 0 < n1 < n
    assert n * d1 - n1 * d == 1
    # no fraction with numerator below n fits strictly between the parent and n/d
    for a in range(1, n):
        # a/b > n1/d1 forces b < a d1 / n1
        for b in range(1, a * d1 // n1 + 1):
            assert not (n1 * b < a * d1 and a * d < n * b), (a, b)


def test_lower_parent_rejects():
    with pytest.raises(ValueError):
        inv.lower_parent(6, 4)


def test_solve_packing_against_float_lp():
    from scipy.optimize import linprog

    rng = np.random.default_rng(9)
    for _ in range(25):
        ncols = int(rng.integers(2, 7))
        rows = [sorted(set(rng.choice(ncols, int(rng.integers(1, ncols + 1)), replace=False).tolist()))
                for _ in range(int(rng.integers(2, 7)))]
        covered = set().union(*rows)
        rows += [[j] for j in range(ncols) if j not in covered]
        value, y, x = solve_packing(rows, ncols)
        a = np.zeros((len(rows), ncols))
        for i, r in enumerate(rows):
            a[i, r] = 1
        res = linprog(-np.ones(ncols), A_ub=a, b_ub=np.ones(len(rows)), bounds=(0, None),
                      method="highs")
        assert float(value) == pytest.approx(-res.fun, abs=1e-9)
        assert sum(y) == value == sum(x)
        assert all(sum(y[j] for j in r) <= 1 for r in rows)
        assert all(sum(x[i] for i, r in enumerate(rows) if j in r) >= 1 for j in range(ncols))


def test_solve_packing_unbounded():
    with pytest.raises(Unbounded):
        solve_packing([[0]], 2)
