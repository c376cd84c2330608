"""Instance-level verification of the graph-power colouring results.

Each suite returns a VerificationReport whose records pair an expected value
(evaluated from a closed formula with exact rationals) with the value computed
by the search engines. A record whose search times out is *inconclusive*: it
never counts as a pass, and it is kept distinct from a failure.
"""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import constructions as cons
from . import invariants as inv
from .graph import (
    CapExceeded,
    SearchTimeout,
    are_isomorphic,
    complete_graph,
    cycle_graph,
    odd_girth,
    remove,
    walk_power,
)
from .homomorphism import SearchOptions, check_homomorphism, find_homomorphism


@dataclass
class Record:
    claim: str
    anchor: str
    instance: dict
    expected: str
    computed: str
    passed: bool
    inconclusive: bool = False
    runtime: float = 0.0
    note: str = ""

    @property
    def status(self) -> str:
        if self.inconclusive:
            return "INCONCLUSIVE"
        return "PASS" if self.passed else "FAIL"


@dataclass
class VerificationReport:
    records: list[Record] = field(default_factory=list)

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.records + other.records)

    @property
    def failures(self) -> list[Record]:
        return [r for r in self.records if not r.passed and not r.inconclusive]

    @property
    def inconclusive(self) -> list[Record]:
        return [r for r in self.records if r.inconclusive]

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [f"{r.status:12s} {r.claim}  expected={r.expected} computed={r.computed}"
                f"  ({r.runtime:.2f}s)" for r in self.records]

    def to_dicts(self) -> list[dict]:
        return [asdict(r) for r in self.records]


def fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


class _Recorder:
    def __init__(self, opts: SearchOptions | None):
        self.opts = opts or SearchOptions()
        self.report = VerificationReport()

    def check(self, claim: str, anchor: str, instance: dict, expected,
              compute: Callable[[], object], holds: Callable[[object, object], bool] | None = None,
              expected_text: str | None = None, note: str = ""):
        """Run compute() and compare with expected (exact equality unless holds is given)."""
        t0 = time.monotonic()
        try:
            value = compute()
        except (SearchTimeout, CapExceeded) as exc:
            self.report.records.append(Record(
                claim, anchor, instance, expected_text or fmt(expected), "?", False, True,
                time.monotonic() - t0, f"{note} {type(exc).__name__}: {exc}".strip()))
            return None
        ok = holds(value, expected) if holds else value == expected
        self.report.records.append(Record(
            claim, anchor, instance, expected_text or fmt(expected), fmt(value), bool(ok), False,
            time.monotonic() - t0, note))
        return value

    def exists(self, g, h) -> bool:
        return find_homomorphism(g, h, self.opts) is not None

    def equivalent(self, g, h) -> bool:
        return self.exists(g, h) and self.exists(h, g)

    def chic(self, g) -> Fraction:
        return inv.circular_chromatic_number(g, self.opts).value


def subdivision_formula(chic: Fraction, r: int, s: int) -> Fraction:
    """(2s+1) x / ((s-r) x + 2r + 1) for x = chi_c(G)."""
    return (2 * s + 1) * chic / ((s - r) * chic + 2 * r + 1)


def fractional_bound(chif: Fraction, s: int) -> Fraction:
    return (2 * s + 1) * chif / (s * chif + 1)


ANCHOR_CIRC_POWER = "K(n/d)^(2r+1) ≅ K(n/((2r+1)d-rn)) when n/d < (2r+1)/r"
ANCHOR_CIRC_EQUIV = "K(n/d) <-> K((2s+1)n/(sn+d))^(2s+1)"
ANCHOR_DUAL_CIRC = "K(n/d)^~(1/(2r+1)) <-> K((2r+1)n/(rn+d)) when n/d < 4"
ANCHOR_SUBDIV = "chi_c(G^(1/(2s+1))) = (2s+1)chi_c/(s chi_c + 1)"
ANCHOR_POWER_EQ = "chi_c(G^((2r+1)/(2s+1))) = (2s+1)chi_c/((s-r)chi_c+2r+1) when below 4"
ANCHOR_POWER_UB = "chi_c(G^((2r+1)/(2s+1))) <= (2s+1)chi_c/((s-r)chi_c+2r+1) when (2r+1)/(2s+1) < chi_c/(chi_c-2)"
ANCHOR_THREE = "chi(G^((2r+1)/(2s+1))) = 3 when (2r+1)/(2s+1) <= chi/(3(chi-2))"
ANCHOR_MU = "mu(G^((2r+1)/(2s+1))) = (2s+1)/(2r+1) mu(G)"
ANCHOR_INF = "chi_c(G) = inf{(2n+1)/(n-t) : chi(G^((2n+1)/(3(2t+1)))) = 3}"
ANCHOR_UNAVOID = "chi_c(K_(3k+1)^(1/3)) = (9k+3)/(3k+2) has no subgraph of value (6k+1)/(2k+1)"
ANCHOR_PARENT = "lower parent n'/d': 0 < n' < n, nd' - n'd = 1"
ANCHOR_HAJOS = "chi_c(H_d(K_n)) = (d(n-1)+1)/d, H_d(K_n) critical, alpha = d"
ANCHOR_WALK = "KG(m,n) walk of length l between sets meeting in k points"
ANCHOR_FRAC = "chi_f(G^(1/(2s+1))) <= (2s+1)chi_f/(s chi_f + 1)"
ANCHOR_EMBED = "g: G -> KG((2s+1)m, sm+n, (m-2n)s)"
ANCHOR_MULTI = "chi_n(G^(1/(2s+1))) <= 2n+i  <=>  chi(G) <= C(2n+i, n) when is = n-1"
ANCHOR_MULTI_ODD = "chi_n(G^(1/(2s+1))) = 2n+1 when s >= n"
ANCHOR_SCALE = "G^((2r+1)(2p+1)/((2r+1)(2q+1))) <-> G^((2p+1)/(2q+1))"
ANCHOR_SCALE_DUAL = "G^~((2r+1)(2p+1)/((2r+1)(2q+1))) <-> G^~((2p+1)/(2q+1))"
ANCHOR_COMPOSE = "(G^((2r+1)/(2s+1)))^((2p+1)/(2q+1)) -> G^((2r+1)(2p+1)/((2s+1)(2q+1)))"
ANCHOR_FUNCTOR = "G -> H implies G^(r/s) -> H^(r/s)"
ANCHOR_DUALITY = "G^((2r+1)/(2s+1)) -> H  <=>  G -> H^~((2s+1)/(2r+1))"


def suite_circular_power(max_n: int = 10, rs=(1, 2), equiv_s=(1, 2),
                         opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    for n in range(3, max_n + 1):
        for d in range(1, (n - 1) // 2 + 1):
            if math.gcd(n, d) != 1:
                continue
            for r in rs:
                if not n * r < (2 * r + 1) * d:
                    continue
                d2 = (2 * r + 1) * d - r * n
                rec.check(
                    f"circular-power/K({n}/{d})^{2 * r + 1}", ANCHOR_CIRC_POWER,
                    {"n": n, "d": d, "r": r}, f"K({n}/{d2})",
                    lambda: f"K({n}/{d2})" if are_isomorphic(
                        walk_power(cons.circular_complete(n, d), 2 * r + 1),
                        cons.circular_complete(n, d2)) else "not isomorphic")
            for s in equiv_s:
                big, small = (2 * s + 1) * n, s * n + d
                rec.check(
                    f"circular-equiv/K({n}/{d})<->K({big}/{small})^{2 * s + 1}", ANCHOR_CIRC_EQUIV,
                    {"n": n, "d": d, "s": s}, True,
                    lambda: rec.equivalent(
                        cons.circular_complete(n, d),
                        walk_power(cons.circular_complete(big, small), 2 * s + 1)))
    return rec.report


def suite_dual_circular(cases=((5, 2, 1), (7, 3, 1), (7, 2, 1), (8, 3, 1), (5, 2, 2)),
                        opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    for n, d, r in cases:
        big, small = (2 * r + 1) * n, r * n + d
        rec.check(
            f"dual-circular/K({n}/{d})^~(1/{2 * r + 1})<->K({big}/{small})", ANCHOR_DUAL_CIRC,
            {"n": n, "d": d, "r": r}, True,
            lambda: rec.equivalent(cons.dual_power_base(cons.circular_complete(n, d), r),
                                   cons.circular_complete(big, small)))
    return rec.report


def suite_subdivision_chic(opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    bases = [
        (complete_graph(3), Fraction(3)),
        (complete_graph(4), Fraction(4)),
        (cycle_graph(5), Fraction(5, 2)),
        (cons.hajos_chain(2, 4), Fraction(7, 2)),
    ]
    values = {}
    for g, known in bases:
        values[g.name] = rec.check(f"chic/{g.name}", "chi_c of the base graph", {"G": g.name},
                                   known, lambda: rec.chic(g))
    for g, _ in bases:
        base = values[g.name]
        if base is None:
            continue
        for s in (1, 2):
            rec.check(f"subdivision/{g.name}^(1/{2 * s + 1})", ANCHOR_SUBDIV,
                      {"G": g.name, "s": s}, subdivision_formula(base, 0, s),
                      lambda: rec.chic(cons.subdivide(g, 2 * s + 1)))

    # powers with r > 0: the upper bound always, equality when the value is below 4
    power_cases = [
        (complete_graph(4), 1, 2), (complete_graph(4), 1, 1), (complete_graph(4), 2, 1),
        (complete_graph(3), 1, 2), (complete_graph(3), 2, 3), (complete_graph(3), 1, 1),
        (cycle_graph(5), 1, 2), (cycle_graph(5), 1, 1), (cycle_graph(5), 2, 1),
    ]
    for g, r, s in power_cases:
        base = values.get(g.name)
        if base is None:
            continue
        ratio = Fraction(2 * r + 1, 2 * s + 1)
        if not ratio < base / (base - 2):
            continue
        bound = subdivision_formula(base, r, s)
        tag = f"{g.name}^({2 * r + 1}/{2 * s + 1})"
        val = rec.check(f"power-bound/{tag}", ANCHOR_POWER_UB, {"G": g.name, "r": r, "s": s},
                        bound, lambda: rec.chic(cons.frac_power(g, 2 * r + 1, 2 * s + 1)),
                        holds=lambda v, b: v <= b, expected_text=f"<= {fmt(bound)}")
        if val is not None and val < 4:
            rec.check(f"power-equality/{tag}", ANCHOR_POWER_EQ, {"G": g.name, "r": r, "s": s},
                      bound, lambda: val)
            rec.check(f"mu/{tag}", ANCHOR_MU, {"G": g.name, "r": r, "s": s},
                      Fraction(2 * s + 1, 2 * r + 1) * inv.mu_from_circular(base),
                      lambda: inv.mu_from_circular(val))
        if ratio <= base / (3 * (base - 2)):
            rec.check(f"three-colourable/{tag}", ANCHOR_THREE, {"G": g.name, "r": r, "s": s}, 3,
                      lambda: inv.chromatic_number(cons.frac_power(g, 2 * r + 1, 2 * s + 1),
                                                   rec.opts))

    # infimum characterisation, spot instances on C5 (chi_c = 5/2)
    c5 = cycle_graph(5)
    for n, t, three in ((7, 1, True), (8, 1, False)):
        rec.check(f"infimum-spot/C5^({2 * n + 1}/{3 * (2 * t + 1)})", ANCHOR_INF,
                  {"G": "C5", "n": n, "t": t, "ratio": fmt(Fraction(2 * n + 1, n - t))},
                  three,
                  lambda: inv.chromatic_number(
                      cons.frac_power(c5, 2 * n + 1, 3 * (2 * t + 1)), rec.opts) == 3,
                  note="(2n+1)/(n-t) >= chi_c(C5) exactly when the power is 3-chromatic")
    return rec.report


def suite_unavoidable_counterexample(k: int = 1, opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    g = cons.frac_power(complete_graph(3 * k + 1), 1, 3)
    smaller = cons.subdivide(complete_graph(3 * k), 3)
    value = Fraction(9 * k + 3, 3 * k + 2)
    parent = Fraction(6 * k + 1, 2 * k + 1)
    inst = {"k": k}
    rec.check(f"unavoidable/chic(K{3 * k + 1}^(1/3))", ANCHOR_UNAVOID, inst, value,
              lambda: rec.chic(g))
    rec.check(f"unavoidable/lower-parent({fmt(value)})", ANCHOR_PARENT, inst, parent,
              lambda: inv.lower_parent(value.numerator, value.denominator))
    below = Fraction(9 * k, 3 * k + 1)
    rec.check(f"unavoidable/chic(K{3 * k}^(1/3))", ANCHOR_SUBDIV, inst, below,
              lambda: rec.chic(smaller))

    def every_deletion_maps_down() -> int:
        good = 0
        for e in g.sorted_edges():
            h, _ = remove(g, edges=[e])
            good += rec.exists(h, smaller)
        return good

    rec.check(f"unavoidable/edge-deletions-map-to-K{3 * k}^(1/3)", ANCHOR_UNAVOID,
              {"k": k, "edges": g.size}, g.size, every_deletion_maps_down,
              note="count of edges e with G - e -> K_3k^(1/3)")
    rec.check(f"unavoidable/{fmt(below)}<{fmt(parent)}", ANCHOR_UNAVOID, inst, True,
              lambda: below < parent)
    return rec.report


def suite_hajos(d: int, n: int, include_long: bool = False,
                opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    g = cons.hajos_chain(d, n)
    tag = f"H{d}(K{n})"
    inst = {"d": d, "n": n}
    rec.check(f"hajos/{tag}/order", ANCHOR_HAJOS, inst, d * n - d + 1, lambda: g.order)
    rec.check(f"hajos/{tag}/size", ANCHOR_HAJOS, inst, d * math.comb(n, 2) - d + 1, lambda: g.size)
    rec.check(f"hajos/{tag}/chi", ANCHOR_HAJOS, inst, n, lambda: inv.chromatic_number(g, rec.opts))

    def critical_edges() -> int:
        return sum(inv.chromatic_number(remove(g, edges=[e])[0], rec.opts) == n - 1
                   for e in g.sorted_edges())

    rec.check(f"hajos/{tag}/critical", ANCHOR_HAJOS, inst, g.size, critical_edges,
              note="count of edges whose deletion lowers chi to n-1")
    rec.check(f"hajos/{tag}/alpha", ANCHOR_HAJOS, inst, d, lambda: inv.independence_number(g))
    top = d * (n - 1) + 1
    rec.check(f"hajos/{tag}/explicit-colouring", ANCHOR_HAJOS, inst, True,
              lambda: check_homomorphism(
                  {v: c - 1 for v, c in cons.hajos_circular_coloring(d, n).items()},
                  g, cons.circular_complete(top, d)))
    rec.check(f"hajos/{tag}/chic", ANCHOR_HAJOS, inst, Fraction(top, d), lambda: rec.chic(g))
    rec.check(f"hajos/{tag}/zeta", ANCHOR_HAJOS, inst, 1, lambda: inv.zeta(g, rec.opts))

    if include_long and d == 2 and n % 3 == 2:
        # H_2(K_{3m+2})^(1/3): value (18m+9)/(6m+5), lower parent (15m+7)/(5m+4) avoided
        m = (n - 2) // 3
        sub = cons.subdivide(g, 3)
        value = subdivision_formula(Fraction(top, d), 0, 1)
        parent = Fraction(15 * m + 7, 5 * m + 4)
        lower = cons.subdivide(complete_graph(3 * m + 1), 3)
        rec.check(f"hajos/{tag}^(1/3)/chic", ANCHOR_SUBDIV, inst, Fraction(18 * m + 9, 6 * m + 5),
                  lambda: rec.chic(sub), note="long-running")
        rec.check(f"hajos/{tag}^(1/3)/lower-parent", ANCHOR_PARENT, inst, parent,
                  lambda: inv.lower_parent(value.numerator, value.denominator))

        def deletions() -> int:
            return sum(rec.exists(remove(sub, edges=[e])[0], lower) for e in sub.sorted_edges())

        rec.check(f"hajos/{tag}^(1/3)/edge-deletions-map-to-K{3 * m + 1}^(1/3)", ANCHOR_UNAVOID,
                  inst, sub.size, deletions, note="long-running")
        rec.check(f"hajos/{tag}^(1/3)/{fmt(Fraction(9 * m + 3, 3 * m + 2))}<{fmt(parent)}",
                  ANCHOR_UNAVOID, inst, True, lambda: Fraction(9 * m + 3, 3 * m + 2) < parent)
    return rec.report


def kneser_walk_mismatches(m: int, n: int, l_max: int) -> list[tuple[int, int, int]]:
    """(l, A, B) triples where brute-force walk existence disagrees with the closed form."""
    g = cons.kneser(m, n)
    subsets = cons.kneser_subsets(m, n)
    inter = np.array([[len(a & b) for b in subsets] for a in subsets])
    adj = g.matrix().astype(np.int64)
    reach = np.eye(g.order, dtype=np.int64)
    bad = []
    for l in range(l_max + 1):
        if l:
            reach = (reach @ adj > 0).astype(np.int64)
        table = {k: cons.kneser_walk_condition(m, n, k, l) for k in range(n + 1)}
        want = np.vectorize(table.get)(inter)
        for a, b in zip(*np.nonzero(want != (reach > 0))):
            bad.append((l, int(a), int(b)))
    return bad


def suite_kneser_walk(m: int = 5, n: int = 2, l_max: int = 8,
                      opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    pairs = math.comb(m, n) ** 2
    rec.check(f"kneser-walk/KG({m},{n})/l<={l_max}", ANCHOR_WALK,
              {"m": m, "n": n, "l_max": l_max, "pairs": pairs}, 0,
              lambda: len(kneser_walk_mismatches(m, n, l_max)),
              note="number of (l, A, B) disagreements")
    gap = m - 2 * n
    if n > gap:
        rec.check(f"kneser-walk/KG({m},{n})^3≅KG({m},{n},{gap})", ANCHOR_WALK,
                  {"m": m, "n": n}, True,
                  lambda: are_isomorphic(walk_power(cons.kneser(m, n), 3), cons.kneser(m, n, gap)))
    if (m, n) == (5, 2):
        rec.check("kneser-walk/Petersen^3≅K10", ANCHOR_WALK, {"m": 5, "n": 2}, True,
                  lambda: are_isomorphic(walk_power(cons.petersen(), 3), complete_graph(10)))
        rec.check("kneser-walk/KG(5,2,1)≅K10", ANCHOR_WALK, {"m": 5, "n": 2}, True,
                  lambda: are_isomorphic(cons.kneser(5, 2, 1), complete_graph(10)))
    return rec.report


def suite_fractional(include_long: bool = False, opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    s = 1
    for g in (complete_graph(3), cycle_graph(5), complete_graph(4)):
        fv = inv.fractional_chromatic_number(g)
        m, n, f = inv.kneser_coloring_from_cover(g, fv)
        inst = {"G": g.name, "s": s, "m": m, "n": n}
        rec.check(f"fractional/{g.name}/optimal-kneser-map", ANCHOR_EMBED, inst, True,
                  lambda: cons.is_kneser_homomorphism(g, f, m, n) and Fraction(m, n) == fv.value)
        emb = cons.fractional_embedding(g, f, m, n, s)
        big, size, meet = (2 * s + 1) * m, s * m + n, (m - 2 * n) * s
        rec.check(f"fractional/{g.name}/embedding", ANCHOR_EMBED, inst, True,
                  lambda: cons.is_kneser_homomorphism(g, emb, big, size, meet)
                  and all(len(emb[u] & emb[v]) == meet for u, v in g.edges))
        bound = fractional_bound(fv.value, s)
        rec.check(f"fractional/{g.name}^(1/{2 * s + 1})/bound", ANCHOR_FRAC, inst, bound,
                  lambda: inv.fractional_chromatic_number(cons.subdivide(g, 2 * s + 1)).value,
                  holds=lambda v, b: v <= b, expected_text=f"<= {fmt(bound)}")
        if math.comb(big, size) <= 1000:
            rec.check(f"fractional/{g.name}^(1/{2 * s + 1})->KG({big},{size})", ANCHOR_FRAC, inst,
                      True, lambda: rec.exists(cons.subdivide(g, 2 * s + 1), cons.kneser(big, size)))
    rec.check("fractional/C9/tight", ANCHOR_FRAC, {"G": "K3", "s": 1},
              fractional_bound(Fraction(3), 1),
              lambda: inv.fractional_chromatic_number(cycle_graph(9)).value)
    k10 = complete_graph(10)
    rec.check("fractional/K10^(1/3)->Petersen", ANCHOR_FRAC, {"G": "K10", "s": 1}, True,
              lambda: rec.exists(cons.frac_power(k10, 1, 3), cons.petersen()))
    bound = fractional_bound(inv.fractional_chromatic_number(k10).value, 1)
    rec.check("fractional/K10^(1/3)/strict", ANCHOR_FRAC, {"G": "K10", "s": 1}, True,
              lambda: Fraction(5, 2) < bound,
              note=f"chi_f <= 5/2 < bound {fmt(bound)}")
    return rec.report


def suite_multichromatic(include_long: bool = False, opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    # KG(2n+i, n)^(2s+1) is the complete graph on C(2n+i, n) vertices when is = n - 1
    for n, i, s in ((2, 1, 1), (3, 1, 2), (3, 2, 1)):
        m = 2 * n + i
        rec.check(f"multichromatic/KG({m},{n})^{2 * s + 1}≅K{math.comb(m, n)}", ANCHOR_MULTI,
                  {"n": n, "i": i, "s": s}, True,
                  lambda: are_isomorphic(walk_power(cons.kneser(m, n), 2 * s + 1),
                                         complete_graph(math.comb(m, n))))
    rec.check("multichromatic/KG(5,2,1)≅K10", ANCHOR_MULTI, {"n": 2, "i": 1, "s": 1}, True,
              lambda: are_isomorphic(cons.kneser(5, 2, 1), complete_graph(10)))
    for g in (complete_graph(3), cycle_graph(5), complete_graph(4)):
        rec.check(f"multichromatic/chi_2({g.name}^(1/3))", ANCHOR_MULTI, {"G": g.name}, 5,
                  lambda: inv.multichromatic_number(cons.subdivide(g, 3), 2, rec.opts))
    rec.check("multichromatic/chi_2(C9)", ANCHOR_MULTI, {"G": "C9"}, 5,
              lambda: inv.multichromatic_number(cycle_graph(9), 2, rec.opts))

    k11 = complete_graph(11)

    def chi2_k11_by_reduction() -> int:
        # chi_2(G^(1/3)) <= 5 iff chi(G) <= 10; above that, 6 colours suffice iff a map exists
        if inv.chromatic_number(k11, rec.opts) <= math.comb(5, 2):
            return 5
        return 6 if rec.exists(cons.subdivide(k11, 3), cons.kneser(6, 2)) else 7

    rec.check("multichromatic/chi_2(K11^(1/3))", ANCHOR_MULTI, {"G": "K11"}, 6,
              chi2_k11_by_reduction, note="lower side through chi(K11) = 11 > C(5,2)")
    if include_long:
        rec.check("multichromatic/K11^(1/3)-/->Petersen", ANCHOR_MULTI, {"G": "K11"}, False,
                  lambda: rec.exists(cons.subdivide(k11, 3), cons.petersen()),
                  note="long-running direct non-existence search")
    for g, n, s in ((complete_graph(4), 1, 1), (complete_graph(3), 2, 2), (complete_graph(4), 2, 2)):
        rec.check(f"multichromatic/chi_{n}({g.name}^(1/{2 * s + 1}))", ANCHOR_MULTI_ODD,
                  {"G": g.name, "n": n, "s": s}, 2 * n + 1,
                  lambda: inv.multichromatic_number(cons.subdivide(g, 2 * s + 1), n, rec.opts))
    return rec.report


def _duality_sides(rec: _Recorder, g, h, r: int, s: int) -> tuple[bool, bool]:
    lhs = rec.exists(cons.frac_power(g, 2 * r + 1, 2 * s + 1), h)
    rhs = rec.exists(g, cons.dual_power(h, s, r))
    return lhs, rhs


def suite_scaling_equivalence(opts: SearchOptions | None = None) -> VerificationReport:
    rec = _Recorder(opts)
    k3, k4, c5, c7 = complete_graph(3), complete_graph(4), cycle_graph(5), cycle_graph(7)
    scale_cases = [(k3, 3, 9, 1, 3), (c5, 3, 9, 1, 3), (k4, 3, 9, 1, 3),
                   (k3, 3, 15, 1, 5), (c5, 3, 15, 1, 5), (k3, 9, 15, 3, 5)]
    for g, a, b, p, q in scale_cases:
        rec.check(f"scaling/{g.name}^({a}/{b})<->{g.name}^({p}/{q})", ANCHOR_SCALE,
                  {"G": g.name, "scaled": f"{a}/{b}", "reduced": f"{p}/{q}"}, True,
                  lambda: rec.equivalent(cons.frac_power(g, a, b), cons.frac_power(g, p, q)))
    for g in (k3, c5, c7):
        rec.check(f"scaling-dual/{g.name}^~(3/3)<->{g.name}", ANCHOR_SCALE_DUAL, {"G": g.name},
                  True, lambda: rec.equivalent(cons.dual_power(g, 1, 1), g))

    compose_cases = [(c5, 0, 1, 0, 1), (k3, 1, 2, 0, 1), (k4, 1, 2, 1, 1)]
    for g, r, s, p, q in compose_cases:
        a, b = (2 * r + 1) * (2 * p + 1), (2 * s + 1) * (2 * q + 1)
        rec.check(f"compose/({g.name}^({2 * r + 1}/{2 * s + 1}))^({2 * p + 1}/{2 * q + 1})"
                  f"->{g.name}^({a}/{b})", ANCHOR_COMPOSE, {"G": g.name, "r": r, "s": s, "p": p, "q": q},
                  True,
                  lambda: rec.exists(
                      cons.frac_power(cons.frac_power(g, 2 * r + 1, 2 * s + 1), 2 * p + 1, 2 * q + 1),
                      cons.frac_power(g, a, b)))

    functor_pairs = [(c7, c5), (c5, k3), (cons.hajos_chain(2, 4), k4), (cons.petersen(), k3)]
    for g, h in functor_pairs:
        try:
            cert = find_homomorphism(g, h, rec.opts)
        except SearchTimeout:
            cert = None
        for r, s in ((1, 3), (3, 3), (3, 5)):
            if cert is None or not (r < s * odd_girth(g) and r < s * odd_girth(h)):
                continue
            rec.check(f"functor/{g.name}->{h.name}/({r}/{s})", ANCHOR_FUNCTOR,
                      {"G": g.name, "H": h.name, "r": r, "s": s}, True,
                      lambda: rec.exists(cons.frac_power(g, r, s), cons.frac_power(h, r, s)))

    duality_cases = [(c5, c5, 1, 1), (k3, c5, 1, 1), (c7, c5, 1, 1), (cycle_graph(9), c5, 1, 1),
                     (cons.petersen(), c5, 1, 1), (c5, c5, 1, 2), (k3, c5, 1, 2),
                     (c5, k3, 1, 1), (cons.petersen(), k3, 1, 1), (k4, k3, 1, 1)]
    for g, h, r, s in duality_cases:
        inst = {"G": g.name, "H": h.name, "r": r, "s": s}
        hyp = (Fraction(2 * r + 1, 2 * s + 1) < odd_girth(g)
               and 2 * s + 1 < odd_girth(cons.dual_power_base(h, r)))
        if not hyp:
            continue
        box: dict = {}

        def both_sides():
            box["sides"] = _duality_sides(rec, g, h, r, s)
            return box["sides"][0] == box["sides"][1]

        rec.check(f"duality/{g.name}^({2 * r + 1}/{2 * s + 1})->{h.name}", ANCHOR_DUALITY, inst,
                  True, both_sides)
        if "sides" in box:
            rec.report.records[-1].note = "sides: " + "/".join(map(fmt, box["sides"]))
    return rec.report


SUITES = {
    "circular-power": lambda a: suite_circular_power(opts=a.get("opts")),
    "dual-circular": lambda a: suite_dual_circular(opts=a.get("opts")),
    "subdivision": lambda a: suite_subdivision_chic(opts=a.get("opts")),
    "counterexample": lambda a: suite_unavoidable_counterexample(a.get("k") or 1, opts=a.get("opts")),
    "hajos": lambda a: (suite_hajos(a["d"], a["n"], a.get("include_long", False), a.get("opts"))
                        if a.get("d") else _hajos_defaults(a)),
    "kneser-walk": lambda a: (suite_kneser_walk(a["m"], a["n"], a.get("l_max") or 8, a.get("opts"))
                              if a.get("m") else _kneser_defaults(a)),
    "fractional": lambda a: suite_fractional(a.get("include_long", False), a.get("opts")),
    "multichromatic": lambda a: suite_multichromatic(a.get("include_long", False), a.get("opts")),
    "scaling": lambda a: suite_scaling_equivalence(a.get("opts")),
}


def _hajos_defaults(a: dict) -> VerificationReport:
    out = VerificationReport()
    for d, n in ((2, 4), (3, 4), (2, 5)):
        out += suite_hajos(d, n, a.get("include_long", False), a.get("opts"))
    return out


def _kneser_defaults(a: dict) -> VerificationReport:
    return (suite_kneser_walk(5, 2, 8, a.get("opts"))
            + suite_kneser_walk(7, 3, 8, a.get("opts")))


def run_all(budget: float | None = None, include_long: bool = False) -> VerificationReport:
    """Every suite at default parameters; long-running records only on request."""
    opts = SearchOptions(time_budget=budget) if budget else SearchOptions()
    args = {"opts": opts, "include_long": include_long}
    report = VerificationReport()
    for name in SUITES:
        report += SUITES[name](args)
    if include_long:
        report += suite_unavoidable_counterexample(2, opts)
    return report
