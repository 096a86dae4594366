"""Acceptance suite: eight criteria at desk scale.

Oracles here are deliberately independent of the library: optima come from
networkx (maximal independent sets, matchings) and bound constants from
mpmath at 80 digits. Each test records one PASS/FAIL line, printed in the
terminal summary.
"""

from __future__ import annotations

import math
import time
from fractions import Fraction
from itertools import product

import mpmath
import networkx as nx
import pytest

from mmvc.cover import complete_and_minimalize, is_minimal_vc, is_vertex_cover
from mmvc.eh import Extractor, eh_partition, ramsey_is_extract
from mmvc.generators import GenSpec, fernau_counterexample, generate, generate_monotone_cnf, rng_for
from mmvc.graph import Graph, is_bipartite, max_matching_bipartite, spanning_tree_levels
from mmvc.kernels import (
    ClassBound,
    DecidedNo,
    DecidedYes,
    MmvcInstance,
    Reduced,
    clique_neighborhood_diagnostic,
    kernel_general,
    kernel_hfree,
    kernel_k1t,
)
from mmvc.lop import dual_from_kernel, minvc_adapter, mis_ktfree_adapter, mmvc_adapter, value_approx
from mmvc.patterns import Pattern, induces
from mmvc.reductions import decode_assignment, encode_assignment, monotone_to_mmvc, sat_bruteforce
from tests.conftest import record, to_nx

pytestmark = pytest.mark.acceptance
mpmath.mp.dps = 80


# -- independent oracles ---------------------------------------------------------


def nx_mmvc(g: Graph) -> int:
    """n minus the smallest maximal independent set (maximal clique of the complement)."""
    if g.n == 0:
        return 0
    comp = nx.complement(to_nx(g))
    return g.n - min(len(c) for c in nx.find_cliques(comp))


def nx_mis(g: Graph) -> int:
    if g.n == 0:
        return 0
    return max(len(c) for c in nx.find_cliques(nx.complement(to_nx(g))))


def nx_min_vc(g: Graph) -> int:
    return g.n - nx_mis(g)


def real_bound(coef: int, delta: Fraction, k: int) -> int:
    """ceil(coef / (2^(1-delta) - 1) * (k-1)^(2-delta)) + k - 1, at 80 digits."""
    d = mpmath.mpf(delta.numerator) / delta.denominator
    c = coef / (mpmath.mpf(2) ** (1 - d) - 1)
    return int(mpmath.ceil(c * mpmath.mpf(k - 1) ** (2 - d))) + k - 1


def real_part_bound(n: int, delta: Fraction) -> int:
    d = mpmath.mpf(delta.numerator) / delta.denominator
    return int(mpmath.ceil(mpmath.mpf(n) ** (1 - d) / (mpmath.mpf(2) ** (1 - d) - 1)))


def int_root_floor(n: int, q: int) -> int:
    r = 0
    while (r + 1) ** q <= n:
        r += 1
    return r


EXPECTED_BOUND = {
    "general": lambda k: k * k - 1,
    "bull": lambda k: real_bound(2, Fraction(1, 4), k),
    "kt:3": lambda k: real_bound(2, Fraction(1, 2), k),
    "kt:4": lambda k: real_bound(3, Fraction(1, 3), k),
    "paw": lambda k: real_bound(2, Fraction(1, 3), k),
    "k1t:3": lambda k: 3 * (k - 1),
}


# -- the shared corpus -----------------------------------------------------------

# (generator class, t, kernels to run); every graph also runs the general kernel
CORPUS_CLASSES = [
    ("any", None, []),
    ("bipartite", None, ["kt:3"]),
    ("triangle-free", None, ["kt:3"]),
    ("kt-free", 3, ["kt:3"]),
    ("kt-free", 4, ["kt:4"]),
    ("paw-free", None, ["paw"]),
    ("bull-free", None, ["bull"]),
    ("k1t-free", 3, ["k1t:3"]),
]
GRAPHS_PER_CLASS = 45


def _corpus() -> list[tuple[str, Graph, list[str]]]:
    """Graphs tagged with their class name (``kt-free:4`` style when t is set)."""
    rng = rng_for(20240601)
    out = []
    for cls, t, kernels in CORPUS_CLASSES:
        for _ in range(GRAPHS_PER_CLASS):
            n = int(rng.integers(1, 17))
            density = float(rng.uniform(0.05, 0.9))
            seed = int(rng.integers(2**63))
            name = cls if t is None else f"{cls}:{t}"
            out.append((name, generate(GenSpec(cls, n, density, seed, t)), ["general"] + kernels))
    return out


CORPUS = _corpus()
_OPT_CACHE: dict[Graph, int] = {}


def opt(g: Graph) -> int:
    if g not in _OPT_CACHE:
        _OPT_CACHE[g] = nx_mmvc(g)
    return _OPT_CACHE[g]


def run_kernel(name: str, g: Graph, k: int):
    inst = MmvcInstance(g, k)
    if name == "general":
        return kernel_general(inst)
    if name == "k1t:3":
        return kernel_k1t(inst, 3)
    return kernel_hfree(inst, ClassBound.parse(name))


_REDUCED: list[tuple[str, int, Reduced]] = []


def test_criterion_1_kernel_soundness():
    start = time.perf_counter()
    instances = 0
    failures: list[str] = []
    for cls, g, kernels in CORPUS:
        best = opt(g)
        for name in kernels:
            for k in range(1, g.n + 1):
                instances += 1
                out = run_kernel(name, g, k)
                tag = f"{cls}/{name} n={g.n} k={k}"
                if isinstance(out, DecidedNo):
                    failures.append(f"{tag}: kernel answered no")
                elif isinstance(out, DecidedYes):
                    if not (len(out.witness) >= k and is_minimal_vc(g, out.witness) and best >= k):
                        failures.append(f"{tag}: bad yes witness")
                else:
                    h = out.instance.graph
                    sub, _ = g.induced_subgraph(out.old_ids)
                    if sub != h or out.instance.k != k or opt(h) != best:
                        failures.append(f"{tag}: reduced instance changes the optimum")
                    _REDUCED.append((name, k, out))
    elapsed = time.perf_counter() - start
    ok = instances >= 2000 and not failures and elapsed < 300
    record(1, ok, f"{instances} instances, {len(failures)} failures, {elapsed:.1f}s")
    assert not failures, failures[:5]
    assert instances >= 2000
    assert elapsed < 300


def test_criterion_2_size_bounds():
    if not _REDUCED:
        test_criterion_1_kernel_soundness()
    violations = []
    per_class: dict[str, int] = {}
    for name, k, out in _REDUCED:
        expected = EXPECTED_BOUND[name](k)
        per_class[name] = per_class.get(name, 0) + 1
        if out.declared_bound != expected:
            violations.append(f"{name} k={k}: declared {out.declared_bound}, exact {expected}")
        if out.instance.graph.n > expected:
            violations.append(f"{name} k={k}: {out.instance.graph.n} > {expected}")
    missing = sorted(set(EXPECTED_BOUND) - set(per_class))
    summary = ", ".join(f"{c}:{per_class.get(c, 0)}" for c in EXPECTED_BOUND)
    ok = not violations and not missing
    record(2, ok, f"{len(_REDUCED)} reduced outcomes ({summary}), {len(violations)} violations")
    assert not violations, violations[:5]
    assert not missing, f"no reduced outcome for {missing}"


def test_criterion_3_partition_bound():
    rng = rng_for(77)
    plans = {
        "ramsey": (60, lambda n, d, s, i: (generate(GenSpec("kt-free", n, d, s, 3 + i % 3)),
                                           Extractor.ramsey(3 + i % 3))),
        "olariu": (60, lambda n, d, s, i: (generate(GenSpec("paw-free", n, d, s)), Extractor.olariu())),
        "brute": (24, lambda n, d, s, i: (generate(GenSpec("bull-free", n, d, s)),
                                          Extractor.brute(Fraction(1, 4)))),
    }
    counts: dict[str, int] = {}
    violations = []
    for name, (max_n, make) in plans.items():
        counts[name] = 0
        for i in range(500):
            n = int(rng.integers(1, max_n + 1))
            g, extractor = make(n, float(rng.uniform(0.05, 0.95)), int(rng.integers(2**63)), i)
            part = eh_partition(g, extractor)
            counts[name] += 1
            if len(part) > real_part_bound(n, extractor.delta):
                violations.append(f"{name} n={n}: {len(part)} parts")
            covered = sorted(v for p in part.parts for v in p.vertices)
            if covered != list(range(n)):
                violations.append(f"{name} n={n}: not a partition")
            for p in part.cliques:
                if not g.is_clique(p.vertices):
                    violations.append(f"{name} n={n}: clique part fails")
            for p in part.indep_sets:
                if not g.is_independent(p.vertices):
                    violations.append(f"{name} n={n}: independent part fails")
    ok = not violations and min(counts.values()) >= 500
    record(3, ok, f"{counts} partitions, {len(violations)} violations")
    assert not violations, violations[:5]


def test_criterion_4_ramsey_floor():
    rng = rng_for(4242)
    graphs = 0
    violations = []
    for i in range(600):
        t = 3 + i % 3
        n = int(rng.integers(0, 61))
        cls = "triangle-free" if t == 3 and i % 2 else "kt-free"
        g = generate(GenSpec(cls, n, float(rng.uniform(0, 1)), int(rng.integers(2**63)), t))
        out = ramsey_is_extract(g, t)
        graphs += 1
        if not g.is_independent(out) or len(out) < int_root_floor(n, t - 1):
            violations.append(f"t={t} n={n}: {len(out)}")
    c5 = len(ramsey_is_extract(Graph.cycle(5), 3))
    ok = not violations and c5 == 2 and graphs >= 500
    record(4, ok, f"{graphs} graphs, {len(violations)} violations, C5 gives {c5}")
    assert not violations, violations[:5]
    assert c5 == 2


def test_criterion_5_reduction_equivalence():
    start = time.perf_counter()
    rng = rng_for(5555)
    problems = []
    sat_count = 0
    for i in range(240):
        n, m = int(rng.integers(1, 6)), int(rng.integers(0, 7))
        cnf = generate_monotone_cnf(n, m, int(rng.integers(2**63)))
        art = monotone_to_mmvc(cnf)
        g = art.graph
        assert g.n <= 26
        satisfiable = sat_bruteforce(cnf) is not None
        sat_count += satisfiable
        if satisfiable != (nx_mmvc(g) >= 2 * n + m):
            problems.append(f"#{i}: SAT={satisfiable} disagrees with mmvc")
        if is_bipartite(g) is None or not nx.is_bipartite(to_nx(g)):
            problems.append(f"#{i}: not bipartite")
        nx_match = len(nx.max_weight_matching(to_nx(g), maxcardinality=True))
        if nx_match != 2 * n or len(max_matching_bipartite(g)) != 2 * n:
            problems.append(f"#{i}: maximum matching {nx_match} != {2 * n}")
        if not is_vertex_cover(g, art.min_cover):
            problems.append(f"#{i}: literal vertices do not cover")
        for sigma in product((False, True), repeat=n):
            if cnf.satisfied_by(sigma):
                cover = encode_assignment(art, sigma)
                if len(cover) != art.k or not cnf.satisfied_by(decode_assignment(art, cover)):
                    problems.append(f"#{i}: round trip fails for {sigma}")
    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 180
    record(5, ok, f"240 formulas ({sat_count} satisfiable), {len(problems)} problems, {elapsed:.1f}s")
    assert not problems, problems[:5]
    assert elapsed < 180


TRIANGLE_FREE = ("bipartite", "triangle-free", "kt-free:3")


def test_criterion_6_pipeline():
    problems = []
    worst = Fraction(1)
    mmvc, minvc, mis3 = mmvc_adapter(), minvc_adapter(), mis_ktfree_adapter(3)
    checked = 0
    for cls, g, _ in CORPUS:
        best = opt(g)
        rep = value_approx(mmvc, g, oracle=False)
        checked += 1
        if rep.k0 > best:
            problems.append(f"{cls} n={g.n}: k0={rep.k0} > {best}")
        if rep.k0 == 0:
            if rep.claimed_value != best:
                problems.append(f"{cls} n={g.n}: fallback value {rep.claimed_value} != {best}")
        else:
            ratio = Fraction(best, rep.k0)
            worst = max(worst, ratio)
            if ratio > math.ceil(math.sqrt(g.n)):
                problems.append(f"{cls} n={g.n}: ratio {ratio}")
            if not is_minimal_vc(g, rep.witness) or len(rep.witness) < rep.k0:
                problems.append(f"{cls} n={g.n}: bad witness")
        vc = nx_min_vc(g)
        if value_approx(minvc, g, oracle=False).claimed_value < vc:
            problems.append(f"{cls} n={g.n}: minvc claim below optimum")
        for k in range(1, g.n + 1):
            ans = dual_from_kernel(mmvc, g, k)
            if not (best >= k if ans.positive else best < ans.f_value):
                problems.append(f"{cls} n={g.n} k={k}: max dichotomy broken")
        for k in range(0, g.n + 1):
            ans = dual_from_kernel(minvc, g, k)
            if not (vc <= ans.f_value if ans.positive else vc > k):
                problems.append(f"{cls} n={g.n} k={k}: min dichotomy broken")
        if cls in TRIANGLE_FREE:
            mis = nx_mis(g)
            for k in range(1, g.n + 1):
                ans = dual_from_kernel(mis3, g, k)
                if not (mis >= k if ans.positive else mis < ans.f_value):
                    problems.append(f"{cls} n={g.n} k={k}: MIS dichotomy broken")
    ok = not problems
    record(6, ok, f"{checked} graphs, worst mmvc ratio {worst}, {len(problems)} problems")
    assert not problems, problems[:5]


def test_criterion_7_pendant_triangle():
    rows = []
    ok = True
    for p in (2, 3, 4):
        fx = fernau_counterexample(p)
        g = fx.graph
        v0, v1 = spanning_tree_levels(g, fx.u)
        cover = complete_and_minimalize(g, v0)
        row = (len(v0) == 1 + 2 * p, len(v1) == 2 + p, len(cover) == 2 + p,
               2 + p < Fraction(3 + 3 * p, 2), is_minimal_vc(g, cover))
        ok &= all(row)
        rows.append(f"p={p}: |V0|={len(v0)} |V1|={len(v1)} completion={len(cover)}")
    record(7, ok, "; ".join(rows))
    assert ok


def _plant_paw(rng) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    n = int(rng.integers(6, 15))
    s = int(rng.integers(3, min(6, n - 1) + 1))
    base = generate(GenSpec("any", n, float(rng.uniform(0.1, 0.6)), int(rng.integers(2**63))))
    clique = tuple(range(s))
    x = s
    j = int(rng.integers(1, s - 1))
    edges = {e for e in base.edges() if x not in e}
    edges |= {(a, b) for a in clique for b in clique if a < b}
    edges |= {(c, x) for c in clique[:j]}
    return Graph(n, edges), clique, (x,)


def _plant_bull(rng) -> tuple[Graph, tuple[int, ...], tuple[int, ...]]:
    n = int(rng.integers(7, 15))
    s = int(rng.integers(3, min(6, n - 2) + 1))
    base = generate(GenSpec("any", n, float(rng.uniform(0.1, 0.6)), int(rng.integers(2**63))))
    clique = tuple(range(s))
    x, y = s, s + 1
    # N_C(x) and N_C(y) are incomparable, and together they miss a clique vertex
    a = int(rng.integers(1, s - 1))
    nx_set = set(clique[:a])
    ny_set = {clique[a]} | set(clique[: int(rng.integers(0, a))])
    edges = {e for e in base.edges() if x not in e and y not in e}
    edges |= {(p, q) for p in clique for q in clique if p < q}
    edges |= {(c, x) for c in nx_set} | {(c, y) for c in ny_set}
    return Graph(n, edges), clique, (x, y)


def test_criterion_8_diagnostics():
    rng = rng_for(888)
    clean = 0
    cliques = 0
    violations = []
    for i in range(320):
        kind = "bull" if i % 2 else "paw"
        n = int(rng.integers(2, 25))
        g = generate(GenSpec(f"{kind}-free", n, float(rng.uniform(0.1, 0.9)), int(rng.integers(2**63))))
        for c in nx.find_cliques(to_nx(g)):
            cliques += 1
            rep = clique_neighborhood_diagnostic(g, tuple(c), ClassBound(kind))
            if not rep.ok:
                violations.append(f"{kind}-free n={n} C={sorted(c)}: {rep.violations[0]}")
        clean += 1
    located = 0
    missed = []
    for i in range(120):
        kind = "bull" if i % 2 else "paw"
        g, clique, outside = (_plant_bull if kind == "bull" else _plant_paw)(rng)
        pattern = Pattern.bull() if kind == "bull" else Pattern.paw()
        rep = clique_neighborhood_diagnostic(g, clique, ClassBound(kind), outside)
        if (not rep.ok and rep.embedding is not None and induces(g, rep.embedding, pattern)
                and rep.found_by_search is not None):
            located += 1
        else:
            missed.append(f"{kind} #{i}")
    ok = not violations and not missed and clean >= 300 and located >= 50
    record(8, ok, f"{clean} in-class graphs ({cliques} cliques), {len(violations)} violations; "
                  f"{located}/120 planted patterns located")
    assert not violations, violations[:5]
    assert not missed, missed[:5]
