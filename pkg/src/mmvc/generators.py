"""Seeded random graphs for each studied class, monotone CNFs and a fixture
on which a naive two-colouring argument for a linear kernel breaks.

Every generator draws from its own ``numpy.random.Generator`` over a
Philox counter-based bit generator keyed by the caller's seed, so corpora
are reproducible across runs and platforms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from mmvc.errors import GenerationFailedError, PreconditionError
from mmvc.graph import Graph, VertexSet
from mmvc.patterns import Pattern, find_any_induced
from mmvc.reductions import CnfFormula

CLASSES = ("any", "bipartite", "triangle-free", "kt-free", "paw-free", "bull-free", "k1t-free")
REPAIR_CAP = 40


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


@dataclass(frozen=True)
class GenSpec:
    cls: str
    n: int
    density: float = 0.5
    seed: int = 0
    t: int | None = None

    def __post_init__(self) -> None:
        if self.cls not in CLASSES:
            raise PreconditionError(f"unknown class {self.cls!r}; choose from {CLASSES}")
        if self.n < 0:
            raise PreconditionError("n must be non-negative")
        if not 0 <= self.density <= 1:
            raise PreconditionError("density must lie in [0, 1]")
        if self.cls in ("kt-free", "k1t-free") and (self.t is None or self.t < 2):
            raise PreconditionError(f"class {self.cls} needs t >= 2")

    @property
    def pattern(self) -> Pattern | None:
        return {
            "bipartite": None,
            "triangle-free": Pattern.complete(3),
            "kt-free": Pattern.complete(self.t) if self.t else None,
            "paw-free": Pattern.paw(),
            "bull-free": Pattern.bull(),
            "k1t-free": Pattern.star(self.t) if self.t else None,
        }.get(self.cls)


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def erdos_renyi(n: int, p: float, rng: np.random.Generator) -> Graph:
    pairs = _pairs(n)
    keep = rng.random(len(pairs)) < p
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def _labels(n: int, parts: int, rng: np.random.Generator) -> list[int]:
    """Random part labels, every part non-empty when ``n >= parts``."""
    label = rng.integers(0, parts, size=n).tolist()
    for i, v in enumerate(rng.permutation(n)[:parts].tolist()):
        label[v] = i
    return label


def random_multipartite(n: int, parts: int, p: float, rng: np.random.Generator) -> Graph:
    """Random ``parts``-partite graph: each cross pair is an edge with probability ``p``."""
    label = _labels(n, parts, rng)
    pairs = [(u, v) for u, v in _pairs(n) if label[u] != label[v]]
    keep = rng.random(len(pairs)) < p
    return Graph(n, [e for e, k in zip(pairs, keep) if k])


def triangle_free(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Scan pairs in random order, adding each with probability ``p`` unless
    it would close a triangle."""
    adj = [0] * n
    edges = []
    pairs = _pairs(n)
    order = rng.permutation(len(pairs))
    coins = rng.random(len(pairs)) < p
    for idx, coin in zip(order, coins):
        u, v = pairs[idx]
        if coin and not adj[u] & adj[v]:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            edges.append((u, v))
    return Graph(n, edges)


def complete_multipartite_random(n: int, rng: np.random.Generator) -> Graph:
    parts = int(rng.integers(1, n + 1)) if n else 1
    label = _labels(n, parts, rng)
    return Graph(n, [(u, v) for u, v in _pairs(n) if label[u] != label[v]])


def paw_free(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Disjoint union of triangle-free and complete multipartite blocks."""
    if n == 0:
        return Graph(0)
    blocks = int(rng.integers(1, max(2, int(n**0.5)) + 1))
    cuts = np.sort(rng.choice(np.arange(1, n), size=min(blocks - 1, n - 1), replace=False))
    sizes = np.diff(np.concatenate(([0], cuts, [n]))).tolist()
    perm = rng.permutation(n).tolist()
    edges = []
    start = 0
    for size in sizes:
        ids = perm[start:start + size]
        start += size
        block = triangle_free(size, p, rng) if rng.random() < 0.5 else complete_multipartite_random(size, rng)
        edges += [(ids[u], ids[v]) for u, v in block.edges()]
    return Graph(n, edges)


def _repair(g: Graph, pattern: Pattern, rng: np.random.Generator, add: bool,
            budget: int) -> Graph:
    """Destroy induced copies of ``pattern`` one at a time.

    Deleting one of its edges (or, with ``add``, joining two non-adjacent
    vertices of the copy) kills that copy; repeat until none is left.
    """
    edges = set(g.edges())
    n = g.n
    for _ in range(budget):
        cur = Graph(n, edges)
        hit = find_any_induced(cur, pattern)
        if hit is None:
            return cur
        inside = [(u, v) for u, v in combinations(hit, 2) if cur.has_edge(u, v) != add]
        edge = inside[int(rng.integers(len(inside)))]
        if add:
            edges.add(edge)
        else:
            edges.discard(edge)
    raise GenerationFailedError(f"could not remove every induced {pattern} within {budget} steps")


def generate(spec: GenSpec, repair_cap: int = REPAIR_CAP) -> Graph:
    """A graph of the requested class, determined by ``spec.seed``."""
    rng = rng_for(spec.seed)
    n, p = spec.n, spec.density
    if spec.cls == "any":
        return erdos_renyi(n, p, rng)
    if spec.cls == "bipartite":
        return random_multipartite(n, 2, p, rng)
    if spec.cls == "triangle-free":
        return triangle_free(n, p, rng)
    if spec.cls == "kt-free":
        return random_multipartite(n, spec.t - 1, p, rng)
    if spec.cls == "paw-free":
        return paw_free(n, p, rng)
    if n > repair_cap:
        raise GenerationFailedError(f"repair-based generation is capped at n={repair_cap}")
    base = erdos_renyi(n, p, rng)
    budget = n * n + 1
    if spec.cls == "bull-free":
        return _repair(base, Pattern.bull(), rng, add=False, budget=budget)
    return _repair(base, Pattern.star(spec.t), rng, add=True, budget=budget)


@dataclass(frozen=True)
class FernauFixture:
    """Triangle ``u, v, w`` with ``p`` pendant vertices on each corner."""

    graph: Graph
    p: int
    u: int
    v: int
    w: int
    pendants: dict[int, VertexSet]


def fernau_counterexample(p: int) -> FernauFixture:
    if p < 2:
        raise PreconditionError("p must be at least 2")
    u, v, w = 0, 1, 2
    pendants = {c: tuple(range(3 + i * p, 3 + (i + 1) * p)) for i, c in enumerate((u, v, w))}
    edges = [(u, v), (u, w), (v, w)]
    edges += [(c, leaf) for c, leaves in pendants.items() for leaf in leaves]
    return FernauFixture(Graph(3 + 3 * p, edges), p, u, v, w, pendants)


def generate_monotone_cnf(n: int, m: int, seed: int) -> CnfFormula:
    """``m`` clauses over ``n`` variables; each clause picks one polarity and
    one to three distinct variables."""
    if n < 0 or m < 0:
        raise PreconditionError("n and m must be non-negative")
    if m and not n:
        raise PreconditionError("clauses need at least one variable")
    rng = rng_for(seed)
    clauses = []
    for _ in range(m):
        positive = bool(rng.integers(2))
        size = int(rng.integers(1, min(3, n) + 1))
        chosen = sorted(rng.choice(n, size=size, replace=False).tolist())
        clauses.append([(v, positive) for v in chosen])
    return CnfFormula(n, clauses)
