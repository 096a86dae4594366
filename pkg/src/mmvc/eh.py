"""Homogeneous-set extraction and partitions into cliques and independent sets.

An extractor returns a clique or an independent set of size at least
``floor(n**delta)`` from any graph of its class. Repeating it on what is
left yields a partition whose part count is at most
``ceil(n**(1-delta) / (2**(1-delta) - 1))``.

Three extractors are provided:

* ``ramsey(t)``, for K_t-free graphs with delta = 1/(t-1), independent sets only;
* ``olariu()``, for paw-free graphs with delta = 1/3 (see ``docs/paw_extractor.md``);
* ``brute(delta)``, exact search returning the larger of a maximum clique and a
  maximum independent set; it fails loudly if that is below ``floor(n**delta)``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from mmvc.bounds import eh_part_bound, floor_root
from mmvc.errors import NotInClassError, PreconditionError
from mmvc.exact import DEFAULT_CAP, max_clique_exact, max_independent_set_exact
from mmvc.graph import Graph, VertexSet, iter_bits
from mmvc.patterns import Pattern, find_induced


class Kind(enum.Enum):
    CLIQUE = "clique"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class HomogeneousSet:
    kind: Kind
    vertices: VertexSet

    def __len__(self) -> int:
        return len(self.vertices)

    def verify(self, g: Graph) -> bool:
        if self.kind is Kind.CLIQUE:
            return g.is_clique(self.vertices)
        return g.is_independent(self.vertices)


class EhViolationError(NotInClassError):
    """No homogeneous set of the promised size exists."""


class Strategy(enum.Enum):
    RAMSEY = "ramsey"
    OLARIU = "olariu"
    BRUTE = "brute"


@dataclass(frozen=True)
class Extractor:
    strategy: Strategy
    delta: Fraction
    t: int | None = None
    cap: int | None = field(default=DEFAULT_CAP, compare=False)

    @classmethod
    def ramsey(cls, t: int) -> Extractor:
        if t < 2:
            raise PreconditionError("ramsey extractor needs t >= 2")
        return cls(Strategy.RAMSEY, Fraction(1, t - 1), t)

    @classmethod
    def olariu(cls) -> Extractor:
        return cls(Strategy.OLARIU, Fraction(1, 3))

    @classmethod
    def brute(cls, delta: Fraction | str, cap: int | None = DEFAULT_CAP) -> Extractor:
        delta = Fraction(delta)
        if not 0 < delta <= 1:
            raise PreconditionError("delta must lie in (0, 1]")
        return cls(Strategy.BRUTE, delta, None, cap)

    @property
    def pattern(self) -> Pattern | None:
        """The forbidden pattern this extractor relies on, if any."""
        if self.strategy is Strategy.RAMSEY:
            return Pattern.complete(self.t)
        if self.strategy is Strategy.OLARIU:
            return Pattern.paw()
        return None

    def extract(self, g: Graph, check: bool = True) -> HomogeneousSet:
        if self.strategy is Strategy.RAMSEY:
            return HomogeneousSet(Kind.INDEPENDENT, ramsey_is_extract(g, self.t, check=check))
        if self.strategy is Strategy.OLARIU:
            return paw_olariu_extract(g, check=check)
        return brute_optimal_extract(g, self.delta, cap=self.cap)

    def __str__(self) -> str:
        if self.strategy is Strategy.RAMSEY:
            return f"ramsey(t={self.t})"
        if self.strategy is Strategy.OLARIU:
            return "olariu"
        return f"brute(delta={self.delta})"


def _require_free(g: Graph, pattern: Pattern) -> None:
    if pattern.size <= 8:
        hit = find_induced(g, pattern)
        if hit is not None:
            raise NotInClassError(f"graph contains an induced {pattern}", hit)


def ramsey_is_extract(g: Graph, t: int, check: bool = True) -> VertexSet:
    """Independent set of size at least ``max(1, floor(n**(1/(t-1))))`` in a
    K_t-free graph.

    If ``Delta**(t-1) < n**(t-2)`` the greedy rule (take the smallest vertex,
    drop its closed neighbourhood) already gives ``n / (Delta+1)`` vertices;
    otherwise a maximum-degree vertex has a K_(t-1)-free neighbourhood large
    enough to recurse into.
    """
    if t < 2:
        raise PreconditionError("t must be at least 2")
    if check and t <= 8:
        _require_free(g, Pattern.complete(t))
    return _ramsey(g, t)


def _ramsey(g: Graph, t: int) -> VertexSet:
    n = g.n
    if n == 0 or t == 2:
        return tuple(range(n))
    delta = g.max_degree()
    if delta ** (t - 1) < n ** (t - 2):
        out = []
        left = g.all_mask
        while left:
            v = (left & -left).bit_length() - 1
            out.append(v)
            left &= ~(g.adj(v) | 1 << v)
        return tuple(out)
    v = min(range(n), key=lambda u: (-g.degree(u), u))
    h, old = g.induced_subgraph(g.neighbors(v))
    return tuple(old[i] for i in _ramsey(h, t - 1))


def _multipartite_parts(g: Graph) -> list[VertexSet] | None:
    """Parts of a complete multipartite graph, or None if it is not one."""
    parts = g.complement().components()
    for part in parts:
        if not g.is_independent(part):
            return None
    covered = sum(len(p) * (g.n - len(p)) for p in parts) // 2
    return parts if covered == g.m else None


def paw_olariu_extract(g: Graph, check: bool = True) -> HomogeneousSet:
    """Clique or independent set of size at least ``max(1, floor(n**(1/3)))``
    in a paw-free graph.

    Many components give an independent set of representatives. Otherwise a
    largest component has at least ``n**(2/3)`` vertices and, being connected
    and paw-free, is triangle-free (use the Ramsey extractor) or complete
    multipartite (take a largest part, or one vertex per part).
    """
    if check:
        _require_free(g, Pattern.paw())
    n = g.n
    if n == 0:
        return HomogeneousSet(Kind.INDEPENDENT, ())
    target = floor_root(n, Fraction(1, 3))
    comps = g.components()
    if len(comps) >= target:
        return HomogeneousSet(Kind.INDEPENDENT, tuple(c[0] for c in comps))
    big = max(comps, key=lambda c: (len(c), [-v for v in c]))
    h, old = g.induced_subgraph(big)
    triangle = find_induced(h, Pattern.complete(3))
    if triangle is None:
        return HomogeneousSet(Kind.INDEPENDENT, tuple(old[i] for i in _ramsey(h, 3)))
    parts = _multipartite_parts(h)
    if parts is None:
        paw = find_induced(h, Pattern.paw())
        embedding = tuple(old[i] for i in paw) if paw else None
        raise NotInClassError(
            "connected component with a triangle is not complete multipartite", embedding
        )
    largest = max(parts, key=lambda p: (len(p), [-v for v in p]))
    if len(largest) >= len(parts):
        return HomogeneousSet(Kind.INDEPENDENT, tuple(old[i] for i in largest))
    return HomogeneousSet(Kind.CLIQUE, tuple(old[p[0]] for p in parts))


def brute_optimal_extract(g: Graph, delta: Fraction, cap: int | None = DEFAULT_CAP) -> HomogeneousSet:
    """Larger of a maximum clique and a maximum independent set (ties: the
    independent set)."""
    ind = max_independent_set_exact(g, cap=cap)
    clique = max_clique_exact(g, cap=cap)
    need = floor_root(g.n, Fraction(delta))
    if max(len(ind), len(clique)) < need:
        raise EhViolationError(
            f"largest homogeneous set has {max(len(ind), len(clique))} < floor(n^{delta}) = {need}"
        )
    if len(clique) > len(ind):
        return HomogeneousSet(Kind.CLIQUE, clique)
    return HomogeneousSet(Kind.INDEPENDENT, ind)


@dataclass(frozen=True)
class EhPartition:
    cliques: tuple[HomogeneousSet, ...]
    indep_sets: tuple[HomogeneousSet, ...]
    delta: Fraction
    n: int

    @property
    def parts(self) -> tuple[HomogeneousSet, ...]:
        return self.cliques + self.indep_sets

    def __len__(self) -> int:
        return len(self.cliques) + len(self.indep_sets)

    @property
    def bound(self) -> int:
        return eh_part_bound(self.n, self.delta)

    def verify(self, g: Graph, vertices: VertexSet | None = None) -> list[str]:
        """Every broken invariant, as readable messages (empty when valid)."""
        problems = []
        expected = sorted(vertices) if vertices is not None else list(range(g.n))
        union = sorted(v for p in self.parts for v in p.vertices)
        if union != expected:
            problems.append("parts are not a partition of the vertex set")
        for p in self.parts:
            if not p.vertices:
                problems.append("empty part")
            elif not p.verify(g):
                problems.append(f"{p.kind.value} part {p.vertices} fails its kind")
        if len(self) > self.bound:
            problems.append(f"{len(self)} parts exceed the bound {self.bound}")
        return problems


def eh_partition(g: Graph, extractor: Extractor, vertices: VertexSet | None = None,
                 check: bool = True) -> EhPartition:
    """Partition ``vertices`` (default: all of V) by repeated extraction.

    Class membership is checked once on ``G[vertices]``; induced subgraphs of
    an H-free graph stay H-free. Singleton parts count as independent sets.
    """
    if vertices is None:
        vertices = tuple(range(g.n))
    host, old = g.induced_subgraph(vertices)
    if check and extractor.pattern is not None:
        _require_free(host, extractor.pattern)
    cliques: list[HomogeneousSet] = []
    indeps: list[HomogeneousSet] = []
    left = host.all_mask
    while left:
        residual, ids = host.induced_subgraph(iter_bits(left))
        found = extractor.extract(residual, check=False)
        if not found.vertices:
            raise EhViolationError("extractor returned an empty set")
        chosen = tuple(ids[i] for i in found.vertices)
        for v in chosen:
            left &= ~(1 << v)
        part = tuple(old[v] for v in chosen)
        if found.kind is Kind.CLIQUE and len(part) > 1:
            cliques.append(HomogeneousSet(Kind.CLIQUE, part))
        else:
            indeps.append(HomogeneousSet(Kind.INDEPENDENT, part))
    return EhPartition(tuple(cliques), tuple(indeps), extractor.delta, len(old))

