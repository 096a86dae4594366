"""Small forbidden patterns and induced-subgraph detection.

A pattern on ``p <= 8`` vertices is compiled once into the set of adjacency
codes of all its vertex labelings. A candidate vertex set, read in ascending
order, induces a copy of the pattern iff its code is in that set, and every
prefix of a labeling gives the codes allowed for partial sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations

from mmvc.errors import UnsupportedPatternError
from mmvc.graph import Graph, VertexSet, iter_bits

MAX_PATTERN_VERTICES = 8


def _code(g: Graph, order: tuple[int, ...] | list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = g.adj(order[j])
        base = j * (j - 1) // 2
        for i in range(j):
            if row >> order[i] & 1:
                code |= 1 << (base + i)
    return code


@lru_cache(maxsize=None)
def _compile(h: Graph) -> tuple[frozenset[int], tuple[frozenset[int], ...]]:
    p = h.n
    full = frozenset(_code(h, perm) for perm in permutations(range(p)))
    prefixes = tuple(
        frozenset(c & ((1 << (j * (j - 1) // 2)) - 1) for c in full) for j in range(p + 1)
    )
    return full, prefixes


@dataclass(frozen=True)
class Pattern:
    """A named small graph ``H`` used as a forbidden induced subgraph."""

    name: str
    graph: Graph = field(compare=False, repr=False)
    t: int | None = None

    @property
    def size(self) -> int:
        return self.graph.n

    def __str__(self) -> str:
        return self.name

    @property
    def _codes(self) -> tuple[frozenset[int], tuple[frozenset[int], ...]]:
        if self.graph.n > MAX_PATTERN_VERTICES:
            raise UnsupportedPatternError(
                f"pattern {self.name} has {self.graph.n} vertices (max {MAX_PATTERN_VERTICES})"
            )
        return _compile(self.graph)

    @cached_property
    def is_complete(self) -> bool:
        p = self.graph.n
        return self.graph.m == p * (p - 1) // 2

    @cached_property
    def is_connected(self) -> bool:
        return len(self.graph.components()) <= 1

    # -- named patterns -------------------------------------------------

    @classmethod
    def complete(cls, t: int) -> Pattern:
        return cls(f"K{t}", Graph.complete(t), t)

    @classmethod
    def star(cls, t: int) -> Pattern:
        return cls(f"K1,{t}", Graph.star(t), t)

    @classmethod
    def path(cls, t: int) -> Pattern:
        return cls(f"P{t}", Graph.path(t), t)

    @classmethod
    def cycle(cls, t: int) -> Pattern:
        return cls(f"C{t}", Graph.cycle(t), t)

    @classmethod
    def t_bull(cls, t: int) -> Pattern:
        """``K_t`` plus a pendant vertex on each of two clique vertices."""
        edges = [(u, v) for u in range(t) for v in range(u + 1, t)]
        edges += [(0, t), (1, t + 1)]
        return cls(f"{t}-bull", Graph(t + 2, edges), t)

    @classmethod
    def bull(cls) -> Pattern:
        return cls("bull", cls.t_bull(3).graph, 3)

    @classmethod
    def paw(cls) -> Pattern:
        return cls("paw", Graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)]))

    @classmethod
    def diamond(cls) -> Pattern:
        return cls("diamond", Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]))

    @classmethod
    def parse(cls, text: str) -> Pattern:
        """Parse ``bull``, ``paw``, ``diamond``, ``kt:4``, ``k1t:3``, ``p:5``,
        ``c:5`` or ``tbull:4``."""
        key, _, arg = text.lower().partition(":")
        fixed = {"bull": cls.bull, "paw": cls.paw, "diamond": cls.diamond}
        if key in fixed and not arg:
            return fixed[key]()
        sized = {"kt": cls.complete, "k1t": cls.star, "p": cls.path, "c": cls.cycle,
                 "tbull": cls.t_bull}
        if key in sized and arg.isdigit():
            return sized[key](int(arg))
        raise UnsupportedPatternError(f"unknown pattern {text!r}")


def induces(g: Graph, vertices: VertexSet, pattern: Pattern) -> bool:
    """Whether ``G[vertices]`` is isomorphic to the pattern."""
    vs = sorted(vertices)
    if len(vs) != pattern.size or len(set(vs)) != len(vs):
        return False
    full, _ = pattern._codes
    return _code(g, vs) in full


def find_induced(g: Graph, pattern: Pattern) -> VertexSet | None:
    """Lexicographically least vertex set inducing ``pattern``, or None."""
    full, prefixes = pattern._codes
    p = pattern.size
    if p == 0:
        return ()
    if p > g.n:
        return None
    if pattern.is_complete:
        return _find_clique(g, p)
    detect = _detector(pattern)
    if detect is not None and detect(g) is None:
        return None
    if pattern.is_connected:
        return _find_connected(g, p, full, prefixes)
    return _find_any(g, p, prefixes)


def _find_clique(g: Graph, p: int) -> VertexSet | None:
    def extend(chosen: list[int], cand: int) -> list[int] | None:
        if len(chosen) == p:
            return chosen
        for v in iter_bits(cand):
            found = extend(chosen + [v], cand & g.adj(v) & ~((2 << v) - 1))
            if found:
                return found
        return None

    found = extend([], g.all_mask)
    return tuple(found) if found else None


def _find_any(g: Graph, p: int, prefixes: tuple[frozenset[int], ...]) -> VertexSet | None:
    # ascending combinations with prefix pruning; first hit is lexicographically least
    def extend(chosen: list[int], start: int) -> list[int] | None:
        j = len(chosen)
        if j == p:
            return chosen
        for v in range(start, g.n - (p - j) + 1):
            nxt = chosen + [v]
            if _code(g, nxt) in prefixes[j + 1]:
                found = extend(nxt, v + 1)
                if found:
                    return found
        return None

    found = extend([], 0)
    return tuple(found) if found else None


def _find_connected(g: Graph, p: int, full: frozenset[int],
                    prefixes: tuple[frozenset[int], ...]) -> VertexSet | None:
    # Connected induced subsets enumerated ESU-style, anchored at their minimum
    # vertex. All hits for the smallest anchor are collected and the least kept.
    # Allowed partial codes for unordered sets: any induced j-subgraph of H,
    # which is exactly the prefix-code set at size j.
    adj = [g.adj(v) for v in range(g.n)]
    for anchor in range(g.n):
        above = ~((2 << anchor) - 1)
        hits: list[VertexSet] = []

        def extend(sub: int, nbr: int, ext: int) -> None:
            members = sorted(iter_bits(sub))
            if len(members) == p:
                if _code(g, members) in full:
                    hits.append(tuple(members))
                return
            while ext:
                w = (ext & -ext).bit_length() - 1
                ext &= ~(1 << w)
                nsub = sub | 1 << w
                order = sorted(iter_bits(nsub))
                if _code(g, order) not in prefixes[len(order)]:
                    continue
                excl = adj[w] & ~(sub | nbr) & above & ~(1 << w)
                extend(nsub, nbr | adj[w], ext | excl)

        extend(1 << anchor, adj[anchor], adj[anchor] & above)
        if hits:
            return min(hits)
    return None



# -- fast detectors ------------------------------------------------------
#
# Membership checks dominate the kernels' running time and almost always
# come back empty. For the patterns used as class definitions a direct
# search answers "is there any copy" quickly; the lexicographically least
# copy is then computed only when one exists.


def find_any_induced(g: Graph, pattern: Pattern) -> VertexSet | None:
    """Some vertex set inducing ``pattern`` (not necessarily the least), or None."""
    if pattern.is_complete:
        return _find_clique(g, pattern.size)
    detect = _detector(pattern)
    if detect is not None:
        return detect(g)
    return find_induced(g, pattern)


def _detector(pattern: Pattern):
    t = pattern.t
    if pattern.name == "paw" and pattern.graph == Pattern.paw().graph:
        return _detect_paw
    if t is not None and t >= 3 and pattern.graph == Pattern.t_bull(t).graph:
        return lambda g: _detect_t_bull(g, t)
    if t is not None and pattern.name == f"K1,{t}" and pattern.graph == Graph.star(t):
        return lambda g: _detect_star(g, t)
    return None


def _cliques(g: Graph, size: int):
    """Every clique of the given size, as ascending lists."""
    def extend(chosen: list[int], cand: int):
        if len(chosen) == size:
            yield chosen
            return
        for v in iter_bits(cand):
            yield from extend(chosen + [v], cand & g.adj(v) & ~((2 << v) - 1))

    yield from extend([], g.all_mask)


def _detect_paw(g: Graph) -> VertexSet | None:
    for a, b, c in _cliques(g, 3):
        for x, y, z in ((a, b, c), (b, a, c), (c, a, b)):
            pend = g.adj(x) & ~g.adj(y) & ~g.adj(z)
            if pend:
                return tuple(sorted((a, b, c, (pend & -pend).bit_length() - 1)))
    return None


def _detect_t_bull(g: Graph, t: int) -> VertexSet | None:
    for clique in _cliques(g, t):
        others = [0] * t
        for i in range(t):
            for j, w in enumerate(clique):
                if j != i:
                    others[i] |= g.adj(w)
        for i in range(t):
            xs = g.adj(clique[i]) & ~others[i]
            if not xs:
                continue
            for j in range(t):
                if j == i:
                    continue
                ys = g.adj(clique[j]) & ~others[j]
                for x in iter_bits(xs):
                    free = ys & ~g.adj(x)
                    if free:
                        y = (free & -free).bit_length() - 1
                        return tuple(sorted(clique + [x, y]))
    return None


def _detect_star(g: Graph, t: int) -> VertexSet | None:
    def independent(cand: int, need: int) -> list[int] | None:
        if need == 0:
            return []
        if bin(cand).count("1") < need:
            return None
        v = (cand & -cand).bit_length() - 1
        rest = independent(cand & ~g.adj(v) & ~(1 << v), need - 1)
        if rest is not None:
            return [v] + rest
        return independent(cand & ~(1 << v), need)

    for centre in range(g.n):
        leaves = independent(g.adj(centre), t)
        if leaves is not None:
            return tuple(sorted([centre] + leaves))
    return None
