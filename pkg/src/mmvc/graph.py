"""Undirected simple graphs on dense integer vertex ids.

Adjacency is stored as one Python int bitmask per vertex, which keeps the
exact searches in :mod:`mmvc.exact` and :mod:`mmvc.patterns` cheap. Vertex
sets crossing the public API are sorted tuples of ints.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Sequence

from mmvc.errors import NotConnectedError, PreconditionError

VertexSet = tuple[int, ...]


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_mask(mask: int) -> VertexSet:
    return tuple(iter_bits(mask))


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """Simple undirected graph with vertices ``0 .. n-1``.

    Instances are immutable and hashable. Duplicate edges are merged; loops
    and out-of-range endpoints raise :class:`PreconditionError`.
    """

    __slots__ = ("n", "_adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self._m = sum(popcount(a) for a in adj) // 2

    @classmethod
    def _from_adj(cls, adj: Sequence[int]) -> Graph:
        g = cls.__new__(cls)
        g.n = len(adj)
        g._adj = tuple(adj)
        g._m = sum(popcount(a) for a in adj) // 2
        return g

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return self._m

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1

    def adj(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> VertexSet:
        return from_mask(self._adj[v])

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def max_degree(self) -> int:
        return max((popcount(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self._adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def neighborhood(self, vertices: Iterable[int]) -> VertexSet:
        """Open neighbourhood ``N(X) = N[X] \\ X``."""
        mask = to_mask(vertices)
        return from_mask(self.neighborhood_mask(mask))

    def neighborhood_mask(self, mask: int) -> int:
        out = 0
        for v in iter_bits(mask):
            out |= self._adj[v]
        return out & ~mask

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all(not (self._adj[v] & mask) for v in iter_bits(mask))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = to_mask(vertices)
        return all((self._adj[v] | 1 << v) & mask == mask for v in iter_bits(mask))

    # -- derived graphs ------------------------------------------------

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple[Graph, VertexSet]:
        """Return ``(G[S], old_ids)`` where ``old_ids[new] = old``."""
        old = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(old)}
        adj = []
        for v in old:
            adj.append(to_mask(index[u] for u in iter_bits(self._adj[v]) if u in index))
        return Graph._from_adj(adj), old

    def complement(self) -> Graph:
        full = self.all_mask
        return Graph._from_adj([full & ~a & ~(1 << v) for v, a in enumerate(self._adj)])

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph._from_adj(list(self._adj) + [a << shift for a in other._adj])

    def components(self) -> list[VertexSet]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = 0
        out = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = comp
            while frontier:
                nxt = 0
                for u in iter_bits(frontier):
                    nxt |= self._adj[u]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(from_mask(comp))
        return out

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- named graphs --------------------------------------------------

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise PreconditionError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """``K_{1,t}`` with centre 0."""
        return cls(leaves + 1, ((0, i) for i in range(1, leaves + 1)))

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> Graph:
        return cls.complete_multipartite(a, b)

    @classmethod
    def complete_multipartite(cls, *sizes: int) -> Graph:
        part = [i for i, s in enumerate(sizes) for _ in range(s)]
        n = len(part)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if part[u] != part[v]))


def remove_isolated(g: Graph) -> tuple[Graph, dict[int, int]]:
    """Drop degree-0 vertices; returns the new graph and an old->new id map."""
    keep = [v for v in range(g.n) if g.adj(v)]
    h, old = g.induced_subgraph(keep)
    return h, {o: i for i, o in enumerate(old)}


def is_bipartite(g: Graph) -> list[int] | None:
    """A proper 2-colouring as a list of 0/1, or None if an odd cycle exists."""
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in iter_bits(g.adj(u)):
                if color[v] == -1:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def greedy_coloring(g: Graph, order: Sequence[int] | None = None) -> list[int]:
    """First-fit colouring along ``order`` (default: ascending ids)."""
    if order is None:
        order = range(g.n)
    elif sorted(order) != list(range(g.n)):
        raise PreconditionError("order must be a permutation of the vertices")
    color = [-1] * g.n
    for v in order:
        used = {color[u] for u in iter_bits(g.adj(v))}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    return color


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[u] != coloring[v] for u, v in g.edges())


def spanning_tree_levels(g: Graph, root: int) -> tuple[VertexSet, VertexSet]:
    """Split V into even/odd depth of the BFS tree from ``root``.

    Neighbours are visited in ascending id order, so the tree is fixed.
    """
    if not 0 <= root < g.n:
        raise PreconditionError(f"root {root} out of range")
    depth = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj(u)):
            if v not in depth:
                depth[v] = depth[u] + 1
                queue.append(v)
    if len(depth) != g.n:
        raise NotConnectedError("graph is not connected")
    even = tuple(sorted(v for v, d in depth.items() if d % 2 == 0))
    odd = tuple(sorted(v for v, d in depth.items() if d % 2 == 1))
    return even, odd


def bfs_tree_edges(g: Graph, root: int) -> list[tuple[int, int]]:
    """Parent-child edges of the same BFS tree used by spanning_tree_levels."""
    seen = 1 << root
    queue = deque([root])
    out = []
    while queue:
        u = queue.popleft()
        for v in iter_bits(g.adj(u) & ~seen):
            seen |= 1 << v
            out.append((u, v))
            queue.append(v)
    return out


def max_matching_bipartite(g: Graph) -> list[tuple[int, int]]:
    """Maximum matching of a bipartite graph by augmenting paths (Kuhn)."""
    color = is_bipartite(g)
    if color is None:
        raise PreconditionError("graph is not bipartite")
    mate: dict[int, int] = {}

    def augment(u: int, visited: set[int]) -> bool:
        for v in iter_bits(g.adj(u)):
            if v in visited:
                continue
            visited.add(v)
            if v not in mate or augment(mate[v], visited):
                mate[v] = u
                return True
        return False

    for u in range(g.n):
        if color[u] == 0:
            augment(u, set())
    return sorted((min(u, v), max(u, v)) for v, u in mate.items())
