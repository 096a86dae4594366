"""Exact exponential-time searches used as oracles.

All searches work on adjacency bitmasks and refuse graphs above a vertex
cap (``InstanceTooLargeError``). Ties are broken deterministically.
"""

from __future__ import annotations

from collections.abc import Iterator

from mmvc.errors import InstanceTooLargeError
from mmvc.graph import Graph, VertexSet, from_mask, iter_bits, popcount

DEFAULT_CAP = 28


def _check_cap(g: Graph, cap: int | None, what: str) -> None:
    if cap is not None and g.n > cap:
        raise InstanceTooLargeError(f"{what}: n={g.n} exceeds cap {cap}")


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    # greedy clique cover: its size upper-bounds any independent set in cand
    count = 0
    while cand:
        v = _low(cand)
        cand &= ~(1 << v)
        grow = cand & adj[v]
        while grow:
            w = _low(grow)
            cand &= ~(1 << w)
            grow &= adj[w] & ~(1 << w)
        count += 1
    return count


def _max_independent_mask(adj: tuple[int, ...], cand: int) -> int:
    best_size = -1
    best_mask = 0

    def expand(chosen: int, size: int, cand: int) -> None:
        nonlocal best_size, best_mask
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + popcount(cand) <= best_size:
            return
        if size + _clique_cover_bound(adj, cand) <= best_size:
            return
        v = _low(cand)
        bit = 1 << v
        expand(chosen | bit, size + 1, cand & ~adj[v] & ~bit)
        # an isolated candidate always belongs to some lexicographically-first optimum
        if adj[v] & cand:
            expand(chosen, size, cand & ~bit)

    expand(0, 0, cand)
    return best_mask


def max_independent_set_exact(g: Graph, cap: int | None = DEFAULT_CAP) -> VertexSet:
    """Maximum independent set; the lexicographically least one among optima.

    Branching is include-first in ascending id order, so the first optimum
    reached is the lexicographically least sorted tuple.
    """
    _check_cap(g, cap, "max_independent_set_exact")
    adj = tuple(g.adj(v) for v in range(g.n))
    return from_mask(_max_independent_mask(adj, g.all_mask))


def max_clique_exact(g: Graph, cap: int | None = DEFAULT_CAP) -> VertexSet:
    _check_cap(g, cap, "max_clique_exact")
    return max_independent_set_exact(g.complement(), cap=None)


def min_vertex_cover_exact(g: Graph, cap: int | None = DEFAULT_CAP) -> VertexSet:
    _check_cap(g, cap, "min_vertex_cover_exact")
    mis = max_independent_set_exact(g, cap=None)
    keep = set(mis)
    return tuple(v for v in range(g.n) if v not in keep)


def maximal_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """Every maximal independent set, via Bron-Kerbosch on the complement."""
    full = g.all_mask
    cadj = tuple(full & ~g.adj(v) & ~(1 << v) for v in range(g.n))

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pool = p | x
        pivot = max(iter_bits(pool), key=lambda u: popcount(p & cadj[u]))
        for v in iter_bits(p & ~cadj[pivot]):
            bit = 1 << v
            yield from bk(r | bit, p & cadj[v], x & cadj[v])
            p &= ~bit
            x |= bit

    if g.n == 0:
        yield ()
        return
    for mask in bk(0, full, 0):
        yield from_mask(mask)


def min_independent_dominating_set(g: Graph, cap: int | None = DEFAULT_CAP) -> VertexSet:
    """Smallest independent dominating set by branch and bound.

    An independent set ``D`` can only be extended by vertices that are not yet
    dominated, so the state is just the undominated mask. Each step branches
    on the closed neighbourhood of the undominated vertex with fewest options.
    """
    _check_cap(g, cap, "min_independent_dominating_set")
    n = g.n
    if n == 0:
        return ()
    closed = tuple(g.adj(v) | 1 << v for v in range(n))
    reach = max(popcount(c) for c in closed)
    best_size = n + 1
    best_mask = 0

    def search(chosen: int, size: int, undominated: int) -> None:
        nonlocal best_size, best_mask
        if not undominated:
            if size < best_size:
                best_size, best_mask = size, chosen
            return
        lower = -(-popcount(undominated) // reach)
        if size + lower >= best_size:
            return
        pivot = min(iter_bits(undominated), key=lambda v: (popcount(closed[v] & undominated), v))
        for u in iter_bits(closed[pivot] & undominated):
            search(chosen | 1 << u, size + 1, undominated & ~closed[u])

    search(0, 0, g.all_mask)
    return from_mask(best_mask)
