"""Minimal vertex covers: recognition, greedy minimalization, exact optimum.

A set ``X`` is a minimal vertex cover iff it covers every edge and every
``v`` in ``X`` keeps a neighbour outside ``X``. The complement of a minimal
vertex cover is an independent dominating set, which is what the exact
solver searches for.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from mmvc.errors import PreconditionError
from mmvc.exact import min_independent_dominating_set
from mmvc.graph import Graph, VertexSet, from_mask, to_mask

ORACLE_CAP = 20


def _is_cover_mask(g: Graph, x: int) -> bool:
    outside = g.all_mask & ~x
    return all(not (g.adj(v) & outside) for v in range(g.n) if outside >> v & 1)


def is_vertex_cover(g: Graph, x: Iterable[int]) -> bool:
    return _is_cover_mask(g, to_mask(x))


def is_minimal_vc(g: Graph, x: Iterable[int]) -> bool:
    mask = to_mask(x)
    if not _is_cover_mask(g, mask):
        return False
    outside = g.all_mask & ~mask
    return all(g.adj(v) & outside for v in range(g.n) if mask >> v & 1)


def _minimalize(g: Graph, cover: int, order: Sequence[int]) -> int:
    # A vertex can leave iff all its neighbours stay. Removals only shrink the
    # cover, so a kept vertex never becomes removable later: one pass suffices.
    for v in order:
        if cover >> v & 1 and g.adj(v) & ~cover == 0:
            cover &= ~(1 << v)
    return cover


def minimalize(g: Graph, cover: Iterable[int], order: Sequence[int] | None = None) -> VertexSet:
    """Shrink a vertex cover to a minimal one, trying vertices in ``order``."""
    mask = to_mask(cover)
    if not _is_cover_mask(g, mask):
        raise PreconditionError("input set is not a vertex cover")
    if order is None:
        order = range(g.n)
    return from_mask(_minimalize(g, mask, order))


def greedy_minimal_vc(g: Graph) -> VertexSet:
    """Start from V(G) and drop vertices in ascending id order while possible."""
    return from_mask(_minimalize(g, g.all_mask, range(g.n)))


def extend_nbhd_to_minimal_vc(g: Graph, s: Iterable[int]) -> VertexSet:
    """A minimal vertex cover containing ``N(S)`` for an independent set ``S``.

    ``V \\ S`` covers every edge; every vertex of ``N(S)`` keeps its neighbour
    in ``S`` outside the cover, so minimalizing never removes it.
    """
    s = tuple(s)
    if not g.is_independent(s):
        raise PreconditionError("S must be an independent set")
    return from_mask(_minimalize(g, g.all_mask & ~to_mask(s), range(g.n)))


def mmvc_exact(g: Graph, cap: int | None = ORACLE_CAP) -> VertexSet:
    """A maximum-size minimal vertex cover (complement of a minimum
    independent dominating set)."""
    ids = set(min_independent_dominating_set(g, cap=cap))
    return tuple(v for v in range(g.n) if v not in ids)


def mmvc_value(g: Graph, cap: int | None = ORACLE_CAP) -> int:
    return len(mmvc_exact(g, cap=cap))


def complete_and_minimalize(g: Graph, x0: Iterable[int]) -> VertexSet:
    """Complete ``x0`` to a vertex cover, then make it minimal.

    Each uncovered edge (in sorted edge order) contributes its smaller
    endpoint. Minimalization then scans the vertices in reverse insertion
    order, so vertices added last are examined first; the members of ``x0``
    count as inserted in ascending order.
    """
    inserted = sorted(set(x0))
    cover = to_mask(inserted)
    for u, v in g.edges():
        if not (cover >> u & 1 or cover >> v & 1):
            cover |= 1 << u
            inserted.append(u)
    return from_mask(_minimalize(g, cover, inserted[::-1]))
