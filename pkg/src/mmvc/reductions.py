"""CNF formulas and the gadget reduction from Monotone SAT to MMVC.

Gadget layout for a monotone formula with ``n`` variables and ``m`` clauses:
variable ``i`` owns the path ``l_i - x_i+ - x_i- - r_i`` on ids
``4i, 4i+1, 4i+2, 4i+3``; clause ``j`` is vertex ``4n + j``, joined to ``x_i+``
for each positive literal and to ``x_i-`` for each negative one. The
formula is satisfiable iff the graph has a minimal vertex cover of size
``2n + m``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import product

from mmvc.cover import is_minimal_vc
from mmvc.errors import InstanceTooLargeError, PreconditionError, TheoremContradictionError
from mmvc.graph import Graph, VertexSet

Literal = tuple[int, bool]
Clause = tuple[Literal, ...]
Assignment = tuple[bool, ...]

SAT_CAP = 20


@dataclass(frozen=True)
class CnfFormula:
    """Variables ``0 .. var_count-1``; a literal is ``(var, positive)``.

    Duplicate literals inside a clause are dropped, keeping first-seen order.
    """

    var_count: int
    clauses: tuple[Clause, ...]

    def __init__(self, var_count: int, clauses: Iterable[Iterable[Literal]] = ()):
        if var_count < 0:
            raise PreconditionError("var_count must be non-negative")
        clean = []
        for clause in clauses:
            lits = tuple(dict.fromkeys((int(v), bool(p)) for v, p in clause))
            for v, _ in lits:
                if not 0 <= v < var_count:
                    raise PreconditionError(f"variable {v} out of range for n={var_count}")
            clean.append(lits)
        object.__setattr__(self, "var_count", var_count)
        object.__setattr__(self, "clauses", tuple(clean))

    @classmethod
    def from_ints(cls, var_count: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        """Build from DIMACS-style signed, 1-indexed literals."""
        return cls(var_count, ([(abs(x) - 1, x > 0) for x in c] for c in clauses))

    def to_ints(self) -> list[list[int]]:
        return [[v + 1 if p else -(v + 1) for v, p in c] for c in self.clauses]

    @property
    def m(self) -> int:
        return len(self.clauses)

    def is_monotone(self) -> bool:
        return all(len({p for _, p in c}) <= 1 for c in self.clauses)

    def satisfied_by(self, sigma: Sequence[bool]) -> bool:
        if len(sigma) != self.var_count:
            raise PreconditionError("assignment must cover every variable")
        return all(any(sigma[v] == p for v, p in c) for c in self.clauses)


def sat_bruteforce(cnf: CnfFormula, cap: int = SAT_CAP) -> Assignment | None:
    """Least satisfying assignment in binary order (variable 0 most significant)."""
    if cnf.var_count > cap:
        raise InstanceTooLargeError(f"sat_bruteforce: {cnf.var_count} variables exceeds cap {cap}")
    if any(not c for c in cnf.clauses):
        return None
    for sigma in product((False, True), repeat=cnf.var_count):
        if cnf.satisfied_by(sigma):
            return sigma
    return None


def sat_to_monotone(cnf: CnfFormula) -> tuple[CnfFormula, dict[int, tuple[int, int]]]:
    """Equisatisfiable monotone formula on ``2n`` variables.

    Variable ``x`` becomes ``x+ = 2x`` and ``x- = 2x+1``. The literal ``x``
    maps to ``x+`` and ``not x`` to ``x-``, both used positively; the clauses
    ``(x+ or x-)`` and ``(not x+ or not x-)`` force the two to disagree.
    Returns the formula and ``{x: (x+, x-)}``.
    """
    var_map = {x: (2 * x, 2 * x + 1) for x in range(cnf.var_count)}
    clauses: list[list[Literal]] = [
        [(var_map[v][0] if p else var_map[v][1], True) for v, p in c] for c in cnf.clauses
    ]
    for x in range(cnf.var_count):
        plus, minus = var_map[x]
        clauses.append([(plus, True), (minus, True)])
        clauses.append([(plus, False), (minus, False)])
    return CnfFormula(2 * cnf.var_count, clauses), var_map


@dataclass(frozen=True)
class GadgetIds:
    left: int
    plus: int
    minus: int
    right: int


@dataclass(frozen=True)
class MmvcReductionArtifact:
    cnf: CnfFormula
    graph: Graph
    k: int
    variables: tuple[GadgetIds, ...]
    clause_ids: VertexSet

    @property
    def min_cover(self) -> VertexSet:
        """The ``2n`` literal vertices, a minimum vertex cover."""
        return tuple(sorted(i for g in self.variables for i in (g.plus, g.minus)))

    @property
    def matching(self) -> list[tuple[int, int]]:
        """``(l_i, x_i+)`` and ``(x_i-, r_i)`` for every variable."""
        out = []
        for g in self.variables:
            out += [(g.left, g.plus), (g.minus, g.right)]
        return out


def monotone_to_mmvc(cnf: CnfFormula) -> MmvcReductionArtifact:
    if not cnf.is_monotone():
        raise PreconditionError("formula is not monotone")
    if any(not c for c in cnf.clauses):
        raise PreconditionError("empty clauses are not supported")
    n = cnf.var_count
    gadgets = tuple(GadgetIds(4 * i, 4 * i + 1, 4 * i + 2, 4 * i + 3) for i in range(n))
    edges = []
    for g in gadgets:
        edges += [(g.left, g.plus), (g.plus, g.minus), (g.minus, g.right)]
    clause_ids = tuple(4 * n + j for j in range(cnf.m))
    for cid, clause in zip(clause_ids, cnf.clauses):
        for v, positive in clause:
            edges.append((cid, gadgets[v].plus if positive else gadgets[v].minus))
    graph = Graph(4 * n + cnf.m, edges)
    return MmvcReductionArtifact(cnf, graph, 2 * n + cnf.m, gadgets, clause_ids)


def encode_assignment(art: MmvcReductionArtifact, sigma: Sequence[bool]) -> VertexSet:
    """The minimal vertex cover of size ``2n + m`` built from a model."""
    if not art.cnf.satisfied_by(sigma):
        raise PreconditionError("assignment does not satisfy the formula")
    cover = list(art.clause_ids)
    for g, value in zip(art.variables, sigma):
        cover += [g.minus, g.left] if value else [g.plus, g.right]
    return tuple(sorted(cover))


def decode_assignment(art: MmvcReductionArtifact, cover: Iterable[int]) -> Assignment:
    """Read a model off a minimal vertex cover of size at least ``k``.

    ``x_i+`` outside the cover means true, ``x_i-`` outside means false;
    when both are inside the variable is set to true.
    """
    cover = tuple(sorted(set(cover)))
    if len(cover) < art.k or not is_minimal_vc(art.graph, cover):
        raise PreconditionError(f"need a minimal vertex cover of size >= {art.k}")
    inside = set(cover)
    sigma = tuple(not (g.plus in inside and g.minus not in inside) for g in art.variables)
    if not art.cnf.satisfied_by(sigma):
        raise TheoremContradictionError("decoded assignment falsifies a clause")
    return sigma
