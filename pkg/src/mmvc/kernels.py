"""Kernelization for Maximum Minimal Vertex Cover.

Every rule here either decides the instance or deletes isolated vertices,
so the parameter never changes and the optimum is preserved exactly. The
size bounds are therefore guarantees about what survives, and a violated
bound on a verified in-class input is reported as an error.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from mmvc.bounds import ceil_scaled_power
from mmvc.cover import extend_nbhd_to_minimal_vc, greedy_minimal_vc
from mmvc.eh import Extractor, Strategy, eh_partition, ramsey_is_extract
from mmvc.errors import NotInClassError, PreconditionError, TheoremContradictionError
from mmvc.graph import Graph, VertexSet, from_mask, is_proper_coloring, iter_bits, to_mask
from mmvc.patterns import Pattern, find_induced, induces


@dataclass(frozen=True)
class ParamInstance:
    graph: Graph
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise PreconditionError("parameter must be non-negative")


@dataclass(frozen=True)
class MmvcInstance(ParamInstance):
    def __post_init__(self) -> None:
        if self.k < 1:
            raise PreconditionError("k must be a positive integer")


@dataclass(frozen=True)
class DecidedYes:
    witness: VertexSet
    fired_rules: tuple[str, ...] = ()


@dataclass(frozen=True)
class DecidedNo:
    fired_rules: tuple[str, ...] = ()


@dataclass(frozen=True)
class Reduced:
    """A reduced instance; ``old_ids[i]`` is the input id of new vertex ``i``.

    ``forced`` lists input vertices committed to the solution by rules that
    lowered the parameter (only the Vertex Cover kernel does that).
    """

    instance: ParamInstance
    declared_bound: int
    fired_rules: tuple[str, ...] = ()
    old_ids: VertexSet = ()
    forced: VertexSet = ()
    formula: str = ""


KernelOutcome = DecidedYes | DecidedNo | Reduced


# -- class bounds -------------------------------------------------------


@dataclass(frozen=True)
class ClassBound:
    """Graph class with its kernel size bound.

    ``kind`` is one of ``general``, ``bull``, ``kt``, ``tbull``, ``paw``,
    ``k1t``, ``colored`` and ``mis-ktfree``; ``t`` is the class parameter
    (colour count for ``colored``).
    """

    kind: str
    t: int | None = None

    def __post_init__(self) -> None:
        needs_t = {"kt": 3, "tbull": 3, "k1t": 1, "colored": 1, "mis-ktfree": 2}
        if self.kind in needs_t:
            if self.t is None or self.t < needs_t[self.kind]:
                raise PreconditionError(f"class {self.kind} needs t >= {needs_t[self.kind]}")
        elif self.kind not in ("general", "bull", "paw"):
            raise PreconditionError(f"unknown class {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> ClassBound:
        """``general``, ``bull``, ``paw``, ``kt:4``, ``tbull:4``, ``k1t:3`` or ``colored:5``."""
        key, _, arg = text.lower().partition(":")
        if arg:
            if not arg.isdigit():
                raise PreconditionError(f"bad class parameter in {text!r}")
            return cls(key, int(arg))
        return cls(key)

    def __str__(self) -> str:
        return self.kind if self.t is None else f"{self.kind}:{self.t}"

    @property
    def pattern(self) -> Pattern | None:
        if self.kind == "bull":
            return Pattern.bull()
        if self.kind == "paw":
            return Pattern.paw()
        if self.kind in ("kt", "mis-ktfree"):
            return Pattern.complete(self.t)
        if self.kind == "tbull":
            return Pattern.t_bull(self.t)
        if self.kind == "k1t":
            return Pattern.star(self.t)
        return None

    @property
    def delta(self) -> Fraction | None:
        """Erdos-Hajnal exponent used by the subquadratic kernels."""
        if self.kind == "bull" or (self.kind == "tbull" and self.t == 3):
            return Fraction(1, 4)
        if self.kind == "tbull":
            return Fraction(4, self.t + 17)
        if self.kind == "kt":
            return Fraction(1, self.t - 1)
        if self.kind == "paw":
            return Fraction(1, 3)
        return None

    @property
    def coefficient(self) -> int | None:
        """Numerator of the constant: ``c = coefficient / (2**(1-delta) - 1)``."""
        if self.kind in ("bull", "paw"):
            return 2
        if self.kind in ("kt", "tbull"):
            return self.t - 1
        return None

    @property
    def exponent(self) -> Fraction | None:
        return None if self.delta is None else 2 - self.delta

    @property
    def formula(self) -> str:
        if self.kind == "general":
            return "k^2 - 1"
        if self.kind == "k1t":
            return f"{self.t}*(k-1)"
        if self.kind == "colored":
            return f"{self.t}*(k-1)"
        if self.kind == "mis-ktfree":
            return f"k^{self.t - 1} - 1"
        d = self.delta
        return f"ceil({self.coefficient}/(2^({1 - d})-1) * (k-1)^({self.exponent})) + k-1"

    def bound(self, k: int) -> int:
        if self.kind == "general":
            return k * k - 1
        if self.kind in ("k1t", "colored"):
            return self.t * (k - 1)
        if self.kind == "mis-ktfree":
            return k ** (self.t - 1) - 1
        return ceil_scaled_power(self.coefficient, self.delta, k - 1, self.exponent) + k - 1

    def default_extractor(self) -> Extractor:
        if self.kind == "kt":
            return Extractor.ramsey(self.t)
        if self.kind == "paw":
            return Extractor.olariu()
        if self.delta is None:
            raise PreconditionError(f"class {self} has no homogeneous-set extractor")
        return Extractor.brute(self.delta)

    def check_extractor(self, extractor: Extractor) -> None:
        ok = {
            Strategy.RAMSEY: self.kind == "kt" and extractor.t == self.t,
            Strategy.OLARIU: self.kind == "paw",
            Strategy.BRUTE: self.delta is not None and extractor.delta == self.delta,
        }[extractor.strategy]
        if not ok:
            raise PreconditionError(f"extractor {extractor} does not fit class {self}")


def require_in_class(g: Graph, pattern: Pattern | None) -> None:
    """Raise ``NotInClassError`` carrying an embedding if ``g`` contains ``pattern``."""
    if pattern is None or pattern.size > 8:
        return
    hit = find_induced(g, pattern)
    if hit is not None:
        raise NotInClassError(f"graph contains an induced {pattern}", hit)


# -- shared rules -------------------------------------------------------


@dataclass
class _Run:
    """Isolate-free working graph with the bookkeeping shared by all kernels."""

    graph: Graph
    old_ids: VertexSet
    k: int
    fired: list[str] = field(default_factory=list)

    @classmethod
    def start(cls, g: Graph, k: int) -> _Run:
        keep = [v for v in range(g.n) if g.adj(v)]
        h, old = g.induced_subgraph(keep)
        run = cls(h, old, k)
        if h.n < g.n:
            run.fired.append("isolated")
        return run

    def yes(self, witness: VertexSet, rule: str) -> DecidedYes:
        self.fired.append(rule)
        return DecidedYes(tuple(sorted(self.old_ids[v] for v in witness)), tuple(self.fired))

    def high_degree(self) -> DecidedYes | None:
        for v in range(self.graph.n):
            if self.graph.degree(v) >= self.k:
                return self.yes(extend_nbhd_to_minimal_vc(self.graph, (v,)), "high-degree")
        return None

    def greedy(self) -> tuple[DecidedYes | None, VertexSet]:
        x = greedy_minimal_vc(self.graph)
        if len(x) >= self.k:
            return self.yes(x, "greedy-cover"), x
        return None, x

    def reduced(self, bound: int, formula: str, verified: bool) -> Reduced:
        if self.graph.n > bound:
            msg = f"reduced graph has {self.graph.n} > {bound} vertices"
            if verified:
                raise TheoremContradictionError(msg)
            raise NotInClassError(msg + "; input is probably outside the class")
        return Reduced(ParamInstance(self.graph, self.k), bound, tuple(self.fired),
                       self.old_ids, (), formula)


# -- kernels ------------------------------------------------------------


def kernel_general(inst: MmvcInstance) -> KernelOutcome:
    """Quadratic kernel: degree rule, then a greedy minimal cover."""
    run = _Run.start(inst.graph, inst.k)
    decided = run.high_degree()
    if decided is None:
        decided, _ = run.greedy()
    if decided is not None:
        return decided
    return run.reduced(inst.k * inst.k - 1, "k^2 - 1", verified=True)


def kernel_hfree(inst: MmvcInstance, cls: ClassBound, extractor: Extractor | None = None,
                 check: bool = True) -> KernelOutcome:
    """Subquadratic kernel for bull-, K_t-, t-bull- and paw-free graphs.

    After the general rules, the greedy cover ``X`` is partitioned into
    cliques and independent sets; an independent part ``I`` with at least
    ``k`` neighbours in ``S = V \\ X`` yields a minimal cover containing
    ``N(I)``. Set ``check=False`` to skip the class test (patterns larger than
    eight vertices are never tested).
    """
    if cls.delta is None:
        raise PreconditionError(f"class {cls} has no subquadratic kernel")
    extractor = extractor or cls.default_extractor()
    cls.check_extractor(extractor)
    verified = check and cls.pattern is not None and cls.pattern.size <= 8
    if check:
        require_in_class(inst.graph, cls.pattern)
    run = _Run.start(inst.graph, inst.k)
    decided = run.high_degree()
    if decided is not None:
        return decided
    decided, x = run.greedy()
    if decided is not None:
        return decided
    g = run.graph
    x_mask = to_mask(x)
    part = eh_partition(g, extractor, x, check=False)
    for ind in part.indep_sets:
        n_s = g.neighborhood_mask(to_mask(ind.vertices)) & ~x_mask
        if bin(n_s).count("1") >= inst.k:
            return run.yes(extend_nbhd_to_minimal_vc(g, ind.vertices), "eh-independent-part")
    return run.reduced(cls.bound(inst.k), cls.formula, verified)


def kernel_k1t(inst: MmvcInstance, t: int, check: bool = True) -> KernelOutcome:
    """Linear kernel for K_{1,t}-free graphs: at most ``t(k-1)`` vertices remain."""
    cls = ClassBound("k1t", t)
    if check:
        require_in_class(inst.graph, cls.pattern)
    run = _Run.start(inst.graph, inst.k)
    decided = run.high_degree()
    if decided is None:
        decided, _ = run.greedy()
    if decided is not None:
        return decided
    return run.reduced(cls.bound(inst.k), cls.formula, verified=check and t + 1 <= 8)


def kernel_colored(inst: MmvcInstance, coloring: Sequence[int]) -> KernelOutcome:
    """Linear kernel given a proper colouring with ``c`` colours.

    A colour class is independent, so ``|N(S_i)| >= k`` for some class
    decides yes; otherwise every vertex of the isolate-free graph lies in
    some ``N(S_i)`` of another class, leaving at most ``c(k-1)`` vertices.
    """
    g = inst.graph
    if not is_proper_coloring(g, coloring):
        raise PreconditionError("coloring is not proper")
    run = _Run.start(g, inst.k)
    h = run.graph
    colors = sorted({coloring[v] for v in run.old_ids})
    c = len(set(coloring)) if g.n else 0
    for col in colors:
        members = tuple(i for i, v in enumerate(run.old_ids) if coloring[v] == col)
        if bin(h.neighborhood_mask(to_mask(members))).count("1") >= inst.k:
            return run.yes(extend_nbhd_to_minimal_vc(h, members), "color-class")
    cls = ClassBound("colored", max(c, 1))
    return run.reduced(cls.bound(inst.k), cls.formula, verified=True)


def mis_ktfree_lop_kernel(g: Graph, k: int, t: int, check: bool = True) -> KernelOutcome:
    """Trivial kernel for Maximum Independent Set on K_t-free graphs.

    Ramsey extraction finds ``floor(n**(1/(t-1))) >= k`` independent vertices
    whenever ``n >= k**(t-1)``; smaller graphs are returned unchanged.
    """
    if k < 0:
        raise PreconditionError("k must be non-negative")
    cls = ClassBound("mis-ktfree", t)
    if check and t <= 8:
        require_in_class(g, cls.pattern)
    if g.n >= k ** (t - 1):
        return DecidedYes(ramsey_is_extract(g, t, check=False), ("ramsey",))
    return Reduced(ParamInstance(g, k), cls.bound(k), (), tuple(range(g.n)), (), cls.formula)


# -- clique-neighbourhood diagnostic -------------------------------------


@dataclass(frozen=True)
class Violation:
    """A broken structural property and the vertices involved."""

    kind: str
    vertices: VertexSet

    def __str__(self) -> str:
        return f"{self.kind} at {self.vertices}"


@dataclass(frozen=True)
class DiagnosticReport:
    """Outcome of checking the clique-neighbourhood structure around ``clique``.

    For bull and t-bull classes, ``chain`` lists the first part of
    ``N_S(C)`` sorted by inclusion of C-neighbourhoods, ``common`` is a
    clique vertex adjacent to all of it and ``covering`` the clique vertices
    that touch every vertex of the second part. ``violations`` is empty when
    the structure holds; ``embedding`` then stays None.
    """

    cls: str
    clique: VertexSet
    outside: VertexSet
    first: VertexSet = ()
    second: VertexSet = ()
    chain: VertexSet = ()
    common: int | None = None
    covering: VertexSet = ()
    violations: tuple[Violation, ...] = ()
    embedding: VertexSet | None = None
    found_by_search: VertexSet | None = None

    @property
    def ok(self) -> bool:
        return not self.violations


def greedy_maximal_independent(g: Graph, vertices: VertexSet) -> VertexSet:
    left = to_mask(vertices)
    out = []
    while left:
        v = (left & -left).bit_length() - 1
        out.append(v)
        left &= ~(g.adj(v) | 1 << v)
    return tuple(out)


def clique_neighborhood_diagnostic(g: Graph, clique: VertexSet, cls: ClassBound,
                                   outside: VertexSet | None = None) -> DiagnosticReport:
    """Check the nested-neighbourhood structure around a clique.

    ``outside`` plays the role of the independent set ``S`` (default: a greedy
    maximal independent set of ``G - C``). For bull and t-bull classes the
    first part of ``N_S(C)`` must form an inclusion chain; for the paw class
    every vertex of ``N_S(C)`` must see all but at most one clique vertex.
    A violation comes with an explicit induced copy of the pattern, and the
    generic pattern search is run as a cross-check.
    """
    clique = tuple(sorted(set(clique)))
    if not g.is_clique(clique):
        raise PreconditionError("C does not induce a clique")
    c_mask = to_mask(clique)
    if outside is None:
        outside = greedy_maximal_independent(g, from_mask(g.all_mask & ~c_mask))
    outside = tuple(sorted(set(outside)))
    if c_mask & to_mask(outside):
        raise PreconditionError("S must be disjoint from C")
    if not g.is_independent(outside):
        raise PreconditionError("S must be an independent set")
    n_s = tuple(v for v in outside if g.adj(v) & c_mask)
    if cls.kind == "paw":
        return _paw_diagnostic(g, clique, outside, n_s)
    if cls.kind == "bull" or cls.kind == "tbull":
        t = 3 if cls.kind == "bull" else cls.t
        return _bull_diagnostic(g, clique, outside, n_s, t, str(cls))
    raise PreconditionError(f"no clique-neighbourhood diagnostic for class {cls}")


def _cross_check(g: Graph, pattern: Pattern) -> VertexSet | None:
    return find_induced(g, pattern)


def _paw_diagnostic(g: Graph, clique: VertexSet, outside: VertexSet,
                    n_s: VertexSet) -> DiagnosticReport:
    c_mask = to_mask(clique)
    size = len(clique)
    violations = []
    embedding = None
    for v in n_s:
        seen = g.adj(v) & c_mask
        if size >= 2 and bin(seen).count("1") < size - 1:
            a = (seen & -seen).bit_length() - 1
            b, b2 = list(iter_bits(c_mask & ~seen))[:2]
            violations.append(Violation("sees fewer than |C|-1 clique vertices", (v,)))
            if embedding is None:
                embedding = tuple(sorted((v, a, b, b2)))
    found = _cross_check(g, Pattern.paw()) if violations else None
    return DiagnosticReport("paw", clique, outside, violations=tuple(violations),
                            embedding=embedding, found_by_search=found)


def _bull_diagnostic(g: Graph, clique: VertexSet, outside: VertexSet, n_s: VertexSet,
                     t: int, name: str) -> DiagnosticReport:
    c_mask = to_mask(clique)
    limit = len(clique) - (t - 2)
    nc = {v: g.adj(v) & c_mask for v in n_s}
    first: list[int] = []
    for x in n_s:
        if all(bin(nc[x] | nc[y]).count("1") <= limit for y in first + [x]):
            first.append(x)
    second = tuple(v for v in n_s if v not in first)
    violations = []
    embedding = None

    # Sorted by size, the sets form a chain iff each is inside the next; a
    # failure between neighbours means they are incomparable.
    chain = sorted(first, key=lambda v: (bin(nc[v]).count("1"), v))
    for x, y in zip(chain, chain[1:]):
        if nc[x] & ~nc[y]:
            violations.append(Violation("incomparable C-neighbourhoods", (x, y)))
            embedding = _locate_t_bull(g, c_mask, x, y, nc, t)
            break

    common = None
    if first:
        inter = c_mask
        for v in first:
            inter &= nc[v]
        if inter:
            common = (inter & -inter).bit_length() - 1
        else:
            violations.append(Violation("no common clique neighbour", tuple(first)))

    union = 0
    for v in first:
        union |= nc[v]
    covering = tuple(iter_bits(c_mask & ~union))[: t - 2]
    cov_mask = to_mask(covering)
    for v in second:
        if not nc[v] & cov_mask:
            violations.append(Violation("second-part vertex misses the covering set", (v,)))

    found = _cross_check(g, Pattern.t_bull(t)) if violations else None
    return DiagnosticReport(name, clique, outside, tuple(first), second, tuple(chain),
                            common, covering, tuple(violations), embedding, found)


def _locate_t_bull(g: Graph, c_mask: int, x: int, y: int, nc: dict[int, int],
                   t: int) -> VertexSet | None:
    u = (nc[x] & ~nc[y]).bit_length() - 1
    v = (nc[y] & ~nc[x]).bit_length() - 1
    if u < 0 or v < 0:
        return None
    rest = list(iter_bits(c_mask & ~(nc[x] | nc[y])))[: t - 2]
    if len(rest) < t - 2:
        return None
    cand = tuple(sorted((x, y, u, v, *rest)))
    return cand if induces(g, cand, Pattern.t_bull(t)) else None
