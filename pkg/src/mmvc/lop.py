"""From kernels to approximation.

A kernel whose rules keep large optima intact gives a dual approximation:
for a maximization problem with kernel size ``s`` and upper bound ``u`` it
concludes ``opt >= k`` or ``opt < f(k) = u(s(k)) + k + 1``; for minimization
``opt > k`` or ``opt <= f(k) = u(s(k)) + k``. Scanning ``k`` then pins the
optimum within a ratio depending on the growth of ``s``.
"""

from __future__ import annotations

import enum
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from mmvc.cover import greedy_minimal_vc, is_minimal_vc, is_vertex_cover, mmvc_value
from mmvc.errors import PreconditionError
from mmvc.exact import max_independent_set_exact, min_vertex_cover_exact
from mmvc.graph import Graph, VertexSet
from mmvc.kernels import (
    DecidedNo,
    DecidedYes,
    KernelOutcome,
    MmvcInstance,
    ParamInstance,
    Reduced,
    kernel_general,
    mis_ktfree_lop_kernel,
)


class Orientation(enum.Enum):
    MAX = "max"
    MIN = "min"


@dataclass(frozen=True)
class ProblemAdapter:
    """An optimization problem on graphs, seen through its kernel.

    ``u(n)`` bounds every optimum (max) or every solution value (min) of an
    ``n``-vertex instance; ``s(k)`` bounds the kernel size. ``a``, ``alpha``
    describe ``u(n) <= alpha * n**a`` and ``c``, ``beta`` describe
    ``s(k) <= beta * k**c``.
    """

    name: str
    orientation: Orientation
    kernel: Callable[[Graph, int], KernelOutcome]
    value_oracle: Callable[[Graph], int]
    is_solution: Callable[[Graph, VertexSet], bool]
    s: Callable[[int], int]
    c: Fraction
    beta: Fraction = Fraction(1)
    u: Callable[[int], int] = field(default=lambda n: n)
    a: Fraction = Fraction(1)
    alpha: Fraction = Fraction(1)
    size: Callable[[Graph], int] = field(default=lambda g: g.n)

    def f(self, k: int) -> int:
        extra = 1 if self.orientation is Orientation.MAX else 0
        return self.u(self.s(k)) + k + extra


@dataclass(frozen=True)
class DualAnswer:
    """One side of the dual dichotomy.

    ``conclusion`` is ``at-least-k`` or ``below-f`` for maximization and
    ``at-most-f`` or ``above-k`` for minimization.
    """

    conclusion: str
    k: int
    f_value: int
    witness: VertexSet | None = None

    @property
    def positive(self) -> bool:
        """True for the conclusion the value scan looks for."""
        return self.conclusion in ("at-least-k", "at-most-f")


def dual_from_kernel(adapter: ProblemAdapter, g: Graph, k: int) -> DualAnswer:
    fk = adapter.f(k)
    out = adapter.kernel(g, k)
    if adapter.orientation is Orientation.MAX:
        if isinstance(out, DecidedYes):
            return DualAnswer("at-least-k", k, fk, out.witness)
        return DualAnswer("below-f", k, fk)
    if isinstance(out, DecidedNo):
        return DualAnswer("above-k", k, fk)
    if isinstance(out, DecidedYes):
        return DualAnswer("at-most-f", k, fk, out.witness)
    # forced vertices plus every surviving vertex cover the input graph
    kept = tuple(out.old_ids[v] for v in range(out.instance.graph.n))
    witness = tuple(sorted(set(out.forced) | set(kept)))
    return DualAnswer("at-most-f", k, fk, witness)


# -- Vertex Cover kernel ------------------------------------------------


def buss_min_vc_kernel(g: Graph, k: int) -> KernelOutcome:
    """High-degree kernel for minimum Vertex Cover.

    A vertex of degree above the budget must be in every small cover, so it
    is forced and the budget drops by one. Afterwards a yes-instance has at
    most ``k'^2`` edges and ``k'^2 + k'`` non-isolated vertices.
    """
    if k < 0:
        raise PreconditionError("k must be non-negative")
    fired: list[str] = []
    alive = list(range(g.n))
    h = g
    forced: list[int] = []
    while True:
        keep = [v for v in range(h.n) if h.adj(v)]
        if len(keep) < h.n:
            fired.append("isolated")
            h, ids = h.induced_subgraph(keep)
            alive = [alive[i] for i in ids]
        high = next((v for v in range(h.n) if h.degree(v) > k), None)
        if high is None:
            break
        fired.append("high-degree")
        forced.append(alive[high])
        k -= 1
        if k < 0:
            return DecidedNo(tuple(fired + ["budget"]))
        h, ids = h.induced_subgraph(v for v in range(h.n) if v != high)
        alive = [alive[i] for i in ids]
    if h.m > k * k:
        return DecidedNo(tuple(fired + ["edge-count"]))
    if h.n > k * k + k:
        return DecidedNo(tuple(fired + ["vertex-count"]))
    return Reduced(ParamInstance(h, k), k * k + k, tuple(fired), tuple(alive),
                   tuple(sorted(forced)), "k^2 + k")


# -- adapters -----------------------------------------------------------


def _mmvc_kernel(g: Graph, k: int) -> KernelOutcome:
    if k <= 0:
        return DecidedYes(greedy_minimal_vc(g), ("trivial",))
    return kernel_general(MmvcInstance(g, k))


def mmvc_adapter(cap: int | None = None) -> ProblemAdapter:
    return ProblemAdapter(
        name="mmvc",
        orientation=Orientation.MAX,
        kernel=_mmvc_kernel,
        value_oracle=lambda g: mmvc_value(g, cap=cap),
        is_solution=is_minimal_vc,
        s=lambda k: k * k,
        c=Fraction(2),
    )


def mis_ktfree_adapter(t: int, cap: int | None = None) -> ProblemAdapter:
    return ProblemAdapter(
        name=f"mis-ktfree:{t}",
        orientation=Orientation.MAX,
        kernel=lambda g, k: mis_ktfree_lop_kernel(g, k, t, check=False),
        value_oracle=lambda g: len(max_independent_set_exact(g, cap=cap)),
        is_solution=lambda g, x: g.is_independent(x),
        s=lambda k: k ** (t - 1),
        c=Fraction(t - 1),
    )


def minvc_adapter(cap: int | None = None) -> ProblemAdapter:
    return ProblemAdapter(
        name="minvc",
        orientation=Orientation.MIN,
        kernel=buss_min_vc_kernel,
        value_oracle=lambda g: len(min_vertex_cover_exact(g, cap=cap)),
        is_solution=is_vertex_cover,
        s=lambda k: k * k + k,
        c=Fraction(2),
    )


# -- value approximation ------------------------------------------------


@dataclass(frozen=True)
class RatioPrediction:
    """Evaluated ratio guarantees for ``u(n) ~ alpha n^a`` and ``s(k) ~ beta k^c``."""

    orientation: Orientation
    exponent: Fraction | None
    constant: Fraction | None
    vertex_exponent: Fraction | None
    linear_constant: Fraction | str | None
    formula: str
    value: float | None = None


def predict_ratio(a: Fraction, c: Fraction, alpha: Fraction = Fraction(1),
                  beta: Fraction = Fraction(1), n: int | None = None,
                  orientation: Orientation = Orientation.MAX,
                  eps: Fraction | None = None) -> RatioPrediction:
    """Ratio guarantees obtained from a kernel of size ``beta k^c``.

    Polynomial regime (``ac > 1``): ratio ``O(n^((ac-1)/c))``. Otherwise a
    constant: ``alpha beta^a 2^(ac) + 3`` for maximization and
    ``alpha beta^a + 1`` for minimization. With ``a = alpha = 1`` (vertex
    problems) the exponent is ``(c-1)/c``; a linear kernel gives
    ``beta + 1 + eps`` (max) or ``beta + 1`` (min).
    """
    a, c, alpha, beta = (Fraction(x) for x in (a, c, alpha, beta))
    if a <= 0 or c <= 0:
        raise PreconditionError("a and c must be positive")
    exponent = constant = None
    if a * c > 1:
        exponent = (a * c - 1) / c
        formula = f"O(n^({exponent}))"
    else:
        lam = alpha * beta ** a if a.denominator == 1 else None
        if orientation is Orientation.MAX:
            formula = f"{alpha}*{beta}^{a}*2^{a * c} + 3"
            if lam is not None and (a * c).denominator == 1:
                constant = lam * 2 ** int(a * c) + 3
        else:
            formula = f"{alpha}*{beta}^{a} + 1"
            if lam is not None:
                constant = lam + 1
    vertex_exponent = (c - 1) / c if c > 1 else None
    linear: Fraction | str | None = None
    if c == 1:
        if orientation is Orientation.MIN:
            linear = beta + 1
        else:
            linear = beta + 1 + eps if eps is not None else f"{beta} + 1 + eps"
    value = float(n) ** float(exponent) if exponent is not None and n is not None else None
    if value is None and constant is not None:
        value = float(constant)
    return RatioPrediction(orientation, exponent, constant, vertex_exponent, linear, formula, value)


@dataclass(frozen=True)
class ApproxReport:
    problem: str
    orientation: Orientation
    n: int
    k0: int
    claimed_value: int
    witness: VertexSet | None
    exact_opt: int | None
    realized_ratio: Fraction | None
    predicted: RatioPrediction
    dual_calls: int
    fallback: bool = False


def _enumerate_best(adapter: ProblemAdapter, g: Graph, limit: int) -> tuple[int, VertexSet] | None:
    """Best solution among subsets of size at most ``limit`` (polynomial for
    constant ``limit``)."""
    sizes = range(min(limit, g.n), -1, -1)
    if adapter.orientation is Orientation.MIN:
        sizes = range(0, min(limit, g.n) + 1)
    for size in sizes:
        for sub in combinations(range(g.n), size):
            if adapter.is_solution(g, sub):
                return size, sub
    return None


def value_approx(adapter: ProblemAdapter, g: Graph, oracle: bool = True,
                 constructive: bool = True) -> ApproxReport:
    """Scan ``k`` through ``0..u(n)`` and report the value the dual answers pin down.

    Maximization keeps the largest ``k`` answered ``opt >= k``; minimization
    the smallest ``k`` answered ``opt <= f(k)``. When that ``k`` is zero, the
    optimum is a constant and is found by enumerating small subsets.
    """
    n = adapter.size(g)
    top = adapter.u(n)
    calls = 0
    fallback = False
    witness: VertexSet | None = None
    if adapter.orientation is Orientation.MAX:
        k0 = 0
        for k in range(1, top + 1):
            ans = dual_from_kernel(adapter, g, k)
            calls += 1
            if ans.positive:
                k0, witness = k, ans.witness
        claimed = k0
        if k0 == 0:
            fallback = True
            best = _enumerate_best(adapter, g, max(adapter.f(0), adapter.f(1)) - 1)
            claimed, witness = best if best else (0, ())
    else:
        k0 = None
        for k in range(0, top + 1):
            ans = dual_from_kernel(adapter, g, k)
            calls += 1
            if ans.positive:
                k0, witness = k, ans.witness
                break
        if k0 is None:
            raise PreconditionError("no k in 0..u(n) gave opt <= f(k); upper bound u is wrong")
        claimed = adapter.f(k0)
        if k0 == 0:
            fallback = True
            best = _enumerate_best(adapter, g, adapter.f(0))
            if best is not None:
                claimed, witness = best
    exact = adapter.value_oracle(g) if oracle else None
    ratio = None
    if exact is not None:
        num, den = (exact, claimed) if adapter.orientation is Orientation.MAX else (claimed, exact)
        if den:
            ratio = Fraction(num, den)
        elif num == 0:
            ratio = Fraction(1)
    predicted = predict_ratio(adapter.a, adapter.c, adapter.alpha, adapter.beta, n,
                              adapter.orientation)
    return ApproxReport(adapter.name, adapter.orientation, n, k0, claimed,
                        witness if constructive else None, exact, ratio, predicted, calls, fallback)
