from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmvc.cover import is_vertex_cover, mmvc_value
from mmvc.errors import PreconditionError
from mmvc.exact import max_independent_set_exact, min_vertex_cover_exact
from mmvc.generators import GenSpec, generate
from mmvc.graph import Graph
from mmvc.kernels import DecidedNo, Reduced
from mmvc.lop import (
    Orientation,
    buss_min_vc_kernel,
    dual_from_kernel,
    mis_ktfree_adapter,
    minvc_adapter,
    mmvc_adapter,
    predict_ratio,
    value_approx,
)


def _matching(edges: int) -> Graph:
    return Graph(2 * edges, [(2 * i, 2 * i + 1) for i in range(edges)])


def _min_vc(g: Graph) -> int:
    return len(min_vertex_cover_exact(g))


# -- dual answers ---------------------------------------------------------


def test_dual_examples():
    ans = dual_from_kernel(mmvc_adapter(), Graph.star(9), 5)
    assert ans.conclusion == "at-least-k" and len(ans.witness) >= 5
    ans = dual_from_kernel(mmvc_adapter(), Graph.complete(3), 3)
    assert ans.conclusion == "below-f" and ans.f_value == 13
    # 8 non-isolated vertices exceed k^2 + k = 6, so the vertex-count rule says no
    ans = dual_from_kernel(minvc_adapter(), _matching(4), 2)
    assert ans.conclusion == "above-k" and ans.f_value == 6 + 2
    assert _min_vc(_matching(4)) == 4
    ans = dual_from_kernel(minvc_adapter(), _matching(3), 2)
    assert ans.conclusion == "at-most-f" and ans.f_value == 8


def test_f_values():
    assert mmvc_adapter().f(3) == 9 + 3 + 1
    assert minvc_adapter().f(2) == 6 + 2
    assert mis_ktfree_adapter(3).f(2) == 4 + 2 + 1


# -- Buss kernel ------------------------------------------------------------


def test_buss_examples():
    out = buss_min_vc_kernel(Graph.star(5), 1)
    assert isinstance(out, Reduced)
    assert out.instance.graph.n == 0 and out.instance.k == 0 and out.forced == (0,)
    assert isinstance(buss_min_vc_kernel(_matching(5), 2), DecidedNo)
    out = buss_min_vc_kernel(Graph.complete(3), 2)
    assert isinstance(out, Reduced) and out.instance.graph == Graph.complete(3)
    assert out.instance.k == 2 and _min_vc(Graph.complete(3)) == 2


def test_buss_negative_budget():
    with pytest.raises(PreconditionError):
        buss_min_vc_kernel(Graph(1), -1)
    assert isinstance(buss_min_vc_kernel(Graph.star(3), 0), DecidedNo)


@given(n=st.integers(0, 14), seed=st.integers(0, 2**32), density=st.floats(0, 1),
       k=st.integers(0, 14))
def test_buss_agrees_with_oracle(n, seed, density, k):
    g = generate(GenSpec("any", n, density, seed))
    opt = _min_vc(g)
    out = buss_min_vc_kernel(g, k)
    if isinstance(out, DecidedNo):
        assert opt > k
        return
    h, k2 = out.instance.graph, out.instance.k
    assert len(out.forced) == k - k2
    assert h.n <= k2 * (k2 + 1) and h.m <= k2 * k2
    sub, _ = g.induced_subgraph(set(range(g.n)) - set(out.forced))
    # the residual plus forced vertices cover G, so opt(G) <= forced + opt(G')
    assert is_vertex_cover(g, set(out.forced) | set(out.old_ids))
    if opt <= k:
        assert _min_vc(h) == opt - len(out.forced)
    else:
        assert _min_vc(h) >= opt - (k - k2)


# -- value approximation ------------------------------------------------------


def test_value_approx_examples():
    rep = value_approx(mmvc_adapter(), Graph.star(9))
    assert rep.k0 == 9 and rep.exact_opt == 9 and rep.realized_ratio == 1
    rep = value_approx(minvc_adapter(), Graph.complete(3))
    assert rep.claimed_value >= 2 == rep.exact_opt


def test_value_approx_fallback_on_edgeless_graphs():
    rep = value_approx(mmvc_adapter(), Graph.empty(4))
    assert rep.fallback and rep.k0 == 0 and rep.claimed_value == 0
    rep = value_approx(minvc_adapter(), Graph.empty(3))
    assert rep.fallback and rep.claimed_value == 0 and rep.realized_ratio == 1


def test_non_constructive_mode_hides_witness():
    rep = value_approx(mmvc_adapter(), Graph.star(4), constructive=False)
    assert rep.witness is None and rep.k0 == 4


@given(n=st.integers(1, 14), seed=st.integers(0, 2**32), density=st.floats(0, 1))
def test_mmvc_ratio_within_ceil_sqrt_n(n, seed, density):
    g = generate(GenSpec("any", n, density, seed))
    rep = value_approx(mmvc_adapter(), g)
    assert rep.k0 <= rep.exact_opt
    if rep.k0:
        assert Fraction(rep.exact_opt, rep.k0) <= math.isqrt(n - 1) + 1


@given(n=st.integers(1, 14), seed=st.integers(0, 2**32), density=st.floats(0, 1))
def test_minvc_claim_is_an_upper_bound(n, seed, density):
    g = generate(GenSpec("any", n, density, seed))
    rep = value_approx(minvc_adapter(), g)
    assert rep.claimed_value >= rep.exact_opt


@given(n=st.integers(1, 14), seed=st.integers(0, 2**32), density=st.floats(0, 1))
def test_mis_ktfree_pipeline(n, seed, density):
    g = generate(GenSpec("triangle-free", n, density, seed))
    rep = value_approx(mis_ktfree_adapter(3), g)
    assert rep.k0 <= rep.exact_opt == len(max_independent_set_exact(g))
    assert g.is_independent(rep.witness)


@given(n=st.integers(0, 12), seed=st.integers(0, 2**32), density=st.floats(0, 1))
def test_dual_dichotomy_max(n, seed, density):
    g = generate(GenSpec("any", n, density, seed))
    opt = mmvc_value(g)
    for k in range(1, n + 1):
        ans = dual_from_kernel(mmvc_adapter(), g, k)
        assert opt >= k if ans.positive else opt < ans.f_value


@given(n=st.integers(0, 12), seed=st.integers(0, 2**32), density=st.floats(0, 1))
def test_dual_dichotomy_min(n, seed, density):
    g = generate(GenSpec("any", n, density, seed))
    opt = _min_vc(g)
    for k in range(0, n + 1):
        ans = dual_from_kernel(minvc_adapter(), g, k)
        if ans.positive:
            assert opt <= ans.f_value and is_vertex_cover(g, ans.witness)
        else:
            assert opt > k


# -- predicted ratios -----------------------------------------------------------


def test_predict_examples():
    assert predict_ratio(1, 2).exponent == Fraction(1, 2)
    assert predict_ratio(1, 3).exponent == Fraction(2, 3)
    p = predict_ratio(1, 1, 1, 2, orientation=Orientation.MIN)
    assert p.constant == 3 and p.linear_constant == 3


def test_predict_constant_regime_max():
    p = predict_ratio(Fraction(1, 2), 2, 1, 4)
    assert p.exponent is None and p.constant is None  # beta^(1/2) is symbolic
    p = predict_ratio(1, 1, 1, 2)
    assert p.constant == 2 * 2 + 3
    assert p.linear_constant == "2 + 1 + eps"
    assert predict_ratio(1, 1, 1, 2, eps=Fraction(1, 10)).linear_constant == Fraction(31, 10)


def test_predict_value_and_validation():
    assert predict_ratio(1, 2, n=16).value == 4.0
    assert predict_ratio(1, 2).vertex_exponent == Fraction(1, 2)
    with pytest.raises(PreconditionError):
        predict_ratio(0, 2)
