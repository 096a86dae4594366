from __future__ import annotations

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmvc.bounds import ceil_scaled_power, eh_constant, eh_part_bound, floor_root
from mmvc.kernels import ClassBound

mpmath.mp.dps = 80


def _mp_bound(coef, delta, k):
    d = mpmath.mpf(delta.numerator) / delta.denominator
    c = coef / (mpmath.mpf(2) ** (1 - d) - 1)
    return int(mpmath.ceil(c * mpmath.mpf(k - 1) ** (2 - d))) + k - 1


def test_bull_constant_below_three():
    assert eh_constant(2, Fraction(1, 4)) < 3


def test_paw_constant_below_3_41():
    assert eh_constant(2, Fraction(1, 3)) < Fraction(341, 100)


def test_triangle_free_constant():
    # c_3 = 2 / (sqrt 2 - 1) = 2 (sqrt 2 + 1)
    assert abs(float(eh_constant(2, Fraction(1, 2))) - 2 * (math.sqrt(2) + 1)) < 1e-12


def test_triangle_free_bound_for_k4():
    assert ClassBound("kt", 3).bound(4) == 29


def test_bull_bounds_small_k():
    assert [ClassBound("bull").bound(k) for k in range(1, 7)] == [0, 4, 12, 24, 38, 55]


def test_linear_and_quadratic_bounds():
    assert ClassBound("general").bound(5) == 24
    assert ClassBound("k1t", 3).bound(5) == 12
    assert ClassBound("colored", 4).bound(3) == 8
    assert ClassBound("mis-ktfree", 3).bound(4) == 15


@pytest.mark.parametrize(
    "cls", [ClassBound("bull"), ClassBound("paw"), ClassBound("kt", 3), ClassBound("kt", 4),
            ClassBound("kt", 5), ClassBound("tbull", 3), ClassBound("tbull", 4),
            ClassBound("tbull", 7)],
    ids=str,
)
@given(k=st.integers(1, 400))
def test_bounds_match_high_precision_reference(cls, k):
    assert cls.bound(k) == _mp_bound(cls.coefficient, cls.delta, k)


def test_class_exponents():
    assert ClassBound("kt", 3).exponent == Fraction(3, 2)
    assert ClassBound("kt", 5).exponent == Fraction(7, 4)
    assert ClassBound("bull").exponent == Fraction(7, 4)
    assert ClassBound("paw").exponent == Fraction(5, 3)
    assert ClassBound("tbull", 3).delta == Fraction(1, 4)
    assert ClassBound("tbull", 5).delta == Fraction(4, 22)


def test_exact_integer_results_are_not_rounded_up():
    # 4 * 2**(3/2) ... pick a case where the product is an integer: x = 0
    assert ceil_scaled_power(2, Fraction(1, 2), 0, Fraction(3, 2)) == 0
    assert eh_part_bound(7, Fraction(1)) == 7


@given(n=st.integers(0, 10**6), q=st.integers(1, 6))
def test_floor_root_is_exact(n, q):
    r = floor_root(n, Fraction(1, q))
    assert r**q <= max(n, 0) < (r + 1) ** q or n == 0


def test_part_bound_example():
    assert eh_part_bound(5, Fraction(1, 2)) == 6
