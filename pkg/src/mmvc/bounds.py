"""Exact integer evaluation of the real-valued size bounds.

Bounds such as ``ceil(c * (k-1)**(7/4))`` mix irrational constants and
fractional powers. They are evaluated in 60-digit decimal arithmetic and
rounded up; a value within ``1e-40`` of an integer counts as that integer,
so float noise can never push a bound past its true ceiling.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction

PRECISION = 60
_SNAP = Decimal("1e-40")


def _dec(x: Fraction | int) -> Decimal:
    x = Fraction(x)
    return Decimal(x.numerator) / Decimal(x.denominator)


def dpow(base: Fraction | int, exponent: Fraction | int) -> Decimal:
    """``base ** exponent`` for a non-negative base, in the active context."""
    if base == 0:
        return Decimal(1) if exponent == 0 else Decimal(0)
    return _dec(base) ** _dec(exponent)


def ceil_decimal(x: Decimal) -> int:
    nearest = x.to_integral_value()
    if abs(x - nearest) <= _SNAP:
        return int(nearest)
    return math.ceil(x)


def eh_constant(coef: int, delta: Fraction) -> Decimal:
    """``coef / (2**(1-delta) - 1)``, the factor shared by all H-free bounds."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return Decimal(coef) / (dpow(2, 1 - delta) - 1)


def ceil_scaled_power(coef: int, delta: Fraction, x: int, exponent: Fraction) -> int:
    """``ceil(coef * x**exponent / (2**(1-delta) - 1))``."""
    with localcontext() as ctx:
        ctx.prec = PRECISION
        return ceil_decimal(eh_constant(coef, delta) * dpow(x, exponent))


def eh_part_bound(n: int, delta: Fraction) -> int:
    """``ceil(n**(1-delta) / (2**(1-delta) - 1))``; ``n`` itself when delta = 1."""
    delta = Fraction(delta)
    if not 0 < delta <= 1:
        raise ValueError("delta must lie in (0, 1]")
    if delta == 1:
        return n
    return ceil_scaled_power(1, delta, n, 1 - delta)


def floor_root(n: int, delta: Fraction) -> int:
    """Largest integer ``r`` with ``r <= n**delta``, computed exactly."""
    delta = Fraction(delta)
    p, q = delta.numerator, delta.denominator
    if n <= 0:
        return 0
    target = n**p
    r = int(round(n ** float(delta)))
    while r**q > target:
        r -= 1
    while (r + 1) ** q <= target:
        r += 1
    return r
