"""
From a kernel to an approximation
=================================

A kernel that never damages large optima answers "opt >= k" or
"opt < f(k)" for each k. Scanning k and keeping the last positive answer
gives a value within a ratio governed by the kernel's growth: about
sqrt(n) for a quadratic kernel.
"""

import math
from fractions import Fraction

from mmvc.generators import GenSpec, generate
from mmvc.graph import Graph
from mmvc.lop import Orientation, minvc_adapter, mmvc_adapter, predict_ratio, value_approx

# %% Predicted exponents and constants.
for a, c in [(1, 2), (1, 3), (1, Fraction(3, 2))]:
    print(f"a={a}, c={c}: ratio {predict_ratio(a, c).formula}")
print("linear kernel 2k, minimisation:", predict_ratio(1, 1, 1, 2, orientation=Orientation.MIN).formula)

# %% Realised ratios for the largest minimal vertex cover.
print("\n  n  density  k0  opt  ratio  ceil(sqrt n)")
for seed, (n, d) in enumerate([(8, 0.2), (12, 0.3), (16, 0.15), (16, 0.5), (16, 0.8)]):
    g = generate(GenSpec("any", n, d, seed))
    rep = value_approx(mmvc_adapter(), g)
    print(f"{n:3d}  {d:7.2f} {rep.k0:3d} {rep.exact_opt:4d}  {str(rep.realized_ratio):5s}  {math.isqrt(n - 1) + 1}")

# %% The same machinery for minimum vertex cover with the high-degree kernel.
print("\nminimum vertex cover")
for g, name in [(Graph.complete(3), "K3"), (Graph.star(8), "K1,8"),
                (generate(GenSpec("any", 14, 0.3, 3)), "random n=14")]:
    rep = value_approx(minvc_adapter(), g)
    print(f"  {name:12s} k0={rep.k0:2d} claimed={rep.claimed_value:3d} exact={rep.exact_opt}")
