"""
Minimal vertex covers, and why the largest one is hard to grow into
====================================================================

A vertex cover is minimal when every member still has a neighbour outside
it. The largest such cover is the complement of a smallest independent
dominating set, which is what the exact solver searches for.

Run with ``python3 demos/01_minimal_covers.py``.
"""

from mmvc.cover import complete_and_minimalize, greedy_minimal_vc, is_minimal_vc, mmvc_exact
from mmvc.exact import min_independent_dominating_set
from mmvc.generators import GenSpec, fernau_counterexample, generate
from mmvc.graph import Graph, spanning_tree_levels

# %% A star: the centre alone is a cover, but the leaves form a bigger minimal one.
star = Graph.star(6)
print("star K_1,6")
print("  greedy minimal cover :", greedy_minimal_vc(star))
print("  largest minimal cover:", mmvc_exact(star))

# %% Complementarity on a random graph.
g = generate(GenSpec("any", 14, 0.3, seed=7))
cover = mmvc_exact(g)
dom = min_independent_dominating_set(g)
print(f"\nrandom graph n={g.n}, m={g.m}")
print(f"  mmvc = {len(cover)}, smallest independent dominating set = {len(dom)}, sum = {len(cover) + len(dom)}")
print("  cover is minimal:", is_minimal_vc(g, cover))

# %% Growing a large set into a minimal cover can shrink it.
# Triangle u, v, w with p pendants on each corner. The even BFS levels from
# u hold 1 + 2p vertices and miss only the edge v-w. Covering that edge
# makes v's pendants redundant, so they must leave.
print("\npendant triangle")
print("   p | n  | |V0| | |V1| | completed | n/2  | mmvc")
for p in range(2, 6):
    fx = fernau_counterexample(p)
    v0, v1 = spanning_tree_levels(fx.graph, fx.u)
    done = complete_and_minimalize(fx.graph, v0)
    best = len(mmvc_exact(fx.graph))
    print(f"  {p:2d} | {fx.graph.n:2d} | {len(v0):4d} | {len(v1):4d} | {len(done):9d} | {fx.graph.n / 2:4.1f} | {best}")
