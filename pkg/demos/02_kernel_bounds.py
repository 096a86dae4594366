"""
Kernel sizes across graph classes
=================================

Every kernel here keeps the parameter and only deletes isolated vertices,
so whatever survives is the input itself; the interesting number is the
guaranteed ceiling on what can survive. This script tabulates those
ceilings and then watches the kernels on random in-class graphs.
"""

from mmvc.bounds import eh_constant
from mmvc.cover import mmvc_value
from mmvc.generators import GenSpec, generate
from mmvc.kernels import ClassBound, DecidedYes, MmvcInstance, Reduced, kernel_general, kernel_hfree

CLASSES = ["general", "bull", "paw", "kt:3", "kt:4", "tbull:4", "k1t:3"]

# %% The constants in front of the subquadratic terms.
print("class     delta    constant     formula")
for name in CLASSES:
    cls = ClassBound.parse(name)
    if cls.delta is None:
        continue
    c = eh_constant(cls.coefficient, cls.delta)
    print(f"{name:9s} {str(cls.delta):7s} {float(c):10.6f}   {cls.formula}")

# %% Bound values as k grows.
ks = [2, 4, 8, 16, 32, 64]
print("\nk        " + "".join(f"{k:>8d}" for k in ks))
for name in CLASSES:
    cls = ClassBound.parse(name)
    print(f"{name:9s}" + "".join(f"{cls.bound(k):>8d}" for k in ks))

# %% Kernels on random graphs: what fires, and how close the survivors get to the bound.
print("\nclass          n   k  outcome              survivors/bound  mmvc")
cases = [("bull-free", "bull"), ("triangle-free", "kt:3"), ("paw-free", "paw")]
for gen, name in cases:
    for seed in range(3):
        g = generate(GenSpec(gen, 16, 0.25, seed))
        k = 5 + 4 * seed
        out = kernel_hfree(MmvcInstance(g, k), ClassBound.parse(name))
        if isinstance(out, DecidedYes):
            what, size = "yes via " + out.fired_rules[-1], "-"
        elif isinstance(out, Reduced):
            what, size = "reduced", f"{out.instance.graph.n}/{out.declared_bound}"
        else:
            what, size = "no", "-"
        print(f"{gen:13s} {g.n:3d} {k:3d}  {what:20s} {size:>15s}  {mmvc_value(g)}")

# %% The general kernel on the same graphs, for contrast.
g = generate(GenSpec("triangle-free", 16, 0.25, 0))
print("\ngeneral kernel at k=7:", kernel_general(MmvcInstance(g, 7)))
