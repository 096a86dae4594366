"""
Cutting a graph into cliques and independent sets
=================================================

If every graph of a class has a clique or independent set of size n^delta,
peeling such sets off one by one leaves few parts. Three extractors are
compared against that part-count ceiling.
"""

from fractions import Fraction

from mmvc.eh import Extractor, eh_partition
from mmvc.generators import GenSpec, generate
from mmvc.graph import Graph

# %% A five-cycle: the smallest graph where sqrt(n) is tight.
c5 = Graph.cycle(5)
part = eh_partition(c5, Extractor.brute(Fraction(1, 2)))
print("C5 parts:", [(p.kind.value, p.vertices) for p in part.parts], "bound", part.bound)

# %% Part counts on larger generated graphs.
runs = [
    ("triangle-free", Extractor.ramsey(3), None),
    ("kt-free", Extractor.ramsey(4), 4),
    ("paw-free", Extractor.olariu(), None),
    ("bull-free", Extractor.brute(Fraction(1, 4)), None),
]
print("\nclass           extractor          n  parts  cliques  bound")
for cls, ex, t in runs:
    for n in (12, 24, 40 if cls != "bull-free" else 24):
        g = generate(GenSpec(cls, n, 0.3, seed=n, t=t))
        part = eh_partition(g, ex)
        assert not part.verify(g)
        print(f"{cls:15s} {str(ex):16s} {n:3d} {len(part):6d} {len(part.cliques):8d} {part.bound:6d}")
