"""
Satisfiability as a large minimal vertex cover
==============================================

Any CNF becomes monotone by splitting each variable into a positive and a
negative copy. A monotone formula then becomes a bipartite graph with a
four-vertex path per variable and a vertex per clause; it is satisfiable
exactly when the graph has a minimal vertex cover of size 2n + m.
"""

from mmvc.cover import mmvc_exact
from mmvc.graph import is_bipartite, max_matching_bipartite
from mmvc.reductions import (
    CnfFormula,
    decode_assignment,
    encode_assignment,
    monotone_to_mmvc,
    sat_bruteforce,
    sat_to_monotone,
)

formulas = {
    "x0 or x1": CnfFormula.from_ints(2, [[1, 2]]),
    "x0 and not x0": CnfFormula.from_ints(1, [[1], [-1]]),
    "xor": CnfFormula.from_ints(2, [[1, 2], [-1, -2]]),
}

for name, cnf in formulas.items():
    mono = cnf if cnf.is_monotone() else sat_to_monotone(cnf)[0]
    art = monotone_to_mmvc(mono)
    g = art.graph
    best = mmvc_exact(g, cap=None)
    model = sat_bruteforce(mono)
    print(f"{name}: monotone form {mono.to_ints()}")
    print(f"  graph n={g.n} m={g.m} bipartite={is_bipartite(g) is not None} "
          f"matching={len(max_matching_bipartite(g))} k={art.k}")
    print(f"  satisfiable={model is not None}  mmvc={len(best)}  (>= k: {len(best) >= art.k})")
    if model is not None:
        cover = encode_assignment(art, model)
        print(f"  model {model} -> cover of size {len(cover)} -> decoded {decode_assignment(art, best)}")
