"""Depth of I_c(G1 + G2)^k from the depth tables of the two factors.

The union's depth is assembled from the factors' depths and compared with
a direct computation of the Betti numbers of the union.

Run:  python demos/disjoint_union_depth.py
"""

from ceilab.depth import depth_disjoint_union
from ceilab.generators import build, disjoint
from ceilab.monomials import complementary_edge_ideal, ideal_power
from ceilab.resolution import depth_oracle


def table(g, kmax):
    if g.n == 2:
        return None  # I_c of a single edge is the unit ideal
    base = complementary_edge_ideal(g)
    return {k: depth_oracle(ideal_power(base, k)) for k in range(1, kmax + 1)}


for a, b in [("path3", "path3"), ("path4", "path3"), ("cycle3", "path3"), ("path2", "cycle4")]:
    g1, g2 = build(a), build(b)
    g = disjoint(g1, g2)
    t1, t2, direct = table(g1, 3), table(g2, 3), table(g, 3)
    for k in (1, 2, 3):
        pred = depth_disjoint_union(t1, t2, g1.n, g2.n, k)
        mark = "ok" if pred == direct[k] else "MISMATCH"
        print(f"{a}+{b}  k={k}: from factors {pred}, direct {direct[k]}  {mark}")
