"""Analytic spread, incidence kernels and the odd cycle condition.

Run:  python demos/spread_and_normality.py
"""

from ceilab.generators import build
from ceilab.graphs import component_profile
from ceilab.spread import analytic_spread, normality_certificate

for spec in ("cycle3", "cycle4", "path3+cycle3", "cycle3+cycle3", "complete5", "cycle5+path2"):
    g = build(spec)
    b = component_profile(g).b
    le, lc = analytic_spread(g, "edge"), analytic_spread(g, "complementary")
    cert = normality_certificate(g)
    print(f"{spec:<14} n={g.n} b={b}  l(I)={le} l(I_c)={lc}  normal={cert.normal}")
    if cert.violation:
        print(f"{'':<14} odd cycles with no edge between them: {cert.violation}")
