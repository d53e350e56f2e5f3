"""Reduced Groebner bases of the Rees ideal for trees and unicyclic graphs.

Trees and graphs whose only cycle has length 3 or 4 give quadratic bases;
a 5-cycle forces a cubic element.  Each basis element is matched with a
primitive even closed walk of the cone over G.

Run:  python demos/rees_bases.py
"""

from ceilab.generators import build
from ceilab.graphs import unicyclic_labeling, unicyclic_profile
from ceilab.rees import (
    enumerate_primitive_even_walks,
    format_binomial,
    initial_ideal_regularity,
    is_quadratic,
    max_x_degree,
    reduced_gb_lex,
    walk_binomial_crosscheck,
)

for spec in ("path5", "star5", "cycle4", "cycle5", "path3+path3"):
    g = build(spec)
    if unicyclic_profile(g)[0]:
        order, kind = unicyclic_labeling(g), "unicyclic"
    else:
        order, kind = None, "elimination"
    gb = reduced_gb_lex(g, labeling=order, kind=kind)
    print(f"{spec}: {len(gb)} elements, quadratic={is_quadratic(gb)}, max x-degree {max_x_degree(gb)}")
    for f in gb:
        print("   ", format_binomial(gb, f))
    walks = enumerate_primitive_even_walks(g.relabel(gb.relabel))
    rep = walk_binomial_crosscheck(gb, walks)
    print(f"    walks: {rep.matched}/{rep.total} elements matched ({len(walks)} primitive walks)")
    if is_quadratic(gb):
        ir = initial_ideal_regularity(gb)
        print(f"    reg T/in(J) = {ir.regularity} <= n = {g.n}")
