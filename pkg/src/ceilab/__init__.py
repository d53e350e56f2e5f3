"""Exact computations with complementary edge ideals of graphs.

I_c(G) is generated by the products x_1...x_n / (x_i x_j) over the edges
{i, j} of a graph G on [n].  The package builds these ideals and their
powers, computes depth and regularity exactly, finds reduced Groebner bases
of the Rees-algebra ideal, computes analytic spreads, and runs verification
suites over families of graphs.
"""

from .errors import (
    CeilabError,
    GraphError,
    HypothesisViolation,
    IdealError,
    InconsistencyError,
    ResourceError,
)
from .graphs import Graph, component_profile, parse_graph, format_graph
from .monomials import MonomialIdeal, complementary_edge_ideal, edge_ideal, ideal_power
from .depth import DepthEvaluator, depth_table, dstab
from .rees import reduced_gb_lex
from .spread import analytic_spread

__version__ = "0.1.0"

__all__ = [
    "CeilabError",
    "GraphError",
    "HypothesisViolation",
    "IdealError",
    "InconsistencyError",
    "ResourceError",
    "Graph",
    "component_profile",
    "parse_graph",
    "format_graph",
    "MonomialIdeal",
    "complementary_edge_ideal",
    "edge_ideal",
    "ideal_power",
    "DepthEvaluator",
    "depth_table",
    "dstab",
    "reduced_gb_lex",
    "analytic_spread",
]
