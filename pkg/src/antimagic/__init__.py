"""Constructive antimagic labellings for graphs with a dominating clique."""

from .cliques import (
    DominatingClique,
    PreconditionReport,
    check_preconditions,
    find_dominating_cliques,
    verify_dominating_clique,
)
from .graph import Graph, format_graph, parse_graph
from .labelling import (
    EdgeLabelling,
    conflicts,
    is_antimagic_labelling,
    is_c_antimagic_labelling,
    vertex_sums,
)
from .oracle import brute_force_antimagic, min_c
from .theorem4 import label_theorem4
from .theorem5 import label_theorem5

__all__ = [
    "DominatingClique",
    "EdgeLabelling",
    "Graph",
    "PreconditionReport",
    "brute_force_antimagic",
    "check_preconditions",
    "conflicts",
    "find_dominating_cliques",
    "format_graph",
    "is_antimagic_labelling",
    "is_c_antimagic_labelling",
    "label_theorem4",
    "label_theorem5",
    "min_c",
    "parse_graph",
    "verify_dominating_clique",
    "vertex_sums",
]
