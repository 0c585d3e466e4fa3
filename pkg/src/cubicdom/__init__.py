"""Domination in cubic graphs: exact solvers, structural checks, proof machinery
and a sweep harness."""

from .graph import Graph, GraphError
from .graph6 import parse_graph6, to_graph6
from .canon import canonical_form, canonical_key
from .solvers import (DominationCertificate, SolveBudget, enumerate_min_dsets, gamma_exact,
                      i_exact, reed_bound)
from .generators import enumerate_cubic_connected, named_graph, random_cubic
from .verdict import Status, Verdict

__all__ = [
    "Graph", "GraphError", "parse_graph6", "to_graph6", "canonical_form", "canonical_key",
    "DominationCertificate", "SolveBudget", "enumerate_min_dsets", "gamma_exact", "i_exact",
    "reed_bound", "enumerate_cubic_connected", "named_graph", "random_cubic", "Status", "Verdict",
]
__version__ = "0.1.0"
