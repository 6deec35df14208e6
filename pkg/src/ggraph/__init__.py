"""Power, intersection power, enhanced power and difference graphs of finite groups."""
from .analysis import analyze, clique_number, is_cograph, is_perfect, max_clique, twin_reduce
from .divisors import embed_in_cyclic, omega_via_divisors
from .graphs import Graph, build_graph, difference_graph, difference_graph_undeleted, export
from .groups import FiniteGroup
from .lattice import CyclicLattice
from .specs import build_group, parse_group_spec
from .verify import VerificationReport, verify

__version__ = "0.1.0"

__all__ = [
    "CyclicLattice", "FiniteGroup", "Graph", "VerificationReport", "analyze", "build_graph", "build_group",
    "clique_number", "difference_graph", "difference_graph_undeleted", "embed_in_cyclic", "export",
    "is_cograph", "is_perfect", "max_clique", "omega_via_divisors", "parse_group_spec", "twin_reduce", "verify",
]
