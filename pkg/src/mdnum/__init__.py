"""Monochromatic disconnection numbers: exact computation, certified families and the floor(n/2) decision."""

from .coloring import EdgeColoring, is_md, verify_md
from .decide import DecisionReport, construct_half_coloring, decide_half
from .errors import ContractError, InvariantBreach, MDError, NotMDColoring, ParseError, ResourceError, StructureError
from .graph import Graph
from .solver import SolverConfig, md, md_exact

__all__ = [
    "ContractError", "DecisionReport", "EdgeColoring", "Graph", "InvariantBreach", "MDError",
    "NotMDColoring", "ParseError", "ResourceError", "SolverConfig", "StructureError",
    "construct_half_coloring", "decide_half", "is_md", "md", "md_exact", "verify_md",
]
