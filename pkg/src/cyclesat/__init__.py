"""Executable toolkit for saturation numbers of cycle families."""

__version__ = "0.1.0"

from .families import CycleFamily, parse_family
from .graph import Graph, build_graph, decode_graph6, encode_graph6
from .saturation import check_saturated
from .search import Budget, compute_sat

__all__ = [
    "Budget",
    "CycleFamily",
    "Graph",
    "build_graph",
    "check_saturated",
    "compute_sat",
    "decode_graph6",
    "encode_graph6",
    "parse_family",
]
