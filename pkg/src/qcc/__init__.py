"""Exact computation of Q(n, c), the least clique number of an n-vertex graph
with chromatic number c, together with inverse Ramsey numbers, the explicit
constructions behind the known bounds, and a brute-force verification harness.
"""

__version__ = "0.1.0"

from .graph import Graph, CapacityError, decode_graph6, encode_graph6
from .interval import ValueInterval
from .solvers import chromatic_number, clique_number, independence_number, invariants

__all__ = [
    "Graph",
    "CapacityError",
    "ValueInterval",
    "chromatic_number",
    "clique_number",
    "decode_graph6",
    "encode_graph6",
    "independence_number",
    "invariants",
]
