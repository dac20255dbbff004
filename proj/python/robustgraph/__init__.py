"""Robust triangle and girth algorithms for unit disk and transmission graphs.

Solvers return dicts with an ``outcome`` key (``Triangle``, ``TriangleFree``,
``Girth``, ``NoCycle`` or ``NotInDomain``) plus ``witness``, ``reason``,
``girth`` and ``counters`` where they apply.
"""

from ._core import (
    DirectedGraph,
    GraphError,
    NonUnitRadiusError,
    UndirectedGraph,
    bidirected_star,
    brute_directed_triangle,
    brute_girth,
    brute_triangle,
    directed_cycle,
    find_directed_triangle,
    find_triangle_udg,
    girth_udg,
    is_planar,
    petersen_graph,
    random_sites,
    star_graph,
    transmission_graph,
    unit_disk_graph,
)

__all__ = [
    "DirectedGraph",
    "GraphError",
    "NonUnitRadiusError",
    "UndirectedGraph",
    "bidirected_star",
    "brute_directed_triangle",
    "brute_girth",
    "brute_triangle",
    "directed_cycle",
    "find_directed_triangle",
    "find_triangle_udg",
    "girth_udg",
    "is_planar",
    "petersen_graph",
    "random_sites",
    "star_graph",
    "transmission_graph",
    "unit_disk_graph",
]
