"""Canonical forms, recognition and isomorphism for interval graphs."""
from .canonizer import CanonicalForm, NotInterval, canonical_form, isomorphic
from .graph_core import Graph, parse_edge_list, parse_graph6, write_edge_list, write_graph6

__all__ = [
    "CanonicalForm",
    "Graph",
    "NotInterval",
    "canonical_form",
    "isomorphic",
    "parse_edge_list",
    "parse_graph6",
    "write_edge_list",
    "write_graph6",
]
