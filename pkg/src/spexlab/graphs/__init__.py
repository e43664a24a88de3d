"""Graph representation, builders, canonical forms, embedding and statistics."""

from .atlas import BUILDER_IDS, UnknownBuilderError, build_atlas
from .canon import CanonicalForm, canonical_form, canonical_graph, canonical_labeling, is_isomorphic
from .embed import contains_subgraph
from .graph import (
    MAX_ORDER,
    Graph,
    GraphError,
    bits_of,
    complement,
    disjoint_union,
    induced_subgraph,
    iter_bits,
    join,
    to_dot,
)
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .stats import (
    GraphStats,
    bipartition,
    circumference,
    component_bipartitions,
    graph_stats,
    has_cycle_at_least,
    matching_number,
)

__all__ = [
    "BUILDER_IDS",
    "CanonicalForm",
    "Graph",
    "Graph6Error",
    "GraphError",
    "GraphStats",
    "MAX_ORDER",
    "UnknownBuilderError",
    "bipartition",
    "bits_of",
    "build_atlas",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "circumference",
    "complement",
    "component_bipartitions",
    "contains_subgraph",
    "disjoint_union",
    "graph6_decode",
    "graph6_encode",
    "graph_stats",
    "has_cycle_at_least",
    "induced_subgraph",
    "is_isomorphic",
    "iter_bits",
    "join",
    "matching_number",
    "to_dot",
]
