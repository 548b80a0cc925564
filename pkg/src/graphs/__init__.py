"""
Graph core package
"""
from .graph import Configuration, Graph, configuration_size, diameter, restricted_neighborhood, validate_configuration
from .families import (
    FamilySpec,
    FamilyType,
    GstDescriptor,
    all_labeled_h,
    build_family,
    complete,
    complete_multipartite,
    cycle,
    disjoint_union,
    empty,
    explicit,
    grid,
    gst,
    join,
    path,
    path_power,
    star
)
from .configurations import count_configurations, enumerate_configurations
from .corpus import CorpusEntry, certificate_tree, diameter_two_certificate_graph, dominating_root_corpus, non_monotone_triple, sandwich_corpus

__all__ = [
    "Configuration",
    "Graph",
    "configuration_size",
    "diameter",
    "restricted_neighborhood",
    "validate_configuration",
    "FamilySpec",
    "FamilyType",
    "GstDescriptor",
    "all_labeled_h",
    "build_family",
    "complete",
    "complete_multipartite",
    "cycle",
    "disjoint_union",
    "empty",
    "explicit",
    "grid",
    "gst",
    "join",
    "path",
    "path_power",
    "star",
    "count_configurations",
    "enumerate_configurations",
    "CorpusEntry",
    "certificate_tree",
    "diameter_two_certificate_graph",
    "dominating_root_corpus",
    "non_monotone_triple",
    "sandwich_corpus"
]
