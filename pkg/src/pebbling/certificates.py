"""
Cut-set certificates for an infinite two-player pebbling number

A certificate is a cut set S (root not in S) with root component G_0 of
G - S such that

    every v in S has at least two neighbors outside G_0 ∪ S, and
    every x in N(S) - (G_0 ∪ S) has at least two neighbors outside S.

Defender then never lets a pebble cross from S into G_0, so no finite
number of pebbles forces a Mover win. The condition is sufficient, not
necessary: a missing certificate proves nothing.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, FrozenSet, Iterable, Optional

import networkx as nx

from ..agents.cutset_defender import CutSetDefender
from ..config.settings import settings
from ..graphs.graph import Configuration, Graph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InfinityCertificate:
    """Cut set S and the root's component G_0 of G - S"""
    root: int
    cut_set: FrozenSet[int]
    root_component: FrozenSet[int]

    @property
    def blocked(self) -> FrozenSet[int]:
        return self.cut_set | self.root_component

    def frontier(self, graph: Graph) -> FrozenSet[int]:
        """N(S) - (G_0 ∪ S)"""
        reach = frozenset().union(*(graph.adjacency[v] for v in self.cut_set))
        return reach - self.blocked

    def validate(self, graph: Graph) -> bool:
        """Re-check both neighborhood conditions and the cut against graph"""
        rebuilt = check_cut_set(graph, self.root, self.cut_set)
        return rebuilt is not None and rebuilt.root_component == self.root_component

    def in_supported_family(self, config: Configuration) -> bool:
        """No pebbles on G_0 ∪ S"""
        return all(config[v] == 0 for v in self.blocked)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "root": self.root,
            "cut_set": sorted(self.cut_set),
            "root_component": sorted(self.root_component)
        }


def check_cut_set(graph: Graph, root: int, cut_set: Iterable[int]) -> Optional[InfinityCertificate]:
    """
    Test one candidate cut set

    Returns:
        The certificate when S separates the graph and both conditions hold
    """
    s = frozenset(cut_set)
    if not s or root in s:
        return None
    rest = graph.to_networkx()
    rest.remove_nodes_from(s)
    components = list(nx.connected_components(rest))
    if len(components) < 2:
        return None
    g0 = frozenset(next(c for c in components if root in c))
    blocked = g0 | s

    for v in s:
        if len(graph.adjacency[v] - blocked) < 2:
            return None
    frontier = frozenset().union(*(graph.adjacency[v] for v in s)) - blocked
    for x in frontier:
        if len(graph.adjacency[x] - s) < 2:
            return None
    return InfinityCertificate(root=root, cut_set=s, root_component=g0)


def infinity_certificate(graph: Graph, root: int, max_cut: Optional[int] = None) -> Optional[InfinityCertificate]:
    """
    Search every cut set of size <= max_cut for a certificate

    Candidates are tried by increasing size, then in ascending vertex order.
    Vertices with fewer than two neighbors can never satisfy the first
    condition and are pruned.

    Args:
        graph: Connected graph
        root: Root vertex
        max_cut: Largest cut size to try

    Returns:
        The first certificate found, or None
    """
    graph.check_vertex(root)
    max_cut = settings.numbers.default_max_cut if max_cut is None else max_cut
    candidates = [v for v in graph.vertices() if v != root and graph.degree(v) >= 2]
    for size in range(1, min(max_cut, len(candidates)) + 1):
        for subset in combinations(candidates, size):
            cert = check_cut_set(graph, root, subset)
            if cert is not None:
                logger.info(f"certificate at root {root}: S={sorted(cert.cut_set)}")
                return cert
    logger.debug(f"no certificate at root {root} with |S| <= {max_cut}")
    return None


def defender_cutset_strategy(certificate: InfinityCertificate) -> CutSetDefender:
    """The Defender strategy that keeps pebbles off the certificate's root component"""
    return CutSetDefender.from_certificate(certificate)
