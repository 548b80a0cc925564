"""
Named exemplar graphs used by the verification suites and tests
"""
from dataclasses import dataclass
from typing import List

from .families import complete, complete_multipartite, cycle, disjoint_union, empty, explicit, join, path, path_power, star
from .graph import Graph


@dataclass(frozen=True)
class CorpusEntry:
    """A graph with a display name"""
    name: str
    graph: Graph


def certificate_tree() -> Graph:
    """
    8-vertex tree with a cut-set certificate at S = {c}

    r(0) - c(1); c - x1(2), x2(3); x1 - y1(4), y1'(5); x2 - y2(6), y2'(7)
    """
    return explicit(8, [(0, 1), (1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7)], root=0)


def diameter_two_certificate_graph() -> Graph:
    """
    6-vertex diameter-2 graph with infinite eta at root 0

    Root 0 hangs off hub 1, and the hub is joined to the 4-cycle 2-3-4-5.
    Its edge set contains P_6 (0-1-2-3-4-5) and is contained in K_6.
    """
    edges = [(0, 1), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5), (5, 2)]
    return explicit(6, edges, root=0)


def _apex(h: Graph) -> Graph:
    """K_1 ∨ H with the apex as root 0"""
    return join(complete(1), h, root=0)


def dominating_root_corpus() -> List[CorpusEntry]:
    """Ten graphs whose root is adjacent to every other vertex"""
    return [
        CorpusEntry("K_1,3", star(3, root=0)),
        CorpusEntry("K_1,4", star(4, root=0)),
        CorpusEntry("K_5", complete(5, root=0)),
        CorpusEntry("fan K_1+P_3", _apex(path(3))),
        CorpusEntry("fan K_1+P_4", _apex(path(4))),
        CorpusEntry("wheel K_1+C_4", _apex(cycle(4))),
        CorpusEntry("wheel K_1+C_5", _apex(cycle(5))),
        CorpusEntry("bowtie K_1+(K_2 u K_2)", _apex(disjoint_union(complete(2), complete(2)))),
        CorpusEntry("K_1+(K_3 u K_1)", _apex(disjoint_union(complete(3), complete(1)))),
        CorpusEntry("K_1+(P_2 u P_2 u K_1)", _apex(disjoint_union(disjoint_union(path(2), path(2)), empty(1)))),
    ]


def sandwich_corpus() -> List[CorpusEntry]:
    """Small graphs with finite eta for the |V| <= pi <= eta check"""
    return [
        CorpusEntry("K_2", complete(2)),
        CorpusEntry("K_3", complete(3)),
        CorpusEntry("K_4", complete(4)),
        CorpusEntry("K_5", complete(5)),
        CorpusEntry("P_3", path(3)),
        CorpusEntry("P_4", path(4)),
        CorpusEntry("K_1,3", star(3)),
        CorpusEntry("K_4-e", path_power(4, 2)),
        CorpusEntry("K_3,3", complete_multipartite([3, 3])),
    ]


def non_monotone_triple() -> List[CorpusEntry]:
    """K_6 ⊃ diameter-2 certificate graph ⊃ P_6, all on the same labels"""
    return [
        CorpusEntry("K_6", complete(6)),
        CorpusEntry("hub+C_4 with pendant root", diameter_two_certificate_graph()),
        CorpusEntry("P_6", path(6)),
    ]
