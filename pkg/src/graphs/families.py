"""
Graph family constructors
Builds every family the game is studied on, including the class G_{s,t}
"""
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .graph import Edge, Graph
from ..utils.errors import InvalidGraphError


class FamilyType(Enum):
    """Graph families understood by build_family"""
    COMPLETE = "complete"
    PATH = "path"
    PATH_POWER = "path_power"
    GRID = "grid"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    GST = "gst"
    JOIN = "join"
    DISJOINT_UNION = "disjoint_union"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class GstDescriptor:
    """
    A member ((K_1 ∪ K_t') ∨ H) of G_{s,t}

    Canonical labeling: vertex 0 is the root, vertices 1..t form T and
    vertices t+1..t+s form S = V(H). h_edges uses local S indices 0..s-1.
    """
    s: int
    t: int
    h_edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.s < 1 or self.t < 1:
            raise InvalidGraphError(f"G_(s,t) needs s >= 1 and t >= 1, got s={self.s}, t={self.t}")
        normalized = set()
        for a, b in self.h_edges:
            if not (0 <= a < self.s and 0 <= b < self.s) or a == b:
                raise InvalidGraphError(f"H edge {a}-{b} is not valid on {self.s} vertices")
            normalized.add((min(a, b), max(a, b)))
        object.__setattr__(self, "h_edges", frozenset(normalized))

    @property
    def root(self) -> int:
        return 0

    @property
    def n(self) -> int:
        return 1 + self.t + self.s

    @property
    def t_vertices(self) -> range:
        return range(1, self.t + 1)

    @property
    def s_vertices(self) -> range:
        return range(self.t + 1, self.t + self.s + 1)

    def s_vertex(self, local: int) -> int:
        return self.t + 1 + local

    def h_adjacency(self) -> Tuple[FrozenSet[int], ...]:
        """Adjacency of H on global S labels, indexed by local S position"""
        nbrs: List[set] = [set() for _ in range(self.s)]
        for a, b in self.h_edges:
            nbrs[a].add(self.s_vertex(b))
            nbrs[b].add(self.s_vertex(a))
        return tuple(frozenset(x) for x in nbrs)

    def h_graph(self) -> nx.Graph:
        """H as a networkx graph on local labels 0..s-1"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.s))
        graph.add_edges_from(self.h_edges)
        return graph

    def to_graph(self) -> Graph:
        edges: List[Edge] = [(self.s_vertex(a), self.s_vertex(b)) for a, b in self.h_edges]
        for w in [self.root, *self.t_vertices]:
            edges.extend((w, v) for v in self.s_vertices)
        return Graph.from_edges(self.n, edges, root=self.root)

    def label(self) -> str:
        edges = ",".join(f"{a}-{b}" for a, b in sorted(self.h_edges))
        return f"s={self.s},t={self.t},H=[{edges}]"

    def to_dict(self) -> Dict[str, Any]:
        return {"s": self.s, "t": self.t, "h_edges": [list(e) for e in sorted(self.h_edges)]}


@dataclass(frozen=True)
class FamilySpec:
    """A family descriptor: the family type plus its parameters"""
    kind: FamilyType
    params: Dict[str, Any] = field(default_factory=dict)

    def __hash__(self):
        return hash((self.kind, tuple(sorted((k, repr(v)) for k, v in self.params.items()))))


def all_labeled_h(s: int) -> Iterator[FrozenSet[Tuple[int, int]]]:
    """
    Every labeled graph on s vertices, as edge sets over local labels

    Yields 2^(s choose 2) edge sets in a fixed order (bitmask order over
    the pairs in lexicographic order).
    """
    pairs = list(combinations(range(s), 2))
    for mask in range(1 << len(pairs)):
        yield frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if not isinstance(value, int) or value < minimum:
        raise InvalidGraphError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return value


def complete(n: int, root: Optional[int] = None) -> Graph:
    return Graph.from_networkx(nx.complete_graph(_positive("n", n)), root=root)


def path(n: int, root: Optional[int] = None) -> Graph:
    return Graph.from_networkx(nx.path_graph(_positive("n", n)), root=root)


def path_power(n: int, k: int, root: Optional[int] = None) -> Graph:
    """P_n^k: vertices i and j adjacent when 1 <= |i - j| <= k"""
    _positive("n", n)
    _positive("k", k)
    if k >= n:
        raise InvalidGraphError(f"path power needs k < n, got k={k}, n={n}")
    return Graph.from_networkx(nx.power(nx.path_graph(n), k), root=root)


def grid(m: int, n: int, root: Optional[int] = None) -> Graph:
    """P_m □ P_n with (i, j) relabelled to i*n + j"""
    _positive("m", m)
    _positive("n", n)
    return Graph.from_networkx(
        nx.convert_node_labels_to_integers(nx.grid_2d_graph(m, n), ordering="sorted"),
        root=root
    )


def cycle(n: int, root: Optional[int] = None) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(_positive("n", n, 3)), root=root)


def star(v: int, root: Optional[int] = None) -> Graph:
    """K_{1,v} with the center at vertex 0"""
    return Graph.from_networkx(nx.star_graph(_positive("v", v)), root=root)


def complete_multipartite(part_sizes: Sequence[int], root: Optional[int] = None) -> Graph:
    """Parts occupy consecutive label ranges in the given order"""
    if len(part_sizes) < 2:
        raise InvalidGraphError("complete multipartite graphs need at least 2 parts")
    for size in part_sizes:
        _positive("part size", size)
    return Graph.from_networkx(nx.complete_multipartite_graph(*part_sizes), root=root)


def gst(descriptor: GstDescriptor) -> Graph:
    return descriptor.to_graph()


def join(g: Graph, h: Graph, root: Optional[int] = None) -> Graph:
    """G ∨ H: H is relabelled after G and every G vertex meets every H vertex"""
    offset = g.n
    edges: List[Edge] = list(g.edges())
    edges.extend((u + offset, v + offset) for u, v in h.edges())
    edges.extend((u, v + offset) for u, v in product(range(g.n), range(h.n)))
    return Graph.from_edges(g.n + h.n, edges, root=root)


def disjoint_union(g: Graph, h: Graph, root: Optional[int] = None) -> Graph:
    """G ∪ H with H relabelled after G; usually disconnected"""
    offset = g.n
    edges = list(g.edges()) + [(u + offset, v + offset) for u, v in h.edges()]
    return Graph.from_edges(g.n + h.n, edges, root=root)


def empty(n: int) -> Graph:
    """Edgeless graph, a building block for joins (K_t')"""
    return Graph.from_edges(_positive("n", n), [])


def explicit(n: int, edges: Iterable[Edge], root: Optional[int] = None) -> Graph:
    return Graph.from_edges(_positive("n", n), edges, root=root)


_CONNECTED_FAMILIES = {
    FamilyType.COMPLETE, FamilyType.PATH, FamilyType.PATH_POWER, FamilyType.GRID,
    FamilyType.CYCLE, FamilyType.STAR, FamilyType.COMPLETE_MULTIPARTITE, FamilyType.GST,
}


def build_family(spec: FamilySpec, require_connected: bool = True) -> Graph:
    """
    Build a graph from a family descriptor

    Args:
        spec: Family type plus parameters (n, m, k, parts, descriptor, g, h, edges, root)
        require_connected: Reject disconnected results of explicit/join/union specs

    Returns:
        Labeled graph
    """
    p = spec.params
    root = p.get("root")
    kind = spec.kind
    try:
        if kind == FamilyType.COMPLETE:
            graph = complete(p["n"], root)
        elif kind == FamilyType.PATH:
            graph = path(p["n"], root)
        elif kind == FamilyType.PATH_POWER:
            graph = path_power(p["n"], p["k"], root)
        elif kind == FamilyType.GRID:
            graph = grid(p["m"], p["n"], root)
        elif kind == FamilyType.CYCLE:
            graph = cycle(p["n"], root)
        elif kind == FamilyType.STAR:
            graph = star(p["v"], root)
        elif kind == FamilyType.COMPLETE_MULTIPARTITE:
            graph = complete_multipartite(p["parts"], root)
        elif kind == FamilyType.GST:
            graph = gst(p["descriptor"])
        elif kind == FamilyType.JOIN:
            graph = join(p["g"], p["h"], root)
        elif kind == FamilyType.DISJOINT_UNION:
            graph = disjoint_union(p["g"], p["h"], root)
        else:
            graph = explicit(p["n"], p["edges"], root)
    except KeyError as missing:
        raise InvalidGraphError(f"{kind.value} family is missing parameter {missing}") from None

    if require_connected and kind not in _CONNECTED_FAMILIES:
        graph.require_connected()
    return graph
