"""
Rooted simple graphs and pebble configurations
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from ..utils.errors import InvalidGraphError

Configuration = Tuple[int, ...]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on vertices 0..n-1 with an optional root

    Adjacency is stored as one frozenset of neighbors per vertex, so a Graph
    is immutable and hashable and can be shared freely between workers.
    """
    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    root: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise InvalidGraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidGraphError("adjacency length does not match vertex count")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise InvalidGraphError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise InvalidGraphError(f"edge {v}-{u} leaves the vertex range")
                if v not in self.adjacency[u]:
                    raise InvalidGraphError(f"adjacency is not symmetric on {v}-{u}")
        if self.root is not None and not 0 <= self.root < self.n:
            raise InvalidGraphError(f"root {self.root} is not a vertex")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], root: Optional[int] = None) -> "Graph":
        """
        Build a graph from an edge list

        Args:
            n: Vertex count
            edges: Pairs (u, v); duplicates are merged
            root: Optional root vertex

        Returns:
            Graph instance
        """
        nbrs: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidGraphError(f"edge {u}-{v} leaves the vertex range 0..{n - 1}")
            if u == v:
                raise InvalidGraphError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n=n, adjacency=tuple(frozenset(s) for s in nbrs), root=root)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, root: Optional[int] = None) -> "Graph":
        """Convert a networkx graph, relabelling nodes 0..n-1 in sorted order"""
        nodes = sorted(graph.nodes())
        index: Dict[object, int] = {node: i for i, node in enumerate(nodes)}
        edges = [(index[u], index[v]) for u, v in graph.edges()]
        return cls.from_edges(len(nodes), edges, root=root)

    def to_networkx(self) -> nx.Graph:
        """Convert to a networkx graph with the same vertex labels"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> FrozenSet[int]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edges(self) -> Iterator[Edge]:
        """Yield each edge once as (u, v) with u < v, in ascending order"""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u < v:
                    yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise InvalidGraphError(f"{v!r} is not a vertex of a {self.n}-vertex graph")

    def with_root(self, root: Optional[int]) -> "Graph":
        return Graph(n=self.n, adjacency=self.adjacency, root=root)

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise InvalidGraphError(f"{u}-{v} is not an edge")
        return Graph.from_edges(
            self.n, [e for e in self.edges() if e not in ((u, v), (v, u))], root=self.root
        )

    def is_connected(self) -> bool:
        return nx.is_connected(self.to_networkx())

    def require_connected(self) -> "Graph":
        if not self.is_connected():
            raise InvalidGraphError("graph is not connected")
        return self

    def distances_to(self, target: int) -> Tuple[int, ...]:
        """BFS distance of every vertex to target; unreachable vertices get n"""
        self.check_vertex(target)
        lengths = nx.single_source_shortest_path_length(self.to_networkx(), target)
        return tuple(lengths.get(v, self.n) for v in range(self.n))


def restricted_neighborhood(graph: Graph, v: int, subset: Iterable[int]) -> FrozenSet[int]:
    """
    The S-restricted neighborhood N_S(v) = N(v) ∩ S

    Args:
        graph: Ambient graph
        v: Vertex whose neighborhood is restricted
        subset: The restricting vertex set S

    Returns:
        Neighbors of v inside S; v itself is never included
    """
    members = frozenset(subset)
    for u in members:
        graph.check_vertex(u)
    return graph.neighbors(v) & members


def diameter(graph: Graph) -> int:
    """Longest shortest path; raises InvalidGraphError on a disconnected graph"""
    nx_graph = graph.to_networkx()
    if not nx.is_connected(nx_graph):
        raise InvalidGraphError("diameter is undefined on a disconnected graph")
    if graph.n == 1:
        return 0
    return nx.diameter(nx_graph)


def validate_configuration(graph: Graph, counts: Sequence[int]) -> Configuration:
    """Check a count vector against a graph and return it as a tuple"""
    config = tuple(int(c) for c in counts)
    if len(config) != graph.n:
        raise InvalidGraphError(
            f"configuration has {len(config)} entries for a {graph.n}-vertex graph"
        )
    if any(c < 0 for c in config):
        raise InvalidGraphError("configuration counts must be non-negative")
    return config


def configuration_size(config: Configuration) -> int:
    """size(C): the total number of pebbles"""
    return sum(config)
