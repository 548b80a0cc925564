"""
Text formats for graphs and configurations

Graph: first line "n root" (root = -1 when unset), then one "u v" edge per
line, 0-indexed. Configuration: n space-separated integers.
"""
from pathlib import Path
from typing import List, Optional, Tuple, Union

from .graph import Configuration, Edge, Graph
from ..utils.errors import InvalidGraphError, MalformedInputError


def _ints(line: str, lineno: int) -> List[int]:
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise MalformedInputError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_graph_text(text: str) -> Graph:
    """Parse the graph text format"""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise MalformedInputError("graph file is empty")
    header = _ints(lines[0], 1)
    if len(header) != 2:
        raise MalformedInputError("graph header must be 'n root'")
    n, root = header
    edges: List[Edge] = []
    for lineno, line in enumerate(lines[1:], start=2):
        pair = _ints(line, lineno)
        if len(pair) != 2:
            raise MalformedInputError(f"line {lineno}: an edge needs exactly two vertices")
        edges.append((pair[0], pair[1]))
    try:
        return Graph.from_edges(n, edges, root=None if root == -1 else root)
    except InvalidGraphError as exc:
        raise MalformedInputError(str(exc)) from None


def format_graph_text(graph: Graph) -> str:
    root = -1 if graph.root is None else graph.root
    lines = [f"{graph.n} {root}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def parse_configuration_text(text: str, n: Optional[int] = None) -> Configuration:
    """Parse a configuration; n, when given, is the expected length"""
    counts = tuple(_ints(" ".join(text.split()), 1))
    if not counts:
        raise MalformedInputError("configuration is empty")
    if any(c < 0 for c in counts):
        raise MalformedInputError("configuration counts must be non-negative")
    if n is not None and len(counts) != n:
        raise MalformedInputError(f"configuration has {len(counts)} entries, expected {n}")
    return counts


def format_configuration_text(config: Configuration) -> str:
    return " ".join(str(c) for c in config) + "\n"


def read_graph(path: Union[str, Path]) -> Graph:
    return parse_graph_text(Path(path).read_text())


def read_configuration(path: Union[str, Path], n: Optional[int] = None) -> Configuration:
    return parse_configuration_text(Path(path).read_text(), n)


def parse_edge_list(text: str) -> Tuple[Tuple[int, int], ...]:
    """Parse a compact edge list such as '0-1,1-2' (used for H on the command line)"""
    edges = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        try:
            a, b = (int(x) for x in token.split("-"))
        except ValueError:
            raise MalformedInputError(f"bad edge {token!r}, expected 'a-b'") from None
        edges.append((a, b))
    return tuple(edges)
