"""
Classical (single-agent) pebbling: r-solvability and the pebbling number pi
"""
import logging
from typing import Dict, Optional

from ..config.settings import settings
from ..graphs.configurations import enumerate_configurations
from ..graphs.graph import Configuration, Graph, validate_configuration
from ..utils.errors import BudgetExceededError

logger = logging.getLogger(__name__)


class SolvabilitySearch:
    """
    Memoized reachability search for one (graph, root) pair

    The memo is shared by every query, so a pi sweep over all
    configurations of a size reuses the work done for earlier ones.
    """

    def __init__(self, graph: Graph, root: int):
        graph.check_vertex(root)
        self.graph = graph
        self.root = root
        self._memo: Dict[Configuration, bool] = {}
        self._nbrs = tuple(tuple(sorted(graph.adjacency[u])) for u in range(graph.n))

    def solvable(self, config: Configuration) -> bool:
        cached = self._memo.get(config)
        if cached is not None:
            return cached
        if config[self.root] > 0:
            return True
        result = False
        for u, count in enumerate(config):
            if count < 2:
                continue
            for v in self._nbrs[u]:
                if v == self.root:
                    result = True
                    break
                counts = list(config)
                counts[u] -= 2
                counts[v] += 1
                if self.solvable(tuple(counts)):
                    result = True
                    break
            if result:
                break
        self._memo[config] = result
        return result

    def first_unsolvable(self, size: int) -> Optional[Configuration]:
        """An unsolvable configuration of the given size with the root empty, if any"""
        for rest in enumerate_configurations(self.graph.n - 1, size):
            config = rest[:self.root] + (0,) + rest[self.root:]
            if not self.solvable(config):
                return config
        return None


def is_r_solvable(graph: Graph, config: Configuration, root: int) -> bool:
    """
    Whether single-agent pebbling moves can put a pebble on root

    Args:
        graph: Connected graph
        config: Pebble counts per vertex
        root: Target vertex

    Returns:
        True if some move sequence reaches the root
    """
    config = validate_configuration(graph, config)
    return SolvabilitySearch(graph, root).solvable(config)


def pi_rooted(graph: Graph, root: int, limit: Optional[int] = None) -> int:
    """
    Rooted pebbling number pi(G, r)

    Solvability is monotone in pebbles, so the answer is the first size at
    which every configuration is solvable.

    Raises:
        BudgetExceededError: no such size up to the search limit
    """
    graph.require_connected()
    limit = settings.numbers.pi_search_limit if limit is None else limit
    if graph.n == 1:
        return 1
    search = SolvabilitySearch(graph, root)
    for size in range(1, limit + 1):
        witness = search.first_unsolvable(size)
        if witness is None:
            logger.info(f"pi(G, {root}) = {size}")
            return size
        logger.debug(f"size {size} unsolvable at root {root}: {witness}")
    raise BudgetExceededError(limit, f"pi(G, {root}) exceeds {limit}")


def pi(graph: Graph, limit: Optional[int] = None) -> int:
    """Pebbling number pi(G) = max over roots of pi(G, r)"""
    return max(pi_rooted(graph, r, limit) for r in graph.vertices())
