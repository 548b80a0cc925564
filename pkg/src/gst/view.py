"""
Derived quantities of a configuration on a member of G_{s,t}
"""
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, FrozenSet, Iterator, Optional, Tuple

from ..graphs.configurations import enumerate_configurations
from ..graphs.families import GstDescriptor
from ..graphs.graph import Configuration
from ..utils.errors import InvalidGraphError


@dataclass(frozen=True)
class GstConfigView:
    """
    k, C_T and the parity structure of T for one configuration

    Attributes:
        trivial: root pebbled or some S vertex holds two or more pebbles
        k: number of pebble-free S vertices
        c_t: sum over T of floor(C(v) / 2)
        s0: pebble-free S vertices (global labels)
        s1: pebbled S vertices (global labels)
        t_evens: T vertices with an even count, zero included
        x: the only even T vertex, when there is exactly one and C(x) >= 2
    """
    descriptor: GstDescriptor
    config: Configuration
    trivial: bool
    k: int
    c_t: int
    s0: FrozenSet[int]
    s1: FrozenSet[int]
    t_evens: Tuple[int, ...]
    x: Optional[int]

    @property
    def c_x(self) -> int:
        return self.config[self.x] if self.x is not None else 0

    @property
    def t_parities(self) -> Tuple[int, ...]:
        return tuple(self.config[v] % 2 for v in self.descriptor.t_vertices)

    @property
    def all_t_odd(self) -> bool:
        return not self.t_evens

    @property
    def is_boundary(self) -> bool:
        """k even, C_T = k + 2 and exactly one even T vertex, holding at least two pebbles"""
        return (
            not self.trivial
            and self.k % 2 == 0
            and self.c_t == self.k + 2
            and self.x is not None
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "C_T": self.c_t,
            "T_parities": list(self.t_parities),
            "trivial": self.trivial,
            "x": self.x,
        }


def view(descriptor: GstDescriptor, config: Configuration) -> GstConfigView:
    """
    Compute the view of config on the graph of descriptor

    Args:
        descriptor: Member of G_{s,t}
        config: Counts in the canonical labeling (root, T, S)

    Returns:
        GstConfigView
    """
    config = tuple(config)
    if len(config) != descriptor.n:
        raise InvalidGraphError(f"configuration has {len(config)} entries, G_(s,t) has {descriptor.n} vertices")
    if any(c < 0 for c in config):
        raise InvalidGraphError("configuration counts must be non-negative")

    s_vertices = descriptor.s_vertices
    trivial = config[descriptor.root] > 0 or any(config[v] >= 2 for v in s_vertices)
    s0 = frozenset(v for v in s_vertices if config[v] == 0)
    s1 = frozenset(v for v in s_vertices if config[v] > 0)
    t_evens = tuple(v for v in descriptor.t_vertices if config[v] % 2 == 0)
    x = t_evens[0] if len(t_evens) == 1 and config[t_evens[0]] >= 2 else None
    return GstConfigView(
        descriptor=descriptor,
        config=config,
        trivial=trivial,
        k=len(s0),
        c_t=sum(config[v] // 2 for v in descriptor.t_vertices),
        s0=s0,
        s1=s1,
        t_evens=t_evens,
        x=x
    )


def nontrivial_configurations(descriptor: GstDescriptor, max_pebbles: int) -> Iterator[Configuration]:
    """
    Every non-trivial configuration of total size <= max_pebbles

    Root empty, each S vertex 0 or 1 pebble, T counts free. Ordered by the
    S pattern, then by T total, then lexicographically descending on T.
    """
    s, t = descriptor.s, descriptor.t
    for s_counts in product((0, 1), repeat=s):
        used = sum(s_counts)
        for t_total in range(max_pebbles - used + 1):
            for t_counts in enumerate_configurations(t, t_total):
                yield (0,) + t_counts + s_counts
