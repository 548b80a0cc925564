"""
ESG instances from boundary configurations on G_{s,t}

U is the set S_0 of pebble-free S vertices and every S vertex v_i
contributes the set N[v_i] ∩ U. A pebbled v_i therefore contributes its
pebble-free S-neighbors and an unpebbled one contributes itself as well.
"""
from enum import Enum
from typing import Optional

from .game import ESGInstance
from ..config.settings import settings
from ..graphs.families import GstDescriptor
from ..graphs.graph import Configuration
from ..gst.view import GstConfigView, view
from ..utils.errors import UnsupportedConfigurationError


class JRule(Enum):
    """How many rounds the ESG of a boundary configuration gets"""
    PAPER_K = "paper_k"  # j = k/2
    CAPPED_BY_X = "capped_by_x"  # j = min(k/2, (C(x) - 2)/2)

    def rounds(self, k: int, c_x: int) -> int:
        if self is JRule.PAPER_K:
            return k // 2
        return max(0, min(k // 2, (c_x - 2) // 2))

    @classmethod
    def default(cls) -> "JRule":
        return cls(settings.esg.default_j_rule)


def build_from_view(config_view: GstConfigView, j_rule: Optional[JRule] = None) -> ESGInstance:
    """Build the ESG of a boundary configuration from its precomputed view"""
    if not config_view.is_boundary:
        raise UnsupportedConfigurationError(
            f"{config_view.config} is not a boundary configuration on {config_view.descriptor.label()}"
        )
    j_rule = j_rule or JRule.default()
    descriptor = config_view.descriptor
    graph_nbrs = descriptor.h_adjacency()
    universe = tuple(sorted(config_view.s0))
    u_set = frozenset(universe)

    sets = []
    for local, v in enumerate(descriptor.s_vertices):
        closed = graph_nbrs[local] | {v}
        sets.append(closed & u_set)
    return ESGInstance(
        universe=universe,
        sets=tuple(sets),
        rounds=j_rule.rounds(config_view.k, config_view.c_x)
    )


def build_esg(descriptor: GstDescriptor, config: Configuration, j_rule: Optional[JRule] = None) -> ESGInstance:
    """
    Build the ESG of a boundary configuration

    Args:
        descriptor: Member of G_{s,t}
        config: Boundary configuration in canonical labeling
        j_rule: Round rule, settings.esg.default_j_rule when omitted

    Raises:
        UnsupportedConfigurationError: config is not a boundary configuration
    """
    return build_from_view(view(descriptor, config), j_rule)
