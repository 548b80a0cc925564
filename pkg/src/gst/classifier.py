"""
Closed-form winner classification on G_{s,t}, t >= 2

classify walks a fixed list of rules and reports which one decided the
configuration, so a disagreement with brute force points at one rule.
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Any, Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from .formulas import multipartite_boundary_winner
from .view import GstConfigView, view
from ..game.models import Player
from ..game.solver import GameSolver
from ..graphs.families import GstDescriptor
from ..graphs.graph import Configuration
from ..utils.errors import OutOfScopeError

if TYPE_CHECKING:
    from ..esg.builder import JRule

logger = logging.getLogger(__name__)


class Rule(Enum):
    """Every rule classify can report"""
    TRIVIAL = "trivial-config"
    K_ODD_TABLE = "k-odd-table"
    K_EVEN_TABLE = "k-even-table"
    ALL_ODD_T = "all-odd-T"
    MULTI_EVEN_T = "multi-even-T"
    CX_AT_LEAST_K_PLUS_2 = "C(x)>=k+2"
    CLOSED_NEIGHBORHOOD_PEBBLED = "closed-neighborhood-pebbled"
    CX_TWO_DEFENDER = "C(x)=2-defender"
    CX_FOUR_COROLLARY = "C(x)=4-corollary"
    MULTIPARTITE_S = "multipartite-S"
    ESG_FALLBACK = "esg-fallback"
    BRUTE_FORCE_FALLBACK = "brute-force-fallback"


class Fallback(Enum):
    """What decides boundary configurations no closed rule covers"""
    ESG = "esg"
    BRUTE_FORCE = "brute-force"


@dataclass(frozen=True)
class ClassificationOutcome:
    """Winner plus the rule that decided it"""
    winner: Player
    rule: Rule
    view: GstConfigView

    def to_dict(self) -> Dict[str, Any]:
        data = self.view.to_dict()
        data.update({"rule": self.rule.value, "winner": self.winner.value})
        return data


def _s0_neighborhood(cv: GstConfigView, adjacency: Tuple[FrozenSet[int], ...], v: int) -> FrozenSet[int]:
    return adjacency[v - cv.descriptor.t - 1] & cv.s0


def esg_sets(cv: GstConfigView) -> List[FrozenSet[int]]:
    """N[v] ∩ S_0 for every S vertex v"""
    adjacency = cv.descriptor.h_adjacency()
    sets = []
    for v in cv.descriptor.s_vertices:
        closed = _s0_neighborhood(cv, adjacency, v)
        if v in cv.s0:
            closed = closed | {v}
        sets.append(closed)
    return sets


def closed_neighborhood_pebbled(cv: GstConfigView) -> bool:
    """Some pebbled S vertex has every S-neighbor pebbled (vacuous when it has none)"""
    adjacency = cv.descriptor.h_adjacency()
    return any(not _s0_neighborhood(cv, adjacency, v) for v in cv.s1)


def four_pebble_mover_condition(cv: GstConfigView) -> bool:
    """
    Mover side of the four-pebble corollary

    Some v in S_0 such that for every other u in S_0 either a pebbled w has
    N_{S_0}(w) equal to {v} or {u, v}, or N_{S_0}(u) = {v}.
    """
    adjacency = cv.descriptor.h_adjacency()
    pebbled_sets = {_s0_neighborhood(cv, adjacency, w) for w in cv.s1}
    for v in sorted(cv.s0):
        if all(
            frozenset({v}) in pebbled_sets
            or frozenset({u, v}) in pebbled_sets
            or _s0_neighborhood(cv, adjacency, u) == frozenset({v})
            for u in cv.s0 if u != v
        ):
            return True
    return False


def four_pebble_defender_literal(cv: GstConfigView) -> bool:
    """
    Defender side of the four-pebble corollary, read word for word

    For every v in S_0 some u in S_0, u != v, has no pebbled w with
    N_{S_0}(w) in {{v}, {u, v}}, and N_{S_0}(u) != {v}. This reading ignores
    the closed neighborhoods of unpebbled vertices and can call a Mover win
    for Defender.
    """
    adjacency = cv.descriptor.h_adjacency()
    pebbled_sets = {_s0_neighborhood(cv, adjacency, w) for w in cv.s1}
    for v in cv.s0:
        if not any(
            frozenset({v}) not in pebbled_sets
            and frozenset({u, v}) not in pebbled_sets
            and _s0_neighborhood(cv, adjacency, u) != frozenset({v})
            for u in cv.s0 if u != v
        ):
            return False
    return True


def four_pebble_defender_working(cv: GstConfigView) -> bool:
    """
    Defender side of the four-pebble corollary as a one-round ESG

    With C(x) = 4 there is one round. Defender wins iff for every first
    pick v there is an answer u != v such that no ESG set lies inside {u, v}.
    """
    sets = esg_sets(cv)
    if any(not s for s in sets):
        return False
    for v in cv.s0:
        if not any(
            not any(s <= {u, v} for s in sets)
            for u in cv.s0 if u != v
        ):
            return False
    return True


def multipartite_parts(descriptor: GstDescriptor) -> Optional[List[FrozenSet[int]]]:
    """
    Parts of H when H is complete multipartite, as global S labels

    H is complete multipartite iff its complement is a disjoint union of
    cliques. An edgeless H is one part.
    """
    h = descriptor.h_graph()
    complement = nx.complement(h)
    parts = []
    for component in nx.connected_components(complement):
        size = len(component)
        if complement.subgraph(component).number_of_edges() != size * (size - 1) // 2:
            return None
        parts.append(frozenset(descriptor.s_vertex(v) for v in component))
    return sorted(parts, key=min)


def classify(
    descriptor: GstDescriptor,
    config: Configuration,
    fallback: Fallback = Fallback.ESG,
    j_rule: Optional["JRule"] = None,
    solver: Optional[GameSolver] = None
) -> ClassificationOutcome:
    """
    Decide the winner of config on a member of G_{s,t} with Mover to move

    Args:
        descriptor: Member of G_{s,t} with t >= 2
        config: Counts in canonical labeling (root, T, S)
        fallback: ESG or brute force for boundary configurations no rule covers
        j_rule: ESG round rule for the ESG fallback
        solver: Optional solver bound to descriptor.to_graph(), reused by
            the brute-force fallback

    Returns:
        ClassificationOutcome

    Raises:
        OutOfScopeError: t < 2
    """
    if descriptor.t < 2:
        raise OutOfScopeError(f"classification covers t >= 2, got t={descriptor.t}")
    cv = view(descriptor, config)

    def outcome(winner: Player, rule: Rule) -> ClassificationOutcome:
        return ClassificationOutcome(winner=winner, rule=rule, view=cv)

    if cv.trivial:
        return outcome(Player.MOVER, Rule.TRIVIAL)

    k, c_t = cv.k, cv.c_t
    if k % 2 == 1:
        return outcome(Player.MOVER if c_t >= k + 1 else Player.DEFENDER, Rule.K_ODD_TABLE)
    if c_t >= k + 3:
        return outcome(Player.MOVER, Rule.K_EVEN_TABLE)
    if c_t <= k + 1:
        return outcome(Player.DEFENDER, Rule.K_EVEN_TABLE)

    # k even and C_T = k + 2 from here on
    if cv.all_t_odd:
        return outcome(Player.MOVER, Rule.ALL_ODD_T)
    if len(cv.t_evens) >= 2 or any(cv.config[v] == 0 for v in cv.t_evens):
        return outcome(Player.DEFENDER, Rule.MULTI_EVEN_T)

    c_x = cv.c_x
    if c_x >= k + 2:
        return outcome(Player.MOVER, Rule.CX_AT_LEAST_K_PLUS_2)
    if closed_neighborhood_pebbled(cv):
        return outcome(Player.MOVER, Rule.CLOSED_NEIGHBORHOOD_PEBBLED)
    if c_x == 2:
        return outcome(Player.DEFENDER, Rule.CX_TWO_DEFENDER)
    if c_x == 4:
        if four_pebble_mover_condition(cv):
            return outcome(Player.MOVER, Rule.CX_FOUR_COROLLARY)
        if four_pebble_defender_working(cv):
            return outcome(Player.DEFENDER, Rule.CX_FOUR_COROLLARY)
        return outcome(Player.MOVER, Rule.CX_FOUR_COROLLARY)

    parts = multipartite_parts(descriptor)
    if parts is not None and c_x <= k:
        free = [len(p & cv.s0) for p in parts]
        return outcome(multipartite_boundary_winner(free, c_x), Rule.MULTIPARTITE_S)

    if fallback is Fallback.BRUTE_FORCE:
        solver = solver or GameSolver(descriptor.to_graph())
        return outcome(solver.solve_config(cv.config), Rule.BRUTE_FORCE_FALLBACK)

    from ..esg.builder import build_from_view
    from ..esg.game import Picker, solve_esg

    instance = build_from_view(cv, j_rule)
    winner = Player.MOVER if solve_esg(instance) is Picker.MARY else Player.DEFENDER
    logger.debug(f"ESG fallback on {descriptor.label()} {cv.config}: {winner.value}")
    return outcome(winner, Rule.ESG_FALLBACK)


def literal_clause_disagrees(cv: GstConfigView, actual: Player) -> bool:
    """
    Whether the word-for-word four-pebble clauses contradict the actual winner

    Only meaningful for configurations that reach the four-pebble rule.
    """
    if four_pebble_mover_condition(cv):
        predicted = Player.MOVER
    elif four_pebble_defender_literal(cv):
        predicted = Player.DEFENDER
    else:
        return False
    return predicted is not actual
