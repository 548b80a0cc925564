"""
Two-player pebbling numbers by exhaustive size sweeps
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from .certificates import InfinityCertificate, infinity_certificate
from ..config.settings import settings
from ..game.models import GameState, Player
from ..game.play import play
from ..game.solver import GameSolver
from ..graphs.configurations import enumerate_configurations
from ..graphs.graph import Configuration, Graph

logger = logging.getLogger(__name__)


class EtaKind(Enum):
    """Outcome kinds of an eta computation"""
    FINITE = "finite"
    EXCEEDS_BUDGET = "exceeds_budget"
    INFINITE_CERTIFIED = "infinite_certified"


@dataclass
class EtaResult:
    """
    Result of an eta sweep

    For FINITE, value is m: every size from m to budget is all-Mover-win and
    witness is a Defender-win configuration of size m - 1. violations lists
    sizes below m - 1 where every configuration was a Mover win.
    """
    kind: EtaKind
    budget: int
    root: Optional[int] = None
    value: Optional[int] = None
    witness: Optional[Configuration] = None
    certificate: Optional[InfinityCertificate] = None
    violations: List[int] = field(default_factory=list)

    @property
    def is_finite(self) -> bool:
        return self.kind == EtaKind.FINITE

    def to_dict(self) -> Dict[str, Any]:
        if self.kind == EtaKind.FINITE:
            value: Optional[int] = self.value
        elif self.kind == EtaKind.EXCEEDS_BUDGET:
            value = self.budget
        else:
            value = None
        data: Dict[str, Any] = {
            "root": self.root,
            "eta": {"kind": self.kind.value, "value": value},
            "violations": list(self.violations),
        }
        if self.witness is not None:
            data["witness"] = list(self.witness)
        if self.certificate is not None:
            data["certificate"] = self.certificate.to_dict()
        return data


def _rooted_configurations(n: int, root: int, size: int):
    """Configurations of the given size with no pebble on the root"""
    for rest in enumerate_configurations(n - 1, size):
        yield rest[:root] + (0,) + rest[root:]


def _sweep(graph: Graph, root: int, budget: int, defender_wins: Callable[[Configuration], bool]) -> EtaResult:
    """
    Shared size sweep: find the largest size admitting a Defender win

    The empty configuration is always a Defender win, so sizes start at 1.
    """
    largest_defender = 0
    witness: Configuration = (0,) * graph.n
    all_mover: List[int] = []
    for size in range(1, budget + 1):
        found = None
        if graph.n > 1:
            for config in _rooted_configurations(graph.n, root, size):
                if defender_wins(config):
                    found = config
                    break
        if found is None:
            all_mover.append(size)
            logger.debug(f"root {root}: size {size} is all Mover-win")
        else:
            largest_defender = size
            witness = found
            logger.debug(f"root {root}: size {size} has Defender win {found}")

    if largest_defender == budget:
        logger.info(f"root {root}: Defender still wins at budget {budget}")
        return EtaResult(kind=EtaKind.EXCEEDS_BUDGET, budget=budget, root=root, witness=witness)

    violations = [s for s in all_mover if s < largest_defender]
    if violations:
        logger.warning(f"root {root}: sizes {violations} are all Mover-win below a Defender-win size")
    return EtaResult(
        kind=EtaKind.FINITE,
        budget=budget,
        root=root,
        value=largest_defender + 1,
        witness=witness,
        violations=violations
    )


def eta_rooted(
    graph: Graph,
    root: int,
    budget: Optional[int] = None,
    max_cut: Optional[int] = None,
    solver: Optional[GameSolver] = None
) -> EtaResult:
    """
    Rooted two-player pebbling number eta(G, r)

    The certificate search runs first; with max_cut = 0 it is skipped.

    Args:
        graph: Connected graph
        root: Root vertex
        budget: Largest size swept
        max_cut: Largest cut set the certificate search tries
        solver: Optional solver already bound to (graph, root)

    Returns:
        EtaResult of kind FINITE, EXCEEDS_BUDGET or INFINITE_CERTIFIED
    """
    budget = settings.numbers.default_budget if budget is None else budget
    max_cut = settings.numbers.default_max_cut if max_cut is None else max_cut
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    graph.require_connected()
    rooted = graph.with_root(root)

    if max_cut > 0:
        cert = infinity_certificate(rooted, root, max_cut)
        if cert is not None:
            return EtaResult(kind=EtaKind.INFINITE_CERTIFIED, budget=budget, root=root, certificate=cert)

    if solver is None or solver.graph != rooted:
        solver = GameSolver(rooted)
    result = _sweep(rooted, root, budget, lambda c: solver.solve_config(c) is Player.DEFENDER)
    logger.info(f"eta(G, {root}): {result.kind.value} {result.value}")
    return result


def eta(graph: Graph, budget: Optional[int] = None, max_cut: Optional[int] = None) -> EtaResult:
    """
    eta(G) = max over roots of eta(G, r)

    A certified root makes the whole result INFINITE_CERTIFIED, otherwise
    any root over budget makes it EXCEEDS_BUDGET. Violations from every
    root are merged.
    """
    results = [eta_rooted(graph, r, budget, max_cut) for r in graph.vertices()]
    for result in results:
        if result.kind == EtaKind.INFINITE_CERTIFIED:
            return result
    for result in results:
        if result.kind == EtaKind.EXCEEDS_BUDGET:
            return result
    best = max(results, key=lambda r: (r.value, -r.root))
    merged = sorted({v for r in results for v in r.violations})
    return EtaResult(
        kind=EtaKind.FINITE,
        budget=best.budget,
        root=best.root,
        value=best.value,
        witness=best.witness,
        violations=merged
    )


def fixed_strategy_threshold(
    graph: Graph,
    root: int,
    mover_strategy,
    defender_strategy,
    budget: Optional[int] = None
) -> EtaResult:
    """
    The eta analogue when both players follow fixed strategies

    Every configuration is played out with play(); the result's value is
    the smallest size from which the pair always ends in a Mover win.
    """
    budget = settings.numbers.default_budget if budget is None else budget
    rooted = graph.require_connected().with_root(root)

    def defender_wins(config: Configuration) -> bool:
        transcript = play(rooted, GameState.initial(config), mover_strategy, defender_strategy)
        return transcript.winner is Player.DEFENDER

    return _sweep(rooted, root, budget, defender_wins)
