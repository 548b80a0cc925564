"""
Cross-check of the pebbling game against its ESG on boundary configurations
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from .builder import JRule, build_from_view
from .game import Picker, solve_esg
from ..game.models import Player
from ..game.solver import GameSolver
from ..graphs.families import GstDescriptor
from ..graphs.graph import Configuration
from ..gst.view import view

logger = logging.getLogger(__name__)


@dataclass
class EquivalenceReport:
    """Brute-force winner next to the ESG winner under each round rule"""
    descriptor: GstDescriptor
    config: Configuration
    brute: Player
    esg: Dict[JRule, Picker] = field(default_factory=dict)

    @property
    def agreeing(self) -> List[JRule]:
        expected = Picker.MARY if self.brute is Player.MOVER else Picker.DAN
        return [rule for rule in JRule if self.esg.get(rule) is expected]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "gst": self.descriptor.to_dict(),
            "config": list(self.config),
            "brute": self.brute.value,
            "esg": {rule.value: winner.value for rule, winner in self.esg.items()},
            "agreeing": [rule.value for rule in self.agreeing]
        }


def verify_equivalence(
    descriptor: GstDescriptor,
    config: Configuration,
    solver: Optional[GameSolver] = None
) -> EquivalenceReport:
    """
    Solve config by brute force and as an ESG under every round rule

    Args:
        descriptor: Member of G_{s,t}
        config: Boundary configuration
        solver: Optional solver bound to descriptor.to_graph()

    Returns:
        EquivalenceReport
    """
    cv = view(descriptor, config)
    solver = solver or GameSolver(descriptor.to_graph())
    report = EquivalenceReport(descriptor=descriptor, config=cv.config, brute=solver.solve_config(cv.config))
    for rule in JRule:
        report.esg[rule] = solve_esg(build_from_view(cv, rule))
    if not report.agreeing:
        logger.warning(f"no round rule matches brute force on {descriptor.label()} {cv.config}")
    return report


def consistent_rules(reports: Iterable[EquivalenceReport]) -> Tuple[JRule, ...]:
    """Round rules that agree with brute force on every report"""
    remaining = list(JRule)
    for report in reports:
        agreeing = set(report.agreeing)
        remaining = [rule for rule in remaining if rule in agreeing]
    return tuple(remaining)


def select_j_rule(reports: Iterable[EquivalenceReport]) -> Optional[JRule]:
    """
    The round rule the evidence supports

    When both rules survive, the configured default wins the tie. None when
    no rule agrees everywhere.
    """
    rules = consistent_rules(reports)
    if not rules:
        return None
    default = JRule.default()
    return default if default in rules else rules[0]
