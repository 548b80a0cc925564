"""
Verification reports
"""
import time
from enum import Enum
from typing import Any, Dict, List, Optional

from ..graphs.graph import Graph


class SuiteStatus(Enum):
    """Suite outcome"""
    PASSED = "passed"
    FAILED = "failed"


def graph_record(graph: Graph) -> Dict[str, Any]:
    """Self-contained graph data for a disagreement record"""
    return {"n": graph.n, "root": graph.root, "edges": [list(e) for e in graph.edges()]}


class VerificationReport:
    """
    Outcome of one verification suite

    Every disagreement carries enough data (graph, root, configuration,
    expected and got) to replay it with the solve command. Findings are
    observations worth recording that do not fail the suite.
    """

    def __init__(self, suite: str, parameters: Optional[Dict[str, Any]] = None):
        self.suite = suite
        self.parameters: Dict[str, Any] = dict(parameters or {})
        self.cases = 0
        self.agreements = 0
        self.disagreements: List[Dict[str, Any]] = []
        self.findings: List[Dict[str, Any]] = []
        self.details: Dict[str, Any] = {}
        self._started = time.perf_counter()
        self.wall_time: Optional[float] = None

    def check(self, agree: bool, record: Optional[Dict[str, Any]] = None) -> bool:
        """Count one case; keep the record when it disagrees"""
        self.cases += 1
        if agree:
            self.agreements += 1
        else:
            self.disagreements.append(dict(record or {}))
        return agree

    def add_finding(self, kind: str, data: Dict[str, Any]):
        self.findings.append({"kind": kind, **data})

    def merge(self, cases: int, agreements: int, disagreements: List[Dict[str, Any]], findings: List[Dict[str, Any]]):
        self.cases += cases
        self.agreements += agreements
        self.disagreements.extend(disagreements)
        self.findings.extend(findings)

    def finish(self) -> "VerificationReport":
        self.wall_time = time.perf_counter() - self._started
        return self

    @property
    def passed(self) -> bool:
        return not self.disagreements

    @property
    def status(self) -> SuiteStatus:
        return SuiteStatus.PASSED if self.passed else SuiteStatus.FAILED

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        """
        Convert report to dictionary

        Wall time is left out unless asked for, so two runs with the same
        inputs produce identical JSON.
        """
        data = {
            "suite": self.suite,
            "status": self.status.value,
            "parameters": self.parameters,
            "cases": self.cases,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "findings": self.findings,
            "details": self.details
        }
        if include_timing:
            data["wall_time"] = round(self.wall_time or 0.0, 3)
        return data
