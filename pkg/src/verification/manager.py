"""
Suite Manager
Looks up verification suites by name, runs them and keeps their reports
"""
import logging
from typing import Any, Callable, Dict, List, Optional

from .report import SuiteStatus, VerificationReport
from .suites import SUITES, SuiteOptions
from ..analytics.sweep_analytics import SweepAnalytics

logger = logging.getLogger(__name__)


class SuiteManager:
    """Manages verification suites and the reports of past runs"""

    def __init__(self, suites: Optional[Dict[str, Callable[..., VerificationReport]]] = None):
        self.suites: Dict[str, Callable[..., VerificationReport]] = dict(suites or SUITES)
        self.reports: List[VerificationReport] = []
        self.analytics = SweepAnalytics()

    def list_suites(self) -> List[str]:
        return sorted(self.suites)

    def register(self, name: str, runner: Callable[..., VerificationReport]):
        """Add or replace a suite"""
        self.suites[name] = runner

    def run(self, name: str, options: Optional[SuiteOptions] = None) -> VerificationReport:
        """
        Run one suite

        Args:
            name: Suite name, see list_suites()
            options: Run options; settings defaults when omitted

        Returns:
            The suite's VerificationReport, also appended to the history.
            analytics holds the rows of this run only.
        """
        runner = self.suites.get(name)
        if runner is None:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(self.list_suites())}")
        options = options or SuiteOptions()
        self.analytics = SweepAnalytics()
        logger.info(f"running suite {name}")
        report = runner(options, self.analytics)
        self.reports.append(report)
        logger.info(
            f"suite {name}: {report.status.value}, {report.agreements}/{report.cases} agree, "
            f"{len(report.findings)} findings"
        )
        return report

    def get_reports_by_status(self, status: SuiteStatus) -> List[VerificationReport]:
        return [r for r in self.reports if r.status == status]

    def get_summary(self) -> Dict[str, Any]:
        """Summary of every run so far"""
        return {
            "runs": len(self.reports),
            "by_status": {s.value: len(self.get_reports_by_status(s)) for s in SuiteStatus},
            "cases": sum(r.cases for r in self.reports),
            "disagreements": sum(len(r.disagreements) for r in self.reports),
            "findings": sum(len(r.findings) for r in self.reports)
        }
