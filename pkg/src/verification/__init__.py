"""
Verification package
"""
from .jobs import GstJob, JobResult, gst_jobs
from .manager import SuiteManager
from .report import SuiteStatus, VerificationReport, graph_record
from .suites import GRID_CORNERS, SUITES, SuiteOptions, path_bound, record_violations, root_edge_monotonicity

__all__ = [
    "GstJob",
    "JobResult",
    "gst_jobs",
    "SuiteManager",
    "SuiteStatus",
    "VerificationReport",
    "graph_record",
    "SUITES",
    "SuiteOptions",
    "path_bound",
    "record_violations",
    "root_edge_monotonicity",
    "GRID_CORNERS"
]
