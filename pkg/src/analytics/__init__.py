"""
Analytics package
"""
from .sweep_analytics import SWEEP_COLUMNS, SweepAnalytics

__all__ = [
    "SWEEP_COLUMNS",
    "SweepAnalytics"
]
