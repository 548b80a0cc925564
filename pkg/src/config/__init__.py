"""
Configuration for the solver, sweeps and reports
"""
from .settings import (
    EsgConfig,
    LoggingConfig,
    NumbersConfig,
    ReportConfig,
    Settings,
    SolverConfig,
    SweepConfig,
    settings,
)

__all__ = [
    "settings",
    "Settings",
    "SolverConfig",
    "NumbersConfig",
    "SweepConfig",
    "EsgConfig",
    "ReportConfig",
    "LoggingConfig",
]
