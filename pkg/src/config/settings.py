"""
Configuration settings for the Two-Player Pebbling toolkit
"""
import os
from typing import Tuple
from pydantic import BaseModel
from dotenv import load_dotenv

load_dotenv()


def _env_bool(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ("1", "true", "yes")


def _env_ints(name: str, default: str) -> Tuple[int, ...]:
    return tuple(int(part) for part in os.getenv(name, default).split(",") if part.strip())


class SolverConfig(BaseModel):
    """Game solver configuration"""
    move_ordering: bool = _env_bool("PEBBLING_MOVE_ORDERING", "true")
    recursion_limit: int = int(os.getenv("PEBBLING_RECURSION_LIMIT", "10000"))


class NumbersConfig(BaseModel):
    """Pebbling number sweep configuration"""
    default_budget: int = int(os.getenv("PEBBLING_DEFAULT_BUDGET", "20"))
    default_max_cut: int = int(os.getenv("PEBBLING_MAX_CUT", "4"))
    pi_search_limit: int = int(os.getenv("PEBBLING_PI_LIMIT", "4096"))


class SweepConfig(BaseModel):
    """Verification sweep configuration"""
    workers: int = int(os.getenv("PEBBLING_WORKERS", "1"))
    executor: str = os.getenv("PEBBLING_EXECUTOR", "process")  # process or thread
    s_max: int = int(os.getenv("PEBBLING_S_MAX", "4"))
    t_values: Tuple[int, ...] = _env_ints("PEBBLING_T_VALUES", "2,3")
    max_pebbles: int = int(os.getenv("PEBBLING_MAX_PEBBLES", "10"))
    certificate_samples: int = int(os.getenv("PEBBLING_CERTIFICATE_SAMPLES", "200"))
    seed: int = int(os.getenv("PEBBLING_SEED", "0"))


class EsgConfig(BaseModel):
    """Element Selecting Game configuration"""
    default_j_rule: str = os.getenv("PEBBLING_J_RULE", "capped_by_x")


class ReportConfig(BaseModel):
    """Report output configuration"""
    output_dir: str = os.getenv("PEBBLING_OUTPUT_DIR", "reports")
    include_timing: bool = _env_bool("PEBBLING_REPORT_TIMING", "false")


class LoggingConfig(BaseModel):
    """Logging configuration"""
    level: str = os.getenv("PEBBLING_LOG_LEVEL", "WARNING")
    format: str = os.getenv(
        "PEBBLING_LOG_FORMAT",
        "%(asctime)s %(levelname)s %(name)s: %(message)s"
    )


class Settings(BaseModel):
    """Main settings class"""
    solver: SolverConfig = SolverConfig()
    numbers: NumbersConfig = NumbersConfig()
    sweep: SweepConfig = SweepConfig()
    esg: EsgConfig = EsgConfig()
    report: ReportConfig = ReportConfig()
    logging: LoggingConfig = LoggingConfig()


# Global settings instance
settings = Settings()
