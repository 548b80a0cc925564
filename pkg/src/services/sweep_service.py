"""
Sweep Service
Fans verification jobs out over a worker pool and merges results in job order
"""
import logging
import time
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Any, Callable, List, Optional, Sequence

from ..config.settings import settings

logger = logging.getLogger(__name__)


class SweepService:
    """
    Runs a worker function over a list of jobs

    workers <= 1 runs inline. Otherwise jobs go to a process pool (default)
    or a thread pool. Results always come back in the order of the jobs, so
    reports do not depend on scheduling. Process workers need a picklable,
    module-level worker function; each worker builds its own solver tables.
    """

    def __init__(self, workers: Optional[int] = None, executor: Optional[str] = None):
        self.workers = settings.sweep.workers if workers is None else workers
        self.executor_kind = (executor or settings.sweep.executor).lower()
        if self.executor_kind not in ("process", "thread"):
            raise ValueError(f"executor must be 'process' or 'thread', got {self.executor_kind!r}")

    def _pool(self, size: int) -> Executor:
        if self.executor_kind == "thread":
            return ThreadPoolExecutor(max_workers=size)
        return ProcessPoolExecutor(max_workers=size)

    def run(self, worker: Callable[[Any], Any], jobs: Sequence[Any], label: str = "sweep") -> List[Any]:
        """
        Run worker on every job

        Args:
            worker: Function of one job
            jobs: Job descriptors
            label: Name used in progress logging

        Returns:
            One result per job, in job order
        """
        jobs = list(jobs)
        if not jobs:
            return []
        started = time.perf_counter()

        if self.workers <= 1 or len(jobs) == 1:
            results = []
            for index, job in enumerate(jobs, start=1):
                results.append(worker(job))
                logger.info(f"{label}: job {index}/{len(jobs)} done")
        else:
            size = min(self.workers, len(jobs))
            logger.info(f"{label}: {len(jobs)} jobs on {size} {self.executor_kind} workers")
            with self._pool(size) as pool:
                futures = [pool.submit(worker, job) for job in jobs]
                results = [future.result() for future in futures]

        logger.info(f"{label}: finished in {time.perf_counter() - started:.1f}s")
        return results
