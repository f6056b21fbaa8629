"""Ordered fan-out of independent tasks over worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence


def run_tasks(fn: Callable, tasks: Sequence[tuple], workers: int = 1) -> list:
    """Apply ``fn(*task)`` to each task; results come back in task order.

    Callers merge results in that order, so output never depends on the
    worker count.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *t) for t in tasks]
        return [f.result() for f in futures]
