"""Order-preserving map over a process pool."""

from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor
from typing import Any, TypeVar

T = TypeVar("T")


def parallel_map(
    fn: Callable[..., T], jobs: Sequence[tuple[Any, ...]], workers: int = 1
) -> list[T]:
    """Apply ``fn(*job)`` to every job, returning results in job order.

    With ``workers <= 1`` (or a single job) everything runs in-process, so results
    never depend on the worker count as long as ``fn`` is deterministic.
    """
    if workers <= 1 or len(jobs) <= 1:
        return [fn(*job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *job) for job in jobs]
        return [f.result() for f in futures]
