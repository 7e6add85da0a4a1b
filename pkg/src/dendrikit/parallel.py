"""Optional process-level parallelism for exhaustive scans.

The worker count comes from ``DENDRIKIT_THREADS`` (default 1).  Results
are always returned in input order so output never depends on it.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def worker_count(requested: int | None = None) -> int:
    if requested is None:
        try:
            requested = int(os.environ.get("DENDRIKIT_THREADS", "1"))
        except ValueError:
            requested = 1
    return max(1, min(requested, os.cpu_count() or 1))


def pmap(fn, items: list, workers: int | None = None) -> list:
    n = worker_count(workers)
    if n == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as ex:
        return list(ex.map(fn, items))
