"""Optional process-level parallelism, capped by ``ARRANGEO_THREADS``.

Results never depend on the worker count; the default is serial.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor


def workers() -> int:
    try:
        return max(1, int(os.environ.get("ARRANGEO_THREADS", "1")))
    except ValueError:
        return 1


def pmap(func, items) -> list:
    items = list(items)
    k = min(workers(), len(items))
    if k <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=k) as pool:
        return list(pool.map(func, items))
