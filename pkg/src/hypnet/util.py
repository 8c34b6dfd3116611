"""Small shared helpers."""

from __future__ import annotations

import multiprocessing
import os


def available_workers() -> int:
    return os.cpu_count() or 1


def parallel_map(fn, items, workers):
    """Order-preserving map, optionally over a process pool.

    Results are merged by input position, so output is identical for any
    worker count.
    """
    items = list(items)
    if not workers or workers <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with multiprocessing.Pool(min(workers, len(items))) as pool:
        return pool.map(fn, items)
