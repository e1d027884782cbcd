"""Deterministic worker pools.

Work items carry their own random substreams, so the mapping below returns
results in submission order and the outcome is independent of the worker
count. ``SPINFORGE_WORKERS`` overrides the default (available parallelism).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

WORKERS_ENV = "SPINFORGE_WORKERS"


def worker_count(explicit: int | None = None) -> int:
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: int | None = None) -> list[R]:
    """Map fn over items, preserving order; thread-based (kernels drop the GIL)."""
    seq: Sequence[T] = list(items)
    n_workers = worker_count(workers)
    if n_workers == 1 or len(seq) <= 1:
        return [fn(item) for item in seq]
    with ThreadPoolExecutor(max_workers=n_workers) as pool:
        return list(pool.map(fn, seq))
