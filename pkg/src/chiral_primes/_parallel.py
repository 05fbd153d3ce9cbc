"""Order-preserving fan-out over worker processes."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], n_chunks: int) -> List[Sequence[T]]:
    size = max(1, -(-len(items) // max(1, n_chunks)))
    return [items[i : i + size] for i in range(0, len(items), size)]


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """``list(map(fn, items))``, optionally spread over ``workers`` processes.

    Results come back in input order whatever the scheduling, so callers can
    merge them deterministically. ``fn`` must be picklable when ``workers > 1``.
    """
    if workers < 1:
        raise ValueError("workers must be >= 1")
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def flatten(parts: Iterable[Iterable[T]]) -> List[T]:
    return [x for part in parts for x in part]
