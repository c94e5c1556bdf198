from __future__ import annotations

from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor


def ordered_map[T, R](fn: Callable[[T], R], items: Iterable[T], workers: int) -> list[R]:
    """
    Map fn over items on up to `workers` threads, returning results in input
    order so downstream reductions keep a fixed summation order.
    """
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(fn, items))
