"""Deterministic, optional thread-based work splitting.

Results are always reduced in chunk order, so output is bit-identical
for every thread count.  With CPython's GIL the pool mostly helps when
chunks release the interpreter; the contract here is determinism, not
speedup.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def split_chunks(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    """Split into at most ``parts`` contiguous, order-preserving chunks."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks: list[Sequence[T]] = []
    start = 0
    for i in range(parts):
        stop = start + size + (1 if i < extra else 0)
        chunks.append(items[start:stop])
        start = stop
    return chunks


def map_ordered(fn: Callable[[T], R], items: Iterable[T], threads: int) -> list[R]:
    """Apply ``fn`` to every item, collecting results in input order."""
    work = list(items)
    if threads <= 1 or len(work) <= 1:
        return [fn(item) for item in work]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, work))
