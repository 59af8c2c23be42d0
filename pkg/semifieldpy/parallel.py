"""
Chunked execution of partitionable loops with deterministic reductions.
"""
import logging
from multiprocessing.pool import ThreadPool
from typing import Callable, Sequence, TypeVar

from semifieldpy.config import settings

_logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], parts: int) -> list[Sequence[T]]:
    """
    Splits ``items`` into at most ``parts`` contiguous, order-preserving chunks.
    """
    if parts <= 0:
        raise ValueError("parts must be greater than 0")
    size = max(1, -(-len(items) // parts))
    return [items[i:i + size] for i in range(0, len(items), size)]


def map_chunks(worker: Callable[[Sequence[T]], R], items: Sequence[T],
               jobs: int | None = None) -> list[R]:
    """
    Applies ``worker`` to contiguous chunks of ``items`` and returns the
    per-chunk results in chunk order.

    With one job the chunks run inline; otherwise they run on a thread pool.

    :param worker: Function evaluated once per chunk.
    :type worker: Callable[[Sequence[T]], R]
    :param items: The full work list.
    :type items: Sequence[T]
    :param jobs: Worker count, defaults to the active settings.
    :type jobs: int | None
    :return: One result per chunk, in order.
    :rtype: list[R]
    """
    jobs = settings().jobs if jobs is None else jobs
    if jobs <= 1 or len(items) <= 1:
        return [worker(items)]
    chunks = chunked(items, jobs)
    _logger.debug("running %d chunks on %d workers", len(chunks), jobs)
    with ThreadPool(processes=min(jobs, len(chunks))) as pool:
        return pool.map(worker, chunks)
