"""
Exhaustive and sampled modes for checks over pairs and triples of elements.
"""
from abc import ABC, abstractmethod
from typing import Iterator

import numpy as np

from semifieldpy.linalg.field import DTYPE

IndexBatch = tuple[np.ndarray, ...]


class CheckMode(ABC):
    """
    Abstract base class describing which tuples of element labels a check visits.
    """
    exhaustive: bool = False

    @abstractmethod
    def batches(self, order: int, arity: int) -> Iterator[IndexBatch]:
        """
        Yields batches of label arrays; each batch holds ``arity`` equally
        long arrays whose rows form the visited tuples.

        :param order: Number of elements.
        :type order: int
        :param arity: Tuple length (2 for pairs, 3 for triples).
        :type arity: int
        :return: Iterator over batches.
        :rtype: Iterator[IndexBatch]
        """


class ExhaustiveCheck(CheckMode):
    """
    Visits every tuple, one batch per value of the leading coordinates.
    """
    exhaustive = True

    def batches(self, order: int, arity: int) -> Iterator[IndexBatch]:
        if arity < 2:
            raise ValueError("arity must be at least 2")
        rest = np.arange(order, dtype=DTYPE)
        if arity == 2:
            for first in range(order):
                yield np.full(order, first, dtype=DTYPE), rest
            return
        second, third = (grid.ravel() for grid in np.meshgrid(rest, rest, indexing="ij"))
        for lead in np.ndindex(*([order] * (arity - 2))):
            heads = tuple(np.full(second.size, index, dtype=DTYPE) for index in lead)
            yield heads + (second, third)


class SampledCheck(CheckMode):
    """
    Visits ``samples`` seeded random tuples.

    :param samples: Number of tuples.
    :type samples: int
    :param seed: Seed of the generator.
    :type seed: int
    :param batch_size: Number of tuples per batch.
    :type batch_size: int
    """
    def __init__(self, samples: int, seed: int = 0, batch_size: int = 10_000):
        if samples <= 0:
            raise ValueError("samples must be greater than 0")
        if batch_size <= 0:
            raise ValueError("batch_size must be greater than 0")
        self.samples = samples
        self.seed = seed
        self.batch_size = batch_size

    def batches(self, order: int, arity: int) -> Iterator[IndexBatch]:
        rng = np.random.default_rng(self.seed)
        remaining = self.samples
        while remaining > 0:
            size = min(remaining, self.batch_size)
            yield tuple(rng.integers(0, order, size=size, dtype=DTYPE) for _ in range(arity))
            remaining -= size
