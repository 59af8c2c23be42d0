"""
The prime field GF(p) and its vector and matrix carriers.

Vectors and matrices are plain read-only ``numpy`` integer arrays whose
entries lie in ``[0, p)``; :class:`FieldParams` builds and reduces them.
"""
import dataclasses
from typing import Iterable

import numpy as np

from semifieldpy.exceptions import DimensionError

DTYPE = np.int64

FpVector = np.ndarray
FpMatrix = np.ndarray


def is_prime(number: int) -> bool:
    """
    Deterministic primality check by trial division.

    :param number: The integer to test.
    :type number: int
    :return: True if ``number`` is prime.
    :rtype: bool
    """
    if number < 2:
        return False
    if number < 4:
        return True
    if number % 2 == 0:
        return False
    divisor = 3
    while divisor * divisor <= number:
        if number % divisor == 0:
            return False
        divisor += 2
    return True


def inverse_mod(value: int, modulus: int) -> int:
    """
    Multiplicative inverse by the extended Euclidean algorithm.

    :raises ZeroDivisionError: If ``value`` is not invertible modulo ``modulus``.
    """
    old_r, r = value % modulus, modulus
    old_s, s = 1, 0
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
    if old_r != 1:
        raise ZeroDivisionError(f"{value} is not invertible modulo {modulus}")
    return old_s % modulus


def frozen(array: np.ndarray) -> np.ndarray:
    """
    Marks an array read-only and returns it.
    """
    array.flags.writeable = False
    return array


@dataclasses.dataclass(frozen=True)
class FieldParams:
    """
    The prime field GF(p).

    :param p: A prime number.
    :type p: int
    :raises ValueError: If ``p`` is not prime.
    """
    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not is_prime(int(self.p)):
            raise ValueError(f"p must be a prime, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))

    def reduce(self, values) -> np.ndarray:
        """
        Reduces any integer array-like modulo p into a fresh read-only array.
        """
        return frozen(np.mod(np.asarray(values, dtype=DTYPE), self.p))

    def vector(self, coords: Iterable[int]) -> FpVector:
        """
        Builds a reduced vector from integer coordinates.

        :raises DimensionError: If the coordinates do not form a non-empty 1-d sequence.
        """
        result = self.reduce(list(coords))
        if result.ndim != 1 or result.size == 0:
            raise DimensionError("a vector needs a non-empty one-dimensional coordinate list")
        return result

    def matrix(self, rows) -> FpMatrix:
        """
        Builds a reduced matrix from nested rows.

        :raises DimensionError: If the rows are ragged or empty.
        """
        try:
            result = self.reduce(rows)
        except ValueError as exc:
            raise DimensionError("matrix rows must all have the same length") from exc
        if result.ndim != 2 or 0 in result.shape:
            raise DimensionError("a matrix needs a non-empty two-dimensional entry table")
        return result

    def identity(self, n: int) -> FpMatrix:
        """
        The n×n identity matrix.
        """
        return frozen(np.eye(n, dtype=DTYPE))

    def zeros(self, *shape: int) -> np.ndarray:
        """
        A read-only zero array of the given shape.
        """
        return frozen(np.zeros(shape, dtype=DTYPE))

    def inverse(self, value: int) -> int:
        """
        Inverse of a nonzero scalar.
        """
        return inverse_mod(int(value), self.p)

    def matmul(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        Matrix (or matrix-vector) product reduced modulo p.
        """
        return self.reduce(np.asarray(left, dtype=DTYPE) @ np.asarray(right, dtype=DTYPE))

    def unit_vector(self, n: int, index: int) -> FpVector:
        """
        The standard basis vector ``e_index`` of length n.
        """
        unit = np.zeros(n, dtype=DTYPE)
        unit[index] = 1
        return frozen(unit)
