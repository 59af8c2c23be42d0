"""
Biadditive maps ``V x V -> W`` over GF(p) stored as coefficient slices.

A map with ``n = dim V`` and ``m = dim W`` is held as an ``(m, n, n)`` array;
the k-th output coordinate at ``(u, v)`` is ``u^T A_k v``.
"""
import dataclasses
import logging

import numpy as np

from semifieldpy.exceptions import DimensionError
from semifieldpy.linalg.elimination import projective_points, rank
from semifieldpy.linalg.field import DTYPE, FieldParams, FpMatrix, FpVector, frozen

_logger = logging.getLogger(__name__)


def alt_dimension(n: int, m: int) -> int:
    """
    Dimension ``m * n * (n - 1) / 2`` of the space alt(V, W).
    """
    return m * n * (n - 1) // 2


def alt_index(n: int) -> list[tuple[int, int]]:
    """
    The pairs ``i < j`` in lexicographic order.
    """
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


class BilinearMap:
    """
    A biadditive map ``V x V -> W`` given by ``m`` slices of size ``n x n``.

    Instances are immutable; all operations return new maps.

    :param fp: The prime field.
    :type fp: FieldParams
    :param slices: Array-like of shape ``(m, n, n)``; entries are reduced mod p.
    :type slices: array-like
    :raises DimensionError: If the slices are not ``m`` square matrices with ``m, n >= 1``.
    """
    __slots__ = ("_fp", "_slices")

    def __init__(self, fp: FieldParams, slices):
        array = fp.reduce(slices)
        if array.ndim != 3 or array.shape[1] != array.shape[2]:
            raise DimensionError("slices must have shape (m, n, n)")
        if array.shape[0] == 0 or array.shape[1] == 0:
            raise DimensionError("n and m must be greater than 0")
        self._fp = fp
        self._slices = array

    @classmethod
    def zero(cls, fp: FieldParams, n: int, m: int) -> 'BilinearMap':
        """
        The zero map with the given dimensions.
        """
        return cls(fp, np.zeros((m, n, n), dtype=DTYPE))

    @property
    def fp(self) -> FieldParams:
        return self._fp

    @property
    def p(self) -> int:
        return self._fp.p

    @property
    def n(self) -> int:
        return self._slices.shape[1]

    @property
    def m(self) -> int:
        return self._slices.shape[0]

    @property
    def slices(self) -> np.ndarray:
        """
        The read-only ``(m, n, n)`` coefficient array.
        """
        return self._slices

    @property
    def dims(self) -> tuple[int, int, int]:
        """
        ``(p, n, m)``.
        """
        return self.p, self.n, self.m

    def __eq__(self, other) -> bool:
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.p == other.p and np.array_equal(self._slices, other._slices)

    def __hash__(self) -> int:
        return hash((self.p, self._slices.shape, self._slices.tobytes()))

    def __repr__(self) -> str:
        return f"BilinearMap(p={self.p}, n={self.n}, m={self.m}, slices={self._slices.tolist()})"

    def _require_same_shape(self, other: 'BilinearMap') -> None:
        if self.dims != other.dims:
            raise DimensionError(f"maps have dimensions {self.dims} and {other.dims}")

    def evaluate(self, u: FpVector, v: FpVector) -> FpVector:
        """
        Evaluates the map at ``(u, v)``.

        :param u: Left argument of length n.
        :type u: FpVector
        :param v: Right argument of length n.
        :type v: FpVector
        :return: The value, a vector of length m.
        :rtype: FpVector
        :raises DimensionError: If an argument does not have length n.
        """
        u = np.asarray(u, dtype=DTYPE)
        v = np.asarray(v, dtype=DTYPE)
        if u.shape != (self.n,) or v.shape != (self.n,):
            raise DimensionError(f"arguments must have length {self.n}")
        return self._fp.reduce(np.einsum("i,kij,j->k", u, self._slices, v))

    def evaluate_many(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """
        Row-wise evaluation: ``left`` and ``right`` are ``(N, n)`` arrays (or
        broadcast against each other) and the result is ``(N, m)``.
        """
        left = np.asarray(left, dtype=DTYPE)
        right = np.asarray(right, dtype=DTYPE)
        return np.mod(np.einsum("...i,kij,...j->...k", left, self._slices, right), self.p)

    def add(self, other: 'BilinearMap') -> 'BilinearMap':
        """
        Pointwise sum of two maps with the same dimensions.
        """
        self._require_same_shape(other)
        return BilinearMap(self._fp, self._slices + other.slices)

    def scale(self, scalar: int) -> 'BilinearMap':
        """
        The map multiplied by a scalar of GF(p).
        """
        return BilinearMap(self._fp, self._slices * int(scalar))

    def negate(self) -> 'BilinearMap':
        return self.scale(-1)

    def compose_output(self, matrix: FpMatrix) -> 'BilinearMap':
        """
        The map ``c o alpha`` for an ``m' x m`` matrix ``c`` acting on W.
        """
        matrix = np.asarray(matrix, dtype=DTYPE)
        if matrix.ndim != 2 or matrix.shape[1] != self.m:
            raise DimensionError(f"output matrix must have {self.m} columns")
        return BilinearMap(self._fp, np.einsum("kl,lij->kij", matrix, self._slices))

    def precompose(self, left: FpMatrix, right: FpMatrix) -> 'BilinearMap':
        """
        The map ``(v1, v2) -> alpha(left v1, right v2)``.
        """
        left = np.asarray(left, dtype=DTYPE)
        right = np.asarray(right, dtype=DTYPE)
        if left.shape != (self.n, self.n) or right.shape != (self.n, self.n):
            raise DimensionError(f"argument matrices must be {self.n}x{self.n}")
        return BilinearMap(self._fp, np.einsum("ai,kab,bj->kij", left, self._slices, right))

    def bar(self) -> 'BilinearMap':
        """
        ``bar(beta)(b1, b2) = beta(b1, b2) - beta(b2, b1)``; always alternating.
        """
        return BilinearMap(self._fp, self._slices - self._slices.transpose(0, 2, 1))

    def opposite(self) -> 'BilinearMap':
        """
        The map ``(u, v) -> alpha(v, u)``: every slice transposed.
        """
        return BilinearMap(self._fp, self._slices.transpose(0, 2, 1))

    def is_symmetric(self) -> bool:
        """
        Whether every slice equals its transpose.
        """
        return bool(np.array_equal(self._slices, self._slices.transpose(0, 2, 1)))

    def is_alternating(self) -> bool:
        """
        Whether ``alpha(v, v) = 0`` for all v: zero diagonals and ``A_k = -A_k^T``.

        For p = 2 the zero-diagonal condition is what separates alternating
        from merely symmetric.
        """
        diagonals = np.diagonal(self._slices, axis1=1, axis2=2)
        antisymmetric = np.mod(self._slices + self._slices.transpose(0, 2, 1), self.p)
        return not diagonals.any() and not antisymmetric.any()

    def is_zero(self) -> bool:
        return not self._slices.any()

    def left_matrix(self, vector: FpVector) -> FpMatrix:
        """
        The ``m x n`` matrix of ``x -> alpha(vector, x)``; row k is ``vector^T A_k``.
        """
        return self._fp.reduce(np.einsum("i,kij->kj", np.asarray(vector, dtype=DTYPE),
                                         self._slices))

    def right_matrix(self, vector: FpVector) -> FpMatrix:
        """
        The ``m x n`` matrix of ``x -> alpha(x, vector)``; row k is ``(A_k vector)^T``.
        """
        return self._fp.reduce(np.einsum("kij,j->ki", self._slices,
                                         np.asarray(vector, dtype=DTYPE)))

    def is_nonsingular(self, budget: int | None = None) -> bool:
        """
        Whether the map is a generalized nonsingular map, that is
        ``alpha(v, V) = alpha(V, v) = W`` for every nonzero v.

        Surjectivity is invariant under scaling v, so one vector per line is checked.

        :param budget: Enumeration budget for the ``p**n`` vectors of V.
        :type budget: int | None
        :return: True if both one-sided maps have rank m for every nonzero v.
        :rtype: bool
        :raises BudgetExceededError: If ``p**n`` exceeds the budget.
        """
        if self.m > self.n:
            return False
        points = projective_points(self.n, self._fp, budget)
        lefts = np.mod(np.einsum("vi,kij->vkj", points, self._slices), self.p)
        rights = np.mod(np.einsum("kij,vj->vki", self._slices, points), self.p)
        for index, (left, right) in enumerate(zip(lefts, rights)):
            if rank(left, self._fp) != self.m or rank(right, self._fp) != self.m:
                _logger.debug("map is singular at v=%s", points[index].tolist())
                return False
        return True

    def alt_coords(self) -> 'AlternatingCoords':
        """
        Coordinates of an alternating map in alt(V, W).

        :raises ValueError: If the map is not alternating.
        """
        return AlternatingCoords.from_map(self)


@dataclasses.dataclass(frozen=True)
class AlternatingCoords:
    """
    Coordinates of an alternating map: the values ``gamma(e_i, e_j)_k`` for
    ``i < j`` and all k, ordered lexicographically by ``(i, j, k)``.

    :ivar fp: The prime field.
    :type fp: FieldParams
    :ivar n: Dimension of V.
    :type n: int
    :ivar m: Dimension of W.
    :type m: int
    :ivar coords: The ``m * n * (n - 1) / 2`` reduced coordinates.
    :type coords: tuple[int, ...]
    """
    fp: FieldParams
    n: int
    m: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != alt_dimension(self.n, self.m):
            raise DimensionError(
                f"expected {alt_dimension(self.n, self.m)} coordinates, got {len(self.coords)}")
        object.__setattr__(self, "coords", tuple(int(x) % self.fp.p for x in self.coords))

    @classmethod
    def from_vector(cls, fp: FieldParams, n: int, m: int, vector) -> 'AlternatingCoords':
        return cls(fp, n, m, tuple(int(x) for x in np.asarray(vector).ravel()))

    @classmethod
    def from_map(cls, gamma: BilinearMap) -> 'AlternatingCoords':
        """
        Reads off the coordinates of an alternating map.

        :raises ValueError: If ``gamma`` is not alternating.
        """
        if not gamma.is_alternating():
            raise ValueError("alt_coords requires an alternating map")
        coords = [int(gamma.slices[k, i, j]) for i, j in alt_index(gamma.n) for k in range(gamma.m)]
        return cls(gamma.fp, gamma.n, gamma.m, tuple(coords))

    def to_vector(self) -> FpVector:
        return frozen(np.array(self.coords, dtype=DTYPE))

    def to_map(self) -> BilinearMap:
        """
        The alternating map with these coordinates.
        """
        slices = np.zeros((self.m, self.n, self.n), dtype=DTYPE)
        values = iter(self.coords)
        for i, j in alt_index(self.n):
            for k in range(self.m):
                value = next(values)
                slices[k, i, j] = value
                slices[k, j, i] = -value
        return BilinearMap(self.fp, slices)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.coords)
