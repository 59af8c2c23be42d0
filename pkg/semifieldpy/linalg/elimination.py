"""
Exact Gaussian elimination over GF(p): rank, kernels, linear solving,
inversion and deterministic enumeration of vectors and invertible matrices.

Pivoting always takes the first nonzero entry, scanning columns left to
right, so bases and solutions are reproducible across runs.
"""
import itertools
import logging
from typing import Iterator

import numpy as np

from semifieldpy.config import resolve_budget
from semifieldpy.exceptions import BudgetExceededError, DimensionError
from semifieldpy.linalg.field import DTYPE, FieldParams, FpMatrix, FpVector, frozen

_logger = logging.getLogger(__name__)


def row_reduce(matrix: FpMatrix, fp: FieldParams, pivot_limit: int | None = None) \
        -> tuple[FpMatrix, tuple[int, ...]]:
    """
    Computes the reduced row echelon form of ``matrix``.

    :param matrix: Matrix with entries reduced modulo p.
    :type matrix: FpMatrix
    :param fp: The field.
    :type fp: FieldParams
    :param pivot_limit: Only the first ``pivot_limit`` columns may hold pivots;
        row operations still act on the full width (used for augmented systems).
    :type pivot_limit: int | None
    :return: The reduced matrix and the tuple of pivot columns.
    :rtype: tuple[FpMatrix, tuple[int, ...]]
    """
    work = np.mod(np.array(matrix, dtype=DTYPE), fp.p)
    if work.ndim != 2:
        raise DimensionError("row_reduce expects a two-dimensional matrix")
    rows, cols = work.shape
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    row = 0
    for col in range(limit):
        if row == rows:
            break
        nonzero = np.flatnonzero(work[row:, col])
        if nonzero.size == 0:
            continue
        pivot = row + int(nonzero[0])
        if pivot != row:
            work[[row, pivot]] = work[[pivot, row]]
        work[row] = (work[row] * fp.inverse(work[row, col])) % fp.p
        factors = work[:, col].copy()
        factors[row] = 0
        work = np.mod(work - np.outer(factors, work[row]), fp.p)
        pivots.append(col)
        row += 1
    return frozen(work), tuple(pivots)


def _rank_gf2(matrix: FpMatrix) -> int:
    """
    Rank over GF(2) with rows packed into Python integers.
    """
    rows = [int("".join(str(int(bit)) for bit in row[::-1]), 2) for row in matrix]
    rank = 0
    for col in range(matrix.shape[1]):
        mask = 1 << col
        pivot = next((i for i in range(rank, len(rows)) if rows[i] & mask), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i] & mask:
                rows[i] ^= rows[rank]
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(matrix: FpMatrix, fp: FieldParams) -> int:
    """
    Rank of ``matrix`` over GF(p).

    :param matrix: Matrix with entries reduced modulo p.
    :type matrix: FpMatrix
    :param fp: The field.
    :type fp: FieldParams
    :return: The rank, between 0 and ``min(rows, cols)``.
    :rtype: int
    """
    matrix = np.asarray(matrix, dtype=DTYPE)
    if matrix.size == 0:
        return 0
    if fp.p == 2:
        return _rank_gf2(np.mod(matrix, 2))
    return len(row_reduce(matrix, fp)[1])


def kernel_basis(matrix: FpMatrix, fp: FieldParams) -> list[FpVector]:
    """
    Basis of the null space ``{x : Mx = 0}``.

    One basis vector is returned per non-pivot column, in increasing column
    order, with a 1 in that column.

    :param matrix: Matrix with entries reduced modulo p.
    :type matrix: FpMatrix
    :param fp: The field.
    :type fp: FieldParams
    :return: ``cols - rank`` vectors spanning the kernel.
    :rtype: list[FpVector]
    """
    matrix = np.asarray(matrix, dtype=DTYPE)
    cols = matrix.shape[1]
    if matrix.shape[0] == 0:
        return [fp.unit_vector(cols, col) for col in range(cols)]
    reduced, pivots = row_reduce(matrix, fp)
    basis = []
    for free in (col for col in range(cols) if col not in pivots):
        vector = np.zeros(cols, dtype=DTYPE)
        vector[free] = 1
        for index, pivot_col in enumerate(pivots):
            vector[pivot_col] = (-reduced[index, free]) % fp.p
        basis.append(frozen(vector))
    return basis


def solve(matrix: FpMatrix, rhs: FpVector, fp: FieldParams) -> FpVector | None:
    """
    Finds one solution of ``Mx = b``.

    Free variables are set to zero, so the answer is deterministic.

    :param matrix: Coefficient matrix.
    :type matrix: FpMatrix
    :param rhs: Right-hand side of length ``rows``.
    :type rhs: FpVector
    :param fp: The field.
    :type fp: FieldParams
    :return: A solution, or None if the system is inconsistent.
    :rtype: FpVector | None
    :raises DimensionError: If ``rhs`` does not have one entry per row.
    """
    matrix = np.asarray(matrix, dtype=DTYPE)
    rhs = np.asarray(rhs, dtype=DTYPE)
    rows = matrix.shape[0]
    cols = matrix.shape[1] if matrix.ndim == 2 else 0
    if rhs.shape != (rows,):
        raise DimensionError(f"right-hand side has length {rhs.size}, expected {rows}")
    if rows == 0:
        return fp.zeros(cols)
    augmented = np.hstack([matrix.reshape(rows, cols), rhs.reshape(rows, 1)])
    reduced, pivots = row_reduce(augmented, fp, pivot_limit=cols)
    if np.any(reduced[len(pivots):, cols]):
        return None
    solution = np.zeros(cols, dtype=DTYPE)
    for index, pivot_col in enumerate(pivots):
        solution[pivot_col] = reduced[index, cols]
    return frozen(solution)


def is_invertible(matrix: FpMatrix, fp: FieldParams) -> bool:
    """
    Whether a square matrix is invertible over GF(p).

    :raises DimensionError: If the matrix is not square.
    """
    matrix = np.asarray(matrix, dtype=DTYPE)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError("is_invertible expects a square matrix")
    return rank(matrix, fp) == matrix.shape[0]


def inverse_matrix(matrix: FpMatrix, fp: FieldParams) -> FpMatrix:
    """
    Inverse of a square matrix over GF(p).

    :raises DimensionError: If the matrix is not square.
    :raises ValueError: If the matrix is singular.
    """
    matrix = np.asarray(matrix, dtype=DTYPE)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise DimensionError("inverse_matrix expects a square matrix")
    n = matrix.shape[0]
    reduced, pivots = row_reduce(np.hstack([matrix, np.eye(n, dtype=DTYPE)]), fp, pivot_limit=n)
    if pivots != tuple(range(n)):
        raise ValueError("matrix is singular")
    return frozen(reduced[:, n:].copy())


def _check_budget(what: str, required: int, budget: int | None, field: str) -> None:
    limit = resolve_budget(budget, field)
    if required > limit:
        raise BudgetExceededError(what, required, limit)


def enumerate_vectors(n: int, fp: FieldParams, budget: int | None = None) -> Iterator[FpVector]:
    """
    Streams all ``p**n`` vectors of length n in lexicographic order.

    The budget is checked before the stream is returned.

    :param n: Vector length, at least 1.
    :type n: int
    :param fp: The field.
    :type fp: FieldParams
    :param budget: Maximum number of vectors, defaults to the enumeration budget.
    :type budget: int | None
    :return: An iterator over the vectors.
    :rtype: Iterator[FpVector]
    :raises BudgetExceededError: If ``p**n`` exceeds the budget.
    """
    if n <= 0:
        raise DimensionError("n must be greater than 0")
    _check_budget(f"enumerating GF({fp.p})^{n}", fp.p ** n, budget, "enumeration_budget")
    return (frozen(np.array(coords, dtype=DTYPE))
            for coords in itertools.product(range(fp.p), repeat=n))


def all_vectors(n: int, fp: FieldParams, budget: int | None = None) -> np.ndarray:
    """
    All ``p**n`` vectors of length n as the rows of one array, in
    lexicographic order (row index = base-p value, first coordinate most significant).

    :raises BudgetExceededError: If ``p**n`` exceeds the budget.
    """
    if n < 0:
        raise DimensionError("n must not be negative")
    count = fp.p ** n
    _check_budget(f"enumerating GF({fp.p})^{n}", count, budget, "enumeration_budget")
    powers = fp.p ** np.arange(n - 1, -1, -1, dtype=DTYPE)
    return frozen((np.arange(count, dtype=DTYPE)[:, None] // powers) % fp.p)


def projective_points(n: int, fp: FieldParams, budget: int | None = None) -> np.ndarray:
    """
    One representative per line through the origin: the nonzero vectors whose
    first nonzero coordinate is 1, in lexicographic order.

    Rank conditions that are invariant under scaling only need these
    ``(p**n - 1) / (p - 1)`` vectors.
    """
    vectors = all_vectors(n, fp, budget)
    nonzero = vectors.any(axis=1)
    leading = vectors[np.arange(len(vectors)), np.argmax(vectors != 0, axis=1)]
    return frozen(vectors[nonzero & (leading == 1)].copy())


def gl_order(n: int, p: int) -> int:
    """
    Order of GL(n, p).
    """
    order = 1
    for i in range(n):
        order *= p ** n - p ** i
    return order


def _reduce_against(basis: list[tuple[int, np.ndarray]], vector: np.ndarray, p: int) \
        -> np.ndarray:
    """
    Reduces ``vector`` against echelon rows given as ``(pivot, row)`` with unit pivots.
    """
    residue = vector.copy()
    for pivot, row in basis:
        if residue[pivot]:
            residue = (residue - residue[pivot] * row) % p
    return residue


def enumerate_invertible(n: int, fp: FieldParams) -> Iterator[FpMatrix]:
    """
    Streams GL(n, p) in lexicographic order of the row-major entries.

    Rows are chosen one at a time; a candidate row is skipped as soon as it
    lies in the span of the rows already chosen.

    :param n: Matrix size.
    :type n: int
    :param fp: The field.
    :type fp: FieldParams
    :return: An iterator over invertible matrices.
    :rtype: Iterator[FpMatrix]
    """
    candidates = all_vectors(n, fp)

    def extend(chosen: list[np.ndarray], basis: list[tuple[int, np.ndarray]]) \
            -> Iterator[FpMatrix]:
        if len(chosen) == n:
            yield frozen(np.array(chosen, dtype=DTYPE))
            return
        for candidate in candidates:
            residue = _reduce_against(basis, candidate, fp.p)
            nonzero = np.flatnonzero(residue)
            if nonzero.size == 0:
                continue
            pivot = int(nonzero[0])
            row = (residue * fp.inverse(residue[pivot])) % fp.p
            yield from extend(chosen + [candidate], basis + [(pivot, row)])

    return extend([], [])


def random_matrix(rows: int, cols: int, fp: FieldParams, rng: np.random.Generator) -> FpMatrix:
    """
    Matrix with entries drawn uniformly from ``[0, p)``.
    """
    return frozen(rng.integers(0, fp.p, size=(rows, cols), dtype=DTYPE))


def random_invertible(n: int, fp: FieldParams, rng: np.random.Generator) -> FpMatrix:
    """
    Uniformly random element of GL(n, p) by rejection sampling.
    """
    while True:
        candidate = random_matrix(n, n, fp, rng)
        if is_invertible(candidate, fp):
            return candidate
