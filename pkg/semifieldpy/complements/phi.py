"""
The linear map ``phi_alpha : add(V) -> alt(V, W)``,

    phi_alpha(f)(v1, v2) = alpha(f(v1), v2) - alpha(f(v2), v1),

and what it says about abelian complements ``B_f`` of the canonical
abelian subgroup A in G(alpha, beta).

Bases: the domain basis is the elementary matrices ``E_rs`` in row-major
order (coordinate ``r * n + s``); the codomain basis is the
:class:`AlternatingCoords` order ``(i < j, k)``.
"""
import dataclasses
import itertools
import logging

import numpy as np

from semifieldpy.bilinear.basemap import AlternatingCoords, BilinearMap, alt_dimension
from semifieldpy.bilinear.constructors import random_nonsingular
from semifieldpy.config import resolve_budget
from semifieldpy.exceptions import (BudgetExceededError, DimensionError, NonsingularityError)
from semifieldpy.linalg.elimination import (all_vectors, is_invertible, kernel_basis, rank,
                                            row_reduce, solve)
from semifieldpy.linalg.field import DTYPE, FieldParams, FpMatrix, FpVector, frozen
from semifieldpy.outcome import SearchOutcome, SearchStatus
from semifieldpy.parallel import map_chunks

_logger = logging.getLogger(__name__)

AdditiveMap = FpMatrix

DOMAIN_BASIS = "elementary matrices E_rs, row-major (coordinate r*n+s)"
CODOMAIN_BASIS = "alternating coordinates (i<j, k), lexicographic"


def _check_additive(alpha: BilinearMap, f) -> np.ndarray:
    f = np.asarray(f, dtype=DTYPE)
    if f.shape != (alpha.n, alpha.n):
        raise DimensionError(f"additive map must be {alpha.n}x{alpha.n}, got {f.shape}")
    return np.mod(f, alpha.p)


def phi_alpha_apply(alpha: BilinearMap, f: AdditiveMap) -> BilinearMap:
    """
    Evaluates ``phi_alpha(f)``; slice k of the result is ``f^T A_k - (f^T A_k)^T``.

    :param alpha: Any biadditive map.
    :type alpha: BilinearMap
    :param f: ``n x n`` matrix of an additive map of V.
    :type f: AdditiveMap
    :return: An alternating map.
    :rtype: BilinearMap
    :raises DimensionError: If f is not ``n x n``.
    """
    f = _check_additive(alpha, f)
    twisted = np.einsum("ji,kjl->kil", f, alpha.slices)
    return BilinearMap(alpha.fp, twisted - twisted.transpose(0, 2, 1))


def derived_symmetric_map(alpha: BilinearMap, f: AdditiveMap) -> BilinearMap:
    """
    The map ``alpha_f(v1, v2) = alpha(f(v1), v2)``; symmetric when f lies in
    the kernel of ``phi_alpha``.
    """
    f = _check_additive(alpha, f)
    return alpha.precompose(f, alpha.fp.identity(alpha.n))


@dataclasses.dataclass(frozen=True, eq=False)
class PhiMatrix:
    """
    Matrix of ``phi_alpha`` in the fixed bases, with kernel and image data.

    :ivar alpha: The map the matrix belongs to.
    :type alpha: BilinearMap
    :ivar matrix: ``(m n (n-1) / 2) x n**2`` matrix.
    :type matrix: FpMatrix
    :ivar kernel_dim: Dimension of the kernel.
    :type kernel_dim: int
    :ivar image_dim: Dimension of the image.
    :type image_dim: int
    :ivar kernel: Basis of the kernel in domain coordinates.
    :type kernel: tuple[FpVector, ...]
    :ivar image_echelon: Reduced echelon rows spanning the image.
    :type image_echelon: FpMatrix
    :ivar image_pivots: Pivot coordinates of ``image_echelon``.
    :type image_pivots: tuple[int, ...]
    """
    alpha: BilinearMap
    matrix: FpMatrix
    kernel_dim: int
    image_dim: int
    kernel: tuple[FpVector, ...]
    image_echelon: FpMatrix
    image_pivots: tuple[int, ...]

    @property
    def domain_dim(self) -> int:
        return self.alpha.n ** 2

    @property
    def codomain_dim(self) -> int:
        return alt_dimension(self.alpha.n, self.alpha.m)

    @property
    def codimension(self) -> int:
        """
        Dimension of alt(V, W) modulo the image.
        """
        return self.codomain_dim - self.image_dim

    @property
    def coset_count(self) -> int:
        return self.alpha.p ** self.codimension

    @property
    def free_coordinates(self) -> tuple[int, ...]:
        """
        Codomain coordinates that are not pivots of the image; the vectors
        supported on them form a complement of the image.
        """
        return tuple(i for i in range(self.codomain_dim) if i not in self.image_pivots)

    def apply(self, f: AdditiveMap) -> AlternatingCoords:
        """
        ``phi_alpha(f)`` computed through the matrix.
        """
        f = _check_additive(self.alpha, f)
        values = self.alpha.fp.matmul(self.matrix, f.reshape(-1)) if self.codomain_dim else []
        return AlternatingCoords.from_vector(self.alpha.fp, self.alpha.n, self.alpha.m, values)

    def kernel_element(self, coefficients) -> AdditiveMap:
        """
        The additive map ``sum_i coefficients[i] * kernel[i]``.
        """
        n = self.alpha.n
        if not self.kernel:
            return self.alpha.fp.zeros(n, n)
        combined = np.asarray(coefficients, dtype=DTYPE) @ np.array(self.kernel)
        return self.alpha.fp.reduce(combined.reshape(n, n))

    def reduce(self, coords: AlternatingCoords) -> AlternatingCoords:
        """
        The representative of the coset of the image containing ``coords``:
        the unique element of that coset supported on :attr:`free_coordinates`.
        """
        residue = np.array(coords.coords, dtype=DTYPE)
        for row, pivot in zip(self.image_echelon, self.image_pivots):
            if residue[pivot]:
                residue = np.mod(residue - residue[pivot] * row, self.alpha.p)
        return AlternatingCoords.from_vector(self.alpha.fp, self.alpha.n, self.alpha.m, residue)


def phi_alpha_matrix(alpha: BilinearMap) -> PhiMatrix:
    """
    Builds the matrix of ``phi_alpha``: the column for ``E_rs`` holds the
    alternating coordinates of ``phi_alpha(E_rs)``.

    :param alpha: Any biadditive map.
    :type alpha: BilinearMap
    :return: The matrix with kernel and image data.
    :rtype: PhiMatrix
    """
    n, fp = alpha.n, alpha.fp
    codomain = alt_dimension(n, alpha.m)
    columns = []
    for r, s in itertools.product(range(n), repeat=2):
        elementary = np.zeros((n, n), dtype=DTYPE)
        elementary[r, s] = 1
        columns.append(phi_alpha_apply(alpha, elementary).alt_coords().coords)
    matrix = frozen(np.array(columns, dtype=DTYPE).reshape(n * n, codomain).T.copy())
    if codomain:
        image_dim = rank(matrix, fp)
        echelon, pivots = row_reduce(matrix.T, fp)
        echelon = frozen(echelon[:len(pivots)].copy())
    else:
        image_dim, pivots = 0, ()
        echelon = fp.zeros(0, 0)
    kernel = tuple(kernel_basis(matrix, fp))
    _logger.debug("phi_alpha for p=%d n=%d m=%d: image %d, kernel %d",
                  fp.p, n, alpha.m, image_dim, len(kernel))
    return PhiMatrix(alpha, matrix, len(kernel), image_dim, kernel, echelon, tuple(pivots))


def is_bf_abelian(alpha: BilinearMap, beta: BilinearMap, f: AdditiveMap,
                  exhaustive: bool = False, budget: int | None = None) -> bool:
    """
    Whether ``B_f = {(f(v), v, c)}`` is abelian in G(alpha, beta), i.e.
    ``alpha(f(v1), v2) - alpha(f(v2), v1) + bar(beta)(v1, v2) = 0``.

    By bilinearity the basis pairs suffice. With ``exhaustive`` the condition is
    evaluated on every vector pair as well and both answers must agree.

    :param alpha: The alpha of the group.
    :type alpha: BilinearMap
    :param beta: The beta of the group.
    :type beta: BilinearMap
    :param f: The additive map indexing the complement.
    :type f: AdditiveMap
    :param exhaustive: Whether to double-check on all ``p**(2n)`` vector pairs.
    :type exhaustive: bool
    :param budget: Budget for the exhaustive double-check.
    :type budget: int | None
    :return: True if the commutator map vanishes on ``B_f``.
    :rtype: bool
    :raises BudgetExceededError: If the exhaustive double-check is over budget.
    """
    f = _check_additive(alpha, f)
    on_basis = phi_alpha_apply(alpha, f).add(beta.bar()).is_zero()
    if not exhaustive:
        return on_basis
    limit = resolve_budget(budget, "enumeration_budget")
    if alpha.p ** (2 * alpha.n) > limit:
        raise BudgetExceededError("exhaustive B_f check", alpha.p ** (2 * alpha.n), limit)
    vectors = all_vectors(alpha.n, alpha.fp, limit)
    images = np.mod(vectors @ f.T, alpha.p)
    left, right = vectors[:, None, :], vectors[None, :, :]
    values = (alpha.evaluate_many(images[:, None, :], right)
              - alpha.evaluate_many(images[None, :, :], left)
              + beta.evaluate_many(left, right) - beta.evaluate_many(right, left))
    everywhere = not np.mod(values, alpha.p).any()
    if everywhere != on_basis:
        raise AssertionError("basis and exhaustive B_f checks disagree")
    return everywhere


@dataclasses.dataclass(frozen=True, eq=False)
class ComplementReport:
    """
    Abelian complements of A in G(alpha, beta).

    :ivar has_abelian_complement: Whether some ``B_f`` is abelian.
    :type has_abelian_complement: bool
    :ivar witness_f: An additive map with ``B_f`` abelian, if one exists.
    :type witness_f: AdditiveMap | None
    :ivar count: Number of abelian complements, ``p**kernel_dim`` or 0.
    :type count: int
    :ivar kernel_dim: Dimension of the kernel of ``phi_alpha``.
    :type kernel_dim: int
    :ivar image_dim: Dimension of the image of ``phi_alpha``.
    :type image_dim: int
    :ivar coset_count: Number of cosets of the image in alt(V, W).
    :type coset_count: int
    """
    has_abelian_complement: bool
    witness_f: AdditiveMap | None
    count: int
    kernel_dim: int
    image_dim: int
    coset_count: int

    def to_dict(self) -> dict:
        """
        JSON-ready mapping mirroring the fields, plus the basis conventions.
        """
        return {
            "has_abelian_complement": self.has_abelian_complement,
            "witness_f": None if self.witness_f is None else self.witness_f.tolist(),
            "count": self.count,
            "kernel_dim": self.kernel_dim,
            "image_dim": self.image_dim,
            "coset_count": self.coset_count,
            "domain_basis": DOMAIN_BASIS,
            "codomain_basis": CODOMAIN_BASIS,
        }


def abelian_complement_report(alpha: BilinearMap, beta: BilinearMap,
                              phi: PhiMatrix | None = None) -> ComplementReport:
    """
    Decides whether A has an abelian complement by solving
    ``phi_alpha(f) = -bar(beta)``; when solvable the abelian complements are in
    bijection with the kernel.

    :param alpha: The alpha of the group.
    :type alpha: BilinearMap
    :param beta: The beta of the group.
    :type beta: BilinearMap
    :param phi: A precomputed matrix of ``phi_alpha``.
    :type phi: PhiMatrix | None
    :return: The report.
    :rtype: ComplementReport
    """
    if alpha.dims != beta.dims:
        raise DimensionError(f"alpha has dimensions {alpha.dims}, beta {beta.dims}")
    phi = phi_alpha_matrix(alpha) if phi is None else phi
    target = beta.bar().negate().alt_coords().to_vector()
    solution = solve(phi.matrix, target, alpha.fp) if phi.codomain_dim else \
        alpha.fp.zeros(alpha.n ** 2)
    if solution is None:
        return ComplementReport(False, None, 0, phi.kernel_dim, phi.image_dim, phi.coset_count)
    witness = frozen(solution.reshape(alpha.n, alpha.n).copy())
    if not is_bf_abelian(alpha, beta, witness):
        raise AssertionError("solution of phi_alpha(f) = -bar(beta) does not give an abelian B_f")
    return ComplementReport(True, witness, alpha.p ** phi.kernel_dim, phi.kernel_dim,
                            phi.image_dim, phi.coset_count)


def count_abelian_complements_exhaustive(alpha: BilinearMap, beta: BilinearMap,
                                         budget: int | None = None,
                                         jobs: int | None = None) -> int:
    """
    Counts abelian ``B_f`` by running through all ``p**(n*n)`` additive maps f,
    evaluating the commutator condition directly on the basis.

    :param alpha: The alpha of the group.
    :type alpha: BilinearMap
    :param beta: The beta of the group.
    :type beta: BilinearMap
    :param budget: Maximum number of maps, defaults to the coset budget.
    :type budget: int | None
    :param jobs: Worker count.
    :type jobs: int | None
    :return: The number of f with ``B_f`` abelian.
    :rtype: int
    :raises BudgetExceededError: If ``p**(n*n)`` exceeds the budget.
    """
    n, p = alpha.n, alpha.p
    limit = resolve_budget(budget, "coset_budget")
    maps = all_vectors(n * n, alpha.fp, limit).reshape(-1, n, n)
    beta_bar = beta.bar().slices
    block = 4096

    def count(chunk: range) -> int:
        total = 0
        for start in range(chunk.start, chunk.stop, block):
            fs = maps[start:min(start + block, chunk.stop)]
            twisted = np.einsum("fji,kjl->fkil", fs, alpha.slices)
            values = np.mod(twisted - twisted.transpose(0, 1, 3, 2) + beta_bar, p)
            total += int(np.count_nonzero(~values.reshape(len(fs), -1).any(axis=1)))
        return total

    return sum(map_chunks(count, range(len(maps)), jobs))


def coset_representatives(alpha: BilinearMap, budget: int | None = None,
                          phi: PhiMatrix | None = None) -> list[AlternatingCoords]:
    """
    One representative per coset of the image of ``phi_alpha`` in alt(V, W).

    Representatives are the vectors supported on the non-pivot coordinates
    of the image's echelon form, in lexicographic order; the first one is zero.

    :param alpha: Any biadditive map.
    :type alpha: BilinearMap
    :param budget: Maximum number of cosets, defaults to the coset budget.
    :type budget: int | None
    :param phi: A precomputed matrix of ``phi_alpha``.
    :type phi: PhiMatrix | None
    :return: The representatives.
    :rtype: list[AlternatingCoords]
    :raises BudgetExceededError: If there are more cosets than the budget; the
        error's ``required`` field holds the coset count.
    """
    phi = phi_alpha_matrix(alpha) if phi is None else phi
    limit = resolve_budget(budget, "coset_budget")
    if phi.coset_count > limit:
        raise BudgetExceededError("listing coset representatives", phi.coset_count, limit)
    free = phi.free_coordinates
    representatives = []
    for values in itertools.product(range(alpha.p), repeat=len(free)):
        coords = [0] * phi.codomain_dim
        for position, value in zip(free, values):
            coords[position] = value
        representatives.append(AlternatingCoords(alpha.fp, alpha.n, alpha.m, tuple(coords)))
    return representatives


def coset_representative(alpha: BilinearMap, coords: AlternatingCoords,
                         phi: PhiMatrix | None = None) -> AlternatingCoords:
    """
    The representative (as listed by :func:`coset_representatives`) of the
    coset containing ``coords``.
    """
    phi = phi_alpha_matrix(alpha) if phi is None else phi
    return phi.reduce(coords)


def symmetric_isotope_search(alpha: BilinearMap, budget: int | None = None, seed: int = 0,
                             phi: PhiMatrix | None = None) -> SearchOutcome[AdditiveMap]:
    """
    Looks for an invertible f in the kernel of ``phi_alpha``. Such an f makes
    ``alpha_f(v1, v2) = alpha(f(v1), v2)`` symmetric, nonsingular and
    isotopic to alpha through ``(f, 1, 1)``.

    The identity is tried first. The kernel is then enumerated in
    lexicographic coefficient order when it has at most ``budget`` elements;
    otherwise ``budget`` seeded random kernel elements are tried and failure
    is reported as INCONCLUSIVE.

    :param alpha: A generalized nonsingular map.
    :type alpha: BilinearMap
    :param budget: Kernel size limit for exhaustive search, defaults to the kernel budget.
    :type budget: int | None
    :param seed: Seed for the sampling mode.
    :type seed: int
    :param phi: A precomputed matrix of ``phi_alpha``.
    :type phi: PhiMatrix | None
    :return: FOUND with f, NONE after exhausting the kernel, or INCONCLUSIVE.
    :rtype: SearchOutcome[AdditiveMap]
    :raises NonsingularityError: If alpha is not nonsingular.
    """
    if not alpha.is_nonsingular():
        raise NonsingularityError("symmetric_isotope_search needs a nonsingular alpha")
    phi = phi_alpha_matrix(alpha) if phi is None else phi
    fp = alpha.fp
    limit = resolve_budget(budget, "kernel_budget")
    identity = fp.identity(alpha.n)
    if phi_alpha_apply(alpha, identity).is_zero():
        return SearchOutcome(SearchStatus.FOUND, identity, 1)
    dim = phi.kernel_dim
    if dim == 0:
        return SearchOutcome(SearchStatus.NONE, None, 1)
    if fp.p ** dim <= limit:
        examined = 1
        for coefficients in itertools.product(range(fp.p), repeat=dim):
            if not any(coefficients):
                continue
            examined += 1
            candidate = phi.kernel_element(coefficients)
            if is_invertible(candidate, fp):
                return SearchOutcome(SearchStatus.FOUND, candidate, examined)
        return SearchOutcome(SearchStatus.NONE, None, examined)
    rng = np.random.default_rng(seed)
    for attempt in range(limit):
        candidate = phi.kernel_element(rng.integers(0, fp.p, size=dim))
        if is_invertible(candidate, fp):
            return SearchOutcome(SearchStatus.FOUND, candidate, attempt + 2)
    _logger.info("symmetric isotope search inconclusive after %d samples", limit)
    return SearchOutcome(SearchStatus.INCONCLUSIVE, None, limit + 1)


def middle_nucleus(alpha: BilinearMap, budget: int | None = None) -> int:
    """
    Size of ``{v : alpha(alpha(u, v), w) = alpha(u, alpha(v, w)) for all u, w}``.

    :param alpha: A map with ``n = m``.
    :type alpha: BilinearMap
    :param budget: Enumeration budget for the ``p**n`` candidates.
    :type budget: int | None
    :return: Number of v satisfying the condition on all basis pairs.
    :rtype: int
    :raises DimensionError: If ``n != m``.
    :raises BudgetExceededError: If ``p**n`` exceeds the budget.
    """
    if alpha.n != alpha.m:
        raise DimensionError("middle_nucleus needs n = m")
    slices = alpha.slices
    vectors = all_vectors(alpha.n, alpha.fp, budget)
    left_inner = np.einsum("kij,vj->vik", slices, vectors)
    left = np.einsum("via,kal->vilk", left_inner, slices)
    right_inner = np.einsum("vi,kil->vlk", vectors, slices)
    right = np.einsum("kib,vlb->vilk", slices, right_inner)
    agree = ~np.mod(left - right, alpha.p).reshape(len(vectors), -1).any(axis=1)
    return int(np.count_nonzero(agree))


def find_image_deficient_alpha(fp: FieldParams, n: int, m: int, seed: int,
                               attempts: int = 200) -> BilinearMap | None:
    """
    Seeded random search for a nonsingular alpha whose ``phi_alpha`` is not
    onto alt(V, W).

    :return: The first such alpha, or None after ``attempts`` candidates.
    :rtype: BilinearMap | None
    """
    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        alpha = random_nonsingular(fp, n, m, int(rng.integers(0, 2 ** 31)))
        phi = phi_alpha_matrix(alpha)
        if phi.image_dim < phi.codomain_dim:
            _logger.info("image-deficient alpha found after %d attempts", attempt + 1)
            return alpha
    return None
