"""
The group G(alpha, beta) on ``V x V x W`` with multiplication

    (a1, b1, c1)(a2, b2, c2) = (a1 + a2, b1 + b2, c1 + c2 + alpha(a1, b2) + beta(b1, b2)).

All arithmetic uses closed formulas; the oracle package checks them
against multiplication tables.
"""
import dataclasses
import logging
from typing import Sequence

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.exceptions import DimensionError, NonsingularityError
from semifieldpy.group.indexing import ElementIndexer
from semifieldpy.linalg.elimination import projective_points, rank
from semifieldpy.linalg.field import DTYPE
from semifieldpy.parallel import map_chunks

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class GroupElement:
    """
    An element ``(a, b, c)`` of G(alpha, beta), coordinates reduced mod p.

    :ivar a: Coordinates in the first copy of V.
    :type a: tuple[int, ...]
    :ivar b: Coordinates in the second copy of V.
    :type b: tuple[int, ...]
    :ivar c: Coordinates in W.
    :type c: tuple[int, ...]
    """
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]

    @classmethod
    def of(cls, a: Sequence[int], b: Sequence[int], c: Sequence[int], p: int) -> 'GroupElement':
        """
        Builds an element from any integer sequences, reducing them mod p.
        """
        return cls(tuple(int(x) % p for x in a), tuple(int(x) % p for x in b),
                   tuple(int(x) % p for x in c))

    def arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (np.array(self.a, dtype=DTYPE), np.array(self.b, dtype=DTYPE),
                np.array(self.c, dtype=DTYPE))


@dataclasses.dataclass(frozen=True)
class SesReport:
    """
    Outcome of the semi-extraspecial check.

    :ivar holds: Whether every non-central coset commutes onto all of G'.
    :type holds: bool
    :ivar witness_of_failure: A pair ``(a, b)`` whose commutator map has rank below m.
    :type witness_of_failure: tuple[tuple[int, ...], tuple[int, ...]] | None
    :ivar checked: Number of ``(a, b)`` lines examined.
    :type checked: int
    """
    holds: bool
    witness_of_failure: tuple[tuple[int, ...], tuple[int, ...]] | None
    checked: int


class GroupSpec:
    """
    The group G(alpha, beta) given by its defining pair of maps.

    :param alpha: A generalized nonsingular map.
    :type alpha: BilinearMap
    :param beta: Any biadditive map with the dimensions of alpha; zero if omitted.
    :type beta: BilinearMap | None
    :raises DimensionError: If alpha and beta differ in p, n or m.
    :raises NonsingularityError: If alpha is not nonsingular.
    """
    __slots__ = ("_alpha", "_beta", "_indexer")

    def __init__(self, alpha: BilinearMap, beta: BilinearMap | None = None):
        self._assign(alpha, beta)
        if not alpha.is_nonsingular():
            raise NonsingularityError("alpha is not a generalized nonsingular map")

    @classmethod
    def unchecked(cls, alpha: BilinearMap, beta: BilinearMap | None = None) -> 'GroupSpec':
        """
        Builds a spec without the nonsingularity check, so that negative tests
        can construct groups from degenerate data.
        """
        spec = cls.__new__(cls)
        spec._assign(alpha, beta)
        return spec

    def _assign(self, alpha: BilinearMap, beta: BilinearMap | None) -> None:
        beta = BilinearMap.zero(alpha.fp, alpha.n, alpha.m) if beta is None else beta
        if alpha.dims != beta.dims:
            raise DimensionError(f"alpha has dimensions {alpha.dims}, beta {beta.dims}")
        self._alpha = alpha
        self._beta = beta
        self._indexer = ElementIndexer(alpha.p, alpha.n, alpha.m)

    @property
    def alpha(self) -> BilinearMap:
        return self._alpha

    @property
    def beta(self) -> BilinearMap:
        return self._beta

    @property
    def fp(self):
        return self._alpha.fp

    @property
    def p(self) -> int:
        return self._alpha.p

    @property
    def n(self) -> int:
        return self._alpha.n

    @property
    def m(self) -> int:
        return self._alpha.m

    @property
    def order(self) -> int:
        """
        ``p**(2n + m)``.
        """
        return self._indexer.order

    @property
    def indexer(self) -> ElementIndexer:
        return self._indexer

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupSpec):
            return NotImplemented
        return self._alpha == other.alpha and self._beta == other.beta

    def __hash__(self) -> int:
        return hash((self._alpha, self._beta))

    def __repr__(self) -> str:
        return f"GroupSpec(p={self.p}, n={self.n}, m={self.m})"

    # element construction

    def element(self, a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> GroupElement:
        """
        Builds a conforming element.

        :raises DimensionError: If a coordinate tuple has the wrong length.
        """
        return self._conform(GroupElement.of(a, b, c, self.p))

    def _conform(self, element: GroupElement) -> GroupElement:
        if len(element.a) != self.n or len(element.b) != self.n or len(element.c) != self.m:
            raise DimensionError(
                f"element needs coordinate lengths ({self.n}, {self.n}, {self.m})")
        return element

    def _wrap(self, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> GroupElement:
        return GroupElement.of(a.tolist(), b.tolist(), c.tolist(), self.p)

    def identity(self) -> GroupElement:
        """
        The identity ``(0, 0, 0)``.
        """
        return GroupElement((0,) * self.n, (0,) * self.n, (0,) * self.m)

    # vectorized arithmetic on coordinate arrays

    def multiply_arrays(self, left: tuple[np.ndarray, np.ndarray, np.ndarray],
                        right: tuple[np.ndarray, np.ndarray, np.ndarray]) \
            -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Products of coordinate arrays, broadcast row-wise.
        """
        a1, b1, c1 = left
        a2, b2, c2 = right
        p = self.p
        third = (np.asarray(c1) + np.asarray(c2) + self._alpha.evaluate_many(a1, b2)
                 + self._beta.evaluate_many(b1, b2))
        return np.mod(np.asarray(a1) + a2, p), np.mod(np.asarray(b1) + b2, p), np.mod(third, p)

    def commutator_arrays(self, left: tuple[np.ndarray, np.ndarray, np.ndarray],
                          right: tuple[np.ndarray, np.ndarray, np.ndarray]) \
            -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Commutators ``[g1, g2]`` of coordinate arrays by the closed formula
        ``(0, 0, alpha(a1, b2) - alpha(a2, b1) + bar(beta)(b1, b2))``.
        """
        a1, b1 = left[0], left[1]
        a2, b2 = right[0], right[1]
        value = np.mod(self._alpha.evaluate_many(a1, b2) - self._alpha.evaluate_many(a2, b1)
                       + self._beta.evaluate_many(b1, b2) - self._beta.evaluate_many(b2, b1),
                       self.p)
        zeros = np.zeros(value.shape[:-1] + (self.n,), dtype=DTYPE)
        return zeros, zeros.copy(), value

    def power_arrays(self, element: tuple[np.ndarray, np.ndarray, np.ndarray], k: int) \
            -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Powers ``g**k = (ka, kb, kc + C(k, 2)(alpha(a, b) + beta(b, b)))`` of
        coordinate arrays. Every coefficient is reduced mod p first, so any
        ``k >= 0`` is exact.

        :raises ValueError: If k is negative.
        """
        if k < 0:
            raise ValueError("k must not be negative")
        a, b, c = (np.asarray(x, dtype=DTYPE) for x in element)
        linear = k % self.p
        pairs = (k * (k - 1) // 2) % self.p
        third = linear * c + pairs * (self._alpha.evaluate_many(a, b)
                                      + self._beta.evaluate_many(b, b))
        return np.mod(linear * a, self.p), np.mod(linear * b, self.p), np.mod(third, self.p)

    def inverse_arrays(self, element: tuple[np.ndarray, np.ndarray, np.ndarray]) \
            -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Inverses of coordinate arrays: ``(-a, -b, -c + alpha(a, b) + beta(b, b))``.
        """
        a, b, c = (np.asarray(x, dtype=DTYPE) for x in element)
        third = -c + self._alpha.evaluate_many(a, b) + self._beta.evaluate_many(b, b)
        return np.mod(-a, self.p), np.mod(-b, self.p), np.mod(third, self.p)

    # element operations

    def multiply(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        """
        The product ``g1 g2``.

        :raises DimensionError: If an element does not conform to the spec.
        """
        product = self.multiply_arrays(self._conform(g1).arrays(), self._conform(g2).arrays())
        return self._wrap(*product)

    def inverse(self, g: GroupElement) -> GroupElement:
        """
        The inverse of ``g``.
        """
        return self._wrap(*self.inverse_arrays(self._conform(g).arrays()))

    def commutator(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        """
        ``[g1, g2] = g1^-1 g2^-1 g1 g2`` by the closed formula
        ``(0, 0, alpha(a1, b2) - alpha(a2, b1) + bar(beta)(b1, b2))``.
        """
        return self._wrap(*self.commutator_arrays(self._conform(g1).arrays(),
                                                  self._conform(g2).arrays()))

    def commutator_by_product(self, g1: GroupElement, g2: GroupElement) -> GroupElement:
        """
        ``g1^-1 g2^-1 g1 g2`` computed through :meth:`multiply` and :meth:`inverse`.
        """
        left = self.multiply(self.inverse(g1), self.inverse(g2))
        return self.multiply(left, self.multiply(g1, g2))

    def power(self, g: GroupElement, k: int) -> GroupElement:
        """
        ``g**k = (ka, kb, kc + C(k, 2)(alpha(a, b) + beta(b, b)))`` for ``k >= 0``.

        :raises ValueError: If k is negative.
        """
        return self._wrap(*self.power_arrays(self._conform(g).arrays(), k))

    def element_order(self, g: GroupElement) -> int:
        """
        Least ``k >= 1`` with ``g**k = 1``; always divides ``p**2``.
        """
        identity = self.identity()
        for k in (1, self.p, self.p ** 2):
            if self.power(g, k) == identity:
                return k
        raise AssertionError("element order does not divide p^2")

    def exponent(self) -> int:
        """
        Exponent of the group: ``p`` if every ``g**p`` is trivial, else ``p**2``.

        ``g**p = (0, 0, C(p, 2)(alpha(a, b) + beta(b, b)))`` vanishes for odd p; for
        p = 2 it vanishes for all g exactly when ``alpha(a, b) + beta(b, b)`` is
        identically zero, a quadratic form in ``(a, b)`` checked on the basis.
        """
        if self.p != 2:
            return self.p
        quadratic = np.block([[np.zeros_like(self._alpha.slices), self._alpha.slices],
                              [np.zeros_like(self._beta.slices), self._beta.slices]])
        # a quadratic form over GF(2) vanishes iff its diagonal and A + A^T vanish
        diagonal = np.diagonal(quadratic, axis1=1, axis2=2) % 2
        symmetric = (quadratic + quadratic.transpose(0, 2, 1)) % 2
        return 2 if not diagonal.any() and not symmetric.any() else 4

    def in_center(self, g: GroupElement) -> bool:
        """
        Whether ``g`` is central, i.e. ``a = 0`` and ``b = 0``.
        """
        g = self._conform(g)
        return not any(g.a) and not any(g.b)

    def is_ultraspecial(self) -> bool:
        """
        ``|G'| = |G : G'|**(1/2)``, that is ``m = n``.
        """
        return self.m == self.n

    def commutator_matrix(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """
        The ``m x 2n`` matrix of ``(a2, b2) -> alpha(a, b2) - alpha(a2, b) + bar(beta)(b, b2)``.
        """
        alpha = self._alpha.slices
        beta_bar = self._beta.bar().slices
        first = -np.einsum("kij,j->ki", alpha, b)
        second = np.einsum("i,kij->kj", a, alpha) + np.einsum("i,kij->kj", b, beta_bar)
        return np.mod(np.hstack([first, second]), self.p)

    def verify_ses(self, budget: int | None = None, jobs: int | None = None) -> SesReport:
        """
        Checks that commutation with any ``g`` outside G' maps onto G'.

        For every nonzero ``(a, b)`` (one per line, since the rank is scale
        invariant) the linear map :meth:`commutator_matrix` must have rank m.

        :param budget: Enumeration budget for the ``p**(2n)`` pairs.
        :type budget: int | None
        :param jobs: Worker count.
        :type jobs: int | None
        :return: The report, with a failing ``(a, b)`` when the check fails.
        :rtype: SesReport
        :raises BudgetExceededError: If ``p**(2n)`` exceeds the budget.
        """
        points = projective_points(2 * self.n, self.fp, budget)

        def first_failure(chunk: range) -> int | None:
            for index in chunk:
                point = points[index]
                matrix = self.commutator_matrix(point[:self.n], point[self.n:])
                if rank(matrix, self.fp) != self.m:
                    return index
            return None

        failures = [index for index in map_chunks(first_failure, range(len(points)), jobs)
                    if index is not None]
        if not failures:
            return SesReport(True, None, len(points))
        point = points[min(failures)]
        witness = (tuple(int(x) for x in point[:self.n]), tuple(int(x) for x in point[self.n:]))
        _logger.info("semi-extraspecial check failed at (a, b) = %s", witness)
        return SesReport(False, witness, min(failures) + 1)

    def canonical_a_basis(self) -> list[GroupElement]:
        """
        Elements ``(e_i, 0, 0)`` generating A modulo G'.
        """
        return [self.element(np.eye(self.n, dtype=DTYPE)[i], (0,) * self.n, (0,) * self.m)
                for i in range(self.n)]

    def canonical_b_basis(self) -> list[GroupElement]:
        """
        Elements ``(0, e_i, 0)`` generating B modulo G'.
        """
        return [self.element((0,) * self.n, np.eye(self.n, dtype=DTYPE)[i], (0,) * self.m)
                for i in range(self.n)]

