"""
Maps between groups G(alpha1, beta1) -> G(alpha2, beta2) and the
homomorphism check used to certify them.
"""
import logging
from abc import ABC, abstractmethod

import numpy as np

from semifieldpy.config import resolve_budget
from semifieldpy.exceptions import BudgetExceededError, DimensionError, IsomorphismError
from semifieldpy.group.checkmode import CheckMode, ExhaustiveCheck
from semifieldpy.group.spec import GroupElement, GroupSpec
from semifieldpy.isotopy.isotopism import Isotopism, check_anti_isotopism, check_isotopism
from semifieldpy.linalg.field import DTYPE, FpMatrix

_logger = logging.getLogger(__name__)

Coordinates = tuple[np.ndarray, np.ndarray, np.ndarray]


class ElementMap(ABC):
    """
    Abstract base class of maps from the elements of ``source`` to those of ``target``.

    Subclasses implement :meth:`apply_arrays` on row-stacked coordinates;
    calling the map on a :class:`GroupElement` goes through it.

    :param source: The domain group.
    :type source: GroupSpec
    :param target: The codomain group.
    :type target: GroupSpec
    """
    def __init__(self, source: GroupSpec, target: GroupSpec):
        if source.p != target.p:
            raise DimensionError("source and target must be defined over the same prime")
        self.source = source
        self.target = target

    @abstractmethod
    def apply_arrays(self, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Coordinates:
        """
        Images of the elements whose coordinates are the rows of ``a``, ``b`` and ``c``.
        """

    def __call__(self, element: GroupElement) -> GroupElement:
        a, b, c = element.arrays()
        images = self.apply_arrays(a[None, :], b[None, :], c[None, :])
        return GroupElement.of(images[0][0], images[1][0], images[2][0], self.target.p)


class CoordinateMap(ElementMap):
    """
    The map ``(u, v, w) -> (a u, b v, c w)``.
    """
    def __init__(self, source: GroupSpec, target: GroupSpec, a: FpMatrix, b: FpMatrix,
                 c: FpMatrix):
        super().__init__(source, target)
        self.a = np.asarray(a, dtype=DTYPE)
        self.b = np.asarray(b, dtype=DTYPE)
        self.c = np.asarray(c, dtype=DTYPE)

    @classmethod
    def identity(cls, spec: GroupSpec) -> 'CoordinateMap':
        fp = spec.fp
        return cls(spec, spec, fp.identity(spec.n), fp.identity(spec.n), fp.identity(spec.m))

    def apply_arrays(self, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Coordinates:
        p = self.target.p
        return np.mod(a @ self.a.T, p), np.mod(b @ self.b.T, p), np.mod(c @ self.c.T, p)


class AntiIsotopismMap(ElementMap):
    """
    The map ``(v, w, z) -> (b w, a v, c(alpha1(v, w) - z))`` built from an
    anti-isotopism ``(a, b, c)``.
    """
    def __init__(self, source: GroupSpec, target: GroupSpec, a: FpMatrix, b: FpMatrix,
                 c: FpMatrix):
        super().__init__(source, target)
        self.a = np.asarray(a, dtype=DTYPE)
        self.b = np.asarray(b, dtype=DTYPE)
        self.c = np.asarray(c, dtype=DTYPE)

    def apply_arrays(self, a: np.ndarray, b: np.ndarray, c: np.ndarray) -> Coordinates:
        p = self.target.p
        third = self.source.alpha.evaluate_many(a, b) - c
        return np.mod(b @ self.b.T, p), np.mod(a @ self.a.T, p), np.mod(third @ self.c.T, p)


def _first_basis_mismatch(left: np.ndarray, right: np.ndarray) -> tuple[int, int]:
    i, j = np.argwhere((left != right).any(axis=0))[0]
    return int(i), int(j)


def group_isomorphism_from_isotopism(iso: Isotopism, spec1: GroupSpec,
                                     spec2: GroupSpec) -> CoordinateMap:
    """
    The isomorphism ``(u, v, w) -> (a u, b v, c w)`` from G(alpha1, beta1) to
    G(alpha2, beta2), valid when ``(a, b, c)`` is an isotopism of the alphas and
    ``beta2(b v1, b v2) = c beta1(v1, v2)``.

    :param iso: An isotopism from ``spec1.alpha`` to ``spec2.alpha``.
    :type iso: Isotopism
    :param spec1: The source group.
    :type spec1: GroupSpec
    :param spec2: The target group.
    :type spec2: GroupSpec
    :return: The coordinate map.
    :rtype: CoordinateMap
    :raises IsomorphismError: If either condition fails; the beta failure names
        the first failing basis pair.
    """
    if not check_isotopism(spec1.alpha, spec2.alpha, iso):
        raise IsomorphismError("the triple is not an isotopism between the alpha maps")
    moved = spec2.beta.precompose(iso.b, iso.b)
    expected = spec1.beta.compose_output(iso.c)
    if moved != expected:
        i, j = _first_basis_mismatch(moved.slices, expected.slices)
        raise IsomorphismError(f"beta compatibility fails at basis pair (e_{i}, e_{j})")
    return CoordinateMap(spec1, spec2, iso.a, iso.b, iso.c)


def group_isomorphism_from_anti_isotopism(iso: Isotopism, spec1: GroupSpec,
                                          spec2: GroupSpec) -> AntiIsotopismMap:
    """
    The isomorphism ``(v, w, z) -> (b w, a v, c(alpha1(v, w) - z))`` from
    G(alpha1) to G(alpha2) for an anti-isotopism ``(a, b, c)``.

    :raises IsomorphismError: If a beta is nonzero or the triple is not an
        anti-isotopism.
    """
    if not (spec1.beta.is_zero() and spec2.beta.is_zero()):
        raise IsomorphismError("anti-isotopism maps are only defined for groups with beta = 0")
    if not check_anti_isotopism(spec1.alpha, spec2.alpha, iso):
        raise IsomorphismError("the triple is not an anti-isotopism between the alpha maps")
    return AntiIsotopismMap(spec1, spec2, iso.a, iso.b, iso.c)


def verify_homomorphism(source: GroupSpec, target: GroupSpec, element_map: ElementMap,
                        mode: CheckMode | None = None, cap: int | None = None) -> bool:
    """
    Checks ``map(g1 g2) = map(g1) map(g2)`` on the pairs visited by ``mode``.

    In exhaustive mode the map must also be a bijection, which is checked by
    counting distinct images.

    :param source: The domain group.
    :type source: GroupSpec
    :param target: The codomain group.
    :type target: GroupSpec
    :param element_map: The map to check.
    :type element_map: ElementMap
    :param mode: Pairs to visit, exhaustive by default.
    :type mode: CheckMode | None
    :param cap: Largest order for exhaustive mode, defaults to the table cap.
    :type cap: int | None
    :return: True if every visited pair is respected (and the map is bijective
        in exhaustive mode).
    :rtype: bool
    :raises BudgetExceededError: If exhaustive mode is requested above the cap.
    """
    mode = ExhaustiveCheck() if mode is None else mode
    order = source.order
    if mode.exhaustive:
        limit = resolve_budget(cap, "table_cap")
        if order > limit:
            raise BudgetExceededError("exhaustive homomorphism check", order, limit)
        if target.order != order:
            return False
        images = element_map.apply_arrays(*source.indexer.all_coordinates(limit))
        labels = target.indexer.index(*images)
        if np.unique(labels).size != order:
            _logger.info("map is not injective")
            return False
    for first, second in mode.batches(order, 2):
        left = source.indexer.coordinates(first)
        right = source.indexer.coordinates(second)
        mapped_product = element_map.apply_arrays(*source.multiply_arrays(left, right))
        product_of_maps = target.multiply_arrays(element_map.apply_arrays(*left),
                                                 element_map.apply_arrays(*right))
        agree = np.ones(len(first), dtype=bool)
        for mapped, expected in zip(mapped_product, product_of_maps):
            agree &= (mapped == expected).all(axis=1)
        if not agree.all():
            bad = int(np.argmin(agree))
            _logger.info("homomorphism fails at labels (%d, %d)", first[bad], second[bad])
            return False
    return True
