"""
Recovering ``(alpha, beta)`` data from a group G(alpha, beta) and a choice
of bases for A/G', G/A and G'.

With ``d`` a basis change of A/G', ``s`` one of G/A (through the canonical
complement B) and ``t`` one of G', the extracted maps are

    alpha'(v, w)   = t [(d v, 0, 0), (0, s w, 0)]
    beta'(v1, v2)  = 1/2 t [(0, s v1, 0), (0, s v2, 0)]

where ``[g, h]`` is read off in the W coordinate. Commutators are formed with
the group multiplication, not with the closed formula.
"""
import dataclasses
import itertools
import logging
from typing import NamedTuple

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.exceptions import DimensionError, NonsingularityError
from semifieldpy.group.spec import GroupSpec
from semifieldpy.isotopy.isotopism import Isotopism
from semifieldpy.linalg.elimination import inverse_matrix, is_invertible, random_invertible
from semifieldpy.linalg.field import DTYPE, FieldParams, FpMatrix

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, eq=False)
class ExtractionBasis:
    """
    Three invertible basis changes.

    :ivar fp: The prime field.
    :type fp: FieldParams
    :ivar d: ``n x n``, on A modulo the center.
    :type d: FpMatrix
    :ivar s: ``n x n``, on G modulo A.
    :type s: FpMatrix
    :ivar t: ``m x m``, on the center.
    :type t: FpMatrix
    :raises NonsingularityError: If a matrix is not invertible.
    """
    fp: FieldParams
    d: FpMatrix
    s: FpMatrix
    t: FpMatrix

    def __post_init__(self):
        for name in ("d", "s", "t"):
            matrix = self.fp.reduce(getattr(self, name))
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
                raise DimensionError(f"{name} must be a square matrix")
            if not is_invertible(matrix, self.fp):
                raise NonsingularityError(f"basis change {name} is not invertible")
            object.__setattr__(self, name, matrix)
        if self.d.shape != self.s.shape:
            raise DimensionError("d and s must have the same size")

    @classmethod
    def identity(cls, fp: FieldParams, n: int, m: int) -> 'ExtractionBasis':
        return cls(fp, fp.identity(n), fp.identity(n), fp.identity(m))

    @classmethod
    def random(cls, fp: FieldParams, n: int, m: int, seed: int) -> 'ExtractionBasis':
        """
        Uniformly random invertible basis changes from a seeded generator.
        """
        rng = np.random.default_rng(seed)
        return cls(fp, random_invertible(n, fp, rng), random_invertible(n, fp, rng),
                   random_invertible(m, fp, rng))


class ExtractedMaps(NamedTuple):
    """
    Result of :func:`extract_maps`; ``witness`` is an isotopism from
    ``alpha`` (the extracted map) to the alpha of the input group.
    """
    alpha: BilinearMap
    beta: BilinearMap | None
    witness: Isotopism


def _commutator_values(spec: GroupSpec, left: tuple, right: tuple) -> np.ndarray:
    """
    W coordinates of ``g^-1 h^-1 g h`` for row-stacked g (``left``) and h (``right``).
    """
    inverses = spec.multiply_arrays(spec.inverse_arrays(left), spec.inverse_arrays(right))
    return spec.multiply_arrays(inverses, spec.multiply_arrays(left, right))[2]


def _pairs(spec: GroupSpec, first: FpMatrix, second: FpMatrix, first_in_a: bool) \
        -> tuple[tuple, tuple]:
    """
    Row-stacked element pairs over all basis pairs ``(i, j)`` in row-major order:
    ``(first e_i in A or B, 0)`` against ``(0, second e_j, 0)``.
    """
    n, m = spec.n, spec.m
    indices = np.array(list(itertools.product(range(n), repeat=2)), dtype=DTYPE)
    vectors_i = first.T[indices[:, 0]]
    vectors_j = second.T[indices[:, 1]]
    zeros_n = np.zeros_like(vectors_i)
    zeros_m = np.zeros((len(indices), m), dtype=DTYPE)
    left = (vectors_i, zeros_n, zeros_m) if first_in_a else (zeros_n, vectors_i, zeros_m)
    right = (zeros_n, vectors_j, zeros_m)
    return left, right


def _map_from_commutators(spec: GroupSpec, values: np.ndarray, t: FpMatrix) -> BilinearMap:
    """
    Arranges ``t`` applied to commutator values (one row per basis pair) as slices.
    """
    n = spec.n
    scaled = np.mod(values @ t.T, spec.p)
    return BilinearMap(spec.fp, scaled.T.reshape(spec.m, n, n))


def extract_alpha(spec: GroupSpec, basis: ExtractionBasis) -> tuple[BilinearMap, Isotopism]:
    """
    The extracted ``alpha'(v, w) = t [(d v, 0, 0), (0, s w, 0)]`` and the
    isotopism ``(d, s, t^-1)`` from alpha' to ``spec.alpha``.

    :raises DimensionError: If the basis does not fit the group.
    """
    if basis.fp != spec.fp or basis.d.shape[0] != spec.n or basis.t.shape[0] != spec.m:
        raise DimensionError("extraction basis does not match the group dimensions")
    left, right = _pairs(spec, basis.d, basis.s, first_in_a=True)
    alpha = _map_from_commutators(spec, _commutator_values(spec, left, right), basis.t)
    witness = Isotopism(spec.fp, basis.d, basis.s, inverse_matrix(basis.t, spec.fp))
    return alpha, witness


def extract_maps(spec: GroupSpec, basis: ExtractionBasis, include_beta: bool = True) \
        -> ExtractedMaps:
    """
    Extracts ``alpha'`` and ``beta'`` from a group with its canonical A and B.

    :param spec: The group.
    :type spec: GroupSpec
    :param basis: The basis changes ``(d, s, t)``.
    :type basis: ExtractionBasis
    :param include_beta: Whether to extract beta' as well (needs p odd).
    :type include_beta: bool
    :return: ``(alpha', beta', witness)``; beta' is None when not requested.
    :rtype: ExtractedMaps
    :raises ValueError: If beta' is requested for p = 2.
    :raises DimensionError: If the basis does not fit the group.
    """
    if include_beta and spec.p == 2:
        raise ValueError("beta extraction needs an odd prime (2 is not invertible)")
    alpha, witness = extract_alpha(spec, basis)
    beta = None
    if include_beta:
        left, right = _pairs(spec, basis.s, basis.s, first_in_a=False)
        half = spec.fp.inverse(2)
        values = _commutator_values(spec, left, right) * half
        beta = _map_from_commutators(spec, values, basis.t)
    _logger.debug("extracted maps for p=%d n=%d m=%d", spec.p, spec.n, spec.m)
    return ExtractedMaps(alpha, beta, witness)
