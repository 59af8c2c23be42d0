"""
Embedding class-two groups of exponent p into ultraspecial groups.

An exponent-p group of class at most two is determined by its commutator
map ``gamma``, an alternating map from the generators V0 to the central
coordinates W0. After padding to ``n = m``, the group G(alpha, gamma / 2)
contains a subgroup B whose commutator map is gamma.
"""
import dataclasses
import logging

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.bilinear.constructors import field_quotient_map
from semifieldpy.exceptions import DimensionError
from semifieldpy.group.spec import GroupSpec
from semifieldpy.linalg.field import DTYPE

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Class2Data:
    """
    The commutator map of a class-two group of exponent p.

    :ivar gamma: Alternating map on ``n0`` generators with ``m0`` central coordinates.
    :type gamma: BilinearMap
    :raises ValueError: If gamma is not alternating or p = 2.
    """
    gamma: BilinearMap

    def __post_init__(self):
        if self.gamma.p == 2:
            raise ValueError("class-two data needs an odd prime")
        if not self.gamma.is_alternating():
            raise ValueError("gamma must be alternating")

    @property
    def p(self) -> int:
        return self.gamma.p

    @property
    def n0(self) -> int:
        return self.gamma.n

    @property
    def m0(self) -> int:
        return self.gamma.m

    @property
    def is_padded(self) -> bool:
        return self.n0 == self.m0


def pad(data: Class2Data) -> Class2Data:
    """
    Balances the dimensions to ``n = m = max(n0, m0)``.

    Extra generators (``n0 < m0``) get zero rows and columns, i.e. a central
    direct factor; extra central coordinates (``m0 < n0``) get zero slices.
    The original coordinates keep their values.
    """
    size = max(data.n0, data.m0)
    if data.is_padded:
        return data
    slices = np.zeros((size, size, size), dtype=DTYPE)
    slices[:data.m0, :data.n0, :data.n0] = data.gamma.slices
    _logger.debug("padded class-two data from (%d, %d) to %d", data.n0, data.m0, size)
    return Class2Data(BilinearMap(data.gamma.fp, slices))


def embed_class_two(data: Class2Data, alpha: BilinearMap | None = None) -> GroupSpec:
    """
    The ultraspecial group G(alpha, beta) with ``beta = 2^-1 gamma``, so that
    ``bar(beta) = gamma``.

    :param data: Padded class-two data.
    :type data: Class2Data
    :param alpha: A nonsingular map on the padded dimensions; the field
        quotient map by default.
    :type alpha: BilinearMap | None
    :return: The group.
    :rtype: GroupSpec
    :raises DimensionError: If the data is not padded or alpha has other dimensions.
    :raises NonsingularityError: If alpha is not nonsingular.
    """
    if not data.is_padded:
        raise DimensionError("class-two data must be padded to n = m before embedding")
    fp = data.gamma.fp
    if alpha is None:
        alpha = field_quotient_map(fp, data.n0, data.m0)
    if alpha.dims != data.gamma.dims:
        raise DimensionError(f"alpha has dimensions {alpha.dims}, gamma {data.gamma.dims}")
    beta = data.gamma.scale(fp.inverse(2))
    return GroupSpec(alpha, beta)


def verify_embedding(spec: GroupSpec, data: Class2Data) -> bool:
    """
    Whether the commutators of the canonical B basis reproduce gamma:
    ``[(0, e_i, 0), (0, e_j, 0)] = (0, 0, gamma(e_i, e_j))`` for all i, j.

    Data is padded first; a dimension mismatch with the group gives False.
    """
    data = pad(data)
    if (spec.p, spec.n, spec.m) != data.gamma.dims:
        return False
    basis = spec.canonical_b_basis()
    for i, left in enumerate(basis):
        for j, right in enumerate(basis):
            value = spec.commutator_by_product(left, right).c
            if value != tuple(int(x) for x in data.gamma.slices[:, i, j]):
                _logger.info("commutator of B basis pair (%d, %d) differs from gamma", i, j)
                return False
    return True
