"""
Isotopisms and anti-isotopisms between biadditive maps.

A triple ``(a, b, c)`` is an isotopism from alpha1 to alpha2 when

    alpha2(a v1, b v2) = c alpha1(v1, v2),

and an anti-isotopism when

    alpha2(b v2, a v1) = c alpha1(v1, v2).

Both equations are bilinear, so checking them on basis pairs suffices.
"""
import dataclasses
import enum

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.exceptions import DimensionError, NonsingularityError
from semifieldpy.linalg.elimination import inverse_matrix, is_invertible
from semifieldpy.linalg.field import FieldParams, FpMatrix


class IsotopismKind(enum.Enum):
    ISOTOPISM = "isotopism"
    ANTI_ISOTOPISM = "anti-isotopism"


@dataclasses.dataclass(frozen=True, eq=False)
class Isotopism:
    """
    A triple of invertible matrices together with the relation it is meant to witness.

    :ivar fp: The prime field.
    :type fp: FieldParams
    :ivar a: ``n x n`` matrix acting on the first argument.
    :type a: FpMatrix
    :ivar b: ``n x n`` matrix acting on the second argument.
    :type b: FpMatrix
    :ivar c: ``m x m`` matrix acting on W.
    :type c: FpMatrix
    :ivar kind: Isotopism or anti-isotopism.
    :type kind: IsotopismKind
    :raises DimensionError: If a and b are not square of one size or c is not square.
    :raises NonsingularityError: If a matrix is not invertible.
    """
    fp: FieldParams
    a: FpMatrix
    b: FpMatrix
    c: FpMatrix
    kind: IsotopismKind = IsotopismKind.ISOTOPISM

    def __post_init__(self):
        for name in ("a", "b", "c"):
            matrix = self.fp.reduce(getattr(self, name))
            if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
                raise DimensionError(f"{name} must be a square matrix")
            if not is_invertible(matrix, self.fp):
                raise NonsingularityError(f"{name} is not invertible over GF({self.fp.p})")
            object.__setattr__(self, name, matrix)
        if self.a.shape != self.b.shape:
            raise DimensionError("a and b must have the same size")

    @classmethod
    def identity(cls, fp: FieldParams, n: int, m: int,
                 kind: IsotopismKind = IsotopismKind.ISOTOPISM) -> 'Isotopism':
        return cls(fp, fp.identity(n), fp.identity(n), fp.identity(m), kind)

    @property
    def n(self) -> int:
        return self.a.shape[0]

    @property
    def m(self) -> int:
        return self.c.shape[0]

    @property
    def is_anti(self) -> bool:
        return self.kind is IsotopismKind.ANTI_ISOTOPISM

    def __eq__(self, other) -> bool:
        if not isinstance(other, Isotopism):
            return NotImplemented
        return (self.fp == other.fp and self.kind is other.kind
                and all(np.array_equal(getattr(self, name), getattr(other, name))
                        for name in ("a", "b", "c")))

    __hash__ = None

    def __repr__(self) -> str:
        return (f"Isotopism(kind={self.kind.value}, p={self.fp.p}, a={self.a.tolist()}, "
                f"b={self.b.tolist()}, c={self.c.tolist()})")

    def inverse(self) -> 'Isotopism':
        """
        The witness of the reverse relation, from alpha2 back to alpha1.

        For an isotopism this is ``(a^-1, b^-1, c^-1)``; for an anti-isotopism
        the roles of a and b swap: ``(b^-1, a^-1, c^-1)``.
        """
        a_inv = inverse_matrix(self.a, self.fp)
        b_inv = inverse_matrix(self.b, self.fp)
        c_inv = inverse_matrix(self.c, self.fp)
        if self.is_anti:
            return Isotopism(self.fp, b_inv, a_inv, c_inv, self.kind)
        return Isotopism(self.fp, a_inv, b_inv, c_inv, self.kind)


def compose_anti_isotopisms(w12: Isotopism, w32: Isotopism) -> Isotopism:
    """
    Given anti-isotopisms ``w12`` from alpha1 to alpha2 and ``w32`` from alpha3
    to alpha2, returns the isotopism ``(a'^-1 a, b'^-1 b, c'^-1 c)`` from
    alpha1 to alpha3, where ``(a, b, c) = w12`` and ``(a', b', c') = w32``.

    :raises ValueError: If either witness is not an anti-isotopism.
    :raises DimensionError: If the witnesses have different sizes.
    """
    if not (w12.is_anti and w32.is_anti):
        raise ValueError("compose_anti_isotopisms expects two anti-isotopisms")
    if (w12.n, w12.m) != (w32.n, w32.m) or w12.fp != w32.fp:
        raise DimensionError("witnesses have different dimensions")
    fp = w12.fp
    return Isotopism(fp,
                     fp.matmul(inverse_matrix(w32.a, fp), w12.a),
                     fp.matmul(inverse_matrix(w32.b, fp), w12.b),
                     fp.matmul(inverse_matrix(w32.c, fp), w12.c))


def _check_dims(alpha1: BilinearMap, alpha2: BilinearMap, iso: Isotopism) -> None:
    if alpha1.dims != alpha2.dims:
        raise DimensionError(f"maps have dimensions {alpha1.dims} and {alpha2.dims}")
    if (iso.fp.p, iso.n, iso.m) != alpha1.dims:
        raise DimensionError(f"witness has dimensions {(iso.fp.p, iso.n, iso.m)}, "
                             f"maps {alpha1.dims}")


def check_isotopism(alpha1: BilinearMap, alpha2: BilinearMap, iso: Isotopism) -> bool:
    """
    Whether ``alpha2(a e_i, b e_j) = c alpha1(e_i, e_j)`` on all basis pairs.

    :raises ValueError: If ``iso`` is an anti-isotopism.
    :raises DimensionError: If the dimensions disagree.
    """
    if iso.is_anti:
        raise ValueError("check_isotopism expects an isotopism witness")
    _check_dims(alpha1, alpha2, iso)
    return alpha2.precompose(iso.a, iso.b) == alpha1.compose_output(iso.c)


def check_anti_isotopism(alpha1: BilinearMap, alpha2: BilinearMap, iso: Isotopism) -> bool:
    """
    Whether ``alpha2(b e_j, a e_i) = c alpha1(e_i, e_j)`` on all basis pairs.

    :raises ValueError: If ``iso`` is an isotopism.
    :raises DimensionError: If the dimensions disagree.
    """
    if not iso.is_anti:
        raise ValueError("check_anti_isotopism expects an anti-isotopism witness")
    _check_dims(alpha1, alpha2, iso)
    return alpha2.precompose(iso.b, iso.a).opposite() == alpha1.compose_output(iso.c)


def check_witness(alpha1: BilinearMap, alpha2: BilinearMap, iso: Isotopism) -> bool:
    """
    Dispatches to :func:`check_isotopism` or :func:`check_anti_isotopism` by kind.
    """
    if iso.is_anti:
        return check_anti_isotopism(alpha1, alpha2, iso)
    return check_isotopism(alpha1, alpha2, iso)


def transport(alpha: BilinearMap, iso: Isotopism) -> BilinearMap:
    """
    The map alpha2 for which ``iso`` is a witness starting at ``alpha``:
    ``alpha2(x, y) = c alpha(a^-1 x, b^-1 y)`` for an isotopism and
    ``alpha2(x, y) = c alpha(a^-1 y, b^-1 x)`` for an anti-isotopism.

    :param alpha: The source map.
    :type alpha: BilinearMap
    :param iso: Any witness with matching dimensions.
    :type iso: Isotopism
    :return: The transported map.
    :rtype: BilinearMap
    """
    if (iso.fp.p, iso.n, iso.m) != alpha.dims:
        raise DimensionError(f"witness has dimensions {(iso.fp.p, iso.n, iso.m)}, "
                             f"map {alpha.dims}")
    moved = alpha.precompose(inverse_matrix(iso.a, iso.fp), inverse_matrix(iso.b, iso.fp))
    if iso.is_anti:
        moved = moved.opposite()
    return moved.compose_output(iso.c)


def scalar_witness(fp: FieldParams, a: int, b: int, c: int,
                   kind: IsotopismKind = IsotopismKind.ISOTOPISM) -> Isotopism:
    """
    A ``1 x 1`` witness from three nonzero scalars.
    """
    return Isotopism(fp, fp.matrix([[a]]), fp.matrix([[b]]), fp.matrix([[c]]), kind)
