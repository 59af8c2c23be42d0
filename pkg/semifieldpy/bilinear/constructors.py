"""
Constructors for bilinear maps: field multiplication modulo a subspace,
seeded random maps, and preimages of alternating maps under ``bar``.
"""
import itertools
import logging

import numpy as np

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.exceptions import DimensionError
from semifieldpy.linalg.field import DTYPE, FieldParams

_logger = logging.getLogger(__name__)


def _poly_mod(dividend: list[int], divisor: list[int], p: int) -> list[int]:
    """
    Remainder of polynomial division over GF(p); coefficients low degree first,
    ``divisor`` monic.
    """
    remainder = [c % p for c in dividend]
    degree = len(divisor) - 1
    for shift in range(len(remainder) - 1 - degree, -1, -1):
        lead = remainder[shift + degree]
        if lead:
            for i, coeff in enumerate(divisor):
                remainder[shift + i] = (remainder[shift + i] - lead * coeff) % p
    return remainder[:degree] if degree else []


def _monic_polynomials(degree: int, p: int):
    for tail in itertools.product(range(p), repeat=degree):
        yield list(tail) + [1]


def is_irreducible(poly: list[int], p: int) -> bool:
    """
    Irreducibility of a monic polynomial over GF(p) by trial division with
    every monic polynomial of degree at most half its degree.

    :param poly: Coefficients, low degree first, leading coefficient 1.
    :type poly: list[int]
    :param p: The prime.
    :type p: int
    :return: True if ``poly`` has no proper factor.
    :rtype: bool
    """
    degree = len(poly) - 1
    if degree <= 0:
        return False
    for factor_degree in range(1, degree // 2 + 1):
        for factor in _monic_polynomials(factor_degree, p):
            if not any(_poly_mod(poly, factor, p)):
                return False
    return True


def smallest_irreducible(fp: FieldParams, n: int) -> list[int]:
    """
    The monic irreducible polynomial of degree n whose coefficient tuple
    ``(c_0, ..., c_{n-1})`` is lexicographically smallest.

    :return: Coefficients ``[c_0, ..., c_{n-1}, 1]``.
    :rtype: list[int]
    """
    if n <= 0:
        raise DimensionError("n must be greater than 0")
    for poly in _monic_polynomials(n, fp.p):
        if is_irreducible(poly, fp.p):
            _logger.debug("GF(%d^%d) modulus %s", fp.p, n, poly)
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {n} over GF({fp.p})")


def field_quotient_map(fp: FieldParams, n: int, m: int) -> BilinearMap:
    """
    Multiplication of GF(p^n) followed by projection onto its first m
    power-basis coordinates.

    The field is GF(p)[x] modulo :func:`smallest_irreducible`, V is the
    coordinate space in the basis ``1, x, ..., x^(n-1)`` and the kernel of the
    projection is spanned by the last ``n - m`` basis vectors. For ``m = n``
    this is the multiplication of the field itself.

    :param fp: The prime field.
    :type fp: FieldParams
    :param n: Degree of the extension.
    :type n: int
    :param m: Output dimension, ``1 <= m <= n``.
    :type m: int
    :return: A generalized nonsingular map ``V x V -> W``.
    :rtype: BilinearMap
    :raises DimensionError: If m is not between 1 and n.
    """
    if not 1 <= m <= n:
        raise DimensionError(f"field_quotient_map needs 1 <= m <= n, got n={n}, m={m}")
    modulus = smallest_irreducible(fp, n)
    powers = []
    for exponent in range(2 * n - 1):
        monomial = [0] * exponent + [1]
        reduced = _poly_mod(monomial, modulus, fp.p) if exponent >= n else monomial
        powers.append(reduced + [0] * (n - len(reduced)))
    slices = np.zeros((m, n, n), dtype=DTYPE)
    for i in range(n):
        for j in range(n):
            slices[:, i, j] = powers[i + j][:m]
    return BilinearMap(fp, slices)


def random_biadditive(fp: FieldParams, n: int, m: int, seed: int) -> BilinearMap:
    """
    Map whose slice entries are drawn uniformly from ``[0, p)`` by a
    generator seeded with ``seed``.
    """
    rng = np.random.default_rng(seed)
    return BilinearMap(fp, rng.integers(0, fp.p, size=(m, n, n), dtype=DTYPE))


def random_nonsingular(fp: FieldParams, n: int, m: int, seed: int, attempts: int = 10_000) \
        -> BilinearMap:
    """
    First generalized nonsingular map in the seeded stream of random maps.

    :raises DimensionError: If ``m > n`` (no nonsingular map exists).
    :raises RuntimeError: If no nonsingular map turns up within ``attempts`` draws.
    """
    if m > n:
        raise DimensionError("a nonsingular map needs m <= n")
    rng = np.random.default_rng(seed)
    for _ in range(attempts):
        candidate = BilinearMap(fp, rng.integers(0, fp.p, size=(m, n, n), dtype=DTYPE))
        if candidate.is_nonsingular():
            return candidate
    raise RuntimeError(f"no nonsingular map found in {attempts} attempts")


def random_alternating(fp: FieldParams, n: int, m: int, seed: int) -> BilinearMap:
    """
    Random alternating map: a random strictly upper triangular part, mirrored
    with a sign change.
    """
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.integers(0, fp.p, size=(m, n, n), dtype=DTYPE), k=1)
    return BilinearMap(fp, upper - upper.transpose(0, 2, 1))


def bar_preimage(gamma: BilinearMap) -> BilinearMap:
    """
    A map ``beta`` with ``bar(beta) = gamma``: the strictly upper triangular
    part of each slice of ``gamma``.

    :raises ValueError: If ``gamma`` is not alternating.
    """
    if not gamma.is_alternating():
        raise ValueError("bar_preimage requires an alternating map")
    return BilinearMap(gamma.fp, np.triu(gamma.slices, k=1))
