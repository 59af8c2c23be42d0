import numpy as np
import pytest

from semifieldpy.exceptions import DimensionError
from semifieldpy.linalg.field import FieldParams, inverse_mod, is_prime


class TestPrimes:
    @pytest.mark.parametrize('number', [2, 3, 5, 7, 11, 13, 97])
    def test_primes(self, number):
        assert is_prime(number)

    @pytest.mark.parametrize('number', [-3, 0, 1, 4, 9, 15, 91])
    def test_non_primes(self, number):
        assert not is_prime(number)

    @pytest.mark.parametrize(
        'value, modulus, expected',
        [
            (2, 5, 3),
            (3, 7, 5),
            (1, 2, 1),
            (-1, 5, 4),
        ]
    )
    def test_inverse_mod(self, value, modulus, expected):
        assert inverse_mod(value, modulus) == expected

    def test_inverse_of_zero(self):
        with pytest.raises(ZeroDivisionError):
            inverse_mod(0, 5)


class TestFieldParams:
    @pytest.fixture
    def gf5(self):
        return FieldParams(5)

    @pytest.mark.parametrize('p', [1, 4, 6, 2.0])
    def test_rejects_non_primes(self, p):
        with pytest.raises(ValueError, match="p must be a prime"):
            FieldParams(p)

    def test_reduce_is_read_only(self, gf5):
        reduced = gf5.reduce([7, -1, 10])
        assert reduced.tolist() == [2, 4, 0]
        assert not reduced.flags.writeable

    def test_vector_rejects_empty(self, gf5):
        with pytest.raises(DimensionError):
            gf5.vector([])

    def test_matrix_rejects_ragged_rows(self, gf5):
        with pytest.raises(DimensionError):
            gf5.matrix([[1, 2], [3]])

    def test_matmul_reduces(self, gf5):
        product = gf5.matmul([[2, 3], [1, 4]], [[3, 0], [0, 3]])
        assert product.tolist() == [[1, 4], [3, 2]]

    def test_identity_and_units(self, gf5):
        assert np.array_equal(gf5.identity(3)[1], gf5.unit_vector(3, 1))

    @pytest.mark.parametrize('value, expected', [(1, 1), (2, 3), (3, 2), (4, 4)])
    def test_scalar_inverse(self, gf5, value, expected):
        assert gf5.inverse(value) == expected
