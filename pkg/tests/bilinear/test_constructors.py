import numpy as np
import pytest

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.bilinear.constructors import (bar_preimage, field_quotient_map, is_irreducible,
                                               random_alternating, random_biadditive,
                                               random_nonsingular, smallest_irreducible)
from semifieldpy.exceptions import DimensionError
from semifieldpy.linalg.field import FieldParams


class TestPolynomials:
    @pytest.mark.parametrize(
        'p, n, expected',
        [
            (2, 1, [0, 1]),
            (2, 2, [1, 1, 1]),
            (2, 3, [1, 0, 1, 1]),
            (3, 2, [1, 0, 1]),
            (5, 2, [1, 1, 1]),
        ]
    )
    def test_smallest_irreducible(self, p, n, expected):
        assert smallest_irreducible(FieldParams(p), n) == expected

    @pytest.mark.parametrize(
        'poly, p, expected',
        [
            ([1, 0, 1], 2, False),
            ([1, 1, 1], 2, True),
            ([1, 0, 1], 3, True),
            ([1, 0, 1], 5, False),
        ]
    )
    def test_is_irreducible(self, poly, p, expected):
        assert is_irreducible(poly, p) == expected


class TestFieldQuotientMap:
    def test_gf4_slices(self):
        alpha = field_quotient_map(FieldParams(2), 2, 2)
        assert alpha.slices.tolist() == [[[1, 0], [0, 1]], [[0, 1], [1, 1]]]

    def test_gf9_slices(self):
        alpha = field_quotient_map(FieldParams(3), 2, 2)
        # x^2 = -1 = 2
        assert alpha.slices.tolist() == [[[1, 0], [0, 2]], [[0, 1], [1, 0]]]

    def test_quotient_keeps_first_coordinates(self):
        fp = FieldParams(3)
        full = field_quotient_map(fp, 3, 3)
        assert field_quotient_map(fp, 3, 1).slices.tolist() == full.slices[:1].tolist()

    def test_symmetric(self):
        assert field_quotient_map(FieldParams(5), 3, 2).is_symmetric()

    @pytest.mark.parametrize('n, m', [(2, 3), (2, 0), (0, 0)])
    def test_rejects_bad_dimensions(self, n, m):
        with pytest.raises(DimensionError):
            field_quotient_map(FieldParams(3), n, m)


class TestRandomMaps:
    def test_seeded_maps_are_reproducible(self):
        fp = FieldParams(3)
        assert random_biadditive(fp, 3, 2, seed=0) == random_biadditive(fp, 3, 2, seed=0)
        assert random_biadditive(fp, 3, 2, seed=0) != random_biadditive(fp, 3, 2, seed=1)

    @pytest.mark.parametrize('p, n, m', [(2, 2, 1), (3, 2, 2), (3, 3, 1)])
    def test_random_nonsingular(self, p, n, m):
        alpha = random_nonsingular(FieldParams(p), n, m, seed=11)
        assert alpha.is_nonsingular()

    def test_random_nonsingular_needs_m_at_most_n(self):
        with pytest.raises(DimensionError):
            random_nonsingular(FieldParams(3), 1, 2, seed=0)

    def test_random_alternating(self):
        assert random_alternating(FieldParams(5), 3, 2, seed=4).is_alternating()


class TestBarPreimage:
    @pytest.mark.parametrize('p', [2, 3, 5])
    def test_bar_of_preimage(self, p):
        gamma = random_alternating(FieldParams(p), 3, 2, seed=p)
        assert bar_preimage(gamma).bar() == gamma

    def test_rejects_non_alternating(self):
        fp = FieldParams(3)
        with pytest.raises(ValueError, match="alternating"):
            bar_preimage(BilinearMap(fp, np.eye(2, dtype=np.int64)[None]))
