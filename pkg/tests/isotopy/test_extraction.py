import pytest

from semifieldpy.bilinear.constructors import (field_quotient_map, random_alternating,
                                               random_biadditive, random_nonsingular)
from semifieldpy.exceptions import DimensionError, NonsingularityError
from semifieldpy.group.spec import GroupSpec
from semifieldpy.isotopy.extraction import ExtractionBasis, extract_alpha, extract_maps
from semifieldpy.isotopy.isotopism import check_isotopism
from semifieldpy.isotopy.morphism import group_isomorphism_from_isotopism, verify_homomorphism
from semifieldpy.linalg.field import FieldParams


@pytest.fixture
def gf3():
    return FieldParams(3)


class TestExtraction:
    def test_identity_basis_recovers_alpha(self, gf3):
        spec = GroupSpec(random_nonsingular(gf3, 3, 2, seed=1), random_biadditive(gf3, 3, 2, 2))
        extracted = extract_maps(spec, ExtractionBasis.identity(gf3, 3, 2))
        assert extracted.alpha == spec.alpha
        assert extracted.beta.bar() == spec.beta.bar()

    def test_alternating_beta_is_recovered(self, gf3):
        beta = random_alternating(gf3, 2, 2, seed=4)
        spec = GroupSpec(field_quotient_map(gf3, 2, 2), beta)
        assert extract_maps(spec, ExtractionBasis.identity(gf3, 2, 2)).beta == beta

    @pytest.mark.parametrize('p, n, m, seed', [(3, 2, 2, 0), (3, 3, 2, 1), (5, 2, 1, 2),
                                               (2, 3, 2, 3)])
    def test_random_basis_gives_isotopic_alpha(self, p, n, m, seed):
        fp = FieldParams(p)
        spec = GroupSpec(random_nonsingular(fp, n, m, seed=seed))
        alpha, witness = extract_alpha(spec, ExtractionBasis.random(fp, n, m, seed=seed))
        assert check_isotopism(alpha, spec.alpha, witness)

    def test_extracted_group_is_isomorphic(self, gf3):
        spec = GroupSpec(random_nonsingular(gf3, 2, 1, seed=6),
                         random_alternating(gf3, 2, 1, seed=7))
        extracted = extract_maps(spec, ExtractionBasis.random(gf3, 2, 1, seed=8))
        rebuilt = GroupSpec(extracted.alpha, extracted.beta)
        mapping = group_isomorphism_from_isotopism(extracted.witness, rebuilt, spec)
        assert verify_homomorphism(rebuilt, spec, mapping)

    def test_beta_needs_odd_prime(self):
        fp = FieldParams(2)
        spec = GroupSpec(field_quotient_map(fp, 2, 2))
        with pytest.raises(ValueError, match="odd prime"):
            extract_maps(spec, ExtractionBasis.identity(fp, 2, 2))
        assert extract_maps(spec, ExtractionBasis.identity(fp, 2, 2),
                            include_beta=False).beta is None

    def test_basis_must_fit(self, gf3):
        spec = GroupSpec(field_quotient_map(gf3, 2, 2))
        with pytest.raises(DimensionError):
            extract_alpha(spec, ExtractionBasis.identity(gf3, 2, 1))

    def test_basis_must_be_invertible(self, gf3):
        with pytest.raises(NonsingularityError, match="s is not invertible"):
            ExtractionBasis(gf3, gf3.identity(2), gf3.zeros(2, 2), gf3.identity(1))
