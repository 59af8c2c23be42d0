"""
End-to-end checks of the documented guarantees on small instances.
"""
import json

import numpy as np
import pytest

from semifieldpy.bilinear.constructors import (bar_preimage, field_quotient_map,
                                               random_alternating, random_biadditive,
                                               random_nonsingular)
from semifieldpy.complements.phi import (abelian_complement_report, coset_representatives,
                                         count_abelian_complements_exhaustive,
                                         derived_symmetric_map, middle_nucleus,
                                         phi_alpha_apply, phi_alpha_matrix,
                                         symmetric_isotope_search)
from semifieldpy.core import main
from semifieldpy.embed.class_two import Class2Data, embed_class_two, pad, verify_embedding
from semifieldpy.group.checkmode import ExhaustiveCheck
from semifieldpy.group.spec import GroupSpec
from semifieldpy.isotopy.extraction import ExtractionBasis, extract_maps
from semifieldpy.isotopy.isotopism import (Isotopism, IsotopismKind, check_isotopism,
                                           transport)
from semifieldpy.isotopy.morphism import (group_isomorphism_from_anti_isotopism,
                                          group_isomorphism_from_isotopism,
                                          verify_homomorphism)
from semifieldpy.linalg.elimination import is_invertible, random_invertible, solve
from semifieldpy.linalg.field import FieldParams
from semifieldpy.oracle.table import (build_table, compute_center, compute_derived,
                                      compute_exponent, extraspecial_quotient_check,
                                      generated_subgroup, verify_axioms)


def alpha_family(p, n, m, randoms):
    fp = FieldParams(p)
    return [field_quotient_map(fp, n, m)] + [random_nonsingular(fp, n, m, seed=seed)
                                             for seed in range(randoms)]


def sampled_elements(spec, count, seed):
    rng = np.random.default_rng(seed)
    return [spec.element(rng.integers(0, spec.p, spec.n), rng.integers(0, spec.p, spec.n),
                         rng.integers(0, spec.p, spec.m)) for _ in range(count)]


class TestCosetCount:
    def test_field_of_order_27_through_cli(self, capsys, tmp_path):
        target = tmp_path / "field.txt"
        assert main(["gen-field", "--p", "3", "--n", "3", "--m", "3", "-o", str(target)]) == 0
        capsys.readouterr()
        assert main(["cosets", "--alpha", str(target)]) == 0
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["image_dim"] == 6
        assert results["coset_count"] == 27
        assert len(results["representatives"]) == 27


class TestExtraspecialComplements:
    @pytest.mark.parametrize('p', [2, 3, 5])
    @pytest.mark.parametrize('n', [1, 2, 3, 4])
    def test_m_equal_one(self, p, n):
        for alpha in alpha_family(p, n, 1, 5):
            phi = phi_alpha_matrix(alpha)
            assert phi.kernel_dim == n * (n + 1) // 2
            assert phi.image_dim == phi.codomain_dim


class TestMiddleNucleus:
    @pytest.mark.parametrize('p', [2, 3, 5])
    @pytest.mark.parametrize('n', [1, 2, 3])
    def test_field_map(self, p, n):
        alpha = field_quotient_map(FieldParams(p), n, n)
        assert middle_nucleus(alpha) == p ** n
        assert phi_alpha_matrix(alpha).kernel_dim == n


class TestBruteForceComplementCount:
    @pytest.mark.parametrize('p, n, m', [(2, 1, 1), (2, 2, 1), (2, 2, 2), (2, 3, 2), (2, 3, 3),
                                         (2, 4, 1), (2, 4, 4), (3, 1, 1), (3, 2, 1), (3, 2, 2),
                                         (5, 2, 2)])
    @pytest.mark.parametrize('seed', [0, 1])
    def test_count_matches_kernel(self, p, n, m, seed):
        fp = FieldParams(p)
        rng = np.random.default_rng(seed)
        twist = Isotopism(fp, random_invertible(n, fp, rng), random_invertible(n, fp, rng),
                          random_invertible(m, fp, rng))
        alpha = transport(field_quotient_map(fp, n, m), twist)
        beta = random_biadditive(fp, n, m, seed=seed + 50)
        report = abelian_complement_report(alpha, beta)
        expected = p ** report.kernel_dim if report.has_abelian_complement else 0
        assert report.count == expected
        assert count_abelian_complements_exhaustive(alpha, beta) == expected


class TestNoAbelianComplement:
    @pytest.mark.parametrize('p', [3, 2])
    def test_nonzero_coset(self, p):
        fp = FieldParams(p)
        alpha = field_quotient_map(fp, 3, 3)
        phi = phi_alpha_matrix(alpha)
        representative = coset_representatives(alpha, phi=phi)[-1]
        beta = bar_preimage(representative.to_map())
        report = abelian_complement_report(alpha, beta, phi)
        assert report.count == 0
        target = beta.bar().negate().alt_coords().to_vector()
        assert solve(phi.matrix, target, fp) is None
        if p ** 9 <= 2 ** 16:
            assert count_abelian_complements_exhaustive(alpha, beta) == 0


ORACLE_FIXTURES = [(2, 1, 1), (2, 2, 1), (2, 2, 2), (3, 1, 1), (3, 2, 1)]


class TestGroupOracle:
    @pytest.mark.parametrize('p, n, m', ORACLE_FIXTURES)
    @pytest.mark.parametrize('with_beta', [False, True])
    def test_structure(self, p, n, m, with_beta):
        fp = FieldParams(p)
        beta = random_biadditive(fp, n, m, seed=n + m) if with_beta else None
        spec = GroupSpec(random_nonsingular(fp, n, m, seed=p + n), beta)
        table = build_table(spec)
        report = verify_axioms(table, ExhaustiveCheck())
        assert report.holds and report.exhaustive
        center = compute_center(table)
        assert center == frozenset(range(p ** m))
        assert compute_derived(table) == center
        exponent = compute_exponent(table)
        if p == 2:
            assert 4 % exponent == 0
        else:
            assert exponent == p
        assert exponent == spec.exponent()
        assert extraspecial_quotient_check(spec, table)


class TestConstructiveIsomorphisms:
    @pytest.mark.parametrize('n, m', [(1, 1), (2, 1)])
    @pytest.mark.parametrize('seed', [0, 1])
    def test_isotopism_map(self, n, m, seed):
        fp = FieldParams(3)
        rng = np.random.default_rng(seed)
        alpha = random_nonsingular(fp, n, m, seed=seed)
        iso = Isotopism(fp, random_invertible(n, fp, rng), random_invertible(n, fp, rng),
                        random_invertible(m, fp, rng))
        spec1, spec2 = GroupSpec(alpha), GroupSpec(transport(alpha, iso))
        assert verify_homomorphism(spec1, spec2,
                                   group_isomorphism_from_isotopism(iso, spec1, spec2))

    @pytest.mark.parametrize('n, m', [(1, 1), (2, 1)])
    @pytest.mark.parametrize('seed', [0, 1])
    def test_anti_isotopism_map(self, n, m, seed):
        fp = FieldParams(3)
        rng = np.random.default_rng(seed + 10)
        alpha = random_nonsingular(fp, n, m, seed=seed)
        iso = Isotopism(fp, random_invertible(n, fp, rng), random_invertible(n, fp, rng),
                        random_invertible(m, fp, rng), IsotopismKind.ANTI_ISOTOPISM)
        spec1, spec2 = GroupSpec(alpha), GroupSpec(transport(alpha, iso))
        assert verify_homomorphism(spec1, spec2,
                                   group_isomorphism_from_anti_isotopism(iso, spec1, spec2))

    @pytest.mark.parametrize('n, m', [(1, 1), (2, 1)])
    def test_opposite_group(self, n, m):
        fp = FieldParams(3)
        alpha = random_nonsingular(fp, n, m, seed=4)
        spec1, spec2 = GroupSpec(alpha), GroupSpec(alpha.opposite())
        identity = Isotopism.identity(fp, n, m, IsotopismKind.ANTI_ISOTOPISM)
        assert verify_homomorphism(spec1, spec2,
                                   group_isomorphism_from_anti_isotopism(identity, spec1, spec2))


class TestExtractionRoundTrip:
    @pytest.mark.parametrize('p', [3, 5])
    @pytest.mark.parametrize('n', [1, 2])
    def test_twenty_bases(self, p, n):
        fp = FieldParams(p)
        spec = GroupSpec(random_nonsingular(fp, n, n, seed=p * n),
                         random_biadditive(fp, n, n, seed=p + n))
        before = phi_alpha_matrix(spec.alpha)
        complements = abelian_complement_report(spec.alpha, spec.beta)
        for seed in range(20):
            alpha, beta, witness = extract_maps(spec, ExtractionBasis.random(fp, n, n, seed=seed))
            assert check_isotopism(alpha, spec.alpha, witness)
            after = phi_alpha_matrix(alpha)
            assert (after.kernel_dim, after.image_dim, after.coset_count) == \
                (before.kernel_dim, before.image_dim, before.coset_count)
            extracted = abelian_complement_report(alpha, beta)
            assert (extracted.has_abelian_complement, extracted.count) == \
                (complements.has_abelian_complement, complements.count)


class TestEmbedding:
    @pytest.mark.parametrize('p', [3, 5])
    def test_ten_seeded_gammas(self, p):
        fp = FieldParams(p)
        rng = np.random.default_rng(p)
        for seed in range(10):
            n0, m0 = (int(x) for x in rng.integers(1, 4, size=2))
            data = Class2Data(random_alternating(fp, n0, m0, seed=seed))
            spec = embed_class_two(pad(data))
            assert spec.is_ultraspecial()
            for g in sampled_elements(spec, 5, seed=seed):
                product = spec.identity()
                for _ in range(p):
                    product = spec.multiply(product, g)
                assert product == spec.identity()
            assert verify_embedding(spec, data)

    def test_padded_group_has_exponent_p_by_table(self):
        fp = FieldParams(3)
        spec = embed_class_two(pad(Class2Data(random_alternating(fp, 2, 1, seed=4))))
        assert spec.order == 729
        assert compute_exponent(build_table(spec)) == 3


class TestSymmetricIsotope:
    @pytest.mark.parametrize('p, n, m', [(3, 2, 1), (3, 2, 2), (5, 3, 2), (2, 3, 3)])
    def test_symmetric_alpha_gives_two_abelian_complements(self, p, n, m):
        fp = FieldParams(p)
        alpha = field_quotient_map(fp, n, m)
        assert alpha.is_symmetric()
        assert phi_alpha_apply(alpha, fp.identity(n)).is_zero()
        spec = GroupSpec(alpha)
        b0 = [spec.element(np.zeros(n), fp.unit_vector(n, i), np.zeros(m)) for i in range(n)]
        b1 = [spec.element(fp.unit_vector(n, i), fp.unit_vector(n, i), np.zeros(m))
              for i in range(n)]
        identity = spec.identity()
        for basis in (b0, b1):
            assert all(spec.commutator_by_product(g, h) == identity
                       for g in basis for h in basis)

    def test_complement_intersection_is_derived(self):
        fp = FieldParams(3)
        spec = GroupSpec(field_quotient_map(fp, 2, 1))
        table = build_table(spec)

        def label(a, b, c):
            return int(spec.indexer.index(a, b, c))

        center = [label([0, 0], [0, 0], [1])]
        b0 = generated_subgroup(table, center + [label([0, 0], [1, 0], [0]),
                                                 label([0, 0], [0, 1], [0])])
        b1 = generated_subgroup(table, center + [label([1, 0], [1, 0], [0]),
                                                 label([0, 1], [0, 1], [0])])
        values = table.table
        for subgroup in (b0, b1):
            members = sorted(subgroup)
            assert len(members) == 27
            assert (values[np.ix_(members, members)] == values[np.ix_(members, members)].T).all()
        assert b0 & b1 == compute_derived(table)

    @pytest.mark.parametrize('p, n', [(2, 2), (3, 2), (3, 3), (5, 2)])
    def test_search_on_field_map(self, p, n):
        fp = FieldParams(p)
        alpha = field_quotient_map(fp, n, n)
        outcome = symmetric_isotope_search(alpha)
        assert outcome.found
        f = outcome.witness
        assert is_invertible(f, fp)
        derived = derived_symmetric_map(alpha, f)
        assert derived.is_symmetric()
        assert check_isotopism(derived, alpha, Isotopism(fp, f, fp.identity(n), fp.identity(n)))

