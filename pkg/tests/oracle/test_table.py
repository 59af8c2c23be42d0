import numpy as np
import pytest

from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.bilinear.constructors import field_quotient_map, random_biadditive
from semifieldpy.config import settings, use_settings
from semifieldpy.exceptions import BudgetExceededError
from semifieldpy.group.checkmode import ExhaustiveCheck, SampledCheck
from semifieldpy.group.spec import GroupSpec
from semifieldpy.linalg.field import FieldParams
from semifieldpy.oracle.table import (build_table, compute_center, compute_derived,
                                      compute_exponent, element_orders,
                                      extraspecial_quotient_check, generated_subgroup,
                                      is_extraspecial, quotient_table, verify_axioms)


@pytest.fixture
def heisenberg():
    return GroupSpec(field_quotient_map(FieldParams(3), 1, 1))


@pytest.fixture
def heisenberg_table(heisenberg):
    return build_table(heisenberg)


@pytest.fixture
def dihedral_table():
    return build_table(GroupSpec(field_quotient_map(FieldParams(2), 1, 1)))


class TestBuildTable:
    def test_shape_and_identity(self, heisenberg_table):
        assert heisenberg_table.order == 27
        np.testing.assert_array_equal(heisenberg_table.table[0], np.arange(27))

    def test_agrees_with_spec(self):
        fp = FieldParams(3)
        spec = GroupSpec(field_quotient_map(fp, 2, 1), random_biadditive(fp, 2, 1, seed=3))
        table = build_table(spec)
        rng = np.random.default_rng(0)
        for i, j in rng.integers(0, spec.order, size=(50, 2)):
            left = spec.indexer.coordinates(i)
            right = spec.indexer.coordinates(j)
            product = spec.multiply_arrays(left, right)
            assert table.table[i, j] == spec.indexer.index(*product)

    def test_inverses(self, heisenberg, heisenberg_table):
        inverses = heisenberg_table.inverses()
        element = heisenberg.element([1], [1], [0])
        label = int(heisenberg.indexer.index(*element.arrays()))
        inverse = heisenberg.inverse(element)
        assert inverses[label] == int(heisenberg.indexer.index(*inverse.arrays()))

    def test_cap(self, heisenberg):
        with pytest.raises(BudgetExceededError):
            build_table(heisenberg, cap=26)

    def test_parallel(self, heisenberg, heisenberg_table):
        np.testing.assert_array_equal(build_table(heisenberg, jobs=3).table,
                                      heisenberg_table.table)


class TestAxioms:
    def test_heisenberg(self, heisenberg_table):
        report = verify_axioms(heisenberg_table)
        assert report
        assert report.exhaustive
        assert report.triples_checked == 27 ** 3

    def test_sampled(self, heisenberg_table):
        report = verify_axioms(heisenberg_table, SampledCheck(1000, seed=1))
        assert report.holds and not report.exhaustive
        assert report.triples_checked == 1000

    def test_corrupted_table_fails(self, heisenberg_table):
        broken = heisenberg_table.corrupted(5, 7, int(heisenberg_table.table[5, 8]))
        report = verify_axioms(broken)
        assert not report
        assert report.failed_law == "rows are permutations"
        assert report.witness == (5,)

    def test_corrupted_identity_fails(self, heisenberg_table):
        report = verify_axioms(heisenberg_table.corrupted(0, 3, 4))
        assert report.failed_law == "left identity"
        assert report.witness == (3,)

    def test_exhaustive_above_cap(self, heisenberg_table):
        with use_settings(settings().replace(exhaustive_axiom_cap=20)):
            with pytest.raises(BudgetExceededError):
                verify_axioms(heisenberg_table, ExhaustiveCheck())
            assert not verify_axioms(heisenberg_table).exhaustive


class TestStructure:
    def test_heisenberg(self, heisenberg_table):
        assert len(compute_center(heisenberg_table)) == 3
        assert compute_derived(heisenberg_table) == compute_center(heisenberg_table)
        assert compute_exponent(heisenberg_table) == 3
        assert is_extraspecial(heisenberg_table)

    def test_dihedral(self, dihedral_table):
        assert len(compute_center(dihedral_table)) == 2
        assert compute_exponent(dihedral_table) == 4
        assert sorted(np.bincount(element_orders(dihedral_table)).tolist()) == [0, 0, 1, 2, 5]

    def test_generated_subgroup(self, heisenberg_table):
        assert generated_subgroup(heisenberg_table, []) == frozenset({0})
        assert len(generated_subgroup(heisenberg_table, [1])) == 3
        assert len(generated_subgroup(heisenberg_table, [3, 9])) == 27

    def test_quotient_by_center(self, heisenberg, heisenberg_table):
        a, b, _ = heisenberg.indexer.all_coordinates()
        labels = (3 * a + b).ravel()
        quotient = quotient_table(heisenberg_table, labels)
        assert quotient.order == 9
        assert compute_exponent(quotient) == 3
        assert len(compute_center(quotient)) == 9

    def test_quotient_labels_must_be_dense(self, heisenberg_table):
        with pytest.raises(ValueError, match="coset labels"):
            quotient_table(heisenberg_table, np.full(27, 2))


class TestExtraspecialQuotients:
    @pytest.mark.parametrize('p, n, m', [(3, 1, 1), (3, 2, 2), (3, 2, 1), (2, 2, 2)])
    def test_field_groups(self, p, n, m):
        assert extraspecial_quotient_check(GroupSpec(field_quotient_map(FieldParams(p), n, m)))

    def test_singular_alpha(self):
        spec = GroupSpec.unchecked(BilinearMap(FieldParams(3), [[[1, 0], [0, 0]]]))
        assert not extraspecial_quotient_check(spec)
