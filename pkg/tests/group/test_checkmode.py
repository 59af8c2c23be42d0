import numpy as np
import pytest

from semifieldpy.group.checkmode import ExhaustiveCheck, SampledCheck


class TestExhaustiveCheck:
    def test_pairs(self):
        batches = list(ExhaustiveCheck().batches(4, 2))
        assert len(batches) == 4
        pairs = {(int(x), int(y)) for first, second in batches for x, y in zip(first, second)}
        assert len(pairs) == 16

    def test_triples(self):
        triples = {(int(x), int(y), int(z)) for batch in ExhaustiveCheck().batches(3, 3)
                   for x, y, z in zip(*batch)}
        assert len(triples) == 27

    def test_rejects_arity_one(self):
        with pytest.raises(ValueError, match="arity"):
            list(ExhaustiveCheck().batches(3, 1))


class TestSampledCheck:
    def test_sample_count_and_range(self):
        batches = list(SampledCheck(25, seed=3, batch_size=10).batches(7, 3))
        assert [len(batch[0]) for batch in batches] == [10, 10, 5]
        assert all(((column >= 0) & (column < 7)).all() for batch in batches for column in batch)

    def test_seeded(self):
        first = list(SampledCheck(5, seed=1).batches(100, 2))
        second = list(SampledCheck(5, seed=1).batches(100, 2))
        assert all(np.array_equal(x, y) for a, b in zip(first, second) for x, y in zip(a, b))

    @pytest.mark.parametrize('samples, batch_size', [(0, 10), (5, 0)])
    def test_rejects_non_positive(self, samples, batch_size):
        with pytest.raises(ValueError, match="must be greater than 0"):
            SampledCheck(samples, batch_size=batch_size)

    def test_not_exhaustive(self):
        assert not SampledCheck(1).exhaustive
        assert ExhaustiveCheck().exhaustive
