import pytest

from semifieldpy.config import Settings, resolve_budget, settings, use_settings


class TestSettings:
    def test_defaults(self):
        defaults = Settings()
        assert defaults.enumeration_budget == 2 ** 24
        assert defaults.coset_budget == 2 ** 16
        assert defaults.exhaustive_axiom_cap == 512
        assert defaults.jobs == 1

    def test_from_env(self):
        loaded = Settings.from_env({"SEMIFIELDPY_TABLE_CAP": "100", "SEMIFIELDPY_JOBS": "4",
                                    "UNRELATED": "x"})
        assert loaded.table_cap == 100
        assert loaded.jobs == 4
        assert loaded.coset_budget == Settings().coset_budget

    def test_from_env_rejects_non_integer(self):
        with pytest.raises(ValueError, match="SEMIFIELDPY_KERNEL_BUDGET must be an integer"):
            Settings.from_env({"SEMIFIELDPY_KERNEL_BUDGET": "lots"})

    @pytest.mark.parametrize('field', ['table_cap', 'jobs', 'sampled_triples'])
    def test_rejects_non_positive(self, field):
        with pytest.raises(ValueError, match=f"{field} must be greater than 0"):
            Settings(**{field: 0})

    def test_replace_ignores_none(self):
        assert Settings().replace(jobs=None, table_cap=7) == Settings(table_cap=7)


class TestActiveSettings:
    def test_use_settings_restores(self):
        before = settings()
        with use_settings(Settings(coset_budget=3)):
            assert settings().coset_budget == 3
            assert resolve_budget(None, "coset_budget") == 3
        assert settings() is before

    def test_restores_after_error(self):
        before = settings()
        with pytest.raises(RuntimeError):
            with use_settings(Settings(jobs=5)):
                raise RuntimeError("boom")
        assert settings() is before

    def test_explicit_budget_wins(self):
        assert resolve_budget(12, "coset_budget") == 12

    def test_explicit_budget_must_be_positive(self):
        with pytest.raises(ValueError, match="budget must be greater than 0"):
            resolve_budget(0, "coset_budget")
