"""
Budgets and worker settings shared by all enumerating operations.
"""
import contextlib
import dataclasses
import logging
import os
from typing import Iterator

_logger = logging.getLogger(__name__)

ENV_PREFIX = "SEMIFIELDPY_"


@dataclasses.dataclass(frozen=True)
class Settings:
    """
    Immutable collection of enumeration budgets.

    :ivar enumeration_budget: Maximum number of vectors (or vector pairs, or
        additive maps) any exhaustive loop may visit.
    :type enumeration_budget: int
    :ivar coset_budget: Maximum number of coset representatives to list and
        maximum size of the exhaustive additive-map enumeration.
    :type coset_budget: int
    :ivar kernel_budget: Kernel size up to which the symmetric isotope search
        is exhaustive; above it the search samples this many kernel elements.
    :type kernel_budget: int
    :ivar isotopism_budget: Maximum number of ``(a, c)`` pairs visited by the
        isotopism search.
    :type isotopism_budget: int
    :ivar table_cap: Largest group order for which a multiplication table is
        built or an exhaustive homomorphism check is run.
    :type table_cap: int
    :ivar exhaustive_axiom_cap: Largest order checked on all triples.
    :type exhaustive_axiom_cap: int
    :ivar sampled_triples: Number of seeded triples used above that cap.
    :type sampled_triples: int
    :ivar jobs: Worker count for partitionable loops.
    :type jobs: int
    """
    enumeration_budget: int = 2 ** 24
    coset_budget: int = 2 ** 16
    kernel_budget: int = 2 ** 20
    isotopism_budget: int = 10 ** 8
    table_cap: int = 2 ** 14
    exhaustive_axiom_cap: int = 512
    sampled_triples: int = 10 ** 5
    jobs: int = 1

    def __post_init__(self):
        for field in dataclasses.fields(self):
            if getattr(self, field.name) <= 0:
                raise ValueError(f"{field.name} must be greater than 0")

    @classmethod
    def from_env(cls, environ: dict[str, str] | None = None) -> 'Settings':
        """
        Builds settings from ``SEMIFIELDPY_<FIELD>`` environment variables,
        falling back to the defaults for unset fields.

        :param environ: Mapping to read from, defaults to ``os.environ``.
        :type environ: dict[str, str] | None
        :return: The resulting settings.
        :rtype: Settings
        :raises ValueError: If a variable is not an integer.
        """
        environ = os.environ if environ is None else environ
        overrides = {}
        for field in dataclasses.fields(cls):
            raw = environ.get(ENV_PREFIX + field.name.upper())
            if raw is None:
                continue
            try:
                overrides[field.name] = int(raw)
            except ValueError as exc:
                raise ValueError(f"{ENV_PREFIX}{field.name.upper()} must be an integer") from exc
        if overrides:
            _logger.debug("settings overridden from environment: %s", overrides)
        return cls(**overrides)

    def replace(self, **changes: int | None) -> 'Settings':
        """
        Returns a copy with the given fields replaced; ``None`` values are ignored.
        """
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


_active = Settings.from_env()


def settings() -> Settings:
    """
    Returns the settings currently in force.
    """
    return _active


@contextlib.contextmanager
def use_settings(new_settings: Settings) -> Iterator[Settings]:
    """
    Installs ``new_settings`` for the duration of a ``with`` block.

    :param new_settings: Settings to activate.
    :type new_settings: Settings
    """
    global _active  # pylint: disable=global-statement
    previous = _active
    _active = new_settings
    try:
        yield new_settings
    finally:
        _active = previous


def resolve_budget(budget: int | None, field: str) -> int:
    """
    Returns ``budget`` if given, otherwise the named field of the active settings.
    """
    if budget is not None:
        if budget <= 0:
            raise ValueError("budget must be greater than 0")
        return budget
    return getattr(_active, field)
