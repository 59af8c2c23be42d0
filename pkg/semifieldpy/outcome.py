"""
Result type shared by the bounded searches.
"""
import dataclasses
import enum
from typing import Generic, TypeVar

W = TypeVar("W")


class SearchStatus(enum.Enum):
    """
    Outcome of a bounded search.

    FOUND carries a verified witness, NONE means the search space was
    exhausted without success, INCONCLUSIVE means the budget ran out first.
    """
    FOUND = "found"
    NONE = "none"
    INCONCLUSIVE = "inconclusive"


@dataclasses.dataclass(frozen=True, eq=False)
class SearchOutcome(Generic[W]):
    """
    A search status together with the witness (if any) and the amount of work done.

    :ivar status: The outcome.
    :type status: SearchStatus
    :ivar witness: The witness when ``status`` is FOUND.
    :type witness: W | None
    :ivar examined: Number of candidates examined.
    :type examined: int
    """
    status: SearchStatus
    witness: W | None = None
    examined: int = 0

    @property
    def found(self) -> bool:
        return self.status is SearchStatus.FOUND
