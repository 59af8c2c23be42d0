"""
Integer labels for the elements ``(a, b, c)`` of a group G(alpha, beta).

Labels follow the lexicographic order of the concatenated coordinates
``(a, b, c)`` with the first coordinate most significant, so the identity
is element 0.
"""
import dataclasses

import numpy as np

from semifieldpy.config import resolve_budget
from semifieldpy.exceptions import BudgetExceededError
from semifieldpy.linalg.field import DTYPE


@dataclasses.dataclass(frozen=True)
class ElementIndexer:
    """
    Bijection between ``range(p**(2n+m))`` and coordinate triples.

    :ivar p: The prime.
    :type p: int
    :ivar n: Dimension of V.
    :type n: int
    :ivar m: Dimension of W.
    :type m: int
    """
    p: int
    n: int
    m: int

    @property
    def width(self) -> int:
        return 2 * self.n + self.m

    @property
    def order(self) -> int:
        return self.p ** self.width

    def _powers(self) -> np.ndarray:
        return self.p ** np.arange(self.width - 1, -1, -1, dtype=DTYPE)

    def coordinates(self, indices) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Splits labels into ``(A, B, C)`` coordinate arrays of shapes
        ``(N, n)``, ``(N, n)`` and ``(N, m)``.
        """
        digits = (np.asarray(indices, dtype=DTYPE)[..., None] // self._powers()) % self.p
        return digits[..., :self.n], digits[..., self.n:2 * self.n], digits[..., 2 * self.n:]

    def index(self, a, b, c) -> np.ndarray:
        """
        Labels of coordinate arrays (broadcast over leading axes).
        """
        digits = np.concatenate([np.asarray(a, dtype=DTYPE), np.asarray(b, dtype=DTYPE),
                                 np.asarray(c, dtype=DTYPE)], axis=-1)
        return np.mod(digits, self.p) @ self._powers()

    def all_coordinates(self, cap: int | None = None) \
            -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """
        Coordinates of every element, in label order.

        :raises BudgetExceededError: If the group order exceeds ``cap``
            (defaults to the table cap).
        """
        limit = resolve_budget(cap, "table_cap")
        if self.order > limit:
            raise BudgetExceededError("listing group elements", self.order, limit)
        return self.coordinates(np.arange(self.order, dtype=DTYPE))
