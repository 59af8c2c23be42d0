"""
Contains the helper class to assemble a GroupSpec step by step.
"""
from semifieldpy.bilinear.basemap import BilinearMap
from semifieldpy.bilinear.constructors import bar_preimage, field_quotient_map
from semifieldpy.group.spec import GroupSpec
from semifieldpy.linalg.field import FieldParams


class GroupSpecBuilder:
    """
    Fluent builder for :class:`GroupSpec`.

    Either attach an explicit alpha with :meth:`with_alpha`, or choose the
    prime and dimensions and call :meth:`with_field_alpha`. Beta defaults to
    the zero map.

    Example::

        spec = (
            GroupSpecBuilder()
            .over(3)
            .dimensions(3, 3)
            .with_field_alpha()
            .build()
        )
    """
    def __init__(self):
        self.__fp: FieldParams | None = None
        self.__dims: tuple[int, int] | None = None
        self.__alpha: BilinearMap | None = None
        self.__beta: BilinearMap | None = None
        self.__gamma: BilinearMap | None = None
        self.__validate = True

    def over(self, p: int) -> 'GroupSpecBuilder':
        self.__fp = FieldParams(p)
        return self

    def dimensions(self, n: int, m: int) -> 'GroupSpecBuilder':
        if n <= 0 or m <= 0:
            raise ValueError("n and m must be greater than 0")
        self.__dims = (n, m)
        return self

    def with_alpha(self, alpha: BilinearMap) -> 'GroupSpecBuilder':
        self.__alpha = alpha
        return self

    def with_field_alpha(self) -> 'GroupSpecBuilder':
        """
        Uses :func:`field_quotient_map` on the chosen prime and dimensions.

        :raises ValueError: If the prime or the dimensions have not been set.
        """
        if self.__fp is None or self.__dims is None:
            raise ValueError("set the prime and dimensions before with_field_alpha")
        self.__alpha = field_quotient_map(self.__fp, *self.__dims)
        return self

    def with_beta(self, beta: BilinearMap) -> 'GroupSpecBuilder':
        self.__beta = beta
        self.__gamma = None
        return self

    def with_beta_bar(self, gamma: BilinearMap) -> 'GroupSpecBuilder':
        """
        Chooses beta so that ``bar(beta) = gamma`` for an alternating gamma.
        """
        self.__gamma = gamma
        self.__beta = None
        return self

    def without_validation(self) -> 'GroupSpecBuilder':
        """
        Skips the nonsingularity check of alpha (for negative tests).
        """
        self.__validate = False
        return self

    def build(self) -> GroupSpec:
        """
        Builds the spec.

        :raises ValueError: If no alpha was given.
        """
        if self.__alpha is None:
            raise ValueError("an alpha is required")
        beta = bar_preimage(self.__gamma) if self.__gamma is not None else self.__beta
        if self.__validate:
            return GroupSpec(self.__alpha, beta)
        return GroupSpec.unchecked(self.__alpha, beta)
