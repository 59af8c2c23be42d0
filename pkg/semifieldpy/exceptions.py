"""
Exception types raised by semifieldpy.

Every class also derives from the built-in exception that a plain validation
would raise, so ``except ValueError`` keeps working for callers.
"""


class SemifieldError(Exception):
    """
    Common base of all errors raised by this package.
    """


class DimensionError(SemifieldError, ValueError):
    """
    Raised when vectors, matrices or maps do not have matching dimensions.
    """


class NonsingularityError(SemifieldError, ValueError):
    """
    Raised when a group is requested from an alpha that is not a generalized
    nonsingular map.
    """


class IsomorphismError(SemifieldError, ValueError):
    """
    Raised when the data handed to a constructive isomorphism does not satisfy
    the compatibility equations on some basis pair.
    """


class BudgetExceededError(SemifieldError, RuntimeError):
    """
    Raised when an enumeration would exceed its configured budget.

    :param what: Short description of the enumeration that was refused.
    :type what: str
    :param required: Number of items the enumeration would need.
    :type required: int
    :param budget: The budget in force.
    :type budget: int
    """
    def __init__(self, what: str, required: int, budget: int):
        super().__init__(f"{what} needs {required} items, budget is {budget}")
        self.what = what
        self.required = required
        self.budget = budget


class MapFormatError(SemifieldError, ValueError):
    """
    Raised when a map, spec, witness or class-two file cannot be parsed.

    :param line: 1-based line number of the offending line (0 if unknown).
    :type line: int
    :param message: Description of the problem.
    :type message: str
    """
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
