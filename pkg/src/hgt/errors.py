"""Exception and warning types shared across the package."""


class CapacityError(MemoryError):
    """A requested table would exceed the configured memory guard."""


class RangeError(ValueError):
    """A query lies outside the range a table covers.

    ``required_bound``, when known, names the table bound that would
    satisfy the query.
    """

    def __init__(self, message: str, required_bound: int | None = None):
        super().__init__(message)
        self.required_bound = required_bound


class MissingPrimeHeightError(LookupError):
    """The height formula was handed a factorization containing an odd
    prime whose height is not in the supplied map."""


class IncompletePriorError(ValueError):
    """Class generation was invoked without all earlier classes."""


class DegenerateDenominatorError(ArithmeticError):
    """The alternating prime-count sum came out non-positive."""


class CorruptCacheError(ValueError):
    """A height-table cache file failed magic, layout, or checksum checks."""


class PartialClassWarning(UserWarning):
    """A class was scanned from a table too small to contain all of it."""
