"""Exception hierarchy shared by every module."""


class FuzzyCatError(Exception):
    """Base class for errors raised by fuzzycat."""


class InvalidArgument(FuzzyCatError, ValueError):
    """An argument is malformed, foreign to the lattice, or has mismatched axes."""


class ConstructionError(InvalidArgument):
    """A structure cannot be built from the supplied data."""


class CrispnessViolation(InvalidArgument):
    """A relation pair expected to be crisp is not."""


class QuantifierBudgetError(FuzzyCatError):
    """The function space L^X is larger than the quantifier budget allows."""
