"""Exception hierarchy shared by the library and the CLI."""


class Diag24Error(Exception):
    """Base class for every error raised by this package."""


class DomainError(Diag24Error, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SizeError(Diag24Error, ValueError):
    """A request exceeds a configured memory or work cap."""


class RangeError(Diag24Error, ValueError):
    """A query falls outside the range covered by a precomputed table."""


class TheoremViolation(Diag24Error, AssertionError):
    """A bounded check found a counterexample to a proven theorem.

    Firing this means the implementation is broken, not the theorem.
    """


class Inconclusive(Diag24Error, RuntimeError):
    """A bounded search ran out of room before it could certify anything."""
