"""Exception types shared across the package."""


class Coulomb2dError(Exception):
    """Base class for all library-specific errors."""


class DomainError(Coulomb2dError, ValueError):
    """Argument outside the mathematical domain of an operation."""


class NonConvergenceError(Coulomb2dError):
    """A series evaluation hit its term cap before converging."""


class OutOfRangeError(Coulomb2dError, IndexError):
    """Index outside the capacity of a precomputed table."""


class CapacityError(Coulomb2dError):
    """Kernel table too small for the requested matrix element."""


class ToleranceNotMetError(Coulomb2dError):
    """Numerical integration failed to reach the requested tolerance."""


class FormatError(Coulomb2dError):
    """Persisted table file is malformed or corrupted."""


class OutOfBasisError(Coulomb2dError, ValueError):
    """Orbital lies outside the basis a table was built for."""
