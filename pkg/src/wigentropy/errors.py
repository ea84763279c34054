"""Exception hierarchy.  CLI exit codes are keyed on these classes."""


class WigentropyError(Exception):
    """Base class for all package errors."""


class DomainError(WigentropyError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class UsageError(WigentropyError, ValueError):
    """Arguments are individually valid but used inconsistently (e.g. mismatched grids)."""


class ResolutionError(WigentropyError):
    """The grid is too coarse or too small for the requested transform."""


class CapabilityError(WigentropyError):
    """The request exceeds a documented numerical capability (e.g. Fock index guard)."""


class SpecError(WigentropyError, ValueError):
    """A state or run specification could not be parsed."""
