"""Exception hierarchy shared by all modules."""


class StripAndersonError(Exception):
    """Base class for all package errors."""


class ConfigurationError(StripAndersonError):
    """Invalid model description (distribution parameters, matrix shapes, ...)."""


class DomainError(StripAndersonError):
    """An operation was called outside its stated precondition."""


class StatisticsError(StripAndersonError):
    """Not enough data to produce the requested error bars."""


class NumericalError(StripAndersonError):
    """A numerical procedure failed (singular solve, violated bound, ...)."""
