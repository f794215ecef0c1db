"""Exception types shared across the package."""


class ConfigError(ValueError):
    """A configuration value is out of range or malformed."""


class DomainError(ValueError):
    """A special-function argument lies outside its domain."""


class InconsistencyError(RuntimeError):
    """An internal invariant failed (wrong branch, ordering violation...)."""


class ToleranceError(RuntimeError):
    """Adaptive quadrature could not certify the requested tolerance."""
