"""Exception types and the CLI exit-code contract."""

EXIT_OK = 0
EXIT_SOUNDNESS = 2
EXIT_CONFIG = 3
EXIT_NUMERIC = 4


class ConfigError(ValueError):
    """Bad configuration: unknown keys, incompatible oracle, empty bound list."""


class NumericError(RuntimeError):
    """An iterative routine failed to converge."""


class ResourceLimitError(RuntimeError):
    """Requested computation exceeds the dense-solve size cap."""


class UnsupportedMethodError(ValueError):
    """No method available for the requested (domain, l) combination."""
