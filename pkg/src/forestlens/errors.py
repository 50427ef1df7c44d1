"""Exception types with stable machine-readable codes.

The CLI maps these onto its exit-status contract: validation problems
exit 1, I/O problems exit 2. Library callers can catch the base class.
"""


class ForestLensError(Exception):
    """Base class for all errors raised by this package."""

    code = "E_INTERNAL"
    exit_status = 1


class DataFormatError(ForestLensError):
    """Malformed input data (bad CSV cell, bad labels, shape mismatch)."""

    code = "E_DATA"


class ConfigError(ForestLensError):
    """Invalid run configuration or parameter value."""

    code = "E_CONFIG"


class ModelFormatError(ForestLensError):
    """Persisted model that cannot be loaded or does not match the data."""

    code = "E_MODEL"


class InputOutputError(ForestLensError):
    """Missing files, unreadable paths, unwritable output directories."""

    code = "E_IO"
    exit_status = 2
