"""Exception hierarchy used across the toolkit.

Library-level contract violations (bad widths, bad hyperparameters) raise
plain ValueError; these classes mark failures the CLI maps to exit codes.
"""


class NewsvoteError(Exception):
    """Base class for toolkit errors."""


class ConfigError(NewsvoteError):
    """Invalid configuration file or option value (CLI exit code 2)."""


class DataError(NewsvoteError):
    """Unreadable or malformed input data (CLI exit code 3)."""


class BundleError(NewsvoteError):
    """Unreadable, corrupt or incompatible model bundle (CLI exit code 4)."""
