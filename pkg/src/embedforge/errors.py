"""Exception hierarchy shared by all embedforge modules.

The CLI maps these to exit codes: ConfigError -> 2, DataError (and its
subclasses) -> 3, DivergenceError -> 4.
"""


class EmbedForgeError(Exception):
    """Base class for all embedforge errors."""


class ConfigError(EmbedForgeError):
    """Invalid configuration: bad hyperparameters, shape mismatches."""


class DataError(EmbedForgeError):
    """Invalid data values: non-finite inputs, degenerate geometry."""


class StructureError(DataError):
    """Batch or partition structure violations (ragged identity groups,
    too few identities, misaligned lists)."""


class FormatError(DataError):
    """Malformed files: bad magic numbers, truncation, ragged CSV rows."""


class DivergenceError(EmbedForgeError):
    """Training produced a non-finite loss value."""
