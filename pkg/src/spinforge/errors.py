"""Exception hierarchy shared across the toolchain.

The CLI maps each class to a distinct exit code, so raise the most specific
one that applies.
"""


class SpinforgeError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InputError(SpinforgeError):
    """Invalid argument, malformed instance, or domain violation."""

    exit_code = 2


class CapacityError(SpinforgeError):
    """Problem exceeds an exhaustive-computation cap."""

    exit_code = 3


class EmbeddingError(SpinforgeError):
    """No valid minor embedding found, or an embedding cannot host a coupling."""

    exit_code = 4


class SolverError(SpinforgeError):
    """Engine parameter or runtime failure."""

    exit_code = 5
