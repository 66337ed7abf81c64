"""Exception types raised across the package."""


class TsskitError(Exception):
    """Base class for all package errors."""


class LimitExceeded(TsskitError):
    """An exhaustive search was asked to run on an instance above its size cap."""


class InvalidDecomposition(TsskitError):
    """A tree-decomposition failed validation against its graph."""


class RepresentationMismatch(TsskitError):
    """An interval representation does not realize the given graph."""


class ThresholdExceedsBound(TsskitError):
    """Some threshold is larger than the bound the algorithm was run with."""


class NotAClique(TsskitError):
    """The vertices handed to the clique construction are not pairwise adjacent."""


class PieceTooLarge(TsskitError):
    """A layering piece could not be solved exactly within the configured limits."""


class StateLimitExceeded(TsskitError):
    """The estimated dynamic-programming table size is above the configured cap."""


class FormatError(TsskitError):
    """Malformed input file. ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
