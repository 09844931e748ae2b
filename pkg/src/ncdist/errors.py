"""Exception hierarchy shared across the package."""


class NCDistError(ValueError):
    """Base class for every error raised by ncdist."""


class DegreeExceededError(NCDistError):
    """A coefficient beyond the truncation degree was requested."""


class EmptyWordError(NCDistError):
    """The empty word was used where a non-empty word is required."""


class AlphabetMismatchError(NCDistError):
    """Two series (or distributions) live on different alphabets."""


class GroundSetError(NCDistError):
    """Partitions on incompatible ground sets were combined."""


class PreconditionError(NCDistError):
    """An input fell outside the documented domain of an operation."""


class DomainError(PreconditionError):
    """A numeric parameter (exponent, time, dilation) is out of range."""
