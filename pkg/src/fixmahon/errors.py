"""Exception types shared across the package."""


class FixmahonError(ValueError):
    """Base class for every domain error raised by this package."""


class WordFormatError(FixmahonError):
    """Malformed textual input for a word or a permutation."""


class NeutralLetterError(FixmahonError):
    """A positive letter equals its reduced rank, so class-sensitive
    operations on the word are undefined."""


class NotADerangementError(FixmahonError):
    """The positive subword must be a derangement but is not."""


class NoZeroError(FixmahonError):
    """The word contains no zero letter."""


class CapExceededError(FixmahonError):
    """An enumeration size cap was exceeded."""


class CoefficientOverflowError(FixmahonError):
    """A polynomial coefficient left the checked 64-bit range."""
