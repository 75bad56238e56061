class GrayToolsError(Exception):
    """Base class for all errors raised by graytools."""


class ParameterError(GrayToolsError, ValueError):
    """Raised when (p, n, k), a variant, a mode or a word is invalid."""


class WordLengthError(ParameterError):
    """Raised when comparing words of different lengths."""


class StructuralError(GrayToolsError):
    """Raised when a sequence is empty or mixes word lengths."""


class SizeLimitError(GrayToolsError):
    """Raised when a materialization or streaming size cap is exceeded."""


class ThresholdExceededError(SizeLimitError):
    """Raised when a base table is too large to preprocess."""


class OracleScaleError(SizeLimitError):
    """Raised when a brute-force search is asked to work beyond its cap."""


class SequenceExhaustedError(GrayToolsError):
    """Raised when advancing a bounded iterator past its last term."""
