"""Size limits and tunables shared by the library and the command-line tool."""

import os

from .exc import ParameterError

#: Largest number of terms a cycle may have when fully materialized.
MATERIALIZE_LIMIT = 2 ** 24

#: Largest number of terms an iterator may be asked to stream.
STREAM_LIMIT = 2 ** 40

#: Largest base table (entries) built for the LOOPLESS strategy.
DEFAULT_PREPROCESS_THRESHOLD = 2 ** 20

#: Environment variable overriding :data:`DEFAULT_PREPROCESS_THRESHOLD`.
PREPROCESS_THRESHOLD_ENV = 'GRAYTOOLS_PREPROCESS_THRESHOLD'

#: Digits are rendered with 0-9 then a-z.
MAX_RENDER_P = 36

#: Vertex cap for the Hamiltonian cycle search.
ORACLE_MAX_WORDS = 24

#: Vertex cap (p^n) for the exhaustive lambda search.
BRUTEFORCE_MAX_WORDS = 16


def parse_size(text):
    """Parse a size given either as a decimal integer or as ``2**N``.

    Parameters
    ----------
    text : str

    Returns
    -------
    size : int

    Raises
    ------
    ParameterError when the text is not a positive size.

    """
    text = ''.join(str(text).split())
    try:
        if '**' in text:
            base, exponent = text.split('**')
            size = int(base) ** int(exponent)
        else:
            size = int(text)
    except ValueError:
        raise ParameterError("not a size: {!r}".format(text))
    if size < 1:
        raise ParameterError("size must be positive, got {}".format(size))
    return size


def preprocess_threshold(override=None):
    """Return the LOOPLESS preprocessing threshold.

    An explicit ``override`` wins, then the environment variable, then the
    default.

    """
    if override is not None:
        return parse_size(override)
    value = os.environ.get(PREPROCESS_THRESHOLD_ENV)
    if value:
        return parse_size(value)
    return DEFAULT_PREPROCESS_THRESHOLD
