import string

import numpy as np

from .exc import ParameterError
from .settings import MAX_RENDER_P

#: Glyphs used for text rendering of digits.
DIGITS = string.digits + string.ascii_lowercase

_DIGIT_VALUES = {c: v for v, c in enumerate(DIGITS)}


class SlotsMixin(object):
    """Value semantics for small records declaring ``__slots__``."""
    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return all([
            getattr(self, slot) == getattr(other, slot)
            for slot in self.__class__.__slots__
        ])

    def __hash__(self):
        return hash(tuple(getattr(self, slot) for slot in self.__class__.__slots__))

    def __repr__(self):
        fields = ', '.join('{}={!r}'.format(slot, getattr(self, slot))
                           for slot in self.__class__.__slots__)
        return '{}({})'.format(self.__class__.__name__, fields)

    def keys(self):
        """Return all the slot names."""
        return [slot for slot in self.__class__.__slots__]


def digit_dtype(p):
    """Smallest unsigned numpy dtype able to hold the letters of a p-letter
    alphabet.

    """
    if p <= 2 ** 8:
        return np.uint8
    elif p <= 2 ** 16:
        return np.uint16
    return np.uint32


def valuation(i, p):
    """Return ``(v, ops)`` where ``v`` is the largest exponent with
    ``p**v`` dividing ``i`` and ``ops`` the number of divisions performed.

    ``i`` must be positive.

    """
    v = 0
    while i % p == 0:
        i //= p
        v += 1
    return v, v + 1


def format_word(word):
    """Render a word (sequence of letters, most significant first) as text.

    Parameters
    ----------
    word : Sequence[int]

    Returns
    -------
    str

    """
    try:
        return ''.join([DIGITS[d] for d in word])
    except IndexError:
        raise ParameterError("letters above {} cannot be rendered as text"
                             .format(MAX_RENDER_P - 1))


def standardize_word(text):
    """Standardize a textual word before parsing it.

    1. No whitespace
    2. All lowercase characters

    Parameters
    ----------
    text : str

    Returns
    -------
    str

    """
    return ''.join(str(text).split()).lower()


def parse_word(text, p=None):
    """Parse a textual word into a tuple of letters.

    Parameters
    ----------
    text : str
        Word rendered with :data:`DIGITS`. Whitespace and case are ignored.
    p : int or None
        Alphabet size. When given, every letter must be below it.

    Returns
    -------
    Tuple[int, ...]

    Raises
    ------
    ParameterError for unknown glyphs or letters outside the alphabet.

    """
    text = standardize_word(text)
    try:
        word = tuple(_DIGIT_VALUES[c] for c in text)
    except KeyError as e:
        raise ParameterError("invalid digit {} in word {!r}".format(e, text))
    if p is not None and any(d >= p for d in word):
        raise ParameterError("word {!r} has a letter outside 0..{}".format(text, p - 1))
    return word
