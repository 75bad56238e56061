"""Words over a p-letter alphabet and the parameters of a sigma_k-Gray cycle.

A word is stored most significant letter first: position ``j`` (1 being
the rightmost letter) lives at index ``n - j``. Functions here accept any
sequence of letters (tuples, lists, numpy rows) and return tuples.

"""

import numpy as np
import pandas as pd

from .exc import ParameterError, StructuralError, WordLengthError
from .util import SlotsMixin, digit_dtype, format_word, parse_word

# Cycle variants
H = 'h'
GAMMA = 'gamma'
RHO = 'rho'
GAMMA_EVEN = 'gamma_even'
GAMMA_EVEN_ODDPART = 'gamma_even_odd'
TRIVIAL_BINARY = 'trivial'

VARIANTS = (H, GAMMA, RHO, GAMMA_EVEN, GAMMA_EVEN_ODDPART, TRIVIAL_BINARY)

# Base sequences for the p >= 3 construction
AUTO = 'auto'
REFLECTED = 'reflected'
MODULAR = 'modular'

BASES = (AUTO, REFLECTED, MODULAR)

# Supports of a maximum-length cycle
FULL = 'full'
EVEN = 'even'
ODD = 'odd'
PAIR = 'pair'

SUPPORTS = (FULL, EVEN, ODD, PAIR)


class Alphabet(SlotsMixin):
    """The letters ``0..p-1``."""
    __slots__ = ('p',)

    def __init__(self, p):
        if int(p) != p or p < 2:
            raise ParameterError("alphabet size must be an integer >= 2, got {}".format(p))
        self.p = int(p)

    def __len__(self):
        return self.p

    def __contains__(self, letter):
        return 0 <= letter < self.p

    @property
    def letters(self):
        return tuple(range(self.p))

    def theta(self, c, t=1):
        return theta(c, t, self.p)

    def parse(self, text):
        """Parse a textual word whose letters must belong to this alphabet."""
        return parse_word(text, self.p)


def hamming_distance(u, v):
    """Number of positions at which two equal-length words differ.

    Words may be letter sequences or text (parsed with :func:`parse_word`).

    Raises
    ------
    WordLengthError when the words have different lengths.

    """
    u = np.asarray(parse_word(u) if isinstance(u, str) else u)
    v = np.asarray(parse_word(v) if isinstance(v, str) else v)
    if u.shape != v.shape:
        raise WordLengthError("cannot compare words of lengths {} and {}"
                              .format(len(u), len(v)))
    return int(np.count_nonzero(u != v))


def theta(c, t, p):
    """Apply the cyclic letter permutation ``c -> c + 1 mod p`` t times.

    ``t`` may be negative.

    """
    return (c + t) % p


def theta_word(w, p, t=1):
    """Apply :func:`theta` letter-wise. For p = 2 this is the complement."""
    return tuple((int(c) + t) % p for c in w)


def residue_r(i, j, p):
    """The index ``i`` reduced modulo ``p**j``.

    Python integers are unbounded, so no overflow can occur.

    """
    if i < 0 or j < 0:
        raise ParameterError("residue_r needs i >= 0 and j >= 0")
    return i % p ** j


def residue_mu(i, j):
    """The index ``i`` reduced modulo ``2**(j + 1)``."""
    if i < 0 or j < 0:
        raise ParameterError("residue_mu needs i >= 0 and j >= 0")
    return i % 2 ** (j + 1)


def _check_parameters(p, n, k):
    for name, value in (('p', p), ('n', n), ('k', k)):
        if int(value) != value:
            raise ParameterError("{} must be an integer, got {!r}".format(name, value))
    if p < 2:
        raise ParameterError("p must be at least 2, got {}".format(p))
    if not 1 <= k <= n:
        raise ParameterError("need 1 <= k <= n, got n={} k={}".format(n, k))


def lambda_max(p, n, k):
    """Maximum length of a sigma_k-Gray cycle over words of length at most n.

    Parameters
    ----------
    p : int
        Alphabet size.
    n : int
        Word length.
    k : int
        Number of letters substituted at each step.

    Returns
    -------
    int

    """
    _check_parameters(p, n, k)
    if p >= 3:
        return p ** n
    if n == k:
        return 2
    if k % 2:
        return 2 ** n
    return 2 ** (n - 1)


class CycleSpec(SlotsMixin):
    """Validated parameters of a maximum-length cycle.

    Parameters
    ----------
    p, n, k : int
        Alphabet size, word length and substitution weight.
    variant : str
        One of :data:`VARIANTS`.
    base : str
        Base sequence for the ``h`` variant: ``reflected`` (the p-ary
        reflected Gray code), ``modular`` (the cyclic modular p-ary code) or
        ``auto`` (reflected whenever it is cyclic, i.e. p even or n0 = 1).

    """
    __slots__ = ('p', 'n', 'k', 'variant', 'base')

    def __init__(self, p, n, k, variant, base=AUTO):
        _check_parameters(p, n, k)
        if variant not in VARIANTS:
            raise ParameterError("unknown variant {!r}".format(variant))
        if base not in BASES:
            raise ParameterError("unknown base {!r}".format(base))

        if variant == H:
            if p < 3:
                raise ParameterError("variant h requires p >= 3")
        else:
            if p != 2:
                raise ParameterError("variant {} requires p = 2".format(variant))
            if base == MODULAR:
                raise ParameterError("the modular base only applies to variant h")

        if variant in (GAMMA, RHO):
            if k % 2 == 0 or n < k + 1:
                raise ParameterError("variant {} requires k odd and n >= k + 1".format(variant))
        elif variant in (GAMMA_EVEN, GAMMA_EVEN_ODDPART):
            if k % 2 or n < k + 1:
                raise ParameterError("variant {} requires k even and n >= k + 1".format(variant))
        elif variant == TRIVIAL_BINARY and n != k:
            raise ParameterError("variant trivial requires n = k")

        self.p = int(p)
        self.n = int(n)
        self.k = int(k)
        self.variant = variant
        self.base = base

    @classmethod
    def for_parameters(cls, p, n, k, parity=EVEN, base=AUTO):
        """Pick the variant that yields a maximum-length cycle.

        ``parity`` selects between the two parity classes when p = 2 and k is
        even.

        """
        _check_parameters(p, n, k)
        if p >= 3:
            variant = H
        elif n == k:
            variant = TRIVIAL_BINARY
        elif k % 2:
            variant = GAMMA
        elif parity == EVEN:
            variant = GAMMA_EVEN
        elif parity == ODD:
            variant = GAMMA_EVEN_ODDPART
        else:
            raise ParameterError("parity must be 'even' or 'odd', got {!r}".format(parity))
        return cls(p, n, k, variant, base=base)

    @property
    def n0(self):
        return self.n - self.k + 1

    @property
    def length(self):
        """Number of terms of the cycle."""
        if self.variant == TRIVIAL_BINARY:
            return 2
        if self.variant in (GAMMA_EVEN, GAMMA_EVEN_ODDPART):
            return 2 ** (self.n - 1)
        return self.p ** self.n

    @property
    def support(self):
        """The set of words the cycle enumerates, as a support name."""
        if self.variant == TRIVIAL_BINARY:
            return PAIR
        if self.variant == GAMMA_EVEN:
            return EVEN
        if self.variant == GAMMA_EVEN_ODDPART:
            return ODD
        return FULL

    @property
    def resolved_base(self):
        """The base actually used: never ``auto``."""
        if self.variant != H:
            return REFLECTED
        if self.base != AUTO:
            return self.base
        if self.p % 2 == 0 or self.n0 == 1:
            return REFLECTED
        return MODULAR

    @property
    def alphabet(self):
        return Alphabet(self.p)


class GrayCycle(object):
    """A materialized sequence of words with its (p, n, k) metadata.

    Parameters
    ----------
    spec : CycleSpec
    terms : np.ndarray
        ``L x n`` matrix of letters; row ``i`` is term ``i``.

    """
    def __init__(self, spec, terms):
        terms = np.asarray(terms)
        if terms.ndim != 2 or len(terms) == 0:
            raise StructuralError("a cycle needs a non-empty L x n matrix of letters")
        if terms.shape[1] != spec.n:
            raise StructuralError("terms have length {}, expected {}"
                                  .format(terms.shape[1], spec.n))
        self.spec = spec
        self.terms = terms.astype(digit_dtype(spec.p), copy=False)

    @classmethod
    def from_words(cls, words, spec):
        """Create a cycle from a sequence of words (strings or letter
        sequences).

        Raises
        ------
        StructuralError when the words do not share the length ``spec.n``.

        """
        rows = [parse_word(w, spec.p) if isinstance(w, str) else tuple(w) for w in words]
        if not rows:
            raise StructuralError("a cycle needs at least one term")
        lengths = set(len(row) for row in rows)
        if len(lengths) > 1:
            raise StructuralError("words have mixed lengths {}".format(sorted(lengths)))
        return cls(spec, np.array(rows, dtype=digit_dtype(spec.p)).reshape(len(rows), -1))

    def __len__(self):
        return len(self.terms)

    def __getitem__(self, i):
        return tuple(int(c) for c in self.terms[i])

    def __iter__(self):
        for row in self.terms:
            yield tuple(int(c) for c in row)

    def __eq__(self, other):
        if not isinstance(other, GrayCycle):
            return NotImplemented
        return (self.spec.p, self.spec.n) == (other.spec.p, other.spec.n) and \
            self.terms.shape == other.terms.shape and \
            bool(np.all(self.terms == other.terms))

    def __repr__(self):
        return 'GrayCycle({!r}, L={})'.format(self.spec, len(self))

    def words(self):
        """All terms rendered as text."""
        return [format_word(row) for row in self.terms]

    def to_frame(self):
        """Terms as a :class:`pd.DataFrame` with ``index`` and ``word`` columns."""
        return pd.DataFrame({
            'index': np.arange(len(self)),
            'word': self.words(),
        })
