"""Base sequences with one substitution per step.

Tables are materialized as ``L x n0`` numpy matrices. Steppers produce the
same sequences one term at a time, changing a single letter per call, and
count the positions they inspect so that the amortized cost can be measured.

"""

import numpy as np

from .exc import ParameterError, SizeLimitError
from .settings import MATERIALIZE_LIMIT
from .util import digit_dtype, valuation

# Table kinds
G = 'G'
H1 = 'H1'
M1 = 'M1'
GAMMA1 = 'GAMMA1'
RHO1 = 'RHO1'

KINDS = (G, H1, M1, GAMMA1, RHO1)


def check_size(size, limit=MATERIALIZE_LIMIT):
    if size > limit:
        raise SizeLimitError("{} terms exceed the materialization limit of {}"
                             .format(size, limit))


class BaseTable(object):
    """A materialized base sequence.

    Parameters
    ----------
    p : int
        Alphabet size.
    n0 : int
        Word length.
    seq : np.ndarray
        ``p**n0 x n0`` matrix, row ``i`` being term ``i``.
    kind : str
        One of :data:`KINDS`.

    """
    def __init__(self, p, n0, seq, kind):
        self.p = p
        self.n0 = n0
        self.seq = seq
        self.seq.setflags(write=False)
        self.kind = kind

    def __len__(self):
        return len(self.seq)

    def __getitem__(self, i):
        return tuple(int(c) for c in self.seq[i])

    def __repr__(self):
        return 'BaseTable(kind={}, p={}, n0={})'.format(self.kind, self.p, self.n0)

    def successor(self, i):
        """Index of the cyclic successor of term ``i``."""
        i += 1
        return 0 if i == len(self.seq) else i


def reflected_binary(n):
    """The reflected binary Gray code over words of length n.

    Term ``i`` is the binary expansion of ``i ^ (i >> 1)``.

    """
    if n < 0:
        raise ParameterError("n must be non-negative")
    check_size(2 ** n)
    idx = np.arange(2 ** n, dtype=np.int64)
    code = idx ^ (idx >> 1)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    seq = ((code[:, np.newaxis] >> shifts) & 1).astype(np.uint8)
    return BaseTable(2, n, seq, G)


def reflected_pary(p, n):
    """The p-ary reflected Gray code over words of length n.

    Built level by level: block ``d`` of level m + 1 is the letter ``d``
    prepended to level m, reversed when ``d`` is odd.

    """
    if p < 2 or n < 0:
        raise ParameterError("reflected_pary needs p >= 2 and n >= 0")
    check_size(p ** n)
    dtype = digit_dtype(p)
    seq = np.zeros((1, 0), dtype=dtype)
    for _ in range(n):
        size = len(seq)
        blocks = []
        for d in range(p):
            block = seq if d % 2 == 0 else seq[::-1]
            lead = np.full((size, 1), d, dtype=dtype)
            blocks.append(np.hstack([lead, block]))
        seq = np.vstack(blocks)
    return BaseTable(p, n, seq, G if p == 2 else H1)


def modular_pary(p, n):
    """The modular p-ary Gray code over words of length n.

    With ``a_j`` the base-p digits of ``i`` (position 1 rightmost), letter
    ``j`` of term ``i`` is ``a_j - a_{j+1} mod p``. Going from term ``i - 1``
    to term ``i`` adds one to the letter in position ``1 + v_p(i)``, and the
    last term ``(p-1)0...0`` is one substitution away from the first, so the
    sequence is cyclic for every p.

    """
    if p < 2 or n < 0:
        raise ParameterError("modular_pary needs p >= 2 and n >= 0")
    check_size(p ** n)
    idx = np.arange(p ** n, dtype=np.int64)
    powers = p ** np.arange(n, dtype=np.int64)
    counter = (idx[:, np.newaxis] // powers) % p
    upper = np.zeros_like(counter)
    upper[:, :-1] = counter[:, 1:]
    seq = ((counter - upper) % p)[:, ::-1]
    return BaseTable(p, n, np.ascontiguousarray(seq).astype(digit_dtype(p)), M1)


def _check_n0(n0):
    if n0 < 2:
        raise ParameterError("the binary base pair needs n0 >= 2, got {}".format(n0))


def gamma_base(n0):
    """``g`` read backwards from its first term: g[0], g[N-1], ..., g[1]."""
    _check_n0(n0)
    g = reflected_binary(n0).seq
    order = np.concatenate([[0], np.arange(len(g) - 1, 0, -1)])
    return BaseTable(2, n0, g[order], GAMMA1)


def rho_base(n0):
    """``g`` shifted by one: g[N-1], g[0], ..., g[N-2]."""
    _check_n0(n0)
    g = reflected_binary(n0).seq
    order = np.concatenate([[len(g) - 1], np.arange(len(g) - 1)])
    return BaseTable(2, n0, g[order], RHO1)


def base_table(kind, p, n0):
    """Build the base table of the given kind."""
    if kind == G:
        return reflected_binary(n0)
    elif kind == H1:
        return reflected_pary(p, n0)
    elif kind == M1:
        return modular_pary(p, n0)
    elif kind == GAMMA1:
        return gamma_base(n0)
    elif kind == RHO1:
        return rho_base(n0)
    raise ParameterError("unknown table kind {!r}".format(kind))


class _Stepper(object):
    """Common state of the one-letter-per-step generators.

    ``word`` holds the current term most significant letter first; ``index``
    is its rank in the sequence. :meth:`advance` moves to the cyclic
    successor and returns the number of positions it inspected.

    """
    def __init__(self, p, n0):
        self.p = p
        self.n0 = n0
        self.size = p ** n0
        self.reset()

    def reset(self):
        self.index = 0
        self.word = [0] * self.n0
        return self.n0

    def advance(self):
        self.index += 1
        if self.index == self.size:
            return self.reset()
        return self._step()

    def _step(self):
        raise NotImplementedError


class ReflectedStepper(_Stepper):
    """Reflected p-ary stepping with one direction flag per position.

    The lowest position whose letter can still move in its direction moves;
    every saturated position below it reverses its direction.

    """
    def reset(self):
        self.directions = [1] * self.n0
        return super(ReflectedStepper, self).reset()

    def _step(self):
        ops = 1
        j = 0
        while True:
            pos = self.n0 - 1 - j
            d = self.word[pos] + self.directions[j]
            if 0 <= d < self.p:
                self.word[pos] = d
                return ops
            self.directions[j] = -self.directions[j]
            j += 1
            ops += 1


class ModularStepper(_Stepper):
    """Modular p-ary stepping driven by a base-p counter."""
    def reset(self):
        self.counter = [0] * self.n0
        return super(ModularStepper, self).reset()

    def _step(self):
        ops = 1
        j = 0
        while self.counter[j] == self.p - 1:
            self.counter[j] = 0
            j += 1
            ops += 1
        self.counter[j] += 1
        pos = self.n0 - 1 - j
        self.word[pos] = (self.word[pos] + 1) % self.p
        return ops


class BinaryRankStepper(_Stepper):
    """Walks the reflected binary code forwards or backwards from a rank.

    Moving between ranks ``t - 1`` and ``t`` flips position ``1 + v_2(t)``;
    the cyclic link between ranks ``N - 1`` and 0 flips position ``n0``.

    """
    def __init__(self, n0, start_rank=0, forward=True):
        self.start_rank = start_rank
        self.forward = forward
        super(BinaryRankStepper, self).__init__(2, n0)

    def reset(self):
        self.index = 0
        self.rank = self.start_rank
        code = self.rank ^ (self.rank >> 1)
        self.word = [(code >> (self.n0 - 1 - m)) & 1 for m in range(self.n0)]
        return self.n0

    def _step(self):
        if self.forward:
            self.rank = (self.rank + 1) % self.size
            position, ops = _flip_position(self.rank, self.n0)
        else:
            position, ops = _flip_position(self.rank, self.n0)
            self.rank = (self.rank - 1) % self.size
        self.word[self.n0 - position] ^= 1
        return ops


def _flip_position(rank, n0):
    if rank == 0:
        return n0, 1
    v, ops = valuation(rank, 2)
    return v + 1, ops


def make_stepper(kind, p, n0):
    """Create a stepper positioned on term 0 of the given base sequence."""
    if kind == G:
        return BinaryRankStepper(n0, 0, forward=True)
    elif kind == H1:
        return ReflectedStepper(p, n0)
    elif kind == M1:
        return ModularStepper(p, n0)
    elif kind == GAMMA1:
        _check_n0(n0)
        return BinaryRankStepper(n0, 0, forward=False)
    elif kind == RHO1:
        _check_n0(n0)
        return BinaryRankStepper(n0, 2 ** n0 - 1, forward=True)
    raise ParameterError("unknown table kind {!r}".format(kind))


def base_cat_successor(kind, current, i, p=2):
    """Compute term ``i`` of a base sequence from term ``i - 1``.

    Stateless: the direction of each position is recomputed from ``i``.
    Generators step through :func:`make_stepper` instead, which keeps
    per-position direction flags.

    Parameters
    ----------
    kind : str
        One of :data:`KINDS`. ``G``, ``GAMMA1`` and ``RHO1`` are binary.
    current : Sequence[int]
        Term ``i - 1``.
    i : int
        Index of the term to compute, ``1 <= i < p**len(current)``.
    p : int
        Alphabet size for ``H1`` and ``M1``.

    Returns
    -------
    Tuple[int, ...]
        ``current`` with exactly one letter changed.

    """
    if kind in (G, GAMMA1, RHO1):
        p = 2
    elif kind not in (H1, M1):
        raise ParameterError("unknown table kind {!r}".format(kind))
    n0 = len(current)
    size = p ** n0
    if not 1 <= i < size:
        raise ParameterError("index {} out of range [1, {}]".format(i, size - 1))

    word = list(current)
    if kind in (G, H1, M1):
        j = valuation(i, p)[0] + 1
        c = word[n0 - j]
        if kind == M1 or (i // p ** j) % 2 == 0:
            word[n0 - j] = (c + 1) % p
        else:
            word[n0 - j] = (c - 1) % p
    elif kind == GAMMA1:
        # term i - 1 has rank (N - i + 1) mod N in g and we step backwards
        position = _flip_position((size - i + 1) % size, n0)[0]
        word[n0 - position] ^= 1
    else:
        # term i - 1 has rank i - 2 mod N in g and we step forwards
        position = _flip_position(i - 1, n0)[0]
        word[n0 - position] ^= 1
    return tuple(word)
