"""Term-by-term generation of the cycles built in :mod:`graytools.builders`.

Each state keeps one cell per column of the word plus the current term of
the base sequence, and moves from term ``i - 1`` to term ``i`` touching every
cell exactly once. Two strategies are available for the base sequence:

``loopless``
    the base sequence is preprocessed into a table and advanced with one
    lookup, so every step costs the same;
``cat``
    the base sequence is advanced by a stepper that changes one letter; the
    cost per step varies but its average is bounded.

Every call records the number of cell writes and table lookups it performed
in ``last_cost`` (see :func:`step_cost`).

"""

import warnings

from .builders import build
from .codes import (
    GAMMA1, H1, M1, RHO1, base_table, make_stepper,
)
from .exc import ParameterError, SequenceExhaustedError, SizeLimitError, ThresholdExceededError
from .settings import STREAM_LIMIT, preprocess_threshold
from .words import (
    AUTO, CycleSpec, EVEN, GAMMA, GAMMA_EVEN, GAMMA_EVEN_ODDPART, H, ODD,
    REFLECTED, RHO, TRIVIAL_BINARY,
)

# Strategies
CAT = 'cat'
LOOPLESS = 'loopless'
STRATEGIES = (CAT, LOOPLESS)

# Generation modes
RECURSIVE = 'recursive'
MODES = (RECURSIVE, CAT, LOOPLESS, AUTO)

_PI_CYCLE = (
    (0, (0, 0)), (1, (0, 1)), (2, (1, 1)), (3, (1, 0)),
    (4, (1, 0)), (5, (1, 1)), (6, (0, 1)), (7, (0, 0)),
)


def _flip(c):
    return (c[0] ^ 1, c[1] ^ 1)


class PiPhiTables(object):
    """The 8-pair cycle driving the two-letter columns of the binary engine.

    ``pi`` maps each pair to its successor on the cycle. ``phi`` is the same
    map keyed by the pair as it stands at the end of a block, i.e. with its
    letters complemented: ``phi[(q, flip(c))] == pi[(q, c)]``.

    """
    def __init__(self):
        self.cycle = _PI_CYCLE
        self.pi = {
            pair: _PI_CYCLE[(n + 1) % len(_PI_CYCLE)]
            for n, pair in enumerate(_PI_CYCLE)
        }
        self.phi = {
            (q, _flip(c)): self.pi[(q, c)]
            for q, c in _PI_CYCLE
        }


PI_PHI = PiPhiTables()


class _State(object):
    """Bookkeeping shared by all iterator states.

    Bounded states raise :class:`SequenceExhaustedError` after the last term;
    cyclic states wrap around to term 0.

    """
    def __init__(self, length, cyclic):
        if length > STREAM_LIMIT:
            raise SizeLimitError("{} terms exceed the streaming limit of {}"
                                 .format(length, STREAM_LIMIT))
        self.length = length
        self.cyclic = cyclic
        self.i = 0
        self.last_cost = 0

    def _next_index(self):
        """Move ``i`` forward; return True when wrapping to 0."""
        if self.i == self.length - 1:
            if not self.cyclic:
                raise SequenceExhaustedError("all {} terms have been produced".format(self.length))
            self.i = 0
            return True
        self.i += 1
        return False

    def word(self):
        raise NotImplementedError

    def advance(self):
        raise NotImplementedError

    def __iter__(self):
        return walk(self)


def _check_strategy(strategy):
    if strategy not in STRATEGIES:
        raise ParameterError("unknown strategy {!r}".format(strategy))


def _check_threshold(entries, threshold):
    threshold = preprocess_threshold(threshold)
    if entries > threshold:
        raise ThresholdExceededError(
            "a base table of {} entries exceeds the preprocessing threshold of {}"
            .format(entries, threshold))


class Alg1State(_State):
    """Generator state for ``h^{n,k}`` (p >= 3).

    Cells for positions n down to n0 + 1 hold single letters. At step i the
    cell of position j moves by two when ``p^{j-1}`` divides i and by one
    otherwise; the last n0 letters follow the base sequence.

    """
    def __init__(self, p, n, k, strategy, base=AUTO, cyclic=False, threshold=None):
        _check_strategy(strategy)
        spec = CycleSpec(p, n, k, H, base=base)
        super(Alg1State, self).__init__(p ** n, cyclic)
        self.p, self.n, self.k = p, n, k
        self.n0 = n0 = spec.n0
        self.strategy = strategy
        self.cells = [0] * (n - n0)
        self.powers = [p ** (j - 1) for j in range(n, n0, -1)]

        kind = H1 if spec.resolved_base == REFLECTED else M1
        if strategy == LOOPLESS:
            _check_threshold(p ** n0, threshold)
            self.table = base_table(kind, p, n0)
            self.position = 0
            self.stepper = None
        else:
            self.table = None
            self.stepper = make_stepper(kind, p, n0)

    def tail(self):
        if self.table is not None:
            return self.table[self.position]
        return tuple(self.stepper.word)

    def word(self):
        return tuple(self.cells) + self.tail()

    def advance(self):
        self._next_index()
        i, p = self.i, self.p
        cells = self.cells
        ops = 0
        for idx, power in enumerate(self.powers):
            cells[idx] = (cells[idx] + (2 if i % power == 0 else 1)) % p
            ops += 1
        if self.table is not None:
            self.position = self.table.successor(self.position)
            ops += 1
        else:
            ops += self.stepper.advance()
        self.last_cost = ops
        return self.word()


class Alg2State(_State):
    """Generator state for ``gamma^{n,k}`` or ``rho^{n,k}`` (p = 2, k odd).

    Columns n, n - 2, ..., n0 + 2 each hold a pair ``(q, c)``: ``c`` is the
    two-letter block of the word and ``q`` the position of the column in its
    8-pair cycle. At step i a column complements ``c`` unless ``2^{j-2}``
    divides i, in which case it moves to the next pair through ``phi``. The
    last n0 letters run through the gamma and rho base tables alternately,
    switching each time ``i mod 2^{n0+1}`` reaches 0 or ``2^{n0}``.

    """
    def __init__(self, n, k, strategy, variant=GAMMA, cyclic=False, threshold=None):
        _check_strategy(strategy)
        if variant not in (GAMMA, RHO):
            raise ParameterError("variant must be gamma or rho, got {!r}".format(variant))
        spec = CycleSpec(2, n, k, variant)
        super(Alg2State, self).__init__(2 ** n, cyclic)
        self.n, self.k = n, k
        self.n0 = n0 = spec.n0
        self.variant = variant
        self.strategy = strategy
        self.powers = [2 ** (j - 2) for j in range(n, n0, -2)]
        self.top_start = _PI_CYCLE[0] if variant == GAMMA else _PI_CYCLE[4]
        self.cells = [_PI_CYCLE[0]] * len(self.powers)
        if self.cells:
            self.cells[0] = self.top_start

        self.half = 2 ** n0
        self.period = 2 ** (n0 + 1)
        # with no columns the base alone is the cycle, started on rho for rho
        self.mu0_start = self.half if (variant == RHO and not self.cells) else 0
        self.mu0 = self.mu0_start
        self.b = GAMMA if self.mu0 < self.half else RHO

        if strategy == LOOPLESS:
            _check_threshold(self.half, threshold)
            self.tables = {GAMMA: base_table(GAMMA1, 2, n0), RHO: base_table(RHO1, 2, n0)}
            self.c0 = self.tables[self.b][0]
            self.steppers = None
        else:
            self.tables = None
            self.steppers = {GAMMA: make_stepper(GAMMA1, 2, n0), RHO: make_stepper(RHO1, 2, n0)}
            self.c0 = None

    def tail(self):
        if self.tables is not None:
            return self.c0
        return tuple(self.steppers[self.b].word)

    def word(self):
        head = ()
        for _, c in self.cells:
            head += c
        return head + self.tail()

    def advance(self):
        wrapped = self._next_index()
        i = self.i
        cells = self.cells
        phi = PI_PHI.phi
        ops = 0
        for idx, power in enumerate(self.powers):
            if wrapped and idx == 0:
                cells[0] = self.top_start
            elif i % power:
                q, c = cells[idx]
                cells[idx] = (q, _flip(c))
            else:
                cells[idx] = phi[cells[idx]]
            ops += 1

        self.mu0 = self.mu0_start if wrapped else (self.mu0 + 1) % self.period
        b = GAMMA if self.mu0 < self.half else RHO
        ops += 2
        if self.tables is not None:
            self.c0 = self.tables[b][self.mu0 % self.half]
            ops += 1
        elif b != self.b or wrapped:
            ops += self.steppers[b].reset()
        else:
            ops += self.steppers[b].advance()
        self.b = b
        self.last_cost = ops
        return self.word()


class EvenKState(_State):
    """Generator state for the parity-class cycles (p = 2, k even).

    Prepends an alternating letter to the terms of ``gamma^{n-1,k-1}``.

    """
    def __init__(self, n, k, strategy, parity=EVEN, cyclic=False, threshold=None):
        if parity not in (EVEN, ODD):
            raise ParameterError("parity must be 'even' or 'odd', got {!r}".format(parity))
        CycleSpec(2, n, k, GAMMA_EVEN if parity == EVEN else GAMMA_EVEN_ODDPART)
        self.inner = Alg2State(n - 1, k - 1, strategy, GAMMA, cyclic=cyclic, threshold=threshold)
        super(EvenKState, self).__init__(self.inner.length, cyclic)
        self.n, self.k = n, k
        self.parity = parity
        self.strategy = strategy
        self.start = 0 if parity == EVEN else 1

    def word(self):
        return ((self.start + self.inner.i) & 1,) + self.inner.word()

    def advance(self):
        self.inner.advance()
        self.i = self.inner.i
        self.last_cost = self.inner.last_cost + 1
        return self.word()


class TrivialState(_State):
    """The two-term cycle ``(0^k, 1^k)``."""
    def __init__(self, k, cyclic=False):
        CycleSpec(2, k, k, TRIVIAL_BINARY)
        super(TrivialState, self).__init__(2, cyclic)
        self.k = k
        self.strategy = LOOPLESS

    def word(self):
        return (self.i,) * self.k

    def advance(self):
        self._next_index()
        self.last_cost = self.k
        return self.word()


def walk(state, limit=None):
    """Yield the current word of ``state`` and then each successor.

    Stops after the last term of a bounded state, or after ``limit`` words.

    """
    if limit is not None and limit <= 0:
        return
    yield state.word()
    count = 1
    while limit is None or count < limit:
        try:
            yield state.advance()
        except SequenceExhaustedError:
            return
        count += 1


def alg1_init(p, n, k, strategy, base=AUTO, cyclic=False, threshold=None):
    """Create an :class:`Alg1State` positioned on term 0 (``0^n``)."""
    return Alg1State(p, n, k, strategy, base=base, cyclic=cyclic, threshold=threshold)


def alg1_next(state):
    """Advance an :class:`Alg1State` and return the new term."""
    return state.advance()


def alg2_init(n, k, strategy, variant=GAMMA, cyclic=False, threshold=None):
    """Create an :class:`Alg2State` positioned on term 0."""
    return Alg2State(n, k, strategy, variant=variant, cyclic=cyclic, threshold=threshold)


def alg2_next(state):
    """Advance an :class:`Alg2State` and return the new term."""
    return state.advance()


def even_k_init(n, k, strategy, parity=EVEN, cyclic=False, threshold=None):
    """Create an :class:`EvenKState` positioned on term 0."""
    return EvenKState(n, k, strategy, parity=parity, cyclic=cyclic, threshold=threshold)


def even_k_next(state):
    """Advance an :class:`EvenKState` and return the new term."""
    return state.advance()


def trivial_init(k, cyclic=False):
    return TrivialState(k, cyclic=cyclic)


def step_cost(state):
    """Cell writes plus table lookups done by the most recent advance."""
    return state.last_cost


def table_entries(spec):
    """Size of the base table the LOOPLESS strategy would preprocess."""
    if spec.variant == TRIVIAL_BINARY:
        return 0
    return spec.p ** spec.n0


def resolve_mode(spec, mode, threshold=None):
    """Turn ``auto`` into ``loopless`` or ``cat`` depending on the threshold."""
    if mode not in MODES:
        raise ParameterError("unknown mode {!r}".format(mode))
    if mode != AUTO:
        return mode
    entries = table_entries(spec)
    limit = preprocess_threshold(threshold)
    if entries > limit:
        warnings.warn("falling back to cat: a base table of {} entries exceeds the "
                      "preprocessing threshold of {}".format(entries, limit),
                      RuntimeWarning)
        return CAT
    return LOOPLESS


def make_state(spec, strategy, cyclic=False, threshold=None):
    """Create the iterator state for any :class:`CycleSpec`."""
    if spec.variant == H:
        return Alg1State(spec.p, spec.n, spec.k, strategy, base=spec.base,
                         cyclic=cyclic, threshold=threshold)
    elif spec.variant in (GAMMA, RHO):
        return Alg2State(spec.n, spec.k, strategy, variant=spec.variant,
                         cyclic=cyclic, threshold=threshold)
    elif spec.variant in (GAMMA_EVEN, GAMMA_EVEN_ODDPART):
        parity = EVEN if spec.variant == GAMMA_EVEN else ODD
        return EvenKState(spec.n, spec.k, strategy, parity=parity,
                          cyclic=cyclic, threshold=threshold)
    _check_strategy(strategy)
    return TrivialState(spec.k, cyclic=cyclic)


def iterate(spec, mode=AUTO, cyclic=False, limit=None, threshold=None):
    """Iterate over the terms of a cycle as tuples of letters.

    Parameters
    ----------
    spec : CycleSpec
    mode : str
        ``recursive`` (materialize with the builders), ``cat``, ``loopless``
        or ``auto`` (loopless when the base table fits the preprocessing
        threshold, else cat).
    cyclic : bool
        Keep going around the cycle instead of stopping after its last term.
    limit : int or None
        Maximum number of terms to produce.
    threshold : int or None
        Preprocessing threshold overriding :func:`graytools.settings.preprocess_threshold`.

    """
    mode = resolve_mode(spec, mode, threshold)
    if mode == RECURSIVE:
        cycle = build(spec).cycle
        count = 0
        while limit is None or count < limit:
            for word in cycle:
                if limit is not None and count >= limit:
                    return
                yield word
                count += 1
            if not cyclic:
                return
        return
    state = make_state(spec, mode, cyclic=cyclic, threshold=threshold)
    for word in walk(state, limit):
        yield word
