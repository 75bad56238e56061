"""Independent checks of generated cycles.

:func:`verify_gray_cycle` tests the three Gray cycle conditions:

G1
    every word of the expected support occurs;
G2
    consecutive terms, including the last and the first, are related
    (distance exactly k, or between 1 and k in ``at_most_k`` mode);
G3
    no word occurs twice.

:func:`hamiltonian_oracle` and :func:`lambda_bruteforce` answer the same
questions by exhaustive search on tiny instances.

"""

from collections import namedtuple
from itertools import combinations, product
import json

import numpy as np
import pandas as pd

from .builders import build
from .exc import GrayToolsError, OracleScaleError, ParameterError, StructuralError
from .loopless import CAT, LOOPLESS, make_state, walk
from .settings import BRUTEFORCE_MAX_WORDS, ORACLE_MAX_WORDS
from .util import format_word, parse_word
from .words import EVEN, FULL, ODD, PAIR, SUPPORTS, GrayCycle, lambda_max

EXACT_K = 'exact_k'
AT_MOST_K = 'at_most_k'
CHECK_MODES = (EXACT_K, AT_MOST_K)

Violation = namedtuple('Violation', ['condition', 'index', 'detail'])

# Violations recorded per condition before the rest are summarized.
_MAX_REPORTED = 100


class VerificationReport(object):
    """Outcome of a verification.

    Parameters
    ----------
    mode : str
        ``exact_k`` or ``at_most_k``.

    """
    def __init__(self, mode=EXACT_K, length=0):
        self.mode = mode
        self.length = length
        self.violations = []

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok

    def add(self, condition, index, detail):
        self.violations.append(Violation(condition, index, detail))

    def extend(self, other):
        self.violations.extend(other.violations)
        self.length = max(self.length, other.length)

    def first(self, condition):
        """First violation of the given condition, or None."""
        for v in self.violations:
            if v.condition == condition:
                return v
        return None

    def to_frame(self):
        """Violations as a :class:`pd.DataFrame`."""
        return pd.DataFrame(self.violations, columns=list(Violation._fields))

    def to_dict(self):
        return {
            'ok': self.ok,
            'mode': self.mode,
            'length': self.length,
            'violations': [v._asdict() for v in self.violations],
        }

    def to_json(self):
        return json.dumps(self.to_dict())

    def __repr__(self):
        return 'VerificationReport(ok={}, mode={}, violations={})'.format(
            self.ok, self.mode, len(self.violations))


def _as_terms(cycle, p):
    if isinstance(cycle, GrayCycle):
        return cycle.terms.astype(np.int64), cycle.spec.p
    rows = [parse_word(w) if isinstance(w, str) else tuple(int(c) for c in w) for w in cycle]
    if not rows:
        raise StructuralError("a cycle needs at least one term")
    lengths = set(len(row) for row in rows)
    if len(lengths) > 1:
        raise StructuralError("words have mixed lengths {}".format(sorted(lengths)))
    terms = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    if p is None:
        p = max(2, int(terms.max()) + 1 if terms.size else 2)
    return terms, p


def _render(row):
    try:
        return format_word(row)
    except ParameterError:
        return str(tuple(int(c) for c in row))


def _check_distinct(report, terms):
    _, first, inverse = np.unique(terms, axis=0, return_index=True, return_inverse=True)
    inverse = np.asarray(inverse).reshape(-1)
    repeats = np.flatnonzero(first[inverse] != np.arange(len(terms)))
    for index in repeats[:_MAX_REPORTED]:
        original = first[inverse[index]]
        report.add('G3', int(index), "term {} repeats term {} ({})"
                   .format(index, original, _render(terms[index])))
    if len(repeats) > _MAX_REPORTED:
        report.add('G3', None, "{} more repeated terms".format(len(repeats) - _MAX_REPORTED))


def _check_adjacency(report, terms, k, mode):
    following = np.roll(terms, -1, axis=0)
    distances = np.count_nonzero(terms != following, axis=1)
    if mode == EXACT_K:
        bad = np.flatnonzero(distances != k)
    else:
        bad = np.flatnonzero((distances < 1) | (distances > k))
    size = len(terms)
    for i in bad[:_MAX_REPORTED]:
        j = (i + 1) % size
        report.add('G2', int(j), "{} -> {} has distance {}"
                   .format(_render(terms[i]), _render(terms[j]), distances[i]))
    if len(bad) > _MAX_REPORTED:
        report.add('G2', None, "{} more bad adjacencies".format(len(bad) - _MAX_REPORTED))


def _check_support(report, terms, p, support):
    n = terms.shape[1]
    if support == FULL:
        inside = np.all(terms < p, axis=1)
        size = p ** n
    elif support in (EVEN, ODD):
        if p != 2:
            raise ParameterError("parity supports only apply to p = 2")
        parity = 0 if support == EVEN else 1
        inside = np.all(terms < 2, axis=1) & (terms.sum(axis=1) % 2 == parity)
        size = 2 ** (n - 1)
    elif support == PAIR:
        x = terms[0]
        inside = np.all(terms == x, axis=1) | np.all(terms == (x + 1) % p, axis=1)
        size = 2
    else:
        raise ParameterError("unknown support {!r}".format(support))

    outside = np.flatnonzero(~inside)
    for index in outside[:_MAX_REPORTED]:
        report.add('G1', int(index), "{} is outside the {} support"
                   .format(_render(terms[index]), support))
    found = len(np.unique(terms[inside], axis=0)) if inside.any() else 0
    if found < size:
        report.add('G1', None, "{} of {} words of the {} support are missing"
                   .format(size - found, size, support))


def verify_gray_cycle(cycle, k=None, mode=EXACT_K, expected_support=None, p=None, n=None):
    """Check the Gray cycle conditions.

    Parameters
    ----------
    cycle : GrayCycle or Sequence
        A materialized cycle, or a sequence of words (strings or letter
        sequences).
    k : int
        Substitution weight; defaults to ``cycle.spec.k``.
    mode : str
        ``exact_k`` or ``at_most_k``.
    expected_support : str or None
        ``full``, ``even``, ``odd`` or ``pair``. When None, coverage is not
        checked.
    p : int or None
        Alphabet size for plain sequences; inferred from the largest letter
        when omitted.
    n : int or None
        Word length the terms must have; taken from the words when omitted.

    Returns
    -------
    VerificationReport

    Raises
    ------
    StructuralError when the words do not share one length, or do not have
    length ``n``.

    """
    if mode not in CHECK_MODES:
        raise ParameterError("unknown mode {!r}".format(mode))
    if expected_support is not None and expected_support not in SUPPORTS:
        raise ParameterError("unknown support {!r}".format(expected_support))
    if k is None:
        if not isinstance(cycle, GrayCycle):
            raise ParameterError("k is required when verifying a plain sequence")
        k = cycle.spec.k

    terms, p = _as_terms(cycle, p)
    if n is not None and terms.shape[1] != n:
        raise StructuralError("words have length {}, expected {}".format(terms.shape[1], n))
    report = VerificationReport(mode, len(terms))
    _check_distinct(report, terms)
    _check_adjacency(report, terms, k, mode)
    if expected_support is not None:
        _check_support(report, terms, p, expected_support)
    return report


def _adjacency(words, k):
    distances = np.count_nonzero(words[:, np.newaxis, :] != words[np.newaxis, :, :], axis=2)
    return distances == k


def _popcount(x):
    return bin(x).count('1')


def _connected(masks):
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        v = 0
        while frontier >> v:
            if frontier >> v & 1:
                reach |= masks[v]
            v += 1
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << len(masks)) - 1


def _has_hamiltonian_cycle(adjacency):
    size = len(adjacency)
    if size == 1:
        return False
    if size == 2:
        return bool(adjacency[0, 1])
    if adjacency.sum(axis=1).min() < 2:
        return False
    masks = [sum(1 << int(w) for w in np.flatnonzero(row)) for row in adjacency]
    if not _connected(masks):
        return False

    full = (1 << size) - 1

    def extend(current, visited):
        if visited == full:
            return bool(masks[current] & 1)
        unvisited = full & ~visited
        allowed = unvisited | (1 << current) | 1
        v = 0
        rest = unvisited
        while rest:
            if rest & 1 and _popcount(masks[v] & allowed) < 2:
                return False
            rest >>= 1
            v += 1
        candidates = masks[current] & unvisited
        w = 0
        while candidates:
            if candidates & 1 and extend(w, visited | (1 << w)):
                return True
            candidates >>= 1
            w += 1
        return False

    # vertex 0 is fixed as the start of the cycle
    return extend(0, 1)


def hamiltonian_oracle(words, k):
    """Decide whether the words admit a sigma_k-Gray cycle.

    Backtracking search for a Hamiltonian cycle in the graph joining words at
    Hamming distance exactly k. A single word never qualifies and two words
    qualify when they are at distance k.

    Parameters
    ----------
    words : Iterable
        Distinct words of one length (strings or letter sequences).
    k : int

    Raises
    ------
    OracleScaleError when more than :data:`graytools.settings.ORACLE_MAX_WORDS`
    words are given.

    """
    rows = [parse_word(w) if isinstance(w, str) else tuple(int(c) for c in w) for w in words]
    rows = sorted(set(rows))
    if not rows:
        raise ParameterError("the oracle needs at least one word")
    if len(set(len(row) for row in rows)) > 1:
        raise StructuralError("words have mixed lengths")
    if len(rows) > ORACLE_MAX_WORDS:
        raise OracleScaleError("{} words exceed the oracle cap of {}"
                               .format(len(rows), ORACLE_MAX_WORDS))
    array = np.array(rows, dtype=np.int64).reshape(len(rows), -1)
    return _has_hamiltonian_cycle(_adjacency(array, k))


def _best_subset(p, m, k):
    words = np.array(list(product(range(p), repeat=m)), dtype=np.int64).reshape(-1, m)
    adjacency = _adjacency(words, k)
    # vertices with fewer than two neighbours lie on no cycle of length >= 3
    candidates = np.flatnonzero(adjacency.sum(axis=1) >= 2)
    for size in range(len(candidates), 2, -1):
        for subset in combinations(candidates, size):
            if _has_hamiltonian_cycle(adjacency[np.ix_(subset, subset)]):
                return size
    return 2 if adjacency.any() else 0


def lambda_bruteforce(p, n, k):
    """Maximum length of a sigma_k-Gray cycle over words of length at most n,
    found by exhaustive search over subsets of each ``A^m``.

    Raises
    ------
    OracleScaleError when ``p**n`` exceeds
    :data:`graytools.settings.BRUTEFORCE_MAX_WORDS`.

    """
    lambda_max(p, n, k)
    if p ** n > BRUTEFORCE_MAX_WORDS:
        raise OracleScaleError("{} words exceed the brute-force cap of {}"
                               .format(p ** n, BRUTEFORCE_MAX_WORDS))
    return max(_best_subset(p, m, k) for m in range(k, n + 1))


def cross_check(spec, mode=EXACT_K, strategies=(CAT, LOOPLESS), threshold=None):
    """Build a cycle, compare it with the term-by-term generators and verify it.

    Failures of any stage are recorded in the returned report: ``BUILD`` for
    an exception, ``EQ`` for a generator disagreeing with the builder, and
    G1-G3 for the verification itself.

    """
    report = VerificationReport(mode)
    try:
        cycle = build(spec).cycle
    except GrayToolsError as e:
        report.add('BUILD', None, "build failed: {}".format(e))
        return report

    for strategy in strategies:
        try:
            terms = np.array(list(walk(make_state(spec, strategy, threshold=threshold))),
                             dtype=np.int64).reshape(-1, spec.n)
        except GrayToolsError as e:
            report.add('BUILD', None, "{} generator failed: {}".format(strategy, e))
            continue
        if terms.shape != cycle.terms.shape:
            report.add('EQ', None, "{} generator produced {} terms, expected {}"
                       .format(strategy, len(terms), len(cycle)))
            continue
        differ = np.flatnonzero(np.any(terms != cycle.terms, axis=1))
        if len(differ):
            i = int(differ[0])
            report.add('EQ', i, "{} generator gives {} instead of {}"
                       .format(strategy, _render(terms[i]), _render(cycle.terms[i])))

    report.extend(verify_gray_cycle(cycle, spec.k, mode, expected_support=spec.support))
    if len(cycle) != lambda_max(spec.p, spec.n, spec.k):
        report.add('G1', None, "cycle has {} terms, the maximum is {}"
                   .format(len(cycle), lambda_max(spec.p, spec.n, spec.k)))
    return report
