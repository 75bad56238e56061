from itertools import islice

import numpy as np
import pytest

from graytools.builders import build
from graytools.exc import ParameterError, SequenceExhaustedError, SizeLimitError, ThresholdExceededError
from graytools.loopless import (
    CAT, LOOPLESS, PI_PHI, RECURSIVE, Alg1State, Alg2State, EvenKState, TrivialState,
    alg1_init, alg1_next, alg2_init, alg2_next, even_k_init, even_k_next, iterate,
    make_state, resolve_mode, step_cost, table_entries, trivial_init, walk,
)
from graytools.util import format_word
from graytools.words import (
    AUTO, EVEN, GAMMA, GAMMA_EVEN, GAMMA_EVEN_ODDPART, H, ODD, REFLECTED, RHO,
    TRIVIAL_BINARY, CycleSpec, hamming_distance,
)
from graytools.test import read_golden


def _grid():
    specs = []
    for p in (3, 4, 5):
        for n in range(1, 8):
            for k in range(1, n + 1):
                if p ** n <= 2 ** 24:
                    specs.append(CycleSpec(p, n, k, H))
    for k in (1, 3, 5):
        for n in range(k + 1, k + 6):
            specs.append(CycleSpec(2, n, k, GAMMA))
            specs.append(CycleSpec(2, n, k, RHO))
    for k in (2, 4):
        for n in range(k + 1, k + 6):
            specs.append(CycleSpec(2, n, k, GAMMA_EVEN))
            specs.append(CycleSpec(2, n, k, GAMMA_EVEN_ODDPART))
    for k in range(1, 7):
        specs.append(CycleSpec(2, k, k, TRIVIAL_BINARY))
    return specs


GRID = _grid()


def _ids(spec):
    return '{}-{}-{}-{}'.format(spec.variant, spec.p, spec.n, spec.k)


def _run(state):
    return np.array(list(walk(state)), dtype=np.int64)


class TestAlg1:
    def test_example(self):
        state = alg1_init(3, 3, 2, LOOPLESS, base=REFLECTED)
        assert state.word() == (0, 0, 0)
        assert alg1_next(state) == (1, 0, 1)
        for _ in range(7):
            alg1_next(state)
        assert state.word() == (2, 2, 2)
        assert alg1_next(state) == (1, 0, 0)
        assert state.i == 9

    @pytest.mark.parametrize('strategy', [CAT, LOOPLESS])
    def test_golden(self, strategy):
        state = alg1_init(3, 3, 2, strategy, base=REFLECTED)
        assert [format_word(w) for w in walk(state)] == read_golden('h_3_3_2.txt')

    def test_exhausted(self):
        state = alg1_init(3, 2, 2, LOOPLESS)
        for _ in range(8):
            alg1_next(state)
        with pytest.raises(SequenceExhaustedError):
            alg1_next(state)

    def test_threshold(self):
        with pytest.raises(ThresholdExceededError):
            alg1_init(3, 5, 2, LOOPLESS, threshold=16)
        # cat needs no table
        alg1_init(3, 5, 2, CAT, threshold=16)

    def test_stream_limit(self):
        with pytest.raises(SizeLimitError):
            alg1_init(3, 30, 29, CAT)

    def test_long_words(self):
        state = alg1_init(3, 20, 18, LOOPLESS)
        words = list(walk(state, limit=50))
        assert len(words) == 50
        assert words[0] == (0,) * 20
        for u, v in zip(words, words[1:]):
            assert hamming_distance(u, v) == 18

    def test_invalid_strategy(self):
        with pytest.raises(ParameterError):
            Alg1State(3, 3, 2, 'eager')


class TestAlg2:
    @pytest.mark.parametrize('strategy', [CAT, LOOPLESS])
    def test_golden(self, strategy):
        state = alg2_init(5, 3, strategy)
        assert [format_word(w) for w in walk(state)] == read_golden('gamma_5_3.txt')

    @pytest.mark.parametrize('n0', [2, 3])
    def test_base_only(self, n0):
        for variant in (GAMMA, RHO):
            state = alg2_init(n0, 1, LOOPLESS, variant=variant)
            expected = read_golden('{}_{}_1.txt'.format(variant, n0))
            assert [format_word(w) for w in walk(state)] == expected

    def test_next(self):
        state = alg2_init(5, 3, LOOPLESS, variant=RHO)
        assert state.word() == (1, 0, 0, 0, 0)
        assert alg2_next(state) == (0, 1, 1, 0, 0)

    def test_invalid(self):
        with pytest.raises(ParameterError):
            Alg2State(5, 3, LOOPLESS, variant='h')
        with pytest.raises(ParameterError):
            alg2_init(5, 2, LOOPLESS)
        with pytest.raises(ThresholdExceededError):
            alg2_init(9, 3, LOOPLESS, threshold=64)


class TestEvenK:
    def test_first_terms(self):
        assert list(walk(even_k_init(6, 4, LOOPLESS, EVEN), limit=2)) == [
            (0, 0, 0, 0, 0, 0), (1, 1, 1, 1, 0, 0),
        ]
        state = even_k_init(6, 4, CAT, ODD)
        assert state.word() == (1, 0, 0, 0, 0, 0)
        assert even_k_next(state) == (0, 1, 1, 1, 0, 0)

    def test_invalid(self):
        with pytest.raises(ParameterError):
            EvenKState(6, 4, LOOPLESS, parity='both')
        with pytest.raises(ParameterError):
            even_k_init(6, 3, LOOPLESS)


def test_trivial():
    state = trivial_init(3)
    assert list(walk(state)) == [(0, 0, 0), (1, 1, 1)]
    assert step_cost(state) == 3
    assert isinstance(make_state(CycleSpec(2, 2, 2, TRIVIAL_BINARY), CAT), TrivialState)


@pytest.mark.parametrize('spec', GRID, ids=_ids)
@pytest.mark.parametrize('strategy', [CAT, LOOPLESS])
def test_matches_builder(spec, strategy):
    expected = build(spec).cycle.terms
    assert np.array_equal(_run(make_state(spec, strategy)), expected)


@pytest.mark.parametrize('spec', [
    CycleSpec(3, 3, 2, H), CycleSpec(4, 3, 1, H), CycleSpec(2, 5, 3, GAMMA),
    CycleSpec(2, 5, 3, RHO), CycleSpec(2, 5, 1, RHO), CycleSpec(2, 6, 4, GAMMA_EVEN_ODDPART),
    CycleSpec(2, 3, 3, TRIVIAL_BINARY),
], ids=_ids)
@pytest.mark.parametrize('strategy', [CAT, LOOPLESS])
def test_cyclic(spec, strategy):
    terms = build(spec).cycle.terms
    size = len(terms)
    state = make_state(spec, strategy, cyclic=True)
    words = list(walk(state, limit=2 * size + 3))
    for i, word in enumerate(words):
        assert word == tuple(int(c) for c in terms[i % size])


class TestOperationCounts:
    @pytest.mark.parametrize('spec', [
        s for s in GRID if s.variant != TRIVIAL_BINARY and 2 < s.length <= 5 ** 5
    ], ids=_ids)
    def test_loopless_constant(self, spec):
        state = make_state(spec, LOOPLESS)
        state.advance()
        first = step_cost(state)
        costs = [step_cost(state) for _ in walk(state)][1:]
        assert all(c == first for c in costs)

    @pytest.mark.parametrize('p,k', [(3, 1), (3, 2), (4, 3)])
    def test_alg1_cost_independent_of_n(self, p, k):
        costs = set()
        for n in range(k + 2, k + 7):
            state = alg1_init(p, n, k, LOOPLESS)
            alg1_next(state)
            costs.add(step_cost(state))
        assert costs == {k}

    @pytest.mark.parametrize('k', [1, 3, 5])
    def test_alg2_cost_independent_of_n(self, k):
        costs = set()
        for n in range(k + 2, k + 7):
            state = alg2_init(n, k, LOOPLESS)
            alg2_next(state)
            costs.add(step_cost(state))
        assert costs == {(k - 1) // 2 + 3}

    @pytest.mark.parametrize('p,n,k', [(3, 4, 2), (3, 5, 1), (5, 3, 2), (4, 5, 3)])
    def test_alg1_cat_mean(self, p, n, k):
        state = alg1_init(p, n, k, CAT)
        costs = [step_cost(state) for _ in islice(walk(state), 1, None)]
        assert np.mean(costs) <= k + 1

    @pytest.mark.parametrize('n,k', [(5, 3), (8, 1), (8, 5), (9, 3)])
    def test_alg2_cat_mean(self, n, k):
        state = alg2_init(n, k, CAT)
        costs = [step_cost(state) for _ in islice(walk(state), 1, None)]
        assert np.mean(costs) <= 2 * k + 4


class TestPeriodicity:
    @pytest.mark.parametrize('p,n,k', [(3, 5, 3), (3, 6, 2), (4, 4, 2), (5, 4, 3)])
    def test_h_suffixes(self, p, n, k):
        terms = build(CycleSpec(p, n, k, H)).cycle.terms
        index = np.arange(len(terms))
        for j in range(n - k + 1, n + 1):
            suffix = terms[:, n - j:]
            assert np.array_equal(suffix, suffix[index % p ** j])

    @pytest.mark.parametrize('n,k', [(7, 5), (8, 5), (10, 3)])
    def test_gamma_suffixes(self, n, k):
        terms = build(CycleSpec(2, n, k, GAMMA)).cycle.terms
        index = np.arange(len(terms))
        for j in range(n - k + 1, n, 2):
            suffix = terms[:, n - j:]
            assert np.array_equal(suffix, suffix[index % 2 ** (j + 1)])


class TestColumnTraces:
    @pytest.mark.parametrize('p,n,k', [(3, 5, 3), (3, 6, 4), (4, 4, 3), (5, 4, 2)])
    @pytest.mark.parametrize('strategy', [CAT, LOOPLESS])
    def test_alg1(self, p, n, k, strategy):
        state = alg1_init(p, n, k, strategy)
        trace = np.array([list(state.cells) for _ in walk(state)])
        index = np.arange(len(trace))
        for idx in range(trace.shape[1]):
            j = n - idx
            column = trace[:, idx]
            assert np.array_equal(column, column[index % p ** j])

    @pytest.mark.parametrize('n,k', [(7, 5), (8, 5), (9, 7), (10, 7)])
    @pytest.mark.parametrize('variant', [GAMMA, RHO])
    def test_alg2(self, n, k, variant):
        state = alg2_init(n, k, LOOPLESS, variant=variant)
        trace = np.array([
            [(q,) + c for q, c in state.cells] for _ in walk(state)
        ])
        index = np.arange(len(trace))
        for idx in range(trace.shape[1]):
            j = n - 2 * idx
            column = trace[:, idx]
            assert np.array_equal(column, column[index % 2 ** (j + 1)])


class TestPiPhi:
    def test_shifted_lookup(self):
        for q, c in PI_PHI.cycle:
            flipped = (c[0] ^ 1, c[1] ^ 1)
            assert PI_PHI.phi[(q, flipped)] == PI_PHI.pi[(q, c)]
        assert PI_PHI.phi[(7, (1, 1))] == (0, (0, 0))

    def test_pi_is_cyclic(self):
        pair = PI_PHI.cycle[0]
        seen = []
        for _ in range(8):
            seen.append(pair)
            pair = PI_PHI.pi[pair]
        assert pair == PI_PHI.cycle[0]
        assert len(set(seen)) == 8
        assert set(PI_PHI.phi.keys()) == set(
            (q, (c[0] ^ 1, c[1] ^ 1)) for q, c in PI_PHI.cycle
        )


class TestIterate:
    @pytest.mark.parametrize('mode', [RECURSIVE, CAT, LOOPLESS, AUTO])
    def test_modes_agree(self, mode):
        spec = CycleSpec(3, 3, 2, H)
        words = [format_word(w) for w in iterate(spec, mode)]
        assert len(words) == 27
        assert words[:3] == ['000', '101', '202']
        assert words == [format_word(w) for w in iterate(spec, LOOPLESS)]

    def test_trivial(self):
        spec = CycleSpec.for_parameters(2, 2, 2)
        assert [format_word(w) for w in iterate(spec)] == ['00', '11']

    @pytest.mark.parametrize('mode', [RECURSIVE, LOOPLESS])
    def test_limit_and_cyclic(self, mode):
        spec = CycleSpec(2, 3, 1, GAMMA)
        words = list(iterate(spec, mode, cyclic=True, limit=10))
        assert len(words) == 10
        assert words[8:] == words[:2]
        assert list(iterate(spec, mode, limit=3)) == words[:3]
        assert list(iterate(spec, mode, limit=0)) == []

    def test_auto_fallback(self):
        spec = CycleSpec(3, 6, 2, H)
        assert table_entries(spec) == 3 ** 5
        assert resolve_mode(spec, AUTO) == LOOPLESS
        with pytest.warns(RuntimeWarning):
            assert resolve_mode(spec, AUTO, threshold=100) == CAT
        assert resolve_mode(spec, RECURSIVE, threshold=100) == RECURSIVE
        with pytest.raises(ParameterError):
            resolve_mode(spec, 'fast')

    def test_unknown_mode(self):
        with pytest.raises(ParameterError):
            list(iterate(CycleSpec(3, 2, 2, H), 'fast'))
