import numpy as np
import pytest

from hypothesis import given
from hypothesis.strategies import integers, lists

from graytools.exc import ParameterError
from graytools.settings import (
    DEFAULT_PREPROCESS_THRESHOLD, PREPROCESS_THRESHOLD_ENV, parse_size, preprocess_threshold,
)
from graytools.util import (
    DIGITS, SlotsMixin, digit_dtype, format_word, parse_word, standardize_word, valuation,
)


class Record(SlotsMixin):
    __slots__ = ('a', 'b')

    def __init__(self, a, b):
        self.a = a
        self.b = b


class TestSlotsMixin:
    def test_eq(self):
        assert Record(1, 2) == Record(1, 2)
        assert Record(1, 2) != Record(2, 1)

    def test_hash(self):
        assert len({Record(1, 2), Record(1, 2), Record(0, 0)}) == 2

    def test_repr(self):
        assert repr(Record(1, 'x')) == "Record(a=1, b='x')"

    def test_keys(self):
        assert Record(1, 2).keys() == ['a', 'b']


@pytest.mark.parametrize('p,dtype', [
    (2, np.uint8),
    (36, np.uint8),
    (256, np.uint8),
    (257, np.uint16),
    (2 ** 17, np.uint32),
])
def test_digit_dtype(p, dtype):
    assert digit_dtype(p) == dtype


@pytest.mark.parametrize('i,p,v', [
    (1, 2, 0),
    (2, 2, 1),
    (12, 2, 2),
    (9, 3, 2),
    (10, 3, 0),
    (125, 5, 3),
])
def test_valuation(i, p, v):
    assert valuation(i, p) == (v, v + 1)


@pytest.mark.parametrize("input,expected_output", [
    ("0101", "0101"),
    (" 01 01 ", "0101"),
    ("0\t1\n", "01"),
    ("A0Z", "a0z"),
])
def test_standardize_word(input, expected_output):
    assert standardize_word(input) == expected_output


def test_format_word():
    assert format_word((0, 1, 2)) == '012'
    assert format_word([10, 35]) == 'az'
    assert format_word(np.array([1, 0], dtype=np.uint8)) == '10'
    assert format_word(()) == ''

    with pytest.raises(ParameterError):
        format_word((36,))


def test_parse_word():
    assert parse_word('012') == (0, 1, 2)
    assert parse_word('AZ') == (10, 35)
    assert parse_word('1 0', p=2) == (1, 0)

    with pytest.raises(ParameterError):
        parse_word('2', p=2)

    with pytest.raises(ParameterError):
        parse_word('0-1')


@given(lists(integers(min_value=0, max_value=len(DIGITS) - 1), max_size=12))
def test_parse_formatted_word(word):
    assert parse_word(format_word(word)) == tuple(word)


class TestSettings:
    @pytest.mark.parametrize('text,size', [
        ('1', 1),
        ('1048576', 2 ** 20),
        ('2**20', 2 ** 20),
        (' 2 ** 10 ', 1024),
        (16, 16),
    ])
    def test_parse_size(self, text, size):
        assert parse_size(text) == size

    @pytest.mark.parametrize('text', ['', 'big', '0', '-4', '2**x'])
    def test_parse_bad_size(self, text):
        with pytest.raises(ParameterError):
            parse_size(text)

    def test_preprocess_threshold(self, monkeypatch):
        monkeypatch.delenv(PREPROCESS_THRESHOLD_ENV, raising=False)
        assert preprocess_threshold() == DEFAULT_PREPROCESS_THRESHOLD
        assert preprocess_threshold('2**4') == 16

        monkeypatch.setenv(PREPROCESS_THRESHOLD_ENV, '2**8')
        assert preprocess_threshold() == 256
        assert preprocess_threshold(8) == 8
