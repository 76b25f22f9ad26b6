import itertools
import operator

import pytest
from hypothesis import given

from codepres.bitword import (
    SplitScheme,
    Word,
    all_words,
    apply_bitwise,
    decimal_value,
    parse_word,
    schemes_for,
    split_point,
    split_word,
    word_diff,
    word_from_int,
    word_inverse,
    word_product,
    word_sum,
)
from codepres.errors import (
    DegenerateSplit,
    EmptyWord,
    InvalidCharacter,
    LengthMismatch,
    ParityMismatch,
)

from conftest import word_pairs, words

W = parse_word


def test_parse_word():
    assert W("1010").bits == (1, 0, 1, 0)
    assert W("1010").n == 4
    assert W("0").bits == (0,)
    assert str(W("0110")) == "0110"


def test_parse_word_errors():
    with pytest.raises(EmptyWord):
        W("")
    with pytest.raises(InvalidCharacter) as exc:
        W("10a1")
    assert exc.value.position == 2


def test_word_validates_bits():
    with pytest.raises(InvalidCharacter):
        Word((0, 2))
    with pytest.raises(EmptyWord):
        Word(())


@pytest.mark.parametrize("text, value", [("11011", 27), ("00000", 0), ("11000001", 193)])
def test_decimal_value(text, value):
    assert decimal_value(W(text)) == value
    assert decimal_value(W(text)) == int(text, 2)


def test_hex_rendering():
    assert W("11000001").hex() == "C1"
    assert W("1011").hex() == "B"
    assert W("00001").hex() == "01"


def test_decimal_value_bijection():
    for n in range(1, 9):
        values = [decimal_value(w) for w in all_words(n)]
        assert values == list(range(1 << n))
        assert all(word_from_int(v, n) == w for v, w in zip(values, all_words(n)))


def test_apply_bitwise():
    assert apply_bitwise(W("1010"), W("0110"), operator.xor) == W("1100")
    assert apply_bitwise(W("1010"), W("0110"), operator.and_) == W("0010")
    assert apply_bitwise(W("1010"), W("0110"), operator.or_) == W("1110")
    with pytest.raises(LengthMismatch) as exc:
        apply_bitwise(W("101"), W("0110"), operator.xor)
    assert (exc.value.n1, exc.value.n2) == (3, 4)


def test_word_diff_examples():
    assert word_diff(W("1010"), W("0110")) == W("1100")
    assert word_diff(W("01100"), W("00110")) == W("01010")
    assert W("1010") - W("0110") == W("1100")


def test_word_sum_and_product_examples():
    assert word_sum(W("1010"), W("0110")) == W("1100")
    assert word_sum(W("11011"), W("11011")) == W("00000")
    assert word_product(W("1010"), W("0110")) == W("0010")
    w = W("10110")
    assert word_sum(w, W("00000")) == w
    assert word_product(w, W("11111")) == w
    assert word_product(w, W("00000")) == W("00000")


@pytest.mark.parametrize("fn", [word_diff, word_sum, word_product])
def test_length_mismatch(fn):
    with pytest.raises(LengthMismatch):
        fn(W("10"), W("100"))


def test_addition_and_multiplication_tables():
    for a, b in itertools.product((0, 1), repeat=2):
        assert word_sum(Word((a,)), Word((b,))).bits == ((a + b) % 2,)
        assert word_product(Word((a,)), Word((b,))).bits == (a * b,)
        assert word_diff(Word((a,)), Word((b,))).bits == (int(a != b),)


def test_word_inverse():
    assert word_inverse(W("0001")) == W("0111")
    assert word_inverse(W("0000")) == W("1111")
    assert word_inverse(word_inverse(W("0111"))) == W("0111")
    assert ~W("0011") == W("0011")


@given(words())
def test_word_inverse_involution(w):
    assert word_inverse(word_inverse(w)) == w


@given(word_pairs())
def test_difference_equals_sum(pair):
    a, b = pair
    assert word_diff(a, b) == word_sum(a, b)
    assert word_diff(a, b) == word_diff(b, a)


@given(words())
def test_self_difference_is_zero(w):
    assert not any(word_diff(w, w).bits)


def test_difference_equals_sum_exhaustive_small():
    for n in range(1, 6):
        ws = all_words(n)
        for a, b in itertools.product(ws, repeat=2):
            assert word_diff(a, b) == word_sum(a, b)


@pytest.mark.parametrize("n, scheme, s", [
    (8, SplitScheme.EVEN, 4),
    (5, SplitScheme.TYPE_I, 3),
    (5, SplitScheme.TYPE_II, 2),
    (2, SplitScheme.EVEN, 1),
    (3, SplitScheme.TYPE_II, 1),
    (3, SplitScheme.TYPE_I, 2),
])
def test_split_point(n, scheme, s):
    assert split_point(n, scheme) == s


def test_split_point_errors():
    with pytest.raises(ParityMismatch):
        split_point(8, SplitScheme.TYPE_I)
    with pytest.raises(ParityMismatch):
        split_point(5, SplitScheme.EVEN)
    for scheme in SplitScheme:
        with pytest.raises(DegenerateSplit):
            split_point(1, scheme)


def test_split_word():
    assert split_word(W("11000001"), SplitScheme.EVEN) == (W("1100"), W("0001"))
    assert split_word(W("11001"), SplitScheme.TYPE_I) == (W("110"), W("01"))
    assert split_word(W("11001"), SplitScheme.TYPE_II) == (W("11"), W("001"))


@given(words(min_n=2))
def test_split_round_trip(w):
    for scheme in schemes_for(w.n):
        zoned, numeric = split_word(w, scheme)
        assert zoned.concat(numeric) == w
        assert zoned.n == split_point(w.n, scheme)


def test_scheme_parse():
    assert SplitScheme.parse("type1") is SplitScheme.TYPE_I
    assert SplitScheme.parse("Type-II") is SplitScheme.TYPE_II
    assert SplitScheme.parse("even") is SplitScheme.EVEN
    with pytest.raises(ValueError):
        SplitScheme.parse("odd")


def test_words_are_hashable_values():
    assert W("101") == Word((1, 0, 1))
    assert len({W("101"), W("101"), W("011")}) == 2
