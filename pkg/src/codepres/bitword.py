"""Fixed-blocklength binary words.

Words are immutable, most significant bit first. The arithmetic here is
componentwise: no carries, no radix other than two.

>>> w = parse_word("11000001")
>>> decimal_value(w), w.hex()
(193, 'C1')
>>> split_word(w, SplitScheme.EVEN)
(Word('1100'), Word('0001'))
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import (
    DegenerateSplit,
    EmptyWord,
    InvalidCharacter,
    LengthMismatch,
    ParityMismatch,
)

__all__ = [
    "Word",
    "SplitScheme",
    "parse_word",
    "word_from_int",
    "decimal_value",
    "apply_bitwise",
    "word_diff",
    "word_sum",
    "word_product",
    "word_inverse",
    "split_point",
    "split_word",
    "schemes_for",
    "all_words",
]


@dataclass(frozen=True, order=False)
class Word:
    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits:
            raise EmptyWord()
        for i, b in enumerate(self.bits):
            if b not in (0, 1) or isinstance(b, bool):
                raise InvalidCharacter(i, str(b))

    @property
    def n(self) -> int:
        return len(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.bits)

    def __str__(self) -> str:
        return "".join(map(str, self.bits))

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __add__(self, other: Word) -> Word:
        return word_sum(self, other)

    def __sub__(self, other: Word) -> Word:
        return word_diff(self, other)

    def __mul__(self, other: Word) -> Word:
        return word_product(self, other)

    def __invert__(self) -> Word:
        return word_inverse(self)

    @property
    def value(self) -> int:
        return decimal_value(self)

    def hex(self) -> str:
        """Uppercase hex digits, no prefix, padded to ceil(n/4) digits."""
        return format(self.value, "X").zfill((self.n + 3) // 4)

    def concat(self, other: Word) -> Word:
        return Word(self.bits + other.bits)


class SplitScheme(enum.Enum):
    EVEN = "even"
    TYPE_I = "type1"
    TYPE_II = "type2"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def parse(cls, text: str) -> SplitScheme:
        key = text.strip().lower().replace("_", "").replace("-", "")
        aliases = {"even": cls.EVEN, "type1": cls.TYPE_I, "typei": cls.TYPE_I,
                   "i": cls.TYPE_I, "type2": cls.TYPE_II, "typeii": cls.TYPE_II,
                   "ii": cls.TYPE_II}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown split scheme {text!r}") from None


def parse_word(text: str) -> Word:
    if not text:
        raise EmptyWord()
    bits = []
    for i, ch in enumerate(text):
        if ch == "0":
            bits.append(0)
        elif ch == "1":
            bits.append(1)
        else:
            raise InvalidCharacter(i, ch)
    return Word(tuple(bits))


def word_from_int(value: int, n: int) -> Word:
    """Render ``value`` as an ``n``-bit word; raises ValueError if it does not fit."""
    if n < 1:
        raise EmptyWord()
    if not 0 <= value < (1 << n):
        raise ValueError(f"{value} does not fit in {n} bits")
    return Word(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))


def all_words(n: int) -> list[Word]:
    """Every word of blocklength n, ascending by decimal value."""
    return [word_from_int(v, n) for v in range(1 << n)]


def decimal_value(w: Word) -> int:
    v = 0
    for b in w.bits:
        v = (v << 1) | b
    return v


def apply_bitwise(w1: Word, w2: Word, op: Callable[[int, int], int]) -> Word:
    """Combine two words position by position with a binary digit operation."""
    if w1.n != w2.n:
        raise LengthMismatch(w1.n, w2.n)
    return Word(tuple(op(a, b) for a, b in zip(w1.bits, w2.bits)))


def _differ(a: int, b: int) -> int:
    return 0 if a == b else 1


def word_diff(w1: Word, w2: Word) -> Word:
    # a - b is 0 when the digits agree, 1 otherwise
    return apply_bitwise(w1, w2, _differ)


def word_sum(w1: Word, w2: Word) -> Word:
    # carry-free: 1 + 1 = 0
    return apply_bitwise(w1, w2, lambda a, b: (a + b) % 2)


def word_product(w1: Word, w2: Word) -> Word:
    return apply_bitwise(w1, w2, operator.mul)


def word_inverse(w: Word) -> Word:
    """Reverse the word and complement every bit."""
    return Word(tuple(1 - b for b in reversed(w.bits)))


def split_point(n: int, scheme: SplitScheme) -> int:
    """Length ``s`` of the zoned portion for blocklength ``n``.

    Blocklength 1 is rejected under every scheme, since one of the two
    portions would be empty.
    """
    if n <= 1:
        raise DegenerateSplit(n)
    if scheme is SplitScheme.EVEN:
        if n % 2:
            raise ParityMismatch(n, scheme)
        s = n // 2
    elif scheme is SplitScheme.TYPE_I:
        if n % 2 == 0:
            raise ParityMismatch(n, scheme)
        s = (n + 1) // 2
    elif scheme is SplitScheme.TYPE_II:
        if n % 2 == 0:
            raise ParityMismatch(n, scheme)
        s = (n - 1) // 2
    else:
        raise TypeError(f"not a split scheme: {scheme!r}")
    if s <= 0 or s >= n:
        raise DegenerateSplit(n, s)
    return s


def split_word(w: Word, scheme: SplitScheme) -> tuple[Word, Word]:
    s = split_point(w.n, scheme)
    return Word(w.bits[:s]), Word(w.bits[s:])


def schemes_for(n: int) -> tuple[SplitScheme, ...]:
    """Valid schemes for blocklength n: one for even n, Type I then Type II for odd n."""
    if n <= 1:
        raise DegenerateSplit(n)
    if n % 2 == 0:
        return (SplitScheme.EVEN,)
    return (SplitScheme.TYPE_I, SplitScheme.TYPE_II)
