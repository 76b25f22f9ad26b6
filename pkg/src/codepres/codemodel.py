"""Uniform codes and coded character sets.

A :class:`CharacterSet` is an ordered, duplicate-free list of equal-length
words. Record order is the collating sequence. Under ``Universe.FULL`` the
code space is every word of the blocklength and the listed records mark
which positions carry a character.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .bitword import Word, decimal_value, parse_word, word_sum
from .errors import (
    BlocklengthMismatch,
    DuplicateWord,
    EmptyCode,
    IndexOutOfRange,
    UniverseModeUnsupported,
)

__all__ = [
    "Universe",
    "Record",
    "CharacterSet",
    "ClosureReport",
    "build_code",
    "well_order",
    "code_inverse",
    "closure_check",
    "subset",
]


class Universe(enum.Enum):
    LISTED = "listed"
    FULL = "full"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Record:
    word: Word
    label: Optional[str] = None


@dataclass(frozen=True)
class CharacterSet:
    name: str
    blocklength: int
    universe: Universe
    records: tuple[Record, ...] = field(default=())

    @property
    def words(self) -> tuple[Word, ...]:
        return tuple(r.word for r in self.records)

    @property
    def order(self) -> int:
        return len(self.records)

    def word_set(self) -> frozenset[Word]:
        return frozenset(self.words)

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class ClosureReport:
    closed: bool
    witness: Optional[tuple[Word, Word, Word]]
    contains_zero: bool
    is_group: bool


RecordLike = Union[Record, Word, str, tuple]


def _as_record(item: RecordLike) -> Record:
    if isinstance(item, Record):
        return item
    if isinstance(item, Word):
        return Record(item)
    if isinstance(item, str):
        return Record(parse_word(item))
    word, label = item
    if isinstance(word, str):
        word = parse_word(word)
    return Record(word, label)


def build_code(
    blocklength: int,
    universe: Universe = Universe.LISTED,
    records: Iterable[RecordLike] = (),
    name: str = "code",
) -> CharacterSet:
    """Validate records into a :class:`CharacterSet`, keeping their order.

    Records may be :class:`Record`, :class:`Word`, bit strings or
    ``(word, label)`` pairs.
    """
    if blocklength < 1:
        raise ValueError("blocklength must be positive")
    universe = Universe(universe)
    recs = tuple(_as_record(r) for r in records)
    seen = set()
    for i, r in enumerate(recs):
        if r.word.n != blocklength:
            raise BlocklengthMismatch(i, blocklength, r.word.n)
        if r.word in seen:
            raise DuplicateWord(r.word, i)
        seen.add(r.word)
    if not recs and universe is Universe.LISTED:
        raise EmptyCode()
    return CharacterSet(name, blocklength, universe, recs)


def _replace_records(c: CharacterSet, records: Sequence[Record]) -> CharacterSet:
    return CharacterSet(c.name, c.blocklength, c.universe, tuple(records))


def well_order(c: CharacterSet) -> CharacterSet:
    """Reorder records ascending by decimal value."""
    return _replace_records(c, sorted(c.records, key=lambda r: decimal_value(r.word)))


def code_inverse(c: CharacterSet) -> CharacterSet:
    """Reverse the collating sequence; words and labels are untouched."""
    return _replace_records(c, c.records[::-1])


def closure_check(c: CharacterSet) -> ClosureReport:
    """Test whether a listed code is closed under carry-free word sum.

    Pairs are scanned as (i, j) with i <= j in collating order, so the
    reported witness is the first failing pair.
    """
    if c.universe is not Universe.LISTED:
        raise UniverseModeUnsupported(c.universe)
    words = c.words
    members = set(words)
    witness = None
    for i, w1 in enumerate(words):
        for w2 in words[i:]:
            total = word_sum(w1, w2)
            if total not in members:
                witness = (w1, w2, total)
                break
        if witness:
            break
    closed = witness is None
    contains_zero = any(not any(w.bits) for w in words)
    return ClosureReport(closed, witness, contains_zero, closed and bool(words))


def subset(c: CharacterSet, selection: Union[Iterable[int], Callable[[Record], bool]]) -> CharacterSet:
    """Sub-code by index set or record predicate, preserving relative order."""
    if callable(selection):
        keep = [r for r in c.records if selection(r)]
    else:
        idx = set()
        for i in selection:
            if not 0 <= i < c.order:
                raise IndexOutOfRange(i, c.order)
            idx.add(i)
        keep = [r for i, r in enumerate(c.records) if i in idx]
    if not keep and c.universe is Universe.LISTED:
        raise EmptyCode()
    return _replace_records(c, keep)
