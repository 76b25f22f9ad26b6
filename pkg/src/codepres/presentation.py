"""Equizone partitions and code presentations.

Two words are equivalent when the word difference of their zoned portions
is all-zero. The classes (equizones) are keyed by their constant zone and
carry the decimal values of their numeric portions (decinumers). A
presentation is the ordered list of (zone, decinumer set) pairs; the code
is recovered by gluing each zone onto the binary form of each decinumer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitword import (
    SplitScheme,
    Word,
    all_words,
    decimal_value,
    schemes_for,
    split_point,
    split_word,
    word_diff,
    word_from_int,
)
from .codemodel import CharacterSet, Universe
from .errors import DecinumerOverflow

__all__ = [
    "Equizone",
    "Presentation",
    "equivalent",
    "equizone_partition",
    "decinumer_set",
    "zoned_set",
    "numer_set",
    "presentation",
    "reconstruct",
    "all_presentations",
]


@dataclass(frozen=True)
class Equizone:
    zone: Word
    members: tuple[Word, ...]
    decinumers: tuple[int, ...]
    assigned_decinumers: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.assigned_decinumers)


@dataclass(frozen=True)
class Presentation:
    scheme: SplitScheme
    blocklength: int
    universe: Universe
    entries: tuple[Equizone, ...]

    @property
    def s(self) -> int:
        return split_point(self.blocklength, self.scheme)

    @property
    def degree(self) -> int:
        return len(self.entries)

    @property
    def zoned_set(self) -> tuple[Word, ...]:
        return tuple(e.zone for e in self.entries)

    @property
    def numer_set(self) -> tuple[Word, ...]:
        width = self.blocklength - self.s
        values = sorted({g for e in self.entries for g in e.assigned_decinumers})
        return tuple(word_from_int(g, width) for g in values)

    def pairs(self) -> list[tuple[Word, tuple[int, ...]]]:
        return [(e.zone, decinumer_set(e)) for e in self.entries]


def equivalent(a: Word, b: Word, scheme: SplitScheme) -> bool:
    za, _ = split_word(a, scheme)
    zb, _ = split_word(b, scheme)
    return not any(word_diff(za, zb).bits)


def equizone_partition(c: CharacterSet, scheme: SplitScheme) -> list[Equizone]:
    """Equizones of ``c`` ordered by zone value.

    Under the full universe the partition covers every word of the space;
    only listed words count as assigned.
    """
    split_point(c.blocklength, scheme)
    if c.universe is Universe.FULL:
        space = all_words(c.blocklength)
        assigned = c.word_set()
    else:
        space = c.words
        assigned = None

    groups: dict[Word, list[tuple[Word, int]]] = {}
    for w in space:
        zone, numeric = split_word(w, scheme)
        groups.setdefault(zone, []).append((w, decimal_value(numeric)))

    out = []
    for zone in sorted(groups, key=decimal_value):
        members = groups[zone]
        decis = tuple(sorted(g for _, g in members))
        if assigned is None:
            chosen = decis
        else:
            chosen = tuple(sorted(g for w, g in members if w in assigned))
        out.append(Equizone(zone, tuple(w for w, _ in members), decis, chosen))
    return out


def decinumer_set(e: Equizone) -> tuple[int, ...]:
    return e.assigned_decinumers


def zoned_set(c: CharacterSet, scheme: SplitScheme) -> tuple[Word, ...]:
    return tuple(e.zone for e in equizone_partition(c, scheme))


def numer_set(c: CharacterSet, scheme: SplitScheme) -> tuple[Word, ...]:
    """Distinct numeric portions of the (assigned) words, ascending."""
    split_point(c.blocklength, scheme)
    numerics = {split_word(w, scheme)[1] for w in c.words}
    return tuple(sorted(numerics, key=decimal_value))


def presentation(c: CharacterSet, scheme: SplitScheme) -> Presentation:
    return Presentation(scheme, c.blocklength, c.universe,
                        tuple(equizone_partition(c, scheme)))


def reconstruct(p: Presentation) -> frozenset[Word]:
    """Words denoted by a presentation: each zone followed by each decinumer."""
    width = p.blocklength - p.s
    words = set()
    for e in p.entries:
        for g in decinumer_set(e):
            if not 0 <= g < (1 << width):
                raise DecinumerOverflow(g, width)
            words.add(e.zone.concat(word_from_int(g, width)))
    return frozenset(words)


def all_presentations(c: CharacterSet) -> list[Presentation]:
    """One presentation for even blocklength, Type I then Type II for odd."""
    return [presentation(c, s) for s in schemes_for(c.blocklength)]
