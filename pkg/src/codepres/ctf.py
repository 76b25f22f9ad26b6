"""Reader and writer for code-table files (``.ctf``).

Format, one item per line, UTF-8::

    # comment (anything after '#' is ignored)
    @name ebcdic-paper
    @universe full          # or "listed" (the default)
    @blocklength 8          # optional; needed only for a table with no records
    11000001,ZCN1           # BITS[,LABEL]
    11000010

Directives must precede the first record. Records keep file order, which
becomes the collating sequence.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path
from typing import Union

from .bitword import parse_word
from .codemodel import CharacterSet, Record, Universe, build_code
from .errors import (
    BlocklengthMismatch,
    CodeError,
    DuplicateWord,
    EmptyCode,
    TableSyntaxError,
    UnknownDirective,
)

__all__ = ["parse_table_file", "serialize", "load", "bundled", "BUNDLED"]

BUNDLED = ("sample-sec2", "ebcdic-paper")


def parse_table_file(data: Union[bytes, str], name: str = "code") -> CharacterSet:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise TableSyntaxError(0, f"not UTF-8: {exc}") from None
    universe = Universe.LISTED
    records: list[Record] = []
    lines: dict = {}
    n = None

    for lineno, raw in enumerate(data.splitlines(), start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        if text.startswith("@"):
            if records:
                raise TableSyntaxError(lineno, "directive after first record")
            key, _, arg = text[1:].partition(" ")
            arg = arg.strip()
            if key == "name":
                if not arg:
                    raise TableSyntaxError(lineno, "@name needs a value")
                name = arg
            elif key == "blocklength":
                if not arg.isdigit() or int(arg) < 1:
                    raise TableSyntaxError(lineno, f"bad blocklength {arg!r}")
                n = int(arg)
            elif key == "universe":
                try:
                    universe = Universe(arg.lower())
                except ValueError:
                    raise TableSyntaxError(lineno, f"bad universe {arg!r}") from None
            else:
                raise UnknownDirective(lineno, key)
            continue

        bits, _, label = text.partition(",")
        bits = bits.strip()
        label = label.strip() or None
        try:
            word = parse_word(bits)
        except CodeError:
            raise TableSyntaxError(lineno, f"bad bit string {bits!r}") from None
        if n is None:
            n = word.n
        elif word.n != n:
            exc = BlocklengthMismatch(lineno, n, word.n, unit="line")
            exc.line = lineno
            raise exc
        if word in lines:
            exc = DuplicateWord(word, lineno, unit="line")
            exc.line = lineno
            raise exc
        lines[word] = lineno
        records.append(Record(word, label))

    if n is None:
        if universe is Universe.LISTED:
            raise EmptyCode()
        raise TableSyntaxError(0, "a table with no records needs @blocklength")
    return build_code(n, universe, records, name=name)


def serialize(c: CharacterSet) -> str:
    out = [f"@name {c.name}", f"@universe {c.universe}"]
    if not c.records:
        out.append(f"@blocklength {c.blocklength}")
    for r in c.records:
        if r.label is None:
            out.append(str(r.word))
        else:
            if "#" in r.label or "\n" in r.label or r.label != r.label.strip():
                raise ValueError(f"label {r.label!r} cannot be written to a code table")
            out.append(f"{r.word},{r.label}")
    return "\n".join(out) + "\n"


def load(path: Union[str, Path]) -> CharacterSet:
    path = Path(path)
    return parse_table_file(path.read_bytes(), name=path.stem)


def bundled(name: str) -> CharacterSet:
    """Load one of the datasets shipped with the package."""
    stem = name[:-4] if name.endswith(".ctf") else name
    if stem not in BUNDLED:
        raise KeyError(name)
    data = resources.files("codepres").joinpath("data", stem + ".ctf").read_bytes()
    return parse_table_file(data, name=stem)
