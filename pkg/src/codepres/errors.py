"""Exception types raised across the package."""

from __future__ import annotations


class CodeError(ValueError):
    """Base class for every validation error raised by codepres."""

    code = "error"

    def as_dict(self) -> dict:
        return {"error": self.code, "message": str(self)}


class EmptyWord(CodeError):
    code = "EmptyWord"

    def __init__(self):
        super().__init__("word must contain at least one bit")


class InvalidCharacter(CodeError):
    code = "InvalidCharacter"

    def __init__(self, position: int, char: str = ""):
        self.position = position
        super().__init__(f"invalid bit character {char!r} at position {position}")


class LengthMismatch(CodeError):
    code = "LengthMismatch"

    def __init__(self, n1: int, n2: int):
        self.n1, self.n2 = n1, n2
        super().__init__(f"blocklength mismatch: {n1} != {n2}")


class ParityMismatch(CodeError):
    code = "ParityMismatch"

    def __init__(self, n: int, scheme):
        self.n, self.scheme = n, scheme
        super().__init__(f"scheme {scheme} is not valid for blocklength {n}")


class DegenerateSplit(CodeError):
    code = "DegenerateSplit"

    def __init__(self, n: int, s: int | None = None):
        self.n, self.s = n, s
        super().__init__(f"blocklength {n} leaves an empty zoned or numeric portion")


class BlocklengthMismatch(CodeError):
    code = "BlocklengthMismatch"

    def __init__(self, index: int, expected: int | None = None, got: int | None = None,
                 unit: str = "record"):
        self.index = index
        msg = f"{unit} {index} has the wrong blocklength"
        if expected is not None:
            msg += f" (expected {expected}, got {got})"
        super().__init__(msg)


class DuplicateWord(CodeError):
    code = "DuplicateWord"

    def __init__(self, word, index: int | None = None, unit: str = "record"):
        self.word, self.index = word, index
        super().__init__(f"duplicate word {word}" + (f" at {unit} {index}" if index is not None else ""))


class EmptyCode(CodeError):
    code = "EmptyCode"

    def __init__(self):
        super().__init__("a listed code must contain at least one word")


class UniverseModeUnsupported(CodeError):
    code = "UniverseModeUnsupported"

    def __init__(self, mode):
        super().__init__(f"operation not supported for universe mode {mode}")


class IndexOutOfRange(CodeError):
    code = "IndexOutOfRange"

    def __init__(self, index: int, size: int):
        self.index = index
        super().__init__(f"index {index} out of range for code of order {size}")


class DecinumerOverflow(CodeError):
    code = "DecinumerOverflow"

    def __init__(self, value: int, width: int):
        super().__init__(f"decinumer {value} does not fit in {width} bits")


class UnknownRow(CodeError):
    code = "UnknownRow"

    def __init__(self, row):
        self.row = row
        super().__init__(f"unknown row {row!r}")


class CyclicAlias(CodeError):
    code = "CyclicAlias"

    def __init__(self, row):
        self.row = row
        super().__init__(f"row {row!r} refers to itself")


class TableSyntaxError(CodeError):
    code = "SyntaxError"

    def __init__(self, line: int, detail: str):
        self.line = line
        super().__init__(f"line {line}: {detail}")


class UnknownDirective(CodeError):
    code = "UnknownDirective"

    def __init__(self, line: int, directive: str):
        self.line = line
        super().__init__(f"line {line}: unknown directive @{directive}")
