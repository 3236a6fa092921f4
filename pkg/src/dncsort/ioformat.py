"""Text formats: whitespace-separated signed 64-bit integers in, one per line out."""
from __future__ import annotations

import re
import sys
from pathlib import Path
from typing import Iterable, List

import typer

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?[0-9]+")


class InputFormatError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def parse_ints(text: str) -> List[int]:
    values: List[int] = []
    for line_no, line in enumerate(text.splitlines(), 1):
        for match in _TOKEN.finditer(line):
            token = match.group()
            column = match.start() + 1
            if not _INTEGER.fullmatch(token):
                raise InputFormatError(f"not an integer: {token!r}", line_no, column)
            value = int(token)
            if not INT64_MIN <= value <= INT64_MAX:
                raise InputFormatError(f"out of 64-bit range: {token}", line_no, column)
            values.append(value)
    return values


def decode(data: bytes) -> str:
    """UTF-8 decode; a bad byte is reported at its 1-based line and byte column."""
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as e:
        head = data[:e.start]
        line = head.count(b"\n") + 1
        column = e.start - (head.rfind(b"\n") + 1) + 1
        raise InputFormatError(f"invalid UTF-8 byte 0x{data[e.start]:02x}", line, column) from e


def read_text(source: str) -> str:
    if source == "-":
        buffer = getattr(sys.stdin, "buffer", None)
        if buffer is None:
            return sys.stdin.read()
        return decode(buffer.read())
    return decode(Path(source).read_bytes())


def read_ints(source: str) -> List[int]:
    return parse_ints(read_text(source))


def format_ints(values: Iterable[int]) -> str:
    return "".join(f"{v}\n" for v in values)


def write_text(sink: str, text: str) -> None:
    if sink == "-":
        typer.echo(text, nl=False)
        return
    path = Path(sink)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
