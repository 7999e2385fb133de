"""Reading numeric sequences and writing/reading representation dumps."""

from __future__ import annotations

import csv
import io
import re
from decimal import Decimal
from typing import Any, Sequence

from .os_tree import NEG_INFINITY, POS_INFINITY, IndexOrSentinel

_NUMBER = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, token: str | None = None):
        self.line = line
        self.token = token
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message}" + (f" {token!r}" if token is not None else ""))


def parse_number(token: str, exact: bool = False, line: int | None = None) -> Any:
    if not _NUMBER.fullmatch(token):
        raise ParseError("not a decimal number:", line, token)
    return Decimal(token) if exact else float(token)


def _column(fmt: str) -> int | None:
    if fmt == "plain":
        return None
    if fmt.startswith("csv:"):
        try:
            col = int(fmt[4:])
        except ValueError:
            col = 0
        if col >= 1:
            return col
    raise ParseError(f"unknown format {fmt!r}; expected plain or csv:<column>")


def parse_sequence(data: str | bytes, fmt: str = "plain", exact: bool = False) -> list[Any]:
    """Parse whitespace-separated numbers, or one CSV column (1-based).

    A non-numeric first CSV row is taken as a header and skipped.  With
    ``exact`` values become :class:`~decimal.Decimal`, otherwise floats.
    """
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    col = _column(fmt)
    values: list[Any] = []
    if col is None:
        for lineno, line in enumerate(data.splitlines(), start=1):
            values.extend(parse_number(tok, exact, lineno) for tok in line.split())
        return values
    for lineno, row in enumerate(csv.reader(io.StringIO(data)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) < col:
            raise ParseError(f"row has {len(row)} columns, column {col} requested", lineno)
        cell = row[col - 1].strip()
        if lineno == 1 and not _NUMBER.fullmatch(cell):
            continue
        values.append(parse_number(cell, exact, lineno))
    return values


def parse_patterns(data: str, exact: bool = False) -> list[list[Any]]:
    """One pattern per non-blank line, values separated by whitespace."""
    patterns = []
    for lineno, line in enumerate(data.splitlines(), start=1):
        if line.strip():
            patterns.append([parse_number(tok, exact, lineno) for tok in line.split()])
    return patterns


def format_index(j: IndexOrSentinel) -> str:
    if j is NEG_INFINITY:
        return "-inf"
    if j is POS_INFINITY:
        return "inf"
    return str(j)


def _parse_index(token: str) -> IndexOrSentinel:
    if token == "-inf":
        return NEG_INFINITY
    if token in ("inf", "+inf"):
        return POS_INFINITY
    return int(token)


DUMP_ROWS = ("prefix", "natural", "prev", "next", "failure")


def format_dump(rows: dict[str, Sequence[Any]]) -> list[str]:
    return [f"{name}\t" + " ".join(format_index(v) for v in rows[name])
            for name in DUMP_ROWS if name in rows]


def parse_dump(text: str) -> dict[str, tuple[Any, ...]]:
    rows: dict[str, tuple[Any, ...]] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        name, _, rest = line.partition("\t")
        if name not in DUMP_ROWS:
            raise ParseError("unknown dump row", lineno, name)
        try:
            rows[name] = tuple(_parse_index(tok) for tok in rest.split())
        except ValueError:
            raise ParseError("bad entry in dump row", lineno, rest) from None
    return rows
