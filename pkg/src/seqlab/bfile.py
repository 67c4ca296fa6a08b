"""Reading and writing b-files.

A b-file is the plain exchange format for integer sequences: one term
per line as "<index> <value>", indices starting at 1 and contiguous.
The writer emits exactly that; the reader enforces it strictly (no
padded numbers, no blank lines, no index gaps) and reports the first
offending line.
"""

from __future__ import annotations

import re
from os import PathLike
from typing import IO

_LINE = re.compile(r"^(0|[1-9][0-9]*) (0|[1-9][0-9]*)$")


def render_bfile(seq: list[int]) -> str:
    """The b-file text for a sequence, 1-based, newline-terminated."""
    if not seq:
        raise ValueError("refusing to render an empty sequence")
    for v in seq:
        if v < 0:
            raise ValueError("b-file values must be non-negative")
    return "".join(f"{i} {v}\n" for i, v in enumerate(seq, start=1))


def write_bfile(seq: list[int], target: str | PathLike | IO[str]) -> None:
    text = render_bfile(seq)
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="ascii") as fh:
            fh.write(text)


def parse_bfile(text: str) -> list[int]:
    """Parse b-file text, rejecting any deviation from the format."""
    if not text:
        raise ValueError("empty b-file")
    if not text.endswith("\n"):
        raise ValueError("final line must end with a newline")
    values: list[int] = []
    # split("\n"), not splitlines(): a stray \r must fail the match.
    for lineno, line in enumerate(text[:-1].split("\n"), start=1):
        m = _LINE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: malformed b-file line {line!r}")
        index = int(m.group(1))
        if index != lineno:
            raise ValueError(f"line {lineno}: expected index {lineno}, found {index}")
        values.append(int(m.group(2)))
    return values


def read_bfile(source: str | PathLike | IO[str]) -> list[int]:
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="ascii") as fh:
            text = fh.read()
    return parse_bfile(text)
