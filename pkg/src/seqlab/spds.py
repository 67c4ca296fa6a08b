"""Squares that split into smaller squares, digit-wise.

194481 = 441**2 belongs here because its rendering cuts into
1 / 9 / 4 / 4 / 81, every piece a perfect square.  A partition needs
at least two segments (otherwise every square would qualify), "0" is
a legal segment, and multi-digit segments must not start with 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class SegmentPartition:
    """One admissible split of a decimal rendering into square pieces."""

    segments: tuple[str, ...]

    @property
    def value(self) -> int:
        return int("".join(self.segments))

    def __str__(self) -> str:
        return "/".join(self.segments)


def _is_square_segment(text: str) -> bool:
    if len(text) > 1 and text[0] == "0":
        return False
    v = int(text)
    return math.isqrt(v) ** 2 == v


def square_partitions(n: int) -> list[SegmentPartition]:
    """All splits of n's rendering into >= 2 square segments.

    Depth-first over cut positions, so results come out in cut order;
    empty when no split exists.
    """
    if n < 1:
        raise ValueError("square_partitions is defined for n >= 1")
    text = str(n)
    out: list[SegmentPartition] = []

    def walk(pos: int, acc: list[str]) -> None:
        if pos == len(text):
            if len(acc) >= 2:
                out.append(SegmentPartition(tuple(acc)))
            return
        for end in range(pos + 1, len(text) + 1):
            seg = text[pos:end]
            if _is_square_segment(seg):
                acc.append(seg)
                walk(end, acc)
                acc.pop()

    walk(0, [])
    return out


@lru_cache(maxsize=None)
def _splits(text: str) -> bool:
    # Existence only: can text cut into square segments (>= 1 piece)?
    if not text:
        return True
    return any(
        _is_square_segment(text[:end]) and _splits(text[end:]) for end in range(1, len(text) + 1)
    )


def _has_partition(n: int) -> bool:
    text = str(n)
    # Force at least two segments by fixing a proper first cut.
    return any(
        _is_square_segment(text[:end]) and _splits(text[end:]) for end in range(1, len(text))
    )


def is_spds_member(m: int) -> bool:
    """Does m**2 admit a square-segment partition?  (m is the root.)"""
    if m < 1:
        raise ValueError("root must be at least 1")
    return _has_partition(m * m)


def spds_enumerate(root_limit: int) -> list[int]:
    """Member squares m**2 for m <= root_limit, ascending."""
    if root_limit < 1:
        raise ValueError("root_limit must be at least 1")
    return [m * m for m in range(1, root_limit + 1) if is_spds_member(m)]


def consecutive_spds_runs(root_limit: int) -> list[tuple[int, int]]:
    """Maximal runs m, m+1, ... of member roots with length >= 2."""
    if root_limit < 2:
        raise ValueError("root_limit must be at least 2")
    runs: list[tuple[int, int]] = []
    start = None
    for m in range(1, root_limit + 2):
        if m <= root_limit and is_spds_member(m):
            if start is None:
                start = m
        else:
            if start is not None and m - start >= 2:
                runs.append((start, m - start))
            start = None
    return runs


def power_chain_check(m: int) -> tuple[bool, bool, bool]:
    """Membership of m, m**2, m**4 as squares with valid partitions.

    The first flag asks whether m itself is already a member square,
    so it requires m to be a perfect square on top of partitioning.
    """
    if m < 1:
        raise ValueError("m must be at least 1")

    def member_square(x: int) -> bool:
        return math.isqrt(x) ** 2 == x and _has_partition(x)

    return (member_square(m), member_square(m * m), member_square(m**4))


def pattern_search(pattern: str, root_limit: int) -> list[int]:
    """Member squares up to root_limit**2 containing the digit pattern."""
    if not pattern or not pattern.isdigit():
        raise ValueError("pattern must be a non-empty digit string")
    return [sq for sq in spds_enumerate(root_limit) if pattern in str(sq)]
