"""Decimal digit primitives shared by every sequence family.

Everything here works on plain Python ints.  The one structured type,
:class:`DigitString`, exists because the digit maps need fixed-width
values where leading zeros are significant (the two-digit value 5 is
"05" and reverses to "50", which is not what ``int(str(5)[::-1])``
would give you).
"""

from __future__ import annotations

from dataclasses import dataclass


def digit_count(n: int) -> int:
    """Number of decimal digits of n, with digit_count(0) == 1."""
    if n < 0:
        raise ValueError("negative values have no digit rendering")
    return len(str(n))


def concat_decimal(a: int, b: int) -> int:
    """Append the decimal rendering of b to the rendering of a.

    concat_decimal(2468, 10) == 246810.  Because digit_count(0) == 1,
    concat_decimal(a, 0) == 10 * a.
    """
    if a < 0 or b < 0:
        raise ValueError("concat_decimal needs non-negative arguments")
    return a * 10 ** digit_count(b) + b


def digital_root(n: int) -> int:
    """Repeated digit sum of n until one digit remains; always in 1..9."""
    if n < 1:
        raise ValueError("digital_root is defined for n >= 1")
    while n > 9:
        s = 0
        while n:
            n, r = divmod(n, 10)
            s += r
        n = s
    return n


def reverse_fixed(value: int, width: int) -> int:
    """Reverse the digits of value written in exactly `width` slots.

    reverse_fixed(24, 5) == 42000 because 24 is "00024" at width 5.
    """
    if width < 1:
        raise ValueError("width must be at least 1")
    if not 0 <= value < 10**width:
        raise ValueError(f"{value} does not fit in {width} digit slots")
    out = 0
    for _ in range(width):
        value, r = divmod(value, 10)
        out = out * 10 + r
    return out


@dataclass(frozen=True)
class DigitString:
    """A value pinned to a fixed number of decimal digit slots."""

    value: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 1:
            raise ValueError("width must be at least 1")
        if not 0 <= self.value < 10**self.width:
            raise ValueError(f"{self.value} does not fit in {self.width} digit slots")

    def digits(self) -> tuple[int, ...]:
        return tuple(int(ch) for ch in str(self))

    def reversed(self) -> "DigitString":
        return DigitString(reverse_fixed(self.value, self.width), self.width)

    @classmethod
    def from_str(cls, text: str) -> "DigitString":
        if not text or not text.isdigit():
            raise ValueError(f"not a digit string: {text!r}")
        return cls(int(text), len(text))

    def __str__(self) -> str:
        return str(self.value).zfill(self.width)
