"""Base-10 digit strings.

Numbers are kept as their decimal digits because appending and stripping a
digit are the primitive operations of every construction in this package.
Conversion to ``int`` happens lazily, at primality-test boundaries.
"""

from __future__ import annotations

import re
from functools import cached_property, total_ordering
from typing import Optional

_GAP_TOKEN = re.compile(r"\(([0-9])\^([0-9]+)\)")
_DIGITS = re.compile(r"[0-9]+")


@total_ordering
class DigitString:
    """An immutable, non-empty sequence of decimal digits, most significant first.

    Leading zeros are allowed (they show up while truncating through a zero
    gap) but such values are not *canonical*.
    """

    def __init__(self, digits: str | int | DigitString):
        if isinstance(digits, DigitString):
            digits = digits.digits
        elif isinstance(digits, int) and not isinstance(digits, bool):
            if digits < 0:
                raise ValueError("negative numbers are not digit strings")
            digits = str(digits)
        if not isinstance(digits, str) or not _DIGITS.fullmatch(digits):
            raise ValueError(f"not a decimal digit string: {digits!r}")
        object.__setattr__(self, "_digits", digits)

    def __setattr__(self, name, value):
        raise AttributeError("DigitString is immutable")

    @property
    def digits(self) -> str:
        return self._digits

    def __len__(self) -> int:
        return len(self._digits)

    def __iter__(self):
        return (int(c) for c in self._digits)

    def __getitem__(self, i: int) -> int:
        return int(self._digits[i])

    @cached_property
    def value(self) -> int:
        return int(self._digits)

    @property
    def is_canonical(self) -> bool:
        return self._digits[0] != "0" or self._digits == "0"

    def canonical(self) -> DigitString:
        stripped = self._digits.lstrip("0") or "0"
        return self if stripped == self._digits else DigitString(stripped)

    def __str__(self) -> str:
        return self._digits

    def __repr__(self) -> str:
        return f"DigitString({self._digits!r})"

    def __eq__(self, other) -> bool:
        if isinstance(other, DigitString):
            return self._digits == other._digits
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._digits)

    def __lt__(self, other: DigitString) -> bool:
        if not isinstance(other, DigitString):
            return NotImplemented
        return (self.value, len(self)) < (other.value, len(other))


def _check_digit(d: int) -> None:
    if not isinstance(d, int) or not 0 <= d <= 9:
        raise ValueError(f"not a decimal digit: {d!r}")


def concat_right(x: DigitString, d: int) -> DigitString:
    """Append digit ``d`` to the right of ``x`` (``C[x, d]``)."""
    _check_digit(d)
    return DigitString(x.digits + str(d))


def concat_left(d: int, x: DigitString) -> DigitString:
    """Prepend digit ``d`` to ``x``. ``d == 0`` yields a non-canonical value."""
    _check_digit(d)
    return DigitString(str(d) + x.digits)


def truncate_left(x: DigitString, strip_leading_zeros: bool = False) -> Optional[DigitString]:
    """Drop the most significant digit; ``None`` once nothing is left.

    With ``strip_leading_zeros`` the zeros uncovered by the removal are
    dropped as well, so ``103 -> 3`` instead of ``103 -> 03``.
    """
    rest = x.digits[1:]
    if strip_leading_zeros:
        rest = rest.lstrip("0")
    return DigitString(rest) if rest else None


def truncate_right(x: DigitString) -> Optional[DigitString]:
    """Drop the least significant digit; ``None`` once nothing is left."""
    rest = x.digits[:-1]
    return DigitString(rest) if rest else None


def expand_gap_syntax(text: str) -> str:
    """Expand the compact zero-run notation ``1(0^41)3`` into plain digits."""
    return _GAP_TOKEN.sub(lambda m: m.group(1) * int(m.group(2)), text.strip())


def parse(text: str | int | DigitString) -> DigitString:
    """Parse a decimal string (gap syntax allowed) into a canonical DigitString."""
    if isinstance(text, (int, DigitString)):
        ds = DigitString(text)
    else:
        ds = DigitString(expand_gap_syntax(text))
    if not ds.is_canonical:
        raise ValueError(f"leading zero in {text!r}")
    return ds


def compact(x: DigitString | str, min_run: int = 4) -> str:
    """Render runs of at least ``min_run`` zeros as ``(0^k)`` for display."""
    s = str(x)
    return re.sub(r"0{%d,}" % min_run, lambda m: f"(0^{len(m.group())})", s)
