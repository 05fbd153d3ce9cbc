"""Truncation chains, truncatability, digit statistics and prime prefixes."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .digits import DigitString, truncate_left, truncate_right
from .enumerator import Direction
from .primality import PrimalityVerdict, is_prime


@dataclass(frozen=True)
class ChainReport:
    subject: DigitString
    direction: Direction
    chain: Tuple[DigitString, ...]
    verdicts: Tuple[PrimalityVerdict, ...]

    @property
    def all_prime(self) -> bool:
        return all(v.is_prime for v in self.verdicts)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject.digits,
            "direction": self.direction.value,
            "chain": [c.digits for c in self.chain],
            "verdicts": [v.to_dict() for v in self.verdicts],
            "all_prime": self.all_prime,
        }


@dataclass(frozen=True)
class DigitStats:
    subject: DigitString
    per_digit_counts: Dict[int, int]
    odd_count: int
    even_count: int
    longest_even_run: str

    @property
    def longest_even_run_length(self) -> int:
        return len(self.longest_even_run)

    def to_dict(self) -> dict:
        return {
            "subject": self.subject.digits,
            "per_digit_counts": {str(d): c for d, c in sorted(self.per_digit_counts.items())},
            "odd_count": self.odd_count,
            "even_count": self.even_count,
            "longest_even_run": self.longest_even_run,
            "longest_even_run_length": self.longest_even_run_length,
        }


def _truncations(p: DigitString, direction: Direction) -> List[DigitString]:
    """p and its successive truncations on the growth side, longest first."""
    out = []
    x: Optional[DigitString] = p
    while x is not None:
        out.append(x)
        x = truncate_left(x) if direction is Direction.LEFT else truncate_right(x)
    return out


def truncation_chain(p: DigitString, direction: Direction, rounds: int = 40, seed: int = 0) -> ChainReport:
    """Chain from the one-digit end up to ``p``, with a verdict for each entry."""
    p = DigitString(p)
    direction = Direction(direction)
    chain = tuple(reversed(_truncations(p, direction)))
    verdicts = tuple(is_prime(c, rounds, seed) for c in chain)
    return ChainReport(p, direction, chain, verdicts)


def is_truncatable(p: DigitString, direction: Direction) -> bool:
    """Whether every truncation of ``p`` on the growth side is prime.

    Zero digits belong to anomalous constructions and are rejected here.
    """
    p = DigitString(p)
    if "0" in p.digits:
        raise ValueError(f"{p} contains a zero digit; use the anomalous predicate")
    # Shortest first: most non-truncatable inputs fail within a digit or two.
    return all(is_prime(c).is_prime for c in reversed(_truncations(p, Direction(direction))))


def digit_stats(p: DigitString) -> DigitStats:
    p = DigitString(p)
    counts = Counter(int(c) for c in p.digits)
    odd = sum(c for d, c in counts.items() if d % 2)
    runs = re.findall(r"[02468]+", p.digits)
    # max() keeps the first maximal run, i.e. the leftmost on ties
    longest = max(runs, key=len) if runs else ""
    return DigitStats(p, dict(counts), odd, len(p) - odd, longest)


def prime_prefixes(p: DigitString) -> List[Tuple[int, DigitString]]:
    """Proper prefixes of ``p`` that are prime, longest first."""
    out = []
    x = truncate_right(DigitString(p))
    while x is not None:
        if is_prime(x).is_prime:
            out.append((len(x), x))
        x = truncate_right(x)
    return out
