"""Anomalous left-concatenations: primes with runs of zeros inside them.

A gapped number is written ``block_1 . 0_k1 . block_2 . ... . block_B``.
Searches run cheap divisibility filters before any probable-prime test and
report verdicts for values past the deterministic range as probable primes,
with the Miller-Rabin rounds and seed attached.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass
from functools import partial
from typing import Iterator, List, Optional, Sequence, Tuple

from ._parallel import chunked, flatten, ordered_map
from .analysis import ChainReport
from .digits import DigitString
from .enumerator import Direction, Generation
from .primality import DEFAULT_ROUNDS, DEFAULT_SEED, PrimalityVerdict, is_prime


@dataclass(frozen=True)
class GappedNumber:
    blocks: Tuple[DigitString, ...]
    gaps: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(DigitString(b) for b in self.blocks))
        object.__setattr__(self, "gaps", tuple(int(k) for k in self.gaps))
        if not self.blocks:
            raise ValueError("a gapped number needs at least one block")
        if len(self.gaps) != len(self.blocks) - 1:
            raise ValueError("need exactly one gap between consecutive blocks")
        if any(k < 0 for k in self.gaps):
            raise ValueError("gap lengths must be >= 0")
        if self.blocks[0].digits[0] == "0":
            raise ValueError("the first block must not start with zero")

    @classmethod
    def parse(cls, text: str) -> GappedNumber:
        """Split a decimal string at its interior zero runs."""
        m = re.fullmatch(r"([1-9][0-9]*?)(0*)", text)
        if m is None:
            raise ValueError(f"not a canonical decimal string: {text!r}")
        # trailing zeros stay with the last block
        body, tail = m.groups()
        parts = re.split(r"(0+)", body)
        blocks = parts[0::2]
        blocks[-1] += tail
        return cls(tuple(blocks), tuple(len(z) for z in parts[1::2]))

    @property
    def digits(self) -> DigitString:
        out = [self.blocks[0].digits]
        for k, b in zip(self.gaps, self.blocks[1:]):
            out.append("0" * k)
            out.append(b.digits)
        return DigitString("".join(out))

    @property
    def value(self) -> int:
        return self.digits.value

    @property
    def length_with_zeros(self) -> int:
        """Digit count with the gap zeros counted as (degenerate) digits."""
        return sum(len(b) for b in self.blocks) + sum(self.gaps)

    @property
    def length_without_gap_zeros(self) -> int:
        """Digit count when the gap zeros count as nothing."""
        return sum(len(b) for b in self.blocks)

    def compact(self) -> str:
        out = [self.blocks[0].digits]
        for k, b in zip(self.gaps, self.blocks[1:]):
            if k:
                out.append(f"(0^{k})")
            out.append(b.digits)
        return "".join(out)

    def __str__(self) -> str:
        return self.compact()


@dataclass(frozen=True)
class GapHit:
    k: int
    number: GappedNumber
    verdict: PrimalityVerdict

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "number": self.number.digits.digits,
            "digits": self.number.length_with_zeros,
            "verdict": self.verdict.to_dict(),
        }


@dataclass(frozen=True)
class Finding:
    number: GappedNumber
    verdict: PrimalityVerdict
    anomalous_chain: bool

    def to_dict(self) -> dict:
        return {
            "blocks": [b.digits for b in self.number.blocks],
            "gaps": list(self.number.gaps),
            "digits": self.number.length_with_zeros,
            "verdict": self.verdict.to_dict(),
            "anomalous_chain": self.anomalous_chain,
        }


@dataclass(frozen=True)
class BandSearchResult:
    findings: Tuple[Finding, ...]
    examined: int
    pool_size: int
    exhausted: bool

    def to_jsonl(self) -> str:
        return "".join(json.dumps(f.to_dict()) + "\n" for f in self.findings)


def surely_composite(digits: str) -> bool:
    """Divisibility by 2, 3 or 5 read off the decimal digits (for values > 5)."""
    if digits[-1] in "024568":
        return True
    return sum(map(int, digits)) % 3 == 0


def _test_gap(k: int, prefix: DigitString, suffix: DigitString, rounds: int, seed: int) -> Optional[GapHit]:
    g = GappedNumber((prefix, suffix), (k,))
    s = g.digits.digits
    if surely_composite(s):
        return None
    verdict = is_prime(s, rounds, seed)
    return GapHit(k, g, verdict) if verdict.is_prime else None


def _test_gaps(ks: Sequence[int], prefix, suffix, rounds, seed) -> List[GapHit]:
    return [h for h in (_test_gap(k, prefix, suffix, rounds, seed) for k in ks) if h is not None]


def gap_search(
    prefix: DigitString,
    suffix: DigitString,
    k_max: int,
    rounds: int = DEFAULT_ROUNDS,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> List[GapHit]:
    """Every ``k`` in ``1..k_max`` for which ``prefix . 0_k . suffix`` is (probably) prime."""
    prefix, suffix = DigitString(prefix), DigitString(suffix)
    if not prefix.is_canonical or not suffix.is_canonical:
        raise ValueError("prefix and suffix must not start with zero")
    if k_max > 10**5:
        raise ValueError("k_max must be <= 10**5")
    ks = list(range(1, k_max + 1))
    fn = partial(_test_gaps, prefix=prefix, suffix=suffix, rounds=rounds, seed=seed)
    return flatten(ordered_map(fn, chunked(ks, 4 * workers), workers))


def anomalous_extend(
    base: DigitString, k_max: int, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED, workers: int = 1
) -> List[GapHit]:
    """Every ``k`` in ``1..k_max`` for which ``1 . 0_k . base`` is (probably) prime."""
    return gap_search(DigitString(1), base, k_max, rounds, seed, workers)


def _anomalous_truncations(digits: str) -> List[str]:
    """Left truncations of ``digits`` with zeros stripped, shortest first, deduplicated."""
    out: List[str] = []
    for i in range(len(digits) - 1, -1, -1):
        t = digits[i:].lstrip("0")
        if t and (not out or out[-1] != t):
            out.append(t)
    return out


def is_anomalously_left_truncatable(
    g: GappedNumber, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED
) -> Tuple[bool, ChainReport]:
    """Left truncatability where the zeros uncovered by a truncation count as nothing.

    Removing one digit at a time from the left, every value met along the way
    must be prime. Truncating through a zero gap repeats the same value; each
    such value enters the chain once.
    """
    rendered = g.digits
    chain = tuple(DigitString(t) for t in _anomalous_truncations(rendered.digits))
    verdicts = tuple(is_prime(c, rounds, seed) for c in chain)
    report = ChainReport(rendered, Direction.LEFT, chain, verdicts)
    return report.all_prime, report


def block_concat_verify(g: GappedNumber, rounds: int = DEFAULT_ROUNDS, seed: int = DEFAULT_SEED) -> PrimalityVerdict:
    return is_prime(g.digits, rounds, seed)


# -- band search ---------------------------------------------------------------


def _candidates(pool: Sequence[DigitString], bands: int, k_max: int) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    for idx in itertools.product(range(len(pool)), repeat=bands):
        for gaps in itertools.product(range(1, k_max + 1), repeat=bands - 1):
            yield idx, gaps


def _chain_ok(digits: str, rounds: int, seed: int) -> bool:
    return all(is_prime(t, rounds, seed).is_prime for t in _anomalous_truncations(digits))


def _band_chunk(chunk, pool: Sequence[DigitString], rounds: int, seed: int) -> List[Finding]:
    found = []
    for idx, gaps in chunk:
        g = GappedNumber(tuple(pool[i] for i in idx), gaps)
        s = g.digits.digits
        if surely_composite(s):
            continue
        verdict = is_prime(s, rounds, seed)
        if verdict.is_prime and _chain_ok(s, rounds, seed):
            found.append(Finding(g, verdict, True))
    return found


def band_search(
    pool: Sequence[Generation],
    bands: int,
    min_block_len: int,
    k_max: int,
    budget: int,
    rounds: int = DEFAULT_ROUNDS,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> BandSearchResult:
    """Search gapped primes built from left-concatenated blocks that are also
    anomalously left-truncatable digit by digit.

    Blocks are taken from the generations in ``pool`` with index at least
    ``min_block_len``, ordered by (generation, value). Candidates are visited
    in lexicographic order of (block indices, gaps) and at most ``budget`` of
    them are examined, so a partial search is reproducible.
    """
    if min_block_len < 2:
        raise ValueError("min_block_len must be >= 2: every band needs at least two digits")
    if bands < 2:
        raise ValueError("need at least two bands")
    if k_max < 1 or budget < 0:
        raise ValueError("k_max must be >= 1 and budget >= 0")
    blocks = [m for g in sorted(pool, key=lambda g: g.index) if g.index >= min_block_len for m in g.members]
    total = len(blocks) ** bands * k_max ** (bands - 1)
    cands = list(itertools.islice(_candidates(blocks, bands, k_max), budget))
    fn = partial(_band_chunk, pool=blocks, rounds=rounds, seed=seed)
    findings = flatten(ordered_map(fn, chunked(cands, 4 * workers), workers))
    return BandSearchResult(tuple(findings), len(cands), len(blocks), len(cands) == total)
