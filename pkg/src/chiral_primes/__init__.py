"""Chiral prime concatenations: left/right digit-by-digit prime growth."""

from .analysis import ChainReport, DigitStats, digit_stats, is_truncatable, prime_prefixes, truncation_chain
from .anomalous import (
    BandSearchResult,
    Finding,
    GapHit,
    GappedNumber,
    anomalous_extend,
    band_search,
    block_concat_verify,
    gap_search,
    is_anomalously_left_truncatable,
)
from .digits import DigitString, concat_left, concat_right, parse, truncate_left, truncate_right
from .enumerator import (
    Direction,
    Generation,
    TerminationReport,
    blocks,
    enumerate_all,
    generation_counts,
    next_generation,
    seed_generation,
)
from .primality import Kind, PrimalityVerdict, is_prime, trial_division_oracle

__version__ = "0.1.0"
