"""
Searching banded primes
=======================

Two blocks taken from left-concatenated generations 2-4, separated by a run of
1..10 zeros, such that the whole number is prime and also left-truncatable
digit by digit (zeros counting as nothing).
"""

from chiral_primes import Direction, band_search, enumerate_all

gens, _ = enumerate_all(Direction.LEFT)
pool = [g for g in gens if 2 <= g.index <= 4]
result = band_search(pool, bands=2, min_block_len=2, k_max=10, budget=10**6)
print(f"examined {result.examined} candidates from {result.pool_size} blocks")
print(f"{len(result.findings)} findings, first ten:")
for f in result.findings[:10]:
    print(" ", f.number.compact())
