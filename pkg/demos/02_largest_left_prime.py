"""
Anatomy of the largest left-concatenated prime
==============================================

Truncation chain, digit statistics and the prime prefixes of
357686312646216567629137.
"""

from chiral_primes import Direction, DigitString, digit_stats, prime_prefixes, truncation_chain

p = DigitString("357686312646216567629137")

# Remove digits from the left one by one: every step stays prime.
report = truncation_chain(p, Direction.LEFT)
for c, v in zip(report.chain, report.verdicts):
    print(f"{c.digits:>24}  {v}")

stats = digit_stats(p)
print(stats.per_digit_counts)
print("odd", stats.odd_count, "even", stats.even_count, "longest even run", stats.longest_even_run)

# Removing digits from the right hits composites until 3576863.
for length, prefix in prime_prefixes(p):
    print(length, prefix)
