"""
Zero gaps: anomalous left-concatenation
=======================================

Allowing 0 as a left block lets primes grow past 24 digits. Zeros uncovered
by a left truncation are dropped, so 1.0_41.357...137 truncates straight to
the 24-digit prime.
"""

from chiral_primes import (
    DigitString,
    GappedNumber,
    anomalous_extend,
    block_concat_verify,
    gap_search,
    is_anomalously_left_truncatable,
)

for suffix, k_max in (("3", 40), ("7", 60)):
    hits = gap_search(DigitString(1), DigitString(suffix), k_max)
    print(f"1.0_k.{suffix}:", [h.k for h in hits])

###############################################################################
# Extend the 24-digit prime with a leading 1 and a run of zeros.
base = DigitString("357686312646216567629137")
for hit in anomalous_extend(base, 45):
    ok, chain = is_anomalously_left_truncatable(hit.number)
    print(hit.number.compact(), hit.verdict, "anomalous chain:", ok, "length", len(chain.chain))

###############################################################################
# Block constructions. The first one is not prime.
for blocks, gaps in ((("13", "9"), (5,)), (("15396334245663786197", "36484957213536676883"), (38,))):
    g = GappedNumber(blocks, gaps)
    print(g.compact(), "->", block_concat_verify(g))
