import random

import pytest
import sympy
from hypothesis import given, strategies as st

from golden import LARGEST_LEFT, LEFT_CHAIN

from chiral_primes.analysis import digit_stats, is_truncatable, prime_prefixes, truncation_chain
from chiral_primes.digits import DigitString, concat_left, concat_right
from chiral_primes.enumerator import Direction, enumerate_all


def test_appendix_chain():
    r = truncation_chain(DigitString(LARGEST_LEFT), Direction.LEFT)
    assert [c.value for c in r.chain] == LEFT_CHAIN
    assert r.all_prime and len(r.chain) == 24


def test_small_chains():
    r = truncation_chain(DigitString(23), Direction.RIGHT)
    assert [c.digits for c in r.chain] == ["2", "23"] and r.all_prime
    r = truncation_chain(DigitString(25), Direction.RIGHT)
    assert [c.digits for c in r.chain] == ["2", "25"] and not r.all_prime


@given(st.integers(min_value=1, max_value=10**30), st.sampled_from(list(Direction)))
def test_chain_shape(n, direction):
    p = DigitString(n)
    chain = truncation_chain(p, direction).chain
    assert chain[-1] == p and len(chain[0]) == 1
    assert [len(c) for c in chain] == list(range(1, len(p) + 1))


def test_is_truncatable():
    assert is_truncatable(DigitString(73939133), Direction.RIGHT)
    assert is_truncatable(DigitString(LARGEST_LEFT), Direction.LEFT)
    assert not is_truncatable(DigitString(19), Direction.LEFT)
    with pytest.raises(ValueError):
        is_truncatable(DigitString(103), Direction.LEFT)


@pytest.mark.parametrize("direction", list(Direction))
def test_predicate_matches_enumerator(direction):
    gens, _ = enumerate_all(direction)
    for n in range(2, 6):
        grown = set()
        for m in gens[n - 2].members:
            for d in range(1, 10):
                c = concat_right(m, d) if direction is Direction.RIGHT else concat_left(d, m)
                if is_truncatable(c, direction):
                    grown.add(c)
        assert sorted(grown) == list(gens[n - 1].members)


def test_every_left_member_is_truncatable():
    gens, _ = enumerate_all(Direction.LEFT)
    assert all(is_truncatable(m, Direction.LEFT) for g in gens for m in g.members)


def test_digit_stats_largest():
    s = digit_stats(DigitString(LARGEST_LEFT))
    assert s.per_digit_counts == {6: 7, 2: 3, 4: 1, 8: 1, 1: 3, 3: 3, 7: 3, 5: 2, 9: 1}
    assert s.odd_count == s.even_count == 12
    assert s.longest_even_run == "26462" and s.longest_even_run_length == 5


def test_digit_stats_trivial():
    s = digit_stats(DigitString(7))
    assert (s.odd_count, s.even_count, s.longest_even_run) == (1, 0, "")
    s = digit_stats(DigitString(2222))
    assert s.even_count == 4 and s.longest_even_run == "2222"
    # ties go to the leftmost run
    assert digit_stats(DigitString(2413681)).longest_even_run == "24"


def test_digit_stats_counts_sum_to_length():
    rng = random.Random(99)
    for _ in range(1000):
        x = DigitString(rng.randrange(1, 10**60))
        s = digit_stats(x)
        assert sum(s.per_digit_counts.values()) == len(x) == s.odd_count + s.even_count


def test_prime_prefixes_largest():
    prefixes = prime_prefixes(DigitString(LARGEST_LEFT))
    assert prefixes[0] == (7, DigitString(3576863))
    lengths = {n for n, _ in prefixes}
    assert not lengths & set(range(8, 24))
    # independent confirmation that every prefix of length 8..23 is composite
    assert not any(sympy.isprime(int(LARGEST_LEFT[:n])) for n in range(8, 24))


def test_prime_prefixes_trivial():
    assert prime_prefixes(DigitString(23)) == [(1, DigitString(2))]
    assert prime_prefixes(DigitString(40)) == []
