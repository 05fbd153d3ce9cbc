import pytest
import sympy
from hypothesis import given, settings, strategies as st
from sympy.ntheory.primetest import is_strong_lucas_prp

from golden import LARGEST_LEFT

from chiral_primes.digits import DigitString
from chiral_primes.primality import (
    DETERMINISTIC_BASES,
    DETERMINISTIC_LIMIT,
    Kind,
    is_prime,
    jacobi,
    miller_rabin,
    strong_lucas,
    trial_division_oracle,
    trial_division_sweep,
)

# spsp to bases 2..37 (the 12 smallest primes) and to all 13 bases respectively
PSI_12 = 318665857834031151167461
PSI_13 = 3317044064679887385961981


def test_small_examples():
    assert is_prime(DigitString(23)).kind is Kind.PRIME
    v = is_prime(DigitString(25))
    assert v.kind is Kind.COMPOSITE and v.divisor == 5
    one = is_prime(DigitString(1))
    assert one.kind is Kind.COMPOSITE and one.note == "unit/zero"
    assert is_prime(0).note == "unit/zero"
    assert is_prime(2).kind is Kind.PRIME


def test_largest_left_prime_deterministic():
    # independent probable-prime oracle first
    assert sympy.isprime(int(LARGEST_LEFT))
    assert is_prime(DigitString(LARGEST_LEFT)).kind is Kind.PRIME


def test_block1_value_agrees_with_trial_division():
    oracle = trial_division_oracle(DigitString(13000009), 10**4)
    assert is_prime(13000009).is_prime == oracle.is_prime


@pytest.mark.parametrize("n, kind, divisor", [(73939133, Kind.PRIME, None), (39, Kind.COMPOSITE, 3), (2, Kind.PRIME, None)])
def test_trial_division_oracle(n, kind, divisor):
    v = trial_division_oracle(DigitString(n), 10**4)
    assert v.kind is kind and v.divisor == divisor


def test_trial_division_oracle_rejects_small_bound():
    with pytest.raises(ValueError):
        trial_division_oracle(10**8 + 7, 10**4)
    with pytest.raises(ValueError):
        trial_division_oracle(7, 10**9)


def test_deterministic_bases_are_first_13_primes():
    assert list(DETERMINISTIC_BASES) == list(sympy.primerange(2, 42))
    assert DETERMINISTIC_LIMIT == PSI_13


def test_strong_pseudoprimes_are_caught():
    assert all(miller_rabin(PSI_12, a) for a in DETERMINISTIC_BASES[:12])
    v = is_prime(PSI_12)
    assert v.kind is Kind.COMPOSITE and v.witness == 41
    # PSI_13 fools every deterministic base, so it must take the probabilistic route
    assert all(miller_rabin(PSI_13, a) for a in DETERMINISTIC_BASES)
    assert is_prime(PSI_13).kind is Kind.COMPOSITE
    assert is_prime(3215031751).kind is Kind.COMPOSITE


@pytest.mark.parametrize("n", [561, 1105, 1729, 2465, 2821, 6601, 8911, 41041, 825265, 321197185])
def test_carmichael_numbers(n):
    assert is_prime(n).kind is Kind.COMPOSITE


def test_strong_lucas_matches_sympy():
    for n in range(3, 100_000, 2):
        assert strong_lucas(n) == is_strong_lucas_prp(n), n


@pytest.mark.parametrize("n", [5459, 5777, 10877, 16109, 18971])
def test_strong_lucas_pseudoprimes(n):
    assert strong_lucas(n)
    assert is_prime(n).kind is Kind.COMPOSITE


def test_jacobi_matches_sympy():
    for n in range(1, 400, 2):
        for a in range(-30, 60):
            assert jacobi(a, n) == sympy.jacobi_symbol(a, n)


def test_large_values_are_probable_primes():
    p = sympy.nextprime(DETERMINISTIC_LIMIT)
    v = is_prime(p, rounds=40, seed=7)
    assert v.kind is Kind.PROBABLE_PRIME and v.rounds == 40 and v.lucas and v.seed == 7
    assert is_prime(p * sympy.nextprime(10**30)).kind is Kind.COMPOSITE


def test_rounds_must_be_positive():
    with pytest.raises(ValueError):
        is_prime(sympy.nextprime(DETERMINISTIC_LIMIT), rounds=0)


def test_determinism_with_seed():
    p = 2**127 - 1
    assert is_prime(p, 10, 3) == is_prime(p, 10, 3)
    composite = (2**61 - 1) * (2**89 - 1)
    assert is_prime(composite, 10, 3) == is_prime(composite, 10, 3)


@settings(max_examples=500)
@given(st.integers(min_value=0, max_value=10**40))
def test_no_false_composite_and_agrees_with_sympy(n):
    v = is_prime(n)
    if v.divisor is not None:
        assert 1 < v.divisor < n and (n // v.divisor) * v.divisor == n
    assert v.is_prime == sympy.isprime(n)


def test_verdict_serialisation():
    assert is_prime(25).to_dict() == {"kind": "composite", "rounds": 0, "seed": None, "divisor": "5"}
    big = is_prime(2**127 - 1, rounds=5, seed=9).to_dict()
    assert big["kind"] == "probable_prime" and big["rounds"] == 5 and big["seed"] == 9


def test_sweep_matches_sympy():
    table = trial_division_sweep(100_000)
    assert [int(i) for i in table.nonzero()[0]] == list(sympy.primerange(0, 100_000))
