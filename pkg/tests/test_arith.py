import random

import pytest
from hypothesis import given, strategies as st

from primeforms.arith import (
    NotInvertibleError,
    PrimePowerModulus,
    batch_inverses,
    is_prime,
    jacobi,
    mod_inv,
    rational_mod,
)


def test_is_prime_small_cases():
    assert not is_prime(1)
    assert is_prime(2)
    assert is_prime(2411)
    assert not is_prime(0)
    assert not is_prime(2047)  # strong pseudoprime base 2


def test_is_prime_agrees_with_sieve_to_1e6(table):
    flags = table.prime_flags
    for n in range(1_000_000 + 1):
        if is_prime(n) != bool(flags[n]):
            pytest.fail(f"primality mismatch at {n}")


def test_is_prime_large_known_values():
    assert is_prime(2**61 - 1)
    assert not is_prime((2**61 - 1) * (2**31 - 1))
    assert is_prime(10**18 + 9)
    # beyond 64 bits: BPSW path
    assert is_prime(2**89 - 1)
    assert not is_prime(2**89 - 3)


def test_jacobi_examples():
    assert jacobi(1, 1) == 1
    assert jacobi(2, 7) == pow(2, 3, 7) % 7  # Euler: 2^((7-1)/2) = 1
    assert jacobi(5, 29) == 1  # 11^2 = 121 = 5 + 4*29
    assert jacobi(-5, 3) == 1
    with pytest.raises(ValueError):
        jacobi(3, 10)
    with pytest.raises(ValueError):
        jacobi(3, -5)


def test_jacobi_euler_criterion(table):
    for p in table.primes_in(3, 10_000):
        half = (p - 1) // 2
        for a in random.Random(p).sample(range(p), min(p, 24)):
            e = pow(a, half, p)
            expect = 0 if a % p == 0 else (1 if e == 1 else -1)
            assert jacobi(a, p) == expect


def test_jacobi_multiplicative_10k_random():
    rng = random.Random(1729)
    for _ in range(10_000):
        n = rng.randrange(1, 10**6) * 2 + 1
        a, b = rng.randrange(-10**6, 10**6), rng.randrange(-10**6, 10**6)
        assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


@given(st.integers(min_value=-10**9, max_value=10**9),
       st.integers(min_value=1, max_value=10**9))
def test_mod_inv_round_trip(a, m):
    try:
        x = mod_inv(a, m)
    except NotInvertibleError:
        from math import gcd

        assert gcd(a, m) > 1
        return
    assert 0 <= x < m
    assert (a * x) % m == 1 % m


def test_mod_inv_examples():
    assert mod_inv(1, 5) == 1
    assert mod_inv(3, 7) == 5
    with pytest.raises(NotInvertibleError):
        mod_inv(2, 4)


def test_prime_power_modulus_validation():
    assert PrimePowerModulus(7, 2).modulus == 49
    with pytest.raises(ValueError):
        PrimePowerModulus(8, 2)
    with pytest.raises(ValueError):
        PrimePowerModulus(7, 4)
    with pytest.raises(ValueError):
        PrimePowerModulus(2, 1)
    with pytest.raises(ValueError):
        PrimePowerModulus(2_097_153, 3)  # p^3 over the double-width guard


def test_rational_mod_examples():
    assert rational_mod(1, 1, PrimePowerModulus(7, 2)) == 1
    assert rational_mod(-1, 10, PrimePowerModulus(7, 2)) == 44
    assert rational_mod(3, 2, PrimePowerModulus(5, 2)) == 14
    with pytest.raises(NotInvertibleError):
        rational_mod(1, 14, PrimePowerModulus(7, 2))


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6).filter(bool))
def test_rational_mod_round_trip(num, den):
    m = PrimePowerModulus(101, 3)
    if den % 101 == 0:
        with pytest.raises(NotInvertibleError):
            rational_mod(num, den, m)
        return
    r = rational_mod(num, den, m)
    assert (den * r - num) % m.modulus == 0


def test_batch_inverses():
    M = 7**3
    inv = batch_inverses(20, M, 7)
    for i in range(1, 21):
        if i % 7 == 0:
            assert inv[i] == 0
        else:
            assert i * inv[i] % M == 1
