import random

import pytest

from primeforms.arith import PrimePowerModulus
from primeforms.sequences import (
    FIBONACCI,
    PELL,
    LucasParams,
    alt_sum_table,
    lucas_pair,
    polygonal,
    root_monotone_check,
    stepper,
)

# every parameter pair driving a registered congruence case table
PARAM_PAIRS = [
    LucasParams(*ab)
    for ab in ((1, -1), (2, -1), (3, -1), (5, -1), (12, -1), (16, 1),
               (10, 1), (5, 8), (24, -3), (4, 1))
]


def naive_pairs(params, top):
    A, B = params
    us = [0, 1]
    for _ in range(top + 1):
        us.append(A * us[-1] - B * us[-2])
    return us


def test_lucas_pair_examples():
    assert lucas_pair(FIBONACCI, 0) == (0, 2)
    assert lucas_pair(FIBONACCI, 10) == (55, 123)
    assert lucas_pair(PELL, 3) == (5, 14)


def test_fast_doubling_matches_iteration_exact_and_modular():
    mod = 97**3
    for params in PARAM_PAIRS:
        us = naive_pairs(params, 1001)
        A = params.A
        for n in range(1001):
            u, v = lucas_pair(params, n)
            assert u == us[n]
            assert v == 2 * us[n + 1] - A * us[n]
            um, vm = lucas_pair(params, n, mod)
            assert um == us[n] % mod
            assert vm == (2 * us[n + 1] - A * us[n]) % mod


def test_pair_identity_v2_minus_Du2():
    for params in PARAM_PAIRS:
        D = params.A**2 - 4 * params.B
        for n in range(201):
            u, v = lucas_pair(params, n)
            assert v * v - D * u * u == 4 * params.B**n


def test_exact_mode_cap():
    with pytest.raises(ValueError):
        lucas_pair(FIBONACCI, 10_001)
    lucas_pair(FIBONACCI, 10_001, 97)  # modular mode is uncapped


def test_stepper_examples():
    s = stepper(FIBONACCI, 1, 1000)
    assert s.apply((0, 1)) == (1, 1)
    assert s.matrix == (0, 1, 1, 1)

    mod = 29**3
    s6 = stepper(FIBONACCI, 6, mod)
    pair = (0, 1)
    seen = []
    for _ in range(3):
        seen.append(pair[0])
        pair = s6.apply(pair)
    assert seen == [0, 8, 144]  # F_0, F_6, F_12

    s4 = stepper(PELL, 4, PrimePowerModulus(7, 2))
    pair = (0, 1)
    vals = []
    for _ in range(3):
        vals.append(pair[0])
        pair = s4.apply(pair)
    assert vals == [0, 12 % 49, 408 % 49]  # P_0, P_4, P_8


def test_stepper_random_against_lucas_pair():
    rng = random.Random(7)
    for _ in range(100):
        params = rng.choice(PARAM_PAIRS)
        stride = rng.randrange(1, 25)
        p = rng.choice([97, 101, 103, 29])
        mod = p**3
        s = stepper(params, stride, mod)
        pair = (0, 1)
        k = rng.randrange(0, 40)
        for _ in range(k):
            pair = s.apply(pair)
        assert pair[0] == lucas_pair(params, stride * k, mod)[0]


def test_polygonal():
    assert polygonal(3, 1) == 1
    assert polygonal(4, 5) == 25
    assert polygonal(5, 3) == 12
    assert [polygonal(3, k) for k in range(5)] == [0, 1, 3, 6, 10]
    with pytest.raises(ValueError):
        polygonal(2, 1)


def test_alt_sum_table(table):
    alt = alt_sum_table(table, 400)
    assert alt.s(1) == 2
    assert alt.s(4) == 3
    assert alt.partial_alt_sum(149, 358) == 806
    assert alt.partial_alt_sum(1, 5) == alt.s(5)
    assert alt.partial_alt_sum(5, 5) == alt.prime(5)
    # recurrence and positivity
    for n in range(2, 401):
        assert alt.s(n) == alt.prime(n) - alt.s(n - 1)
        assert alt.s(n) >= 1


def test_alt_sum_table_errors(table):
    alt = alt_sum_table(table, 10)
    with pytest.raises(IndexError):
        alt.s(11)
    with pytest.raises(IndexError):
        alt.partial_alt_sum(0, 5)


def test_root_monotone_examples():
    assert root_monotone_check([5, 5, 5], 1, "decreasing") is None
    assert root_monotone_check([2, 9, 20], 1, "increasing") == 2  # 9^(1/2) = 3 > 20^(1/3)
    assert root_monotone_check([2, 9], 1, "decreasing") == 1  # 2 < 9^(1/2)


def test_root_monotone_primes_and_practicals(table, ctx):
    primes = table.primes[:10_001]
    assert root_monotone_check(primes, 3, "decreasing") is None
    practicals = ctx.practicals[:10_001]
    assert root_monotone_check(practicals, 3, "decreasing") is None
