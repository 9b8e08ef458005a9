import pytest

from primeforms.sieve import CoverageError, PairKind, build


def subset_sum_practical(n, divisors):
    """Brute-force definition: every m <= n is a sum of distinct divisors."""
    reachable = 1  # bitmask of representable sums
    for d in divisors:
        reachable |= reachable << d
    return all((reachable >> m) & 1 for m in range(1, n + 1))


def test_build_examples():
    t = build(2500)
    assert t.is_prime(89)
    assert t.is_practical(1)
    assert t.nth_prime(358) == 2411
    assert t.nth_prime(149) == 859
    assert t.nth_prime(1) == 2
    with pytest.raises(IndexError):
        t.nth_prime(0)


def test_sigma():
    t = build(100)
    assert t.sigma(1) == 1
    assert t.sigma(6) == 12
    assert t.sigma(8) == 15
    assert t.sigma(2 * 3 * 11) == 144
    # factorisation beyond the bound
    assert t.sigma(101 * 103) == 102 * 104


def test_practical_examples(table):
    assert table.is_practical(1)
    assert not table.is_practical(3)
    assert table.is_practical(88)
    assert table.is_practical(90)
    assert table.is_practical(2412)
    assert table.is_practical(858)


def test_practical_oracle_to_5000(table):
    for n in range(1, 5001):
        divisors = [d for d in range(1, n + 1) if n % d == 0]
        assert table.is_practical(n) == subset_sum_practical(n, divisors), n


def test_practical_numbers_even(table):
    flags = table.practical_flags
    assert all(n == 1 or n % 2 == 0
               for n in range(1, table.bound + 1) if flags[n])


def test_practical_product_closure(table):
    """x practical and y <= x imply xy practical; checked for practical x <= 300."""
    flags = table.practical_flags
    for x in range(1, 301):
        if not flags[x]:
            continue
        for y in range(1, x + 1):
            assert flags[x * y], (x, y)


def test_practical_beyond_bound(table):
    # values the in-table bitmap cannot reach, via streaming factorisation
    assert table.is_practical(2**40)
    assert not table.is_practical(2 * (10**12 + 39))  # 2 * large prime
    assert table.is_practical(2**20 * 3**10 * 5**5)
    big_practical = 2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31
    assert table.is_practical(big_practical)
    assert not table.is_practical(3**30)


def test_practical_product_merged(table):
    assert table.is_practical_product(88, 90)
    assert table.is_practical_product(2, 10**5)
    assert not table.is_practical_product(2, 10**5 + 3)  # 2p with huge prime p


def test_classify_examples(table):
    assert table.classify(89, PairKind.SANDWICH_FIRST)
    assert table.classify(59, PairKind.SANDWICH_SECOND)
    assert table.classify(11, PairKind.SOPHIE_GERMAIN)
    assert table.classify(3, PairKind.TWIN)
    assert table.classify(3, PairKind.COUSIN)
    assert table.classify(5, PairKind.SEXY)
    assert table.classify(4, PairKind.SET_T)
    assert not table.classify(7, PairKind.SET_T)
    with pytest.raises(CoverageError):
        table.classify(table.bound - 1, PairKind.SOPHIE_GERMAIN)


def test_set_s_members_avoid_pm1_mod_12(table):
    members = table.members("set-s", 1_000_000)
    assert members[:4] == [3, 5, 7, 17]
    assert all(p % 12 not in (1, 11) for p in members)


def test_prime_count_1e6(table):
    assert table.prime_count(1_000_000) == 78498
    primes = table.primes
    assert all(primes[i] < primes[i + 1] for i in range(min(len(primes), 10**4) - 1))


def test_members_and_export_kinds(table):
    assert table.members("primes", 10) == [2, 3, 5, 7]
    assert table.members("practical", 10) == [1, 2, 4, 6, 8]
    assert table.members("set-t", 30) == [4, 6, 12, 18, 30]
    with pytest.raises(ValueError):
        table.members("weird")


def test_factorization_paths(table):
    assert table.factorization(360) == [(2, 3), (3, 2), (5, 1)]
    n = 10**12 + 39  # prime beyond the table
    assert table.factorization(2 * n) == [(2, 1), (n, 1)]
    assert table.factorization((10**6 + 3) ** 2) == [(10**6 + 3, 2)]
