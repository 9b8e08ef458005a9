import pytest

from primeforms.quadform import (
    X_GT_Y_GT_0,
    X_POS_Y_NONNEG,
    FormSpec,
    all_representations,
    quadform_prime_search,
    ratio_stats,
    represent,
)

SUM_SQUARES = FormSpec(1, 0, 1, X_GT_Y_GT_0)
HEX_FORM = FormSpec(1, 1, 1, X_GT_Y_GT_0)
GOLDEN_FORM = FormSpec(1, 3, 1, X_GT_Y_GT_0)


def test_represent_examples():
    rep = represent(13, SUM_SQUARES)
    assert (rep.x, rep.y) == (3, 2)
    assert represent(3, SUM_SQUARES) is None
    rep = represent(29, FormSpec(1, 0, 5))
    assert (rep.x, rep.y) == (3, 2)
    rep = represent(5, FormSpec(1, 0, 4))
    assert (rep.x, rep.y) == (1, 1)
    rep = represent(11, GOLDEN_FORM)
    assert (rep.x, rep.y) == (2, 1)


def test_represent_substitution_property(table):
    forms = [SUM_SQUARES, HEX_FORM, GOLDEN_FORM, FormSpec(1, 0, 5),
             FormSpec(2, 0, 5), FormSpec(1, 0, 22), FormSpec(2, 0, 29)]
    for p in table.primes_in(2, 3000):
        for form in forms:
            rep = represent(p, form)
            if rep is not None:
                assert form.value(rep.x, rep.y) == p
                assert form.admissible(rep.x, rep.y)


def test_sum_of_squares_exists_unique_to_1e5(table):
    for p in table.primes_in(5, 100_000):
        if p % 4 != 1:
            continue
        reps = all_representations(p, SUM_SQUARES)
        assert len(reps) == 1, p


def test_hex_form_exists_unique_to_1e5(table):
    for p in table.primes_in(7, 100_000):
        if p % 3 != 1:
            continue
        reps = all_representations(p, HEX_FORM)
        assert len(reps) == 1, p


def test_golden_form_exists_to_2e4(table):
    for p in table.primes_in(11, 20_000):
        if p % 5 in (1, 4):
            reps = all_representations(p, GOLDEN_FORM)
            assert len(reps) == 1, p


def test_ratio_stats_small_hand_enumeration(table):
    # primes p = 1 (mod 4) up to 100 and their a > b > 0 decompositions
    expect = {5: (2, 1), 13: (3, 2), 17: (4, 1), 29: (5, 2), 37: (6, 1),
              41: (5, 4), 53: (7, 2), 61: (6, 5), 73: (8, 3), 89: (8, 5),
              97: (9, 4)}
    rs = ratio_stats(table, 100, SUM_SQUARES, (4, {1}), 1)
    assert rs.count == len(expect)
    assert rs.numerator_sum == sum(a for a, _ in expect.values())
    assert rs.denominator_sum == sum(b for _, b in expect.values())


def test_ratio_stats_monotone_in_N(table):
    prev_num = prev_den = 0
    for N in (1000, 5000, 20_000, 50_000):
        rs = ratio_stats(table, N, SUM_SQUARES, (4, {1}), 1)
        assert rs.numerator_sum >= prev_num
        assert rs.denominator_sum >= prev_den
        prev_num, prev_den = rs.numerator_sum, rs.denominator_sum


def test_quadform_prime_search_examples(table):
    assert quadform_prime_search(table, 7, 1, "mixed") == 2  # 49+14+4 = 67
    assert quadform_prime_search(table, 5, 4, "pure") == 2  # 25+16 = 41
    with pytest.raises(ValueError):
        quadform_prime_search(table, 7, 1, "both")


def test_quadform_witness_table_d1_to_1e4(table):
    for p in table.primes_in(7, 10_000):
        assert quadform_prime_search(table, p, 1, "mixed") is not None, p


def test_form_validation():
    with pytest.raises(ValueError):
        FormSpec(1, -3, 1)  # unbounded on the quadrant
    with pytest.raises(ValueError):
        FormSpec(-1, 0, 1)
    with pytest.raises(ValueError):
        FormSpec(1, 0, 1, "y>x")
    assert FormSpec(1, 3, 1).constraint == X_POS_Y_NONNEG
