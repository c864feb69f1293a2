import random

import pytest
from hypothesis import given, settings, strategies as st

from junctionlab import towerint as ti
from junctionlab.towerint import (
    OVERFLOW,
    ResidueUndefinedError,
    TowerParseError,
    add,
    compare,
    divide_exact,
    from_natural,
    height_of,
    one,
    parse,
    power_of_base,
    render,
    residue_mod_bm1,
    scale_by_natural,
    to_natural,
    zero,
)


def test_from_natural_round_trip_small():
    for b in range(2, 11):
        for v in list(range(300)) + [b**9, b**9 + 1, 10**18]:
            assert to_natural(from_natural(v, b), 100) == v


@given(st.integers(2, 10), st.integers(0, 10**18))
@settings(max_examples=300)
def test_round_trip_random(b, v):
    assert to_natural(from_natural(v, b), 80) == v


@given(st.integers(2, 10), st.integers(0, 10**15), st.integers(0, 10**15))
@settings(max_examples=300)
def test_add_and_compare_match_ints(b, u, v):
    x, y = from_natural(u, b), from_natural(v, b)
    assert to_natural(add(x, y), 80) == u + v
    assert compare(x, y) == (u > v) - (u < v)


def test_add_associative_commutative_random():
    rng = random.Random(42)
    for _ in range(400):
        b = rng.randint(2, 10)
        xs = [from_natural(rng.randrange(10**12), b) for _ in range(3)]
        x, y, z = xs
        assert compare(add(x, y), add(y, x)) == 0
        assert compare(add(add(x, y), z), add(x, add(y, z))) == 0


def test_total_order_properties():
    rng = random.Random(7)
    for _ in range(300):
        b = rng.randint(2, 10)
        u, v, w = (rng.randrange(10**10) for _ in range(3))
        x, y, z = (from_natural(t, b) for t in (u, v, w))
        # antisymmetry and transitivity against the int order
        assert compare(x, y) == -compare(y, x)
        if compare(x, y) <= 0 and compare(y, z) <= 0:
            assert compare(x, z) <= 0
        assert compare(x, add(x, one(b))) < 0


def test_successor_strictly_larger_for_towers():
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    K5 = add(power_of_base(B5), from_natural(102, 10))
    assert compare(K5, add(K5, one(10))) < 0
    assert compare(K5, scale_by_natural(K5, 2)) < 0


def test_nonunique_representation_of_two():
    # (1/(b-1)) * (b**1 + (b-2)) and plain 2 denote the same integer
    for b in range(3, 11):
        x = parse(f"(1/{b-1})*({b}^{{1}}+{b-2})", b)
        assert compare(x, from_natural(2, b)) == 0
    # b = 2 forces gamma = 1: the only sparse form of 2 is 2^1 itself
    assert compare(parse("2^{1}", 2), from_natural(2, 2)) == 0


def test_add_reduces_fraction_to_plain():
    x = parse("(1/4)*(5^{1}+3)", 5)
    y = add(x, zero(5))
    assert y.gamma == 1 and to_natural(y, 5) == 2


def test_canonical_idempotence():
    for b in (2, 5, 10):
        # b**9 + b - 2 is divisible by b-1; for b = 10 the quotient keeps gamma = 9
        vals = [from_natural(4102, b), divide_exact(from_natural(b**9 + b - 2, b), b - 1)]
        for x in vals:
            again = ti._make(x.base, x.gamma, list(x.terms))
            assert again.gamma == x.gamma
            assert compare(again, x) == 0
            assert len(again.terms) == len(x.terms)
            for (a1, d1), (a2, d2) in zip(x.terms, again.terms):
                assert a1 == a2 and compare(d1, d2) == 0


def test_power_and_divide_examples():
    assert to_natural(power_of_base(zero(10)), 4) == 1
    K3 = add(power_of_base(from_natural(13, 10)), one(10))
    assert to_natural(K3, 20) == 10**13 + 1
    # (34 + 2) / 4 = 9 in base 5
    assert to_natural(divide_exact(from_natural(36, 5), 4), 8) == 9
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    assert B5.gamma == 9  # stays symbolic
    lead = power_of_base(B5)
    assert render(lead) == "10^{(1/9)*(10^{13}+116)}"


def test_divide_exact_rejects_bad_divisors():
    with pytest.raises(ValueError):
        divide_exact(from_natural(36, 5), 3)  # 3 does not divide b-1 = 4
    with pytest.raises(ValueError):
        divide_exact(from_natural(35, 5), 4)  # 35 not divisible by 4


def test_scale_examples():
    x = add(power_of_base(from_natural(13, 10)), one(10))
    assert compare(scale_by_natural(x, 1), x) == 0
    assert to_natural(scale_by_natural(from_natural(3, 2), 2), 8) == 6
    with pytest.raises(ValueError):
        scale_by_natural(x, 0)


def test_to_natural_overflow_marker():
    assert to_natural(zero(7), 10) == 0
    assert to_natural(from_natural(5**9 + 9, 5), 20) == 1953134
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    big = add(power_of_base(B5), from_natural(102, 10))
    assert to_natural(big, 1000) is OVERFLOW


def test_residues():
    assert residue_mod_bm1(parse("10^{24}+102", 10)) == 4
    assert residue_mod_bm1(zero(10)) == 0
    assert residue_mod_bm1(from_natural(101, 10)) == 2
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    with pytest.raises(ResidueUndefinedError):
        residue_mod_bm1(B5)


@pytest.mark.parametrize(
    "v,b,h",
    [(1, 10, 1), (101, 10, 3), (10**13 + 1, 10, 4), (5, 2, 4), (129, 2, 5), (28, 3, 4)],
)
def test_height_examples(v, b, h):
    assert height_of(from_natural(v, b)) == h


def test_height_rejects_zero_and_is_monotone():
    with pytest.raises(ValueError):
        height_of(zero(10))
    rng = random.Random(3)
    for _ in range(200):
        b = rng.randint(2, 10)
        u, v = sorted((rng.randrange(1, 10**12), rng.randrange(1, 10**12)))
        assert height_of(from_natural(u, b)) <= height_of(from_natural(v, b))


def test_render_parse_round_trip():
    rng = random.Random(11)
    for _ in range(300):
        b = rng.randint(2, 10)
        x = from_natural(rng.randrange(10**12), b)
        assert compare(parse(render(x), b), x) == 0
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    K5 = add(power_of_base(B5), from_natural(102, 10))
    s = render(K5)
    assert s == "10^{(1/9)*(10^{13}+116)}+102"
    assert compare(parse(s, 10), K5) == 0
    assert render(zero(4)) == "0"
    B8 = divide_exact(from_natural(2 * 10**24 + 214, 10), 9)
    assert compare(parse("(1/9)*(2*10^{24}+214)", 10), B8) == 0


def test_parse_accepts_unbraced_exponents():
    assert compare(parse("2^12+6", 2), from_natural(4102, 2)) == 0
    assert compare(parse("2^{12}+6", 2), from_natural(4102, 2)) == 0


def test_parse_errors_carry_position():
    with pytest.raises(TowerParseError) as exc:
        parse("10^{13}+", 10)
    assert exc.value.pos == 8
    with pytest.raises(TowerParseError):
        parse("11^{2}+1", 10)  # wrong power base
    with pytest.raises(TowerParseError):
        parse("(1/9)*(10^{2}+7)", 10)  # 107 not divisible by 9
    with pytest.raises(TowerParseError):
        parse("(1/4)*(10^{2})", 10)  # 4 does not divide b-1 = 9


def test_big_exponent_arithmetic_identity():
    # (10^13 + 116)/9 scaled back by 9 recovers the numerator
    B5 = divide_exact(from_natural(10**13 + 116, 10), 9)
    assert to_natural(scale_by_natural(B5, 9), 20) == 10**13 + 116


def test_digit_budget_boundary():
    # b**k - 1 has exactly k digits (allowed); b**k has k+1 (overflow)
    for b, k in [(2, 10), (10, 6)]:
        assert to_natural(from_natural(b**k - 1, b), k) == b**k - 1
        assert to_natural(from_natural(b**k, b), k) is OVERFLOW
        assert to_natural(from_natural(b**k, b), k + 1) == b**k


def test_parse_rejects_whitespace():
    with pytest.raises(TowerParseError):
        parse("10^{13} + 1", 10)
    with pytest.raises(TowerParseError):
        parse(" 101", 10)
