import random
from fractions import Fraction

import pytest

from auslab.scalars import (
    as_scalar,
    cyclotomic_polynomial,
    get_context,
    make_root_of_unity,
    multiplicative_order,
)


def test_cyclotomic_polynomials_known_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    # phi(12) = 4: x^4 - x^2 + 1
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)


def test_make_root_of_unity_examples():
    assert make_root_of_unity(get_context(1), 0) == 1
    assert make_root_of_unity(get_context(2), 1) == -1
    # x^2 reduced modulo x^2 + 1 is -1
    assert make_root_of_unity(get_context(4), 2) == -1


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12])
def test_roots_have_order_dividing_m(m):
    ctx = get_context(m)
    one = ctx.one()
    for e in range(m):
        assert make_root_of_unity(ctx, e) ** m == one


def test_arithmetic_examples():
    ctx = get_context(4)
    one = ctx.one()
    assert one + one == 2
    z = make_root_of_unity(ctx, 1)
    assert z * z == -1
    minus_one = ctx.from_rational(-1)
    assert minus_one.inverse() == -1
    assert (z * z * z) * z == 1


def test_inverse_of_zero_raises():
    ctx = get_context(4)
    with pytest.raises(ZeroDivisionError):
        ctx.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        multiplicative_order(ctx.zero())


def test_multiplicative_orders():
    ctx = get_context(4)
    assert multiplicative_order(ctx.one()) == 1
    assert multiplicative_order(ctx.from_rational(-1)) == 2
    assert multiplicative_order(make_root_of_unity(ctx, 1)) == 4
    assert multiplicative_order(Fraction(1)) == 1
    assert multiplicative_order(Fraction(-1)) == 2
    assert multiplicative_order(Fraction(2)) is None
    assert multiplicative_order(ctx.from_rational(Fraction(1, 2))) is None
    # -zeta_3 has order 6 even though the conductor is 3
    ctx3 = get_context(3)
    assert multiplicative_order(-make_root_of_unity(ctx3, 1)) == 6


def _random_value(ctx, rng):
    return ctx.from_coeffs(
        [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(ctx.degree)]
    )


@pytest.mark.parametrize("m", [1, 3, 4, 8])
def test_field_axioms_on_samples(m):
    rng = random.Random(20240000 + m)
    ctx = get_context(m)
    one = ctx.one()
    for _ in range(40):
        a, b, c = (_random_value(ctx, rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == one


def test_rational_embedding_commutes():
    ctx = get_context(6)
    rng = random.Random(7)
    for _ in range(25):
        p = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        q = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        pe, qe = ctx.from_rational(p), ctx.from_rational(q)
        assert pe + qe == ctx.from_rational(p + q)
        assert pe * qe == ctx.from_rational(p * q)
        # mixed arithmetic promotes on the fly
        assert pe + q == ctx.from_rational(p + q)
        assert q * pe == ctx.from_rational(p * q)


def test_rational_valued_residues_compare_and_hash_like_fractions():
    ctx = get_context(4)
    z2 = make_root_of_unity(ctx, 2)
    assert z2 == -1
    assert hash(z2) == hash(Fraction(-1))
    assert as_scalar(z2) == Fraction(-1)


def test_conductor_mixing_is_rejected():
    a = make_root_of_unity(get_context(4), 1)
    b = make_root_of_unity(get_context(3), 1)
    with pytest.raises(ValueError):
        a * b
