import random
from fractions import Fraction

import pytest

from uqb2.cyclotomic import cyclotomic_polynomial, field_init


def test_field_init_basic():
    ctx = field_init(5)
    assert ctx.l == 5
    assert ctx.degree == 4
    assert ctx.phi == (1, 1, 1, 1, 1)
    ctx = field_init(6)
    assert ctx.l == 3
    assert ctx.phi == (1, -1, 1)


def test_field_init_rejects_small_m():
    for m in (4, 3, 0, -2):
        with pytest.raises(ValueError):
            field_init(m)


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(8) == [1, 0, 0, 0, 1]
    assert cyclotomic_polynomial(12) == [1, 0, -1, 0, 1]
    assert cyclotomic_polynomial(7) == [1] * 7
    assert cyclotomic_polynomial(9) == [1, 0, 0, 1, 0, 0, 1]


def test_q_power_arithmetic():
    ctx = field_init(5)
    assert ctx.q_pow(5) == ctx.one
    assert ctx.q_pow(2) * ctx.q_pow(3) == ctx.one
    assert ctx.q.invert() == ctx.q_pow(4)
    assert ctx.q_pow(-2) == ctx.q_pow(3)


def test_q_pow_additive_in_exponent():
    ctx = field_init(12)
    random.seed(0)
    for _ in range(100):
        k1 = random.randrange(-30, 30)
        k2 = random.randrange(-30, 30)
        assert ctx.q_pow(k1) * ctx.q_pow(k2) == ctx.q_pow(k1 + k2)


def test_ord_q_pow():
    assert field_init(6).ord_q_pow(2) == 3
    assert field_init(8).ord_q_pow(4) == 2
    assert field_init(5).ord_q_pow(2) == 5
    assert field_init(7).ord_q_pow(0) == 1
    for m in range(5, 25):
        ctx = field_init(m)
        assert ctx.ord_q_pow(2) == ctx.l


def test_q_bracket_values():
    ctx = field_init(5)
    assert ctx.q_bracket(0, 2).is_zero()
    assert ctx.q_bracket(1, 2) == ctx.one
    assert ctx.q_bracket(1, -4) == ctx.one
    # q^(2l) = 1 forces the numerator to vanish
    assert ctx.q_bracket(ctx.l, 2).is_zero()


def test_q_bracket_recurrence():
    ctx = field_init(8)
    q2 = ctx.q_pow(2)
    for k in range(12):
        assert ctx.q_bracket(k + 1, 2) == q2 * ctx.q_bracket(k, 2) + 1


def test_q_bracket_rejects_trivial_step():
    ctx = field_init(6)
    with pytest.raises(ValueError):
        ctx.q_bracket(3, 6)
    with pytest.raises(ValueError):
        ctx.q_bracket(3, -12)


def test_invert_zero_rejected():
    ctx = field_init(7)
    with pytest.raises(ZeroDivisionError):
        ctx.zero.invert()


def _random_scalar(ctx, rng):
    c = ctx.zero
    for _ in range(rng.randrange(1, 4)):
        c = c + ctx.q_pow(rng.randrange(ctx.m)) * ctx.from_fraction(
            Fraction(rng.randrange(-5, 6), rng.randrange(1, 5))
        )
    return c


@pytest.mark.parametrize("m", [5, 6, 8, 12])
def test_field_axioms_random(m):
    ctx = field_init(m)
    rng = random.Random(m)
    for _ in range(60):
        a = _random_scalar(ctx, rng)
        b = _random_scalar(ctx, rng)
        c = _random_scalar(ctx, rng)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.invert() == ctx.one
            assert a / a == ctx.one


def test_fraction_and_int_coercion():
    ctx = field_init(5)
    assert ctx.q + 1 - 1 == ctx.q
    assert 2 * ctx.q == ctx.q * 2
    half = ctx.from_fraction(Fraction(1, 2))
    assert half + half == ctx.one
    assert (ctx.one / 2) == half
