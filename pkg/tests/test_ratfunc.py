import random
from fractions import Fraction

import pytest

from qrules import (
    GF,
    QQ,
    ZZ,
    DivisionByZero,
    InvalidIndex,
    MixedContexts,
    Poly,
    RatFunc,
    RequiresField,
    quantum_integer,
    rf_arith,
    rf_make,
    rf_subst_power,
)

from conftest import rand_poly, rand_poly_nonzero


def rand_ratfunc(rng, ctx, max_deg=5):
    return RatFunc(
        rand_poly(rng, ctx, max_deg), rand_poly_nonzero(rng, ctx, max_deg)
    )


def test_reduction_and_sign_convention():
    # (1 - q^2) / (1 - q) reduces to q + 1 over a monic denominator
    rf = rf_make(Poly([1, 0, -1], QQ), Poly([1, -1], QQ))
    assert rf.num == Poly([1, 1], QQ)
    assert rf.den == Poly([1], QQ)
    # cross-multiplication check
    assert rf.num * Poly([1, -1], QQ) == Poly([1, 0, -1], QQ) * rf.den


def test_zero_is_zero_over_one():
    rf = rf_make(Poly([], QQ), Poly([3, 1], QQ))
    assert rf.num == Poly([], QQ)
    assert rf.den == Poly([1], QQ)
    assert not rf


def test_quantum_integer_quotient():
    rf = rf_make(quantum_integer(6, QQ), quantum_integer(3, QQ))
    assert rf.num == Poly([1, 0, 0, 1], QQ)  # 1 + q^3
    assert rf.den == Poly([1], QQ)


def test_monic_denominator():
    rf = rf_make(Poly([1], QQ), Poly([1, 2], QQ))
    assert rf.den == Poly([Fraction(1, 2), 1], QQ)
    assert rf.num == Poly([Fraction(1, 2)], QQ)
    # value unchanged: num/den == 1/(1+2q)
    assert rf.num * Poly([1, 2], QQ) == rf.den


def test_requires_field_and_zero_denominator():
    with pytest.raises(RequiresField):
        RatFunc(Poly([1], ZZ), Poly([1, 1], ZZ))
    with pytest.raises(DivisionByZero):
        RatFunc(Poly([1], QQ), Poly([], QQ))


def test_inverse_pair():
    two = RatFunc(quantum_integer(2, QQ))
    inv = RatFunc(Poly([1], QQ), quantum_integer(2, QQ))
    assert rf_arith("mul", inv, two) == RatFunc(Poly([1], QQ))
    assert rf_arith("inv", two) == inv
    assert two.inv().den == quantum_integer(2, QQ)
    with pytest.raises(DivisionByZero):
        rf_arith("inv", RatFunc(Poly([], QQ)))


def test_add_identity():
    rng = random.Random(3)
    zero = RatFunc(Poly([], QQ))
    for _ in range(30):
        a = rand_ratfunc(rng, QQ, 4)
        assert rf_arith("add", a, zero) == a
        assert a - a == zero


def test_subst_power_examples():
    half = RatFunc(Poly([1], QQ), quantum_integer(2, QQ))
    assert rf_subst_power(half, 2) == RatFunc(Poly([1], QQ), Poly([1, 0, 1], QQ))
    rng = random.Random(5)
    a = rand_ratfunc(rng, QQ)
    assert rf_subst_power(a, 1) == a
    two = RatFunc(quantum_integer(2, QQ))
    assert rf_subst_power(two, 3).num == Poly([1, 0, 0, 1], QQ)
    with pytest.raises(InvalidIndex):
        rf_subst_power(two, 0)


def test_canonical_idempotence():
    rng = random.Random(7)
    for ctx in (QQ, GF(5)):
        for _ in range(100):
            a = rand_ratfunc(rng, ctx)
            assert rf_make(a.num, a.den) == a
            assert a.den.leading == ctx.one


def test_field_axioms():
    rng = random.Random(11)
    for ctx, count in ((QQ, 250), (GF(5), 250)):
        for _ in range(count):
            a = rand_ratfunc(rng, ctx, 5)
            b = rand_ratfunc(rng, ctx, 5)
            c = rand_ratfunc(rng, ctx, 5)
            assert a * (b + c) == a * b + a * c
            assert (a + b) + c == a + (b + c)
            assert a * b == b * a
            if b:
                assert (a / b) * b == a


def test_subst_power_is_field_homomorphism():
    rng = random.Random(13)
    for _ in range(200):
        ctx = QQ if rng.random() < 0.5 else GF(5)
        a = rand_ratfunc(rng, ctx, 4)
        b = rand_ratfunc(rng, ctx, 4)
        m = rng.randint(1, 4)
        assert (a + b).subst_power(m) == a.subst_power(m) + b.subst_power(m)
        assert (a * b).subst_power(m) == a.subst_power(m) * b.subst_power(m)


def test_pow_including_negative():
    two = RatFunc(quantum_integer(2, QQ))
    assert two**3 == RatFunc(quantum_integer(2, QQ) ** 3)
    assert two**-2 == RatFunc(Poly([1], QQ), quantum_integer(2, QQ) ** 2)
    assert two**0 == RatFunc(Poly([1], QQ))


def test_mixed_contexts():
    with pytest.raises(MixedContexts):
        RatFunc(Poly([1], QQ)) + RatFunc(Poly([1], GF(5)))
