import random
from fractions import Fraction

import pytest

from qrules import (
    GF,
    QQ,
    ZZ,
    AffineSumNotOne,
    CanonicalRule,
    IndexOutOfBound,
    InconsistentRule,
    Poly,
    Scalar,
    TabulatedRule,
    quantum_integer,
    rule_add_zero,
    rule_affine,
    rule_canonical,
    rule_classify,
    rule_expand,
    rule_verify,
    zero_identity,
    zero_verify,
)

from conftest import rand_poly


def test_fundamental_rule_expansion():
    rule = rule_canonical(Poly([], ZZ))
    u, v = rule_expand(rule, 5, 9)
    assert u == Poly([1], ZZ)
    assert v == Poly.monomial(5, ZZ)


def test_two_minus_qn_rule_expansion():
    # z = 1 - q gives u_n = 2 - q^n and v_m = 2 q^m - 1
    rule = rule_canonical(Poly([1, -1], ZZ))
    for m in range(1, 11):
        for n in range(1, 11):
            u, v = rule.expand(m, n)
            assert u == Poly([2], ZZ) - Poly.monomial(n, ZZ)
            assert v == Poly.monomial(m, ZZ).scale(2) - 1


def test_four_minus_3qn_rule_expansion():
    # z = 3 - 3q gives u_n = 4 - 3 q^n and v_m = 4 q^m - 3
    rule = rule_canonical(Poly([3, -3], ZZ))
    u, v = rule.expand(2, 1)
    assert u == Poly([4, -3], ZZ)
    assert v == Poly([-3, 0, 4], ZZ)
    u, v = rule.expand(1, 1)
    assert u == Poly([4, -3], ZZ)
    assert v == Poly([-3, 4], ZZ)


def test_rule_verify_low_degree_z_rules():
    for ctx in (ZZ, QQ, GF(5)):
        for zc in ([], [1, -1], [3, -3]):
            rule = rule_canonical(Poly(zc, ctx))
            assert rule_verify(rule, 16, 16).verified


def test_rule_verify_tabulated_fundamental():
    bound = 8
    u = {}
    v = {}
    for m in range(1, bound + 1):
        for n in range(1, bound + 1):
            u[(m, n)] = Poly([1], ZZ)
            v[(m, n)] = Poly.monomial(m, ZZ)
    rule = TabulatedRule(u, v, bound)
    assert rule_verify(rule, bound, bound).verified


def test_rule_verify_tabulated_counterexample():
    bound = 2
    one = Poly([1], ZZ)
    table = {(m, n): one for m in (1, 2) for n in (1, 2)}
    rule = TabulatedRule(dict(table), dict(table), bound)
    report = rule_verify(rule, 2, 2)
    assert not report.verified
    ce = report.counterexample
    # first failure in lexicographic scan
    assert (ce.m, ce.n) == (1, 1)
    # the counterexample re-expands to a genuine inequality
    u, v = rule.expand(ce.m, ce.n)
    assert u.times_qint(ce.m) + v.times_qint(ce.n) == ce.actual
    assert quantum_integer(ce.m + ce.n, ZZ) == ce.expected
    assert ce.actual != ce.expected
    # the grid point named in the derivation also fails: 1 + [2]_q != [3]_q
    u12, v12 = rule.expand(1, 2)
    assert u12.times_qint(1) + v12.times_qint(2) != quantum_integer(3, ZZ)


def test_tabulated_bound_errors():
    one = Poly([1], ZZ)
    with pytest.raises(IndexOutOfBound):
        TabulatedRule({(1, 1): one}, {(1, 1): one}, 2)
    rule = TabulatedRule({(1, 1): one}, {(1, 1): one}, 1)
    with pytest.raises(IndexOutOfBound):
        rule.expand(1, 2)
    with pytest.raises(IndexOutOfBound):
        rule_verify(rule, 2, 2)


def test_classify_examples():
    z = rule_classify(Poly([4, -3], ZZ), Poly([-3, 4], ZZ))
    assert z == Poly([3, -3], ZZ)
    assert rule_classify(Poly([1], ZZ), Poly([0, 1], ZZ)) == Poly([], ZZ)
    z = rule_classify(Poly([2, -1], ZZ), Poly([-1, 2], ZZ))
    assert z == Poly([1, -1], ZZ)
    # brute-force confirmation that the recovered rule really works
    assert rule_verify(rule_canonical(z), 8, 8).verified


def test_classify_inconsistent():
    with pytest.raises(InconsistentRule):
        rule_classify(Poly([1], ZZ), Poly([1, 1], ZZ))
    with pytest.raises(InconsistentRule):
        rule_classify(Poly([2], ZZ), Poly([0, 1], ZZ))


def test_classify_round_trip():
    rng = random.Random(101)
    for ctx in (ZZ, QQ, GF(5)):
        for _ in range(50):
            z = rand_poly(rng, ctx, 8)
            rule = rule_canonical(z)
            u1, v1 = rule.expand(1, 1)
            assert rule_classify(u1, v1) == z


def test_canonical_rules_verify():
    rng = random.Random(103)
    for ctx in (ZZ, QQ, GF(5)):
        for _ in range(50):
            z = rand_poly(rng, ctx, 8)
            assert rule_verify(rule_canonical(z), 32, 32).verified


def test_zero_identity_telescoping_expansion():
    # z = 1 - q: s_n = 1 - q^n and t_m = q^m - 1
    zid = zero_identity(Poly([1, -1], ZZ))
    for m in range(1, 12):
        for n in range(1, 12):
            s, t = zid.expand(m, n)
            assert s == Poly([1], ZZ) - Poly.monomial(n, ZZ)
            assert t == Poly.monomial(m, ZZ) - 1
    assert zero_verify(zid, 12, 12).verified


def test_zero_identity_trivial_and_monomial():
    zid = zero_identity(Poly([], ZZ))
    s, t = zid.expand(3, 4)
    assert not s and not t
    assert zero_verify(zid, 4, 4).verified

    zid = zero_identity(Poly.monomial(2, ZZ))
    s, t = zid.expand(3, 2)
    assert s == Poly([0, 0, 1, 1], ZZ)  # q^2 (1 + q)
    assert t == Poly([0, 0, -1, -1, -1], ZZ)  # -q^2 (1 + q + q^2)
    assert s.times_qint(3) + t.times_qint(2) == Poly([], ZZ)


def test_zero_verify_random():
    rng = random.Random(107)
    for ctx in (ZZ, QQ, GF(5)):
        for _ in range(12):
            zid = zero_identity(rand_poly(rng, ctx, 8))
            assert zero_verify(zid, 8, 8).verified


def test_affine_combination_reconstructs_example():
    fundamental = rule_canonical(Poly([], ZZ))
    second = rule_canonical(Poly([1, -1], ZZ))
    combined = rule_affine([fundamental, second], [-2, 3])
    assert isinstance(combined, CanonicalRule)
    assert combined.z == Poly([3, -3], ZZ)
    assert rule_verify(combined, 8, 8).verified


def test_affine_singleton_and_idempotence():
    rule = rule_canonical(Poly([2, 5], QQ))
    assert rule_affine([rule], [1]).z == rule.z
    zero_rule = rule_canonical(Poly([], QQ))
    half = Scalar(Fraction(1, 2), QQ)
    assert rule_affine([zero_rule, zero_rule], [half, half]).z == Poly([], QQ)


def test_affine_weight_checks():
    rule = rule_canonical(Poly([], ZZ))
    with pytest.raises(AffineSumNotOne):
        rule_affine([rule, rule], [1, 1])
    with pytest.raises(ValueError):
        rule_affine([rule], [1, 2])
    with pytest.raises(ValueError):
        rule_affine([], [])
    one = Poly([1], ZZ)
    tab = TabulatedRule({(1, 1): one}, {(1, 1): one}, 1)
    with pytest.raises(TypeError):
        rule_affine([tab], [1])


def test_add_zero_builds_derivation_chain():
    fundamental = rule_canonical(Poly([], ZZ))
    step = rule_add_zero(fundamental, zero_identity(Poly([1, -1], ZZ)))
    assert step.z == Poly([1, -1], ZZ)
    unchanged = rule_add_zero(step, zero_identity(Poly([], ZZ)))
    assert unchanged.z == step.z
    third = rule_add_zero(step, zero_identity(Poly([2, -2], ZZ)))
    assert third.z == Poly([3, -3], ZZ)
    assert rule_verify(third, 8, 8).verified


def test_z_linearity():
    rng = random.Random(109)
    for _ in range(40):
        z1 = rand_poly(rng, QQ, 6)
        z2 = rand_poly(rng, QQ, 6)
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        combined = rule_affine(
            [rule_canonical(z1), rule_canonical(z2)], [a, 1 - a]
        )
        assert combined.z == z1.scale(a) + z2.scale(1 - a)
        added = rule_add_zero(rule_canonical(z1), zero_identity(z2))
        assert added.z == z1 + z2


def test_expansion_collapse_identity():
    # (1 - q) [n]_q telescopes to 1 - q^n; this is what makes the
    # canonical expansions of the low-degree rules collapse
    for n in range(1, 30):
        lhs = Poly([1, -1], ZZ).times_qint(n)
        assert lhs == Poly([1], ZZ) - Poly.monomial(n, ZZ)
