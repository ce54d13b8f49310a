import pytest

from qrules import (
    GF,
    QQ,
    ZZ,
    Infeasible,
    Poly,
    ProofReport,
    RangeTooSmall,
    RequiresField,
    SolutionSpace,
    Unique,
    div_exact,
    prove_bounded,
    quantum_integer,
    reverify,
    rule_canonical,
    rule_verify,
)


def _witness_is_fundamental(witness, count):
    us, vs = witness["u"], witness["v"]
    return all(us[i] == Poly([1], QQ) for i in range(count)) and all(
        vs[i] == Poly.monomial(i + 1, QQ) for i in range(count)
    )


def _all_zero(witness):
    return all(not p for polys in witness.values() for p in polys)


def test_add_mm_forced_unique():
    report = prove_bounded("add_mm", 10, 6, 6)
    assert isinstance(report.outcome, Unique)
    assert _witness_is_fundamental(report.outcome.witness, 6)
    assert reverify(report)


def test_add_mm_witness_stable_in_degree():
    for degree in (7, 9, 12):
        report = prove_bounded("add_mm", degree, 6, 6)
        assert isinstance(report.outcome, Unique)
        assert _witness_is_fundamental(report.outcome.witness, 6)


def test_add_mn_infeasible():
    report = prove_bounded("add_mn", 10, 4, 4)
    assert isinstance(report.outcome, Infeasible)
    assert report.outcome.certificate
    assert reverify(report)


def test_add_mn_infeasible_stable():
    for degree in (4, 8, 12):
        for grid in ((2, 2), (4, 4), (5, 3)):
            report = prove_bounded("add_mn", degree, *grid)
            assert isinstance(report.outcome, Infeasible)
            assert reverify(report)


def test_zero_nm_dimension_formula():
    # with D coefficients per unknown, z ranges over degrees
    # <= (D-1) - (max(M,N)-1), so the dimension is max(0, D - max + 1)
    for degree in (2, 4, 6, 8):
        for m_max, n_max in ((2, 2), (4, 4), (4, 6), (5, 3)):
            report = prove_bounded("zero_nm", degree, m_max, n_max)
            expected = max(0, degree - max(m_max, n_max) + 1)
            if expected == 0:
                assert isinstance(report.outcome, Unique)
                assert _all_zero(report.outcome.witness)
            else:
                assert isinstance(report.outcome, SolutionSpace)
                assert report.outcome.dimension == expected
                assert reverify(report)


def test_zero_nm_monomial_z_basis():
    report = prove_bounded("zero_nm", 6, 4, 4)
    out = report.outcome
    assert isinstance(out, SolutionSpace)
    assert out.dimension == 3
    assert out.z_basis == (
        Poly([1], QQ),
        Poly([0, 1], QQ),
        Poly([0, 0, 1], QQ),
    )
    # every basis vector is exactly the z-parameterized identity
    for witness in out.basis:
        z = witness["s"][0]
        for i, s in enumerate(witness["s"], start=1):
            assert s == z.times_qint(i)
        for j, t in enumerate(witness["t"], start=1):
            assert t == -z.times_qint(j)


def test_add_nm_space_matches_zero_identities():
    report = prove_bounded("add_nm", 8, 4, 4)
    out = report.outcome
    assert isinstance(out, SolutionSpace)
    assert out.dimension == 5  # D - max + 1
    assert out.z_basis is not None
    assert reverify(report)
    # the particular solution is a genuine canonical rule
    u1 = out.particular["u"][0]
    v1 = out.particular["v"][0]
    from qrules import rule_classify

    z = rule_classify(u1, v1)
    assert rule_verify(rule_canonical(z), 4, 4).verified


def test_zero_mm_zero_only():
    for degree in (4, 10):
        report = prove_bounded("zero_mm", degree, 2, 2)
        assert isinstance(report.outcome, Unique)
        assert _all_zero(report.outcome.witness)
    report = prove_bounded("zero_mm", 10, 6, 6)
    assert isinstance(report.outcome, Unique)
    assert _all_zero(report.outcome.witness)


def test_zero_mn_threshold():
    # on a finite grid the common-multiple construction kicks in once the
    # coefficient budget reaches lcm([1]..[4]) = (1+q)(1+q+q^2)(1+q^2),
    # degree 5; below that the zero sequence is the only solution
    lcm = Poly([1, 1], QQ) * Poly([1, 1, 1], QQ) * Poly([1, 0, 1], QQ)
    assert lcm.degree == 5
    for m in range(1, 5):
        div_exact(lcm, quantum_integer(m, QQ))  # sanity: divisible

    for degree in (2, 3, 4, 5):
        report = prove_bounded("zero_mn", degree, 4, 4)
        assert isinstance(report.outcome, Unique)
        assert _all_zero(report.outcome.witness)

    for degree, expected_dim in ((6, 1), (8, 3), (10, 5)):
        report = prove_bounded("zero_mn", degree, 4, 4)
        assert isinstance(report.outcome, SolutionSpace)
        assert report.outcome.dimension == expected_dim
        assert reverify(report)
        # each solution is G/[m], -G/[n] with G a multiple of the lcm
        for witness in report.outcome.basis:
            g = witness["s"][0]  # s_1 * [1]_q = G
            for i, s in enumerate(witness["s"], start=1):
                assert s * quantum_integer(i, QQ) == g
            for j, t in enumerate(witness["t"], start=1):
                assert t * quantum_integer(j, QQ) == -g
            if g:
                div_exact(g, lcm)


def test_zero_mn_zero_only_on_wider_grid():
    # lcm([1]..[6]) has degree 11 > 9, so 10 coefficients cannot fit it
    report = prove_bounded("zero_mn", 10, 6, 6)
    assert isinstance(report.outcome, Unique)
    assert _all_zero(report.outcome.witness)


def test_prime_field_prover():
    report = prove_bounded("add_mm", 10, 6, 6, GF(5))
    assert isinstance(report.outcome, Unique)
    us = report.outcome.witness["u"]
    vs = report.outcome.witness["v"]
    assert all(u == Poly([1], GF(5)) for u in us)
    assert all(vs[i] == Poly.monomial(i + 1, GF(5)) for i in range(6))
    assert reverify(report)


def test_argument_validation():
    with pytest.raises(RangeTooSmall):
        prove_bounded("add_mm", 10, 1, 6)
    with pytest.raises(RangeTooSmall):
        prove_bounded("add_mm", 10, 6, 1)
    with pytest.raises(ValueError):
        prove_bounded("nonsense", 10, 4, 4)
    with pytest.raises(ValueError):
        prove_bounded("add_mm", -1, 4, 4)
    with pytest.raises(RequiresField):
        prove_bounded("add_mm", 10, 4, 4, ZZ)


def test_degenerate_zero_budget():
    # no coefficients at all: additive forms are infeasible, zero forms
    # hold vacuously
    report = prove_bounded("add_mm", 0, 2, 2)
    assert isinstance(report.outcome, Infeasible)
    report = prove_bounded("zero_mm", 0, 2, 2)
    assert isinstance(report.outcome, Unique)
    assert report.outcome.witness["s"] == (Poly([], QQ),) * 2


def test_report_fields_round_trip():
    report = prove_bounded("zero_nm", 6, 4, 4)
    assert isinstance(report, ProofReport)
    assert report.form == "zero_nm"
    assert report.degree_bound == 6
    assert (report.m_max, report.n_max) == (4, 4)
    assert report.ctx == QQ


def test_infeasible_certificate_is_small_and_checkable():
    report = prove_bounded("add_mn", 10, 4, 4)
    cert = report.outcome.certificate
    # the classic argument needs two values of each index
    ms = {m for (m, n, k), _ in cert}
    ns = {n for (m, n, k), _ in cert}
    assert len(ms) >= 2 and len(ns) >= 2
    assert reverify(report)
