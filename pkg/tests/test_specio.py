import json

import pytest

from qrules import (
    GF,
    QQ,
    ZZ,
    CanonicalRule,
    MultFamilySpec,
    Poly,
    SpecFormatError,
    TabulatedRule,
    ZeroIdentity,
    load_family_spec,
    load_rule_spec,
    mult_family,
    rule_verify,
)


def test_canonical_rule_spec():
    ctx, rule = load_rule_spec({"ring": "ZZ", "kind": "canonical", "z": "1-q"})
    assert ctx == ZZ
    assert isinstance(rule, CanonicalRule)
    assert rule.z == Poly([1, -1], ZZ)
    assert rule_verify(rule, 4, 4).verified


def test_zero_spec_and_json_text():
    text = json.dumps({"ring": "Fp:5", "kind": "zero", "z": "q^2"})
    ctx, zid = load_rule_spec(text)
    assert ctx == GF(5)
    assert isinstance(zid, ZeroIdentity)
    assert zid.z == Poly([0, 0, 1], GF(5))


def test_tabulated_spec():
    bound = 2
    u = {f"{m},{n}": "1" for m in (1, 2) for n in (1, 2)}
    v = {f"{m},{n}": f"q^{m}" for m in (1, 2) for n in (1, 2)}
    ctx, rule = load_rule_spec(
        {"ring": "QQ", "kind": "tabulated", "u": u, "v": v, "bound": bound}
    )
    assert isinstance(rule, TabulatedRule)
    assert rule_verify(rule, 2, 2).verified


def test_rule_spec_rejects_unknown_keys():
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "ZZ", "kind": "canonical", "z": "0", "extra": 1})


def test_rule_spec_key_validation():
    with pytest.raises(SpecFormatError):
        load_rule_spec({"kind": "canonical", "z": "0"})
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "ZZ", "kind": "canonical"})
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "ZZ", "kind": "canonical", "z": "0", "bound": 3})
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "ZZ", "kind": "tabulated", "u": {}, "v": {}})
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "nonsense", "kind": "canonical", "z": "0"})
    with pytest.raises(SpecFormatError):
        load_rule_spec({"ring": "ZZ", "kind": "other", "z": "0"})
    with pytest.raises(SpecFormatError):
        load_rule_spec("not json at all {")
    with pytest.raises(SpecFormatError):
        load_rule_spec(["ring"])


def test_tabulated_spec_validation():
    base = {"ring": "ZZ", "kind": "tabulated", "bound": 2}
    full = {f"{m},{n}": "1" for m in (1, 2) for n in (1, 2)}
    with pytest.raises(SpecFormatError):
        load_rule_spec({**base, "u": {"1,1": "1"}, "v": full})  # incomplete
    with pytest.raises(SpecFormatError):
        load_rule_spec({**base, "u": {"1;1": "1"}, "v": full})  # bad key
    with pytest.raises(SpecFormatError):
        load_rule_spec({**base, "u": {**full, "3,1": "1"}, "v": full})  # outside
    with pytest.raises(SpecFormatError):
        load_rule_spec({**base, "bound": 0, "u": {}, "v": {}})


def test_family_spec():
    spec = load_family_spec(
        {"lambda": {"2": "1", "3": "-1"}, "t0": 1, "exponents": {"1": 1, "2": -1}},
        QQ,
    )
    assert isinstance(spec, MultFamilySpec)
    assert spec.t0 == 1
    assert spec.exponents == {1: 1, 2: -1}
    assert spec.lam(6).value == -1
    mult_family(spec, 6)  # evaluates


def test_family_spec_defaults_and_errors():
    spec = load_family_spec({}, QQ)
    assert spec.t0 == 0 and not spec.exponents
    with pytest.raises(SpecFormatError):
        load_family_spec({"weird": 1}, QQ)
    with pytest.raises(SpecFormatError):
        load_family_spec({"lambda": {"x": "1"}}, QQ)
    with pytest.raises(SpecFormatError):
        load_family_spec({"lambda": {"4": "1"}}, QQ)  # not prime
    with pytest.raises(SpecFormatError):
        load_family_spec({"lambda": {"2": "0"}}, QQ)  # zero value
    with pytest.raises(SpecFormatError):
        load_family_spec({"t0": "1"}, QQ)
    with pytest.raises(SpecFormatError):
        load_family_spec({"exponents": {"0": 1}}, QQ)
    with pytest.raises(SpecFormatError):
        load_family_spec({"exponents": {"1": "x"}}, QQ)
