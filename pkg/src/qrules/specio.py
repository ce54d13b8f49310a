"""Loading rule and family documents from JSON.

Rule spec:

    {"ring": "ZZ" | "QQ" | "Fp:<p>",
     "kind": "canonical" | "tabulated" | "zero",
     "z": "<poly text>",                       # canonical / zero
     "u": {"m,n": "<poly text>", ...},         # tabulated
     "v": {"m,n": "<poly text>", ...},
     "bound": N}

Family spec (ring comes from the caller):

    {"lambda": {"2": "1", "3": "-1", ...}, "t0": 1,
     "exponents": {"1": 1, "2": -1}}

Unknown keys are rejected in both documents.
"""

from __future__ import annotations

import json

from .errors import SpecFormatError
from .funceq import MultFamilySpec
from .parsing import parse_poly, parse_scalar
from .rings import ring_from_name
from .rules import CanonicalRule, TabulatedRule, ZeroIdentity

_RULE_KEYS = {"ring", "kind", "z", "u", "v", "bound"}
_FAMILY_KEYS = {"lambda", "t0", "exponents"}


def _require_mapping(data, what):
    if not isinstance(data, dict):
        raise SpecFormatError(f"{what} must be a JSON object")
    return data


def _parse_table(raw, bound, ctx, name, max_degree=None):
    table = {}
    if not isinstance(raw, dict):
        raise SpecFormatError(f"table {name!r} must be an object")
    for key, text in raw.items():
        try:
            m_text, n_text = key.split(",")
            m, n = int(m_text), int(n_text)
        except ValueError:
            raise SpecFormatError(
                f"table {name!r} key {key!r} is not of the form \"m,n\""
            ) from None
        if not (1 <= m <= bound and 1 <= n <= bound):
            raise SpecFormatError(
                f"table {name!r} key {key!r} lies outside bound {bound}"
            )
        table[(m, n)] = parse_poly(text, ctx, max_degree=max_degree)
    return table


def load_rule_spec(data, max_degree=None):
    """Parse a rule-spec document (dict or JSON text).

    Returns (ctx, rule_or_zero_identity).
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SpecFormatError(f"invalid JSON: {exc}") from None
    data = _require_mapping(data, "rule spec")
    unknown = set(data) - _RULE_KEYS
    if unknown:
        raise SpecFormatError(f"unknown rule-spec keys: {sorted(unknown)}")
    for key in ("ring", "kind"):
        if key not in data:
            raise SpecFormatError(f"rule spec is missing {key!r}")
    try:
        ctx = ring_from_name(str(data["ring"]))
    except ValueError as exc:
        raise SpecFormatError(str(exc)) from None
    kind = data["kind"]

    if kind in ("canonical", "zero"):
        if "z" not in data:
            raise SpecFormatError(f"{kind} rule spec needs \"z\"")
        extra = set(data) & {"u", "v", "bound"}
        if extra:
            raise SpecFormatError(
                f"{kind} rule spec does not take keys {sorted(extra)}"
            )
        z = parse_poly(str(data["z"]), ctx, max_degree=max_degree)
        made = CanonicalRule(z) if kind == "canonical" else ZeroIdentity(z)
        return ctx, made

    if kind == "tabulated":
        for key in ("u", "v", "bound"):
            if key not in data:
                raise SpecFormatError(f"tabulated rule spec needs {key!r}")
        if "z" in data:
            raise SpecFormatError("tabulated rule spec does not take \"z\"")
        bound = data["bound"]
        if not isinstance(bound, int) or bound < 1:
            raise SpecFormatError(f"bound must be a positive integer, got {bound!r}")
        u = _parse_table(data["u"], bound, ctx, "u", max_degree)
        v = _parse_table(data["v"], bound, ctx, "v", max_degree)
        try:
            rule = TabulatedRule(u, v, bound)
        except Exception as exc:
            raise SpecFormatError(str(exc)) from None
        return ctx, rule

    raise SpecFormatError(f"unknown rule kind {kind!r}")


def load_family_spec(data, ctx):
    """Parse a family-spec document (dict or JSON text) over ctx."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SpecFormatError(f"invalid JSON: {exc}") from None
    data = _require_mapping(data, "family spec")
    unknown = set(data) - _FAMILY_KEYS
    if unknown:
        raise SpecFormatError(f"unknown family-spec keys: {sorted(unknown)}")

    lam = {}
    for key, text in _require_mapping(data.get("lambda", {}), "lambda").items():
        try:
            p = int(key)
        except ValueError:
            raise SpecFormatError(f"lambda key {key!r} is not an integer") from None
        lam[p] = parse_scalar(str(text), ctx)
    t0 = data.get("t0", 0)
    if not isinstance(t0, int):
        raise SpecFormatError(f"t0 must be an integer, got {t0!r}")
    exponents = {}
    for key, t in _require_mapping(data.get("exponents", {}), "exponents").items():
        try:
            r = int(key)
        except ValueError:
            raise SpecFormatError(f"exponent key {key!r} is not an integer") from None
        if not isinstance(t, int):
            raise SpecFormatError(f"exponent t_{r} must be an integer, got {t!r}")
        exponents[r] = t
    try:
        return MultFamilySpec(ctx, lam, t0, exponents)
    except Exception as exc:
        raise SpecFormatError(str(exc)) from None
