"""Command-line front end.

Subcommands expose every operation with deterministic text output and
meaningful exit codes:

    0   verified / success
    1   counterexample, infeasibility, or inconsistency found and printed
    2   usage, parse, or input-file error
    3   internal invariant violation

--json switches every command to a machine-readable report.  The
optional QRULES_MAX_DEGREE environment variable (default 4096) caps
degrees accepted from the command line.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import (
    AffineSumNotOne,
    IndexOutOfBound,
    InconsistentRule,
    InvalidIndex,
    MissingPrimeValue,
    MixedContexts,
    NonPrimeModulus,
    ParseError,
    QRulesError,
    RangeTooSmall,
    RequiresField,
    SpecFormatError,
)
from .funceq import (
    fe_linear_recover,
    mult_family,
    mult_verify,
    quad_closed_form,
)
from .parsing import format_poly, format_ratfunc, format_scalar, parse_poly, parse_scalar
from .poly import quantum_integer
from .prover import FORMS, Infeasible, SolutionSpace, Unique, prove_bounded
from .ratfunc import RatFunc
from .rings import QQ, ring_from_name
from .rules import (
    ZeroIdentity,
    rule_add_zero,
    rule_affine,
    rule_canonical,
    rule_classify,
    rule_verify,
    zero_identity,
    zero_verify,
)
from .specio import load_family_spec, load_rule_spec

_DEFAULT_MAX_DEGREE = 4096

_USAGE_ERRORS = (
    ParseError,
    SpecFormatError,
    NonPrimeModulus,
    InvalidIndex,
    RangeTooSmall,
    IndexOutOfBound,
    AffineSumNotOne,
    RequiresField,
    MissingPrimeValue,
    MixedContexts,
    OSError,
    ValueError,
)


class _Usage(Exception):
    """Raised by handlers for argument combinations argparse cannot see."""


def _degree_cap():
    raw = os.environ.get("QRULES_MAX_DEGREE")
    if not raw:
        return _DEFAULT_MAX_DEGREE
    try:
        cap = int(raw)
    except ValueError:
        raise _Usage(f"QRULES_MAX_DEGREE must be an integer, got {raw!r}") from None
    if cap < 1:
        raise _Usage("QRULES_MAX_DEGREE must be positive")
    return cap


def _ring(args):
    return ring_from_name(args.ring) if args.ring else QQ


def _parse_max(text, cap):
    parts = text.split(",")
    if len(parts) == 1:
        parts = [parts[0], parts[0]]
    if len(parts) != 2:
        raise _Usage(f"--max takes M or M,N, got {text!r}")
    try:
        m_max, n_max = (int(p) for p in parts)
    except ValueError:
        raise _Usage(f"--max takes integers, got {text!r}") from None
    if m_max < 1 or n_max < 1:
        raise _Usage("--max values must be >= 1")
    if m_max > cap or n_max > cap:
        raise _Usage(f"--max values exceed the degree cap {cap}")
    return m_max, n_max


def _check_index(n, cap, what):
    if n < 1:
        raise _Usage(f"{what} must be >= 1")
    if n > cap:
        raise _Usage(f"{what} exceeds the degree cap {cap}")
    return n


def _verify_payload(command, ctx, report, fmt=format_poly):
    payload = {
        "command": command,
        "ring": ctx.name,
        "verified": report.verified,
        "m_max": report.m_max,
        "n_max": report.n_max,
    }
    if report.verified:
        lines = [f"verified: 1 <= m <= {report.m_max}, 1 <= n <= {report.n_max}"]
        return 0, lines, payload
    ce = report.counterexample
    payload["counterexample"] = {
        "m": ce.m,
        "n": ce.n,
        "expected": fmt(ce.expected),
        "actual": fmt(ce.actual),
    }
    lines = [
        f"counterexample at (m, n) = ({ce.m}, {ce.n})",
        f"  expected: {fmt(ce.expected)}",
        f"  actual:   {fmt(ce.actual)}",
    ]
    return 1, lines, payload


# -- handlers ---------------------------------------------------------------

def _cmd_qint(args):
    cap = _degree_cap()
    ctx = _ring(args)
    n = _check_index(args.n, cap, "n")
    text = format_poly(quantum_integer(n, ctx))
    return 0, [text], {"command": "qint", "ring": ctx.name, "n": n, "poly": text}


def _cmd_parse(args):
    cap = _degree_cap()
    ctx = _ring(args)
    text = format_poly(parse_poly(args.expr, ctx, max_degree=cap))
    return 0, [text], {"command": "parse", "ring": ctx.name, "poly": text}


def _cmd_rule_show(args):
    cap = _degree_cap()
    ctx = _ring(args)
    rule = rule_canonical(parse_poly(args.z, ctx, max_degree=cap))
    m = _check_index(args.m, cap, "m")
    n = _check_index(args.n, cap, "n")
    u, v = rule.expand(m, n)
    u_text, v_text = format_poly(u), format_poly(v)
    lines = [f"u_{n} = {u_text}", f"v_{m} = {v_text}"]
    payload = {
        "command": "rule show",
        "ring": ctx.name,
        "z": format_poly(rule.z),
        "m": m,
        "n": n,
        "u": u_text,
        "v": v_text,
    }
    return 0, lines, payload


def _cmd_rule_classify(args):
    cap = _degree_cap()
    ctx = _ring(args)
    u1 = parse_poly(args.u1, ctx, max_degree=cap)
    v1 = parse_poly(args.v1, ctx, max_degree=cap)
    payload = {"command": "rule classify", "ring": ctx.name}
    try:
        z = rule_classify(u1, v1)
    except InconsistentRule as exc:
        payload["consistent"] = False
        payload["error"] = str(exc)
        return 1, [f"inconsistent: {exc}"], payload
    text = format_poly(z)
    payload["consistent"] = True
    payload["z"] = text
    return 0, [f"z = {text}"], payload


def _load_rule(args, ctx, cap, want_zero):
    """Resolve --z / --spec into a rule object plus its ring."""
    if args.spec:
        if args.ring:
            raise _Usage("--ring conflicts with --spec; the file names its ring")
        with open(args.spec, encoding="utf-8") as handle:
            ctx, rule = load_rule_spec(handle.read(), max_degree=cap)
        if want_zero and not isinstance(rule, ZeroIdentity):
            raise _Usage("spec file holds an addition rule; use `rule verify`")
        if not want_zero and isinstance(rule, ZeroIdentity):
            raise _Usage("spec file holds a zero identity; use `zero verify`")
        return ctx, rule
    if args.z is None:
        raise _Usage("need --z or --spec")
    z = parse_poly(args.z, ctx, max_degree=cap)
    return ctx, zero_identity(z) if want_zero else rule_canonical(z)


def _cmd_rule_verify(args):
    cap = _degree_cap()
    ctx = _ring(args)
    ctx, rule = _load_rule(args, ctx, cap, want_zero=False)
    m_max, n_max = _parse_max(args.max, cap)
    report = rule_verify(rule, m_max, n_max)
    return _verify_payload("rule verify", ctx, report)


def _cmd_rule_combine(args):
    cap = _degree_cap()
    ctx = _ring(args)
    if not args.z or not args.alpha or len(args.z) != len(args.alpha):
        raise _Usage("need matching --z and --alpha, at least one pair")
    rules = [rule_canonical(parse_poly(z, ctx, max_degree=cap)) for z in args.z]
    alphas = [parse_scalar(a, ctx) for a in args.alpha]
    combined = rule_affine(rules, alphas)
    text = format_poly(combined.z)
    payload = {"command": "rule combine", "ring": ctx.name, "z": text}
    return 0, [f"z = {text}"], payload


def _cmd_rule_add_zero(args):
    cap = _degree_cap()
    ctx = _ring(args)
    rule = rule_canonical(parse_poly(args.z, ctx, max_degree=cap))
    zid = zero_identity(parse_poly(args.zid, ctx, max_degree=cap))
    combined = rule_add_zero(rule, zid)
    text = format_poly(combined.z)
    payload = {"command": "rule add-zero", "ring": ctx.name, "z": text}
    return 0, [f"z = {text}"], payload


def _cmd_zero_verify(args):
    cap = _degree_cap()
    ctx = _ring(args)
    ctx, zid = _load_rule(args, ctx, cap, want_zero=True)
    m_max, n_max = _parse_max(args.max, cap)
    report = zero_verify(zid, m_max, n_max)
    return _verify_payload("zero verify", ctx, report)


def _cmd_solve_linear(args):
    cap = _degree_cap()
    ctx = _ring(args)
    rule = rule_canonical(parse_poly(args.z, ctx, max_degree=cap))
    f1 = parse_poly(args.f1, ctx, max_degree=cap)
    n = _check_index(args.n, cap, "n")
    seq = fe_linear_recover(rule, f1, n)
    lines = [f"f_{k} = {format_poly(f)}" for k, f in enumerate(seq, start=1)]
    payload = {
        "command": "solve linear",
        "ring": ctx.name,
        "sequence": [format_poly(f) for f in seq],
    }
    return 0, lines, payload


def _cmd_solve_quadratic(args):
    cap = _degree_cap()
    ctx = _ring(args)
    f1 = parse_poly(args.f1, ctx, max_degree=cap)
    n = _check_index(args.n, cap, "n")
    seq = [quad_closed_form(args.variant, f1, k) for k in range(1, n + 1)]
    lines = [f"f_{k} = {format_poly(f)}" for k, f in enumerate(seq, start=1)]
    payload = {
        "command": "solve quadratic",
        "ring": ctx.name,
        "variant": args.variant,
        "sequence": [format_poly(f) for f in seq],
    }
    return 0, lines, payload


def _format_member(f):
    return format_ratfunc(f) if isinstance(f, RatFunc) else format_poly(f)


def _cmd_mult_verify(args):
    cap = _degree_cap()
    ctx = _ring(args)
    m_max, n_max = _parse_max(args.max, cap)
    if args.family:
        if not ctx.is_field:
            raise RequiresField("multiplicative families need a field ring")
        with open(args.family, encoding="utf-8") as handle:
            spec = load_family_spec(handle.read(), ctx)
        generator = lambda k: mult_family(spec, k)  # noqa: E731
    else:
        generator = lambda k: quantum_integer(k, ctx)  # noqa: E731
    report = mult_verify(generator, m_max, n_max)
    return _verify_payload("mult verify", ctx, report, fmt=_format_member)


def _cmd_mult_family(args):
    cap = _degree_cap()
    ctx = _ring(args)
    if not ctx.is_field:
        raise RequiresField("multiplicative families need a field ring")
    with open(args.family, encoding="utf-8") as handle:
        spec = load_family_spec(handle.read(), ctx)
    n = _check_index(args.n, cap, "n")
    text = format_ratfunc(mult_family(spec, n))
    payload = {"command": "mult family", "ring": ctx.name, "n": n, "member": text}
    return 0, [f"f_{n} = {text}"], payload


def _cmd_prove(args):
    cap = _degree_cap()
    ctx = _ring(args)
    m_max, n_max = _parse_max(args.max, cap)
    if args.degree < 0 or args.degree > cap:
        raise _Usage(f"--degree must be between 0 and the cap {cap}")
    report = prove_bounded(args.form, args.degree, m_max, n_max, ctx)
    payload = {
        "command": "prove",
        "ring": ctx.name,
        "form": report.form,
        "degree": report.degree_bound,
        "m_max": report.m_max,
        "n_max": report.n_max,
    }
    outcome = report.outcome
    if isinstance(outcome, Unique):
        lines = ["UNIQUE"]
        witness_payload = {}
        for label, polys in outcome.witness.items():
            witness_payload[label] = [format_poly(p) for p in polys]
            for i, p in enumerate(polys, start=1):
                lines.append(f"{label}_{i} = {format_poly(p)}")
        payload["outcome"] = "unique"
        payload["witness"] = witness_payload
        return 0, lines, payload
    if isinstance(outcome, SolutionSpace):
        lines = ["SOLUTION SPACE", f"dimension = {outcome.dimension}"]
        payload["outcome"] = "solution_space"
        payload["dimension"] = outcome.dimension
        if outcome.z_basis is not None:
            zs = [format_poly(z) for z in outcome.z_basis]
            payload["z_basis"] = zs
            lines.append("z basis: " + ", ".join(zs))
        else:
            basis_payload = []
            for idx, witness in enumerate(outcome.basis, start=1):
                entry = {}
                lines.append(f"basis vector {idx}:")
                for label, polys in witness.items():
                    entry[label] = [format_poly(p) for p in polys]
                    for i, p in enumerate(polys, start=1):
                        lines.append(f"  {label}_{i} = {format_poly(p)}")
                basis_payload.append(entry)
            payload["basis"] = basis_payload
        return 0, lines, payload
    assert isinstance(outcome, Infeasible)
    lines = [
        "INFEASIBLE",
        f"certificate: {len(outcome.certificate)} equations combine to 0 = 1",
    ]
    cert_payload = []
    for (m, n, k), coeff in outcome.certificate:
        text = format_scalar(coeff)
        cert_payload.append({"m": m, "n": n, "power": k, "coefficient": text})
        lines.append(f"  {text} * eq(m={m}, n={n}, q^{k})")
    payload["outcome"] = "infeasible"
    payload["certificate"] = cert_payload
    return 1, lines, payload


# -- parser -----------------------------------------------------------------

def _add_common(parser):
    parser.add_argument(
        "--ring",
        default=None,
        help="coefficient ring: ZZ, QQ (default), or Fp:<p>",
    )
    parser.add_argument(
        "--json", action="store_true", help="machine-readable report"
    )


def _build_parser():
    root = argparse.ArgumentParser(
        prog="qrules",
        description="Exact calculator for quantum-integer addition rules.",
    )
    sub = root.add_subparsers(dest="command", required=True)

    p = sub.add_parser("qint", help="print a quantum integer")
    p.add_argument("n", type=int)
    _add_common(p)
    p.set_defaults(handler=_cmd_qint)

    p = sub.add_parser("parse", help="parse and canonically reprint a polynomial")
    p.add_argument("expr")
    _add_common(p)
    p.set_defaults(handler=_cmd_parse)

    rule = sub.add_parser("rule", help="linear addition rules")
    rule_sub = rule.add_subparsers(dest="subcommand", required=True)

    p = rule_sub.add_parser("show", help="expand a canonical rule at (m, n)")
    p.add_argument("--z", required=True, help="the rule's z polynomial")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, default=1)
    _add_common(p)
    p.set_defaults(handler=_cmd_rule_show)

    p = rule_sub.add_parser("classify", help="recover z from u_1 and v_1")
    p.add_argument("--u1", required=True)
    p.add_argument("--v1", required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_rule_classify)

    p = rule_sub.add_parser("verify", help="check the rule identity on a grid")
    p.add_argument("--z", default=None, help="canonical rule z polynomial")
    p.add_argument("--spec", default=None, help="rule-spec JSON file")
    p.add_argument("--max", default="32", help="grid bound M or M,N (default 32)")
    _add_common(p)
    p.set_defaults(handler=_cmd_rule_verify)

    p = rule_sub.add_parser("combine", help="affine combination of canonical rules")
    p.add_argument("--z", action="append", help="repeatable rule z polynomial")
    p.add_argument("--alpha", action="append", help="repeatable weight")
    _add_common(p)
    p.set_defaults(handler=_cmd_rule_combine)

    p = rule_sub.add_parser("add-zero", help="add a zero identity to a rule")
    p.add_argument("--z", required=True, help="canonical rule z polynomial")
    p.add_argument("--zid", required=True, help="zero identity z polynomial")
    _add_common(p)
    p.set_defaults(handler=_cmd_rule_add_zero)

    zero = sub.add_parser("zero", help="linear zero identities")
    zero_sub = zero.add_subparsers(dest="subcommand", required=True)

    p = zero_sub.add_parser("verify", help="check the zero identity on a grid")
    p.add_argument("--z", default=None, help="zero identity z polynomial")
    p.add_argument("--spec", default=None, help="rule-spec JSON file (kind zero)")
    p.add_argument("--max", default="32", help="grid bound M or M,N (default 32)")
    _add_common(p)
    p.set_defaults(handler=_cmd_zero_verify)

    solve = sub.add_parser("solve", help="functional-equation solutions")
    solve_sub = solve.add_subparsers(dest="subcommand", required=True)

    p = solve_sub.add_parser("linear", help="solve the additive equation")
    p.add_argument("--z", required=True, help="canonical rule z polynomial")
    p.add_argument("--f1", required=True, help="first sequence member")
    p.add_argument("--n", type=int, required=True, help="last index to produce")
    _add_common(p)
    p.set_defaults(handler=_cmd_solve_linear)

    p = solve_sub.add_parser("quadratic", help="solve a quadratic rule's equation")
    p.add_argument("--variant", type=int, choices=(1, 2), required=True)
    p.add_argument("--f1", required=True, help="first sequence member")
    p.add_argument("--n", type=int, required=True, help="last index to produce")
    _add_common(p)
    p.set_defaults(handler=_cmd_solve_quadratic)

    mult = sub.add_parser("mult", help="the multiplicative rule")
    mult_sub = mult.add_subparsers(dest="subcommand", required=True)

    p = mult_sub.add_parser("verify", help="check f_m * f_n = f_{mn} on a grid")
    p.add_argument(
        "--family",
        default=None,
        help="family-spec JSON file (default: quantum integers)",
    )
    p.add_argument("--max", default="32", help="grid bound M or M,N (default 32)")
    _add_common(p)
    p.set_defaults(handler=_cmd_mult_verify)

    p = mult_sub.add_parser("family", help="evaluate a family member")
    p.add_argument("--family", required=True, help="family-spec JSON file")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=_cmd_mult_family)

    p = sub.add_parser("prove", help="bounded-degree existence/uniqueness prover")
    p.add_argument("--form", required=True, choices=sorted(FORMS))
    p.add_argument(
        "--degree",
        type=int,
        required=True,
        help="coefficients allowed per unknown polynomial",
    )
    p.add_argument("--max", default="4", help="index grid bound M or M,N (default 4)")
    _add_common(p)
    p.set_defaults(handler=_cmd_prove)

    return root


def run_command(argv):
    """Run one CLI invocation; returns the exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        code, lines, payload = args.handler(args)
    except (_Usage,) + _USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except QRulesError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # noqa: BLE001 - exit-code contract over crash
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    return code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
