"""Linear addition rules for quantum integers and linear zero identities.

A linear rule pairs coefficient polynomials (u, v) so that
u*[m]_q + v*[n]_q = [m+n]_q for all positive m, n.  Every such rule with
u depending only on n and v only on m is determined by one polynomial z:

    u_n = 1 + z*[n]_q        v_m = q**m - z*[m]_q

and z is recovered from the first coefficients as u_1 - 1 = q - v_1.
Zero identities (combinations that annihilate every pair) are the same
story with s_n = z*[n]_q and t_m = -z*[m]_q.  Canonical rules store only
z; expansions are always derived, never cached, so no inconsistent state
can exist.  Doubly indexed tables are supported for verification only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import (
    AffineSumNotOne,
    IndexOutOfBound,
    InconsistentRule,
    InvalidIndex,
    MixedContexts,
)
from .poly import Poly, quantum_integer
from .rings import Scalar


@dataclass(frozen=True)
class CanonicalRule:
    """A z-parameterized linear quantum addition rule."""

    z: Poly

    @property
    def ctx(self):
        return self.z.ctx

    def u(self, n):
        """Coefficient of [m]_q: 1 + z*[n]_q."""
        if n < 1:
            raise InvalidIndex(f"rule index must be >= 1, got {n}")
        return self.z.times_qint(n) + 1

    def v(self, m):
        """Coefficient of [n]_q: q**m - z*[m]_q."""
        if m < 1:
            raise InvalidIndex(f"rule index must be >= 1, got {m}")
        return Poly.monomial(m, self.ctx, var=self.z.var) - self.z.times_qint(m)

    def expand(self, m, n):
        return self.u(n), self.v(m)


@dataclass(frozen=True, eq=False)
class TabulatedRule:
    """A doubly indexed rule given by explicit coefficient tables.

    u and v map (m, n) pairs to polynomials for 1 <= m, n <= bound.
    Tables carry no finite invariant; they can only be verified.
    """

    u: dict
    v: dict
    bound: int

    def __post_init__(self):
        if self.bound < 1:
            raise InvalidIndex(f"table bound must be >= 1, got {self.bound}")
        for table, name in ((self.u, "u"), (self.v, "v")):
            for m in range(1, self.bound + 1):
                for n in range(1, self.bound + 1):
                    if (m, n) not in table:
                        raise IndexOutOfBound(
                            f"table {name} is missing entry ({m}, {n})"
                        )

    @property
    def ctx(self):
        return self.u[(1, 1)].ctx

    def expand(self, m, n):
        if not (1 <= m <= self.bound and 1 <= n <= self.bound):
            raise IndexOutOfBound(
                f"index ({m}, {n}) exceeds table bound {self.bound}"
            )
        return self.u[(m, n)], self.v[(m, n)]


LinearRule = Union[CanonicalRule, TabulatedRule]


@dataclass(frozen=True)
class ZeroIdentity:
    """A z-parameterized linear zero identity."""

    z: Poly

    @property
    def ctx(self):
        return self.z.ctx

    def s(self, n):
        """Coefficient of [m]_q: z*[n]_q."""
        if n < 1:
            raise InvalidIndex(f"identity index must be >= 1, got {n}")
        return self.z.times_qint(n)

    def t(self, m):
        """Coefficient of [n]_q: -z*[m]_q."""
        if m < 1:
            raise InvalidIndex(f"identity index must be >= 1, got {m}")
        return -self.z.times_qint(m)

    def expand(self, m, n):
        return self.s(n), self.t(m)


@dataclass(frozen=True)
class Counterexample:
    """A grid point where an identity fails, with both sides expanded."""

    m: int
    n: int
    expected: object
    actual: object


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an exhaustive identity check on a finite index grid.

    When verification fails, the counterexample is the lexicographically
    smallest failing (m, n) and re-expands to a genuine inequality.
    """

    verified: bool
    counterexample: Optional[Counterexample]
    m_max: int
    n_max: int

    def __bool__(self):
        return self.verified


def rule_canonical(z):
    """The linear rule with u_n = 1 + z*[n]_q and v_m = q**m - z*[m]_q."""
    if not isinstance(z, Poly):
        raise TypeError("z must be a Poly")
    return CanonicalRule(z)


def rule_expand(rule, m, n):
    """The concrete coefficient pair applied at (m, n)."""
    return rule.expand(m, n)


def rule_classify(u1, v1):
    """Recover z from the first coefficients of a rule.

    z = u1 - 1, after checking the consistency condition
    u1 - 1 = q - v1.  Raises InconsistentRule when no linear quantum
    addition rule has these first coefficients.
    """
    z = u1 - 1
    alt = Poly.variable(v1.ctx, v1.var) - v1
    if z != alt:
        raise InconsistentRule(
            "u1 - 1 != q - v1: these first coefficients belong to no rule"
        )
    return z


def rule_verify(rule, m_max, n_max):
    """Check u*[m]_q + v*[n]_q = [m+n]_q exactly on the full grid."""
    if m_max < 1 or n_max < 1:
        raise InvalidIndex("verification range must be >= 1")
    if isinstance(rule, TabulatedRule) and rule.bound < max(m_max, n_max):
        raise IndexOutOfBound(
            f"table bound {rule.bound} is below the grid bound "
            f"{max(m_max, n_max)}"
        )
    ctx = rule.ctx
    var = rule.expand(1, 1)[0].var
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            u, v = rule.expand(m, n)
            actual = u.times_qint(m) + v.times_qint(n)
            expected = quantum_integer(m + n, ctx, var)
            if actual != expected:
                return VerifyReport(
                    False, Counterexample(m, n, expected, actual), m_max, n_max
                )
    return VerifyReport(True, None, m_max, n_max)


def zero_identity(z):
    """The zero identity with s_n = z*[n]_q and t_m = -z*[m]_q."""
    if not isinstance(z, Poly):
        raise TypeError("z must be a Poly")
    return ZeroIdentity(z)


def zero_verify(zid, m_max, n_max):
    """Check s*[m]_q + t*[n]_q = 0 exactly on the full grid."""
    if m_max < 1 or n_max < 1:
        raise InvalidIndex("verification range must be >= 1")
    zero = Poly([], zid.ctx, zid.z.var)
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            s, t = zid.expand(m, n)
            actual = s.times_qint(m) + t.times_qint(n)
            if actual != zero:
                return VerifyReport(
                    False, Counterexample(m, n, zero, actual), m_max, n_max
                )
    return VerifyReport(True, None, m_max, n_max)


def rule_affine(rules, alphas):
    """Affine combination of canonical rules.

    Weights must sum to one; the result is the canonical rule with
    z = sum(alpha_i * z_i), which matches the coefficient-wise affine
    combination of the expanded u/v sequences.  Tabulated rules must be
    classified first.
    """
    if len(rules) != len(alphas):
        raise ValueError("need one weight per rule")
    if not rules:
        raise ValueError("need at least one rule")
    for rule in rules:
        if not isinstance(rule, CanonicalRule):
            raise TypeError(
                "affine combination needs canonical rules; classify tables first"
            )
    ctx = rules[0].ctx
    raw = []
    for a in alphas:
        if isinstance(a, Scalar):
            ctx.require_same(a.ctx)
            raw.append(a.value)
        else:
            raw.append(ctx.coerce(a))
    total = ctx.zero
    for a in raw:
        total = ctx.add(total, a)
    if total != ctx.one:
        raise AffineSumNotOne(f"weights sum to {total}, not 1")
    z = Poly([], ctx, rules[0].z.var)
    for rule, a in zip(rules, raw):
        if rule.ctx != ctx:
            raise MixedContexts("rules live in different coefficient rings")
        z = z + rule.z.scale(a)
    return CanonicalRule(z)


def rule_add_zero(rule, zid):
    """Add a zero identity to a canonical rule: z' = z + z_zid."""
    if not isinstance(rule, CanonicalRule):
        raise TypeError("rule_add_zero needs a canonical rule")
    return CanonicalRule(rule.z + zid.z)
