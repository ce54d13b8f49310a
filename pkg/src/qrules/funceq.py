"""Functional equations attached to the addition and multiplication rules.

Covers three families:

* the additive equation f_{m+n} = u_n f_m + v_m f_n for a linear rule,
  whose solutions are exactly f_n = h * [n]_q with h = f_1 (solved in
  closed form and by the index recursion, plus a grid verifier);
* the multiplicative equation f_m(q) f_n(q**m) = f_{mn}(q), with the
  completely multiplicative solution family built from quantum integers
  raised to integer exponents (negative exponents live in RatFunc);
* the two quadratic rules and their closed-form solutions, computed by
  expansion followed by checked exact division.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import (
    IndexOutOfBound,
    InvalidIndex,
    MissingPrimeValue,
    RequiresField,
)
from .poly import Poly, div_exact, quantum_integer
from .ratfunc import RatFunc
from .rings import RingCtx, Scalar, is_prime
from .rules import CanonicalRule, Counterexample, VerifyReport


# -- additive functional equation ----------------------------------------

def fe_linear_solution(h, n):
    """The closed-form solution f_n = h * [n]_q."""
    if n < 1:
        raise InvalidIndex(f"sequence index must be >= 1, got {n}")
    return h.times_qint(n)


def fe_linear_recover(rule, f1, n_max):
    """Build f_1..f_{n_max} by the recursion f_{k+1} = u_1 f_k + v_k f_1.

    For any canonical rule the output equals f1 * [k]_q termwise.
    """
    if n_max < 1:
        raise InvalidIndex(f"sequence length must be >= 1, got {n_max}")
    if not isinstance(rule, CanonicalRule):
        raise TypeError("fe_linear_recover needs a canonical rule")
    seq = [f1]
    u1 = rule.u(1)
    for k in range(1, n_max):
        seq.append(u1 * seq[-1] + rule.v(k) * f1)
    return seq


def fe_linear_verify(rule, fseq, m_max, n_max):
    """Check f_{m+n} = u_n f_m + v_m f_n exactly on the grid.

    fseq[i] is f_{i+1} and must cover indices up to m_max + n_max.
    """
    if m_max < 1 or n_max < 1:
        raise InvalidIndex("verification range must be >= 1")
    if len(fseq) < m_max + n_max:
        raise IndexOutOfBound(
            f"need f_1..f_{m_max + n_max}, got only {len(fseq)} terms"
        )
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            u, v = rule.expand(m, n)
            actual = u * fseq[m - 1] + v * fseq[n - 1]
            expected = fseq[m + n - 1]
            if actual != expected:
                return VerifyReport(
                    False, Counterexample(m, n, expected, actual), m_max, n_max
                )
    return VerifyReport(True, None, m_max, n_max)


# -- multiplicative functional equation -----------------------------------

def mult_rule_apply(fm, fn, m):
    """The product rule: fm(q) * fn(q**m).  Works on Poly and RatFunc."""
    if m < 1:
        raise InvalidIndex(f"rule index must be >= 1, got {m}")
    return fm * fn.subst_power(m)


def mult_verify(generator, m_max, n_max):
    """Check f_m(q) f_n(q**m) = f_{mn}(q) exactly on the grid.

    generator maps a positive index to the sequence member (Poly or
    RatFunc) and must be defined up to m_max * n_max.
    """
    if m_max < 1 or n_max < 1:
        raise InvalidIndex("verification range must be >= 1")
    cache = {}

    def f(k):
        if k not in cache:
            cache[k] = generator(k)
        return cache[k]

    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            actual = mult_rule_apply(f(m), f(n), m)
            expected = f(m * n)
            if actual != expected:
                return VerifyReport(
                    False, Counterexample(m, n, expected, actual), m_max, n_max
                )
    return VerifyReport(True, None, m_max, n_max)


def _factorize(n):
    """Prime factorization by trial division: list of (p, exponent)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class MultFamilySpec:
    """Data of a multiplicative solution family.

    f_n = lambda(n) * q**(t0*(n-1)) * prod over r of [n]_{q**r} ** t_r,
    with lambda completely multiplicative and nonzero on every prime it
    is defined at, t0 an integer, and integer exponents t_r (r >= 1).
    """

    ctx: RingCtx
    lambda_on_primes: dict = field(default_factory=dict)
    t0: int = 0
    exponents: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.ctx.is_field:
            raise RequiresField(
                f"multiplicative families need a field, got {self.ctx}"
            )
        if not isinstance(self.t0, int):
            raise TypeError(f"t0 must be an integer, got {self.t0!r}")
        clean = {}
        for p, value in self.lambda_on_primes.items():
            if not is_prime(p):
                raise ValueError(f"lambda is keyed by primes, got {p}")
            raw = self.ctx.coerce(value)
            if not raw:
                raise ValueError(f"lambda({p}) must be nonzero")
            clean[p] = raw
        object.__setattr__(self, "lambda_on_primes", clean)
        for r, t in self.exponents.items():
            if not isinstance(r, int) or r < 1:
                raise InvalidIndex(f"substitution power must be >= 1, got {r}")
            if not isinstance(t, int):
                raise TypeError(f"exponent t_{r} must be an integer, got {t!r}")

    def lam(self, n):
        """lambda extended completely multiplicatively; lambda(1) = 1."""
        if n < 1:
            raise InvalidIndex(f"index must be >= 1, got {n}")
        value = self.ctx.one
        for p, e in _factorize(n):
            if p not in self.lambda_on_primes:
                raise MissingPrimeValue(f"lambda has no value at prime {p}")
            value = self.ctx.mul(value, self.lambda_on_primes[p] ** e)
        return Scalar(value, self.ctx)


def mult_family(spec, n):
    """Evaluate a family member exactly as a reduced rational function."""
    if n < 1:
        raise InvalidIndex(f"index must be >= 1, got {n}")
    ctx = spec.ctx
    one = Poly([1], ctx)
    result = RatFunc(one.scale(spec.lam(n).value))
    e0 = spec.t0 * (n - 1)
    if e0 >= 0:
        result = result * RatFunc(Poly.monomial(e0, ctx))
    else:
        result = result * RatFunc(one, Poly.monomial(-e0, ctx))
    bracket = quantum_integer(n, ctx)
    for r in sorted(spec.exponents):
        t = spec.exponents[r]
        if t:
            result = result * RatFunc(bracket.subst_power(r)) ** t
    return result


# -- quadratic rules -------------------------------------------------------

def _one_minus_q(ctx, var):
    return Poly([1, -1], ctx, var)


def quad_rule_apply(variant, fm, fn, m, n):
    """Apply one of the two quadratic addition rules.

    variant 1:  fm + fn - (1-q) fm fn
    variant 2:  q**n fm + q**m fn + (1-q) fm fn
    """
    if m < 1 or n < 1:
        raise InvalidIndex("rule indices must be >= 1")
    cross = _one_minus_q(fm.ctx, fm.var) * fm * fn
    if variant == 1:
        return fm + fn - cross
    if variant == 2:
        return fm.shift(n) + fn.shift(m) + cross
    raise ValueError(f"unknown quadratic variant {variant!r}")


def quad_closed_form(variant, f1, n):
    """The closed-form solution of a quadratic rule's functional equation.

    variant 1:  (1 - (1 + (q-1) f1)**n) / (1 - q)
    variant 2:  ((q + (1-q) f1)**n - q**n) / (1 - q)

    The numerators vanish at q = 1, so the division is exact; a nonzero
    remainder would indicate a bug and raises InexactDivision.
    """
    if n < 1:
        raise InvalidIndex(f"sequence index must be >= 1, got {n}")
    ctx, var = f1.ctx, f1.var
    one_minus_q = _one_minus_q(ctx, var)
    if variant == 1:
        base = Poly([1], ctx, var) - one_minus_q * f1
        numerator = Poly([1], ctx, var) - base**n
    elif variant == 2:
        base = Poly.variable(ctx, var) + one_minus_q * f1
        numerator = base**n - Poly.monomial(n, ctx, var=var)
    else:
        raise ValueError(f"unknown quadratic variant {variant!r}")
    return div_exact(numerator, one_minus_q)
