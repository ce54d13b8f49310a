"""Dense exact univariate polynomials.

A Poly is an immutable coefficient tuple over a RingCtx, index i holding
the coefficient of var**i.  The default variable is q; the q-derivative
produces polynomials in an outer variable x whose coefficients are
themselves polynomials in q.

Normalization invariant: the trailing stored coefficient is nonzero and
the zero polynomial is the empty tuple.  degree(0) is the sentinel
NEG_INF, which compares below every integer, so degree bookkeeping never
silently uses a fake value.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import (
    BothZero,
    DivisionByZero,
    InexactDivision,
    InvalidIndex,
    MixedContexts,
    NotInvertible,
    RequiresField,
)
from .rings import PolyExtension, PrimeField, RationalField, RingCtx, Scalar

NEG_INF = float("-inf")


class Poly:
    """Dense univariate polynomial with exact coefficients."""

    __slots__ = ("coeffs", "ctx", "var")

    def __init__(self, coeffs, ctx, var="q"):
        if not isinstance(ctx, RingCtx):
            raise TypeError("ctx must be a RingCtx")
        raw = [ctx.coerce(c) for c in coeffs]
        while raw and not raw[-1]:
            raw.pop()
        object.__setattr__(self, "coeffs", tuple(raw))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw_make(cls, raw, ctx, var):
        """Internal constructor: raw coefficients, already in the ring."""
        while raw and not raw[-1]:
            raw.pop()
        self = object.__new__(cls)
        object.__setattr__(self, "coeffs", tuple(raw))
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "var", var)
        return self

    @classmethod
    def constant(cls, c, ctx, var="q"):
        return cls([c], ctx, var)

    @classmethod
    def monomial(cls, k, ctx, c=1, var="q"):
        """c * var**k."""
        if k < 0:
            raise InvalidIndex(f"exponent must be nonnegative, got {k}")
        return cls([0] * k + [c], ctx, var)

    @classmethod
    def variable(cls, ctx, var="q"):
        return cls([0, 1], ctx, var)

    # -- basic structure -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        """Coefficient of var**k (zero beyond the stored length)."""
        if k < 0:
            raise IndexError("negative coefficient index")
        if k < len(self.coeffs):
            return self.coeffs[k]
        return self.ctx.zero

    def coefficient(self, k):
        """Coefficient of var**k as a Scalar."""
        return Scalar(self[k], self.ctx)

    @property
    def leading(self):
        if not self.coeffs:
            raise DivisionByZero("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, Poly):
            return (
                self.ctx == other.ctx
                and self.var == other.var
                and self.coeffs == other.coeffs
            )
        try:
            return self == self._coerce(other)
        except (TypeError, MixedContexts):
            return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.var, self.coeffs))

    def __repr__(self):
        from .parsing import format_poly

        return f"Poly({format_poly(self)!r}, {self.ctx})"

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ctx != self.ctx or other.var != self.var:
                raise MixedContexts(
                    f"mixed polynomial rings: {self.ctx}[{self.var}] and "
                    f"{other.ctx}[{other.var}]"
                )
            return other
        return Poly([self.ctx.coerce(other)], self.ctx, self.var)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.ctx.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly._raw_make(out, self.ctx, self.var)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg
        return Poly._raw_make([neg(c) for c in self.coeffs], self.ctx, self.var)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly._raw_make([], self.ctx, self.var)
        out = self.ctx.conv(self.coeffs, other.coeffs)
        return Poly._raw_make(out, self.ctx, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise InvalidIndex(f"polynomial power must be a nonnegative int, got {n}")
        result = Poly._raw_make([self.ctx.one], self.ctx, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c):
        """Multiply by a ring element."""
        c = self.ctx.coerce(c)
        if not c:
            return Poly._raw_make([], self.ctx, self.var)
        mul = self.ctx.mul
        return Poly._raw_make([mul(a, c) for a in self.coeffs], self.ctx, self.var)

    def shift(self, k):
        """Multiply by var**k."""
        if k < 0:
            raise InvalidIndex(f"shift must be nonnegative, got {k}")
        if not self.coeffs:
            return self
        return Poly._raw_make(
            [self.ctx.zero] * k + list(self.coeffs), self.ctx, self.var
        )

    def times_qint(self, m):
        """Multiply by 1 + var + ... + var**(m-1) in O(degree + m) additions.

        Windowed running sum; used heavily by the rule verifiers, where
        one factor is always a quantum integer.
        """
        if m < 1:
            raise InvalidIndex(f"quantum integer index must be >= 1, got {m}")
        if not self.coeffs:
            return self
        add, sub = self.ctx.add, self.ctx.sub
        coeffs = self.coeffs
        n = len(coeffs)
        s = self.ctx.zero
        out = []
        for k in range(n + m - 1):
            if k < n:
                s = add(s, coeffs[k])
            if k >= m:
                s = sub(s, coeffs[k - m])
            out.append(s)
        return Poly._raw_make(out, self.ctx, self.var)

    def subst_power(self, m):
        """The substitution var -> var**m (a ring homomorphism)."""
        if m < 1:
            raise InvalidIndex(f"substitution power must be >= 1, got {m}")
        if m == 1 or not self.coeffs:
            return self
        zero = self.ctx.zero
        out = [zero] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Poly._raw_make(out, self.ctx, self.var)

    def eval(self, a):
        """Horner evaluation.  Accepts a Scalar or a raw ring element;
        returns the same kind it was given."""
        if isinstance(a, Scalar):
            self.ctx.require_same(a.ctx)
            return Scalar(self.eval(a.value), self.ctx)
        a = self.ctx.coerce(a)
        acc = self.ctx.zero
        add, mul = self.ctx.add, self.ctx.mul
        for c in reversed(self.coeffs):
            acc = add(mul(acc, a), c)
        return acc

    def monic(self):
        """Scale so the leading coefficient is one (zero stays zero)."""
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == self.ctx.one:
            return self
        return self.scale(self.ctx.inv(lead))

    def divmod(self, other):
        """Quotient and remainder.

        Each elimination step divides leading coefficients exactly, so
        over a field this is ordinary Euclidean division; over ZZ or an
        extension it succeeds whenever every step divides and raises
        InexactDivision (carrying the stuck remainder) otherwise.
        """
        other = self._coerce(other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        db = other.degree
        lead_b = other.coeffs[-1]
        rem = list(self.coeffs)
        quot = [ctx.zero] * max(len(rem) - db, 0)
        sub, mul = ctx.sub, ctx.mul
        while len(rem) - 1 >= db and rem:
            da = len(rem) - 1
            try:
                c = ctx.exact_div(rem[-1], lead_b)
            except NotInvertible as exc:
                raise InexactDivision(
                    "leading coefficient does not divide exactly",
                    remainder=Poly._raw_make(rem, ctx, self.var),
                ) from exc
            off = da - db
            quot[off] = c
            for i, bc in enumerate(other.coeffs):
                if bc:
                    rem[off + i] = sub(rem[off + i], mul(c, bc))
            while rem and not rem[-1]:
                rem.pop()
        return (
            Poly._raw_make(quot, ctx, self.var),
            Poly._raw_make(rem, ctx, self.var),
        )

    def __divmod__(self, other):
        return self.divmod(other)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]


def quantum_integer(n, ctx, var="q"):
    """The polynomial 1 + var + var**2 + ... + var**(n-1)."""
    if not isinstance(n, int) or n < 1:
        raise InvalidIndex(f"quantum integer index must be a positive int, got {n}")
    one = ctx.one
    return Poly._raw_make([one] * n, ctx, var)


def subst_power(f, m):
    """f(var**m); see Poly.subst_power."""
    return f.subst_power(m)


def poly_eval(f, a):
    """Exact Horner evaluation of f at a Scalar."""
    return f.eval(a)


def div_exact(f, g):
    """The quotient f/g when g divides f exactly.

    Raises InexactDivision (carrying the nonzero remainder) otherwise,
    DivisionByZero for g = 0.
    """
    quot, rem = f.divmod(g)
    if rem:
        raise InexactDivision(
            f"division leaves remainder of degree {rem.degree}", remainder=rem
        )
    return quot


def _gcd_mod(f, g):
    """Euclid over a prime field, monic result."""
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def _int_lists_gcd(a, b):
    """Primitive polynomial remainder sequence on int coefficient lists.

    Keeps intermediate coefficients small by stripping integer content
    after each pseudo-remainder step.  Returns a primitive gcd list.
    """

    def primitive(c):
        g = 0
        for x in c:
            g = math.gcd(g, x)
            if g == 1:
                break
        if g > 1:
            c = [x // g for x in c]
        if c and c[-1] < 0:
            c = [-x for x in c]
        return c

    def pseudo_rem(u, v):
        u = list(u)
        dv = len(v) - 1
        lv = v[-1]
        while u and len(u) - 1 >= dv:
            lu = u[-1]
            off = len(u) - 1 - dv
            u = [lv * x for x in u]
            for i, vc in enumerate(v):
                u[off + i] -= lu * vc
            while u and not u[-1]:
                u.pop()
        return u

    a, b = primitive(a), primitive(b)
    while b:
        r = primitive(pseudo_rem(a, b))
        a, b = b, r
    return a


def _gcd_rational(f, g):
    """gcd over QQ via an integer primitive remainder sequence."""
    def to_int(p):
        denom = 1
        for c in p.coeffs:
            denom = denom * c.denominator // math.gcd(denom, c.denominator)
        return [int(c * denom) for c in p.coeffs]

    result = _int_lists_gcd(to_int(f), to_int(g))
    lead = result[-1]
    return Poly._raw_make(
        [Fraction(c, lead) for c in result], f.ctx, f.var
    )


def poly_gcd(f, g):
    """Monic greatest common divisor over a field."""
    if not isinstance(f, Poly) or not isinstance(g, Poly):
        raise TypeError("poly_gcd expects polynomials")
    f._coerce(g)
    if not f.ctx.is_field:
        raise RequiresField(f"gcd needs field coefficients, got {f.ctx}")
    if not f and not g:
        raise BothZero("gcd(0, 0) is undefined")
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.degree == 0 or g.degree == 0:
        return Poly._raw_make([f.ctx.one], f.ctx, f.var)
    if isinstance(f.ctx, RationalField):
        return _gcd_rational(f, g)
    if isinstance(f.ctx, PrimeField):
        return _gcd_mod(f, g)
    return _gcd_generic(f, g)


def _gcd_generic(f, g):
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def q_derivative(f):
    """The linear operator sending x**n to (1 + q + ... + q**(n-1)) x**(n-1).

    The input is a polynomial in an outer variable with coefficients
    constant in q; the result lives over the extension ring base[q] and
    agrees with (f(q*x) - f(x)) / (q*x - x).
    """
    if f.var == "q":
        raise ValueError(
            "q_derivative expects a polynomial in an outer variable "
            "(coefficients constant in q)"
        )
    base = f.ctx
    ext = PolyExtension(base, "q")
    if not f.coeffs:
        return Poly._raw_make([], ext, f.var)
    out = []
    for n in range(1, len(f.coeffs)):
        c = f.coeffs[n]
        bracket = quantum_integer(n, base) if c else Poly._raw_make([], base, "q")
        out.append(bracket.scale(c))
    return Poly(out, ext, f.var)


def lift(f, ctx):
    """Re-interpret f's coefficients in another ring (e.g. ZZ -> QQ)."""
    return Poly(list(f.coeffs), ctx, f.var)
