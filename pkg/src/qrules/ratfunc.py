"""Reduced rational functions over a field.

Needed because the multiplicative solution family allows negative
exponents on quantum integers.  Canonical form: numerator and
denominator coprime, denominator monic, zero stored as 0/1.  Equality is
then plain structural comparison.
"""

from __future__ import annotations

from .errors import DivisionByZero, InvalidIndex, MixedContexts, RequiresField
from .poly import Poly, div_exact, poly_gcd


class RatFunc:
    """A fraction of two polynomials in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if not isinstance(num, Poly):
            raise TypeError("numerator must be a Poly")
        if den is None:
            den = Poly([1], num.ctx, num.var)
        if not isinstance(den, Poly):
            raise TypeError("denominator must be a Poly")
        num._coerce(den)
        if not num.ctx.is_field:
            raise RequiresField(f"rational functions need a field, got {num.ctx}")
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            den = Poly([1], num.ctx, num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = div_exact(num, g)
                den = div_exact(den, g)
            lead = den.leading
            if lead != den.ctx.one:
                inv = den.ctx.inv(lead)
                num = num.scale(inv)
                den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def _reduced(cls, num, den):
        """Internal constructor when num/den are already coprime."""
        lead = den.leading
        if lead != den.ctx.one:
            inv = den.ctx.inv(lead)
            num = num.scale(inv)
            den = den.scale(inv)
        if not num:
            den = Poly([1], num.ctx, num.var)
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @property
    def ctx(self):
        return self.num.ctx

    @property
    def var(self):
        return self.num.var

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int)):
            try:
                return self == self._coerce(other)
            except (TypeError, MixedContexts):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .parsing import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r}, {self.ctx})"

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.ctx != self.ctx or other.var != self.var:
                raise MixedContexts(
                    f"mixed rational-function fields: {self.ctx} and {other.ctx}"
                )
            return other
        if isinstance(other, Poly):
            return RatFunc(self.num._coerce(other))
        return RatFunc(Poly([self.ctx.coerce(other)], self.ctx, self.var))

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        num = self.num * other.den + other.num * self.den
        return RatFunc(num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._reduced(-self.num, self.den)

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
        if not self.num or not other.num:
            zero = Poly([], self.ctx, self.var)
            return RatFunc._reduced(zero, Poly([1], self.ctx, self.var))
        # reduce across the fractions first; both inputs are canonical,
        # so the result is already coprime
        a, b, c, d = self.num, self.den, other.num, other.den
        g1 = poly_gcd(a, d)
        if g1.degree > 0:
            a, d = div_exact(a, g1), div_exact(d, g1)
        g2 = poly_gcd(c, b)
        if g2.degree > 0:
            c, b = div_exact(c, g2), div_exact(b, g2)
        return RatFunc._reduced(a * c, b * d)

    __rmul__ = __mul__

    def inv(self):
        if not self.num:
            raise DivisionByZero("zero has no inverse")
        return RatFunc._reduced(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise InvalidIndex(f"rational-function power must be an int, got {n}")
        if n < 0:
            return self.inv() ** (-n)
        return RatFunc._reduced(self.num**n, self.den**n)

    def subst_power(self, m):
        """The substitution var -> var**m.

        Coprimality and the monic denominator survive the substitution,
        so no re-reduction is needed.
        """
        if m < 1:
            raise InvalidIndex(f"substitution power must be >= 1, got {m}")
        return RatFunc._reduced(self.num.subst_power(m), self.den.subst_power(m))


def rf_make(num, den=None):
    """Canonical rational function num/den (den defaults to 1)."""
    return RatFunc(num, den)


def rf_arith(op, a, b=None):
    """Dispatch exact rational-function arithmetic: add, mul, or inv."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        if b is not None:
            raise TypeError("inv is unary")
        return a.inv()
    raise ValueError(f"unknown rational-function operation {op!r}")


def rf_subst_power(a, m):
    """a(var**m); see RatFunc.subst_power."""
    return a.subst_power(m)
