"""Coefficient rings.

Arithmetic throughout the package is exact and ring-generic: every value
carries a RingCtx describing the ring it lives in.  Supported rings are
the integers, the rationals, prime fields, and polynomial extensions of
those (one extra variable, nested at most twice).  All are integral
domains; that restriction is load-bearing for the degree and
cancellation arguments behind the uniqueness results the prover checks.

Ring elements are plain Python objects ("raw" values): int for the
integers, fractions.Fraction for the rationals, int in [0, p) for a
prime field, and Poly for an extension.  The context object supplies the
arithmetic on raw values; Scalar is the thin value+context wrapper used
at API boundaries.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from . import _kernels
from .errors import (
    MixedContexts,
    NonPrimeModulus,
    NotInvertible,
    RequiresField,
    UnsupportedNesting,
)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin below 3.3e24, strong heuristic above."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RingCtx:
    """Descriptor of the active coefficient ring.

    Instances are immutable, compare by ring identity (kind and
    parameters), and provide exact arithmetic on raw values.
    """

    kind = "abstract"
    is_field = False
    depth = 0

    # -- raw arithmetic ------------------------------------------------
    def coerce(self, x):
        """Convert x (int, Fraction, Scalar, raw) to a raw value."""
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        """Multiplicative inverse; NotInvertible for zero and non-units."""
        raise NotImplementedError

    def exact_div(self, a, b):
        """a / b when b divides a exactly; NotInvertible otherwise."""
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    # -- kernel dispatch -----------------------------------------------
    def conv(self, a, b):
        """Convolution of two nonempty raw-coefficient sequences."""
        return _kernels.conv_obj(list(a), list(b), self.zero)

    def axpy(self, y, x, c):
        """In-place y += c*x on raw-coefficient lists."""
        _kernels.axpy_obj(y, x, c)

    # -- plumbing --------------------------------------------------------
    def require_same(self, other):
        if self != other:
            raise MixedContexts(f"mixed coefficient rings: {self} and {other}")

    def __repr__(self):
        return self.name

    @property
    def name(self):
        raise NotImplementedError


class IntegerRing(RingCtx):
    """Arbitrary-precision integers."""

    kind = "integers"
    zero = 0
    one = 1

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise TypeError(f"{x} is not an integer")
            return int(x)
        if isinstance(x, Scalar):
            self.require_same(x.ctx)
            return x.value
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def inv(self, a):
        if a in (1, -1):
            return a
        raise NotInvertible(f"{a} is not a unit in {self}")

    def exact_div(self, a, b):
        if b == 0:
            raise NotInvertible("division by zero")
        q, r = divmod(a, b)
        if r:
            raise NotInvertible(f"{b} does not divide {a} in {self}")
        return q

    @property
    def name(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField(RingCtx):
    """Rational numbers, stored as reduced fractions."""

    kind = "rationals"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, Scalar):
            self.require_same(x.ctx)
            return x.value
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def inv(self, a):
        if not a:
            raise NotInvertible("zero has no inverse")
        return 1 / a

    def exact_div(self, a, b):
        if not b:
            raise NotInvertible("division by zero")
        return a / b

    @property
    def name(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField(RingCtx):
    """Integers mod a prime p, stored as residues in [0, p)."""

    kind = "prime_field"
    is_field = True
    zero = 0
    one = 1

    def __init__(self, p):
        if not isinstance(p, int) or p < 2 or not is_prime(p):
            raise NonPrimeModulus(f"modulus {p} is not prime")
        self.p = p

    def coerce(self, x):
        if isinstance(x, bool):
            raise TypeError("bool is not a ring element")
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.coerce(x.numerator) * self.inv(self.coerce(x.denominator)) % self.p
        if isinstance(x, Scalar):
            self.require_same(x.ctx)
            return x.value
        raise TypeError(f"cannot coerce {x!r} into {self}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a % self.p:
            raise NotInvertible("zero has no inverse")
        return pow(a, -1, self.p)

    def exact_div(self, a, b):
        return self.mul(a, self.inv(b))

    def conv(self, a, b):
        return _kernels.conv_mod(list(a), list(b), self.p)

    def axpy(self, y, x, c):
        _kernels.axpy_mod(y, x, c, self.p)

    @property
    def name(self):
        return f"Fp:{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


class PolyExtension(RingCtx):
    """Polynomials in one variable over a base ring, used as coefficients.

    Raw values are Poly instances over the base in the extension's
    variable.  Nesting depth is capped at two, which is all the
    q-derivative needs (coefficients in base[q]).
    """

    kind = "poly_extension"

    def __init__(self, base, var):
        if not isinstance(base, RingCtx):
            raise TypeError("base must be a RingCtx")
        if base.depth >= 2:
            raise UnsupportedNesting("polynomial extensions nest at most twice")
        if not var or not var.isidentifier():
            raise ValueError(f"bad variable name {var!r}")
        self.base = base
        self.var = var
        self.depth = base.depth + 1

    def coerce(self, x):
        from .poly import Poly

        if isinstance(x, Poly):
            if x.ctx == self.base and x.var == self.var:
                return x
            raise TypeError(f"cannot coerce {x!r} into {self}")
        if isinstance(x, Scalar):
            self.require_same(x.ctx)
            return x.value
        # base elements (and ints etc.) embed as constants
        c = self.base.coerce(x)
        return Poly([c], self.base, self.var)

    def inv(self, a):
        a = self.coerce(a)
        if a.degree == 0:
            return self.coerce(self.base.inv(a.coeffs[0]))
        raise NotInvertible(f"{a!r} is not a unit in {self}")

    def exact_div(self, a, b):
        from .errors import DivisionByZero, InexactDivision
        from .poly import div_exact

        try:
            return div_exact(self.coerce(a), self.coerce(b))
        except (InexactDivision, DivisionByZero, NotInvertible) as exc:
            raise NotInvertible(f"{b!r} does not divide {a!r} in {self}") from exc

    @functools.cached_property
    def zero(self):
        from .poly import Poly

        return Poly([], self.base, self.var)

    @functools.cached_property
    def one(self):
        from .poly import Poly

        return Poly([1], self.base, self.var)

    @property
    def name(self):
        return f"{self.base.name}[{self.var}]"

    def __eq__(self, other):
        return (
            isinstance(other, PolyExtension)
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("ext", self.base, self.var))


ZZ = IntegerRing()
QQ = RationalField()


@functools.lru_cache(maxsize=None)
def GF(p):
    """The prime field with p elements (cached per modulus)."""
    return PrimeField(p)


_KIND_ALIASES = {
    "integers": "integers",
    "zz": "integers",
    "z": "integers",
    "rationals": "rationals",
    "qq": "rationals",
    "q": "rationals",
    "prime_field": "prime_field",
    "primefield": "prime_field",
    "fp": "prime_field",
    "gf": "prime_field",
}


def ring_make(kind, modulus=None):
    """Build a ring context from a kind name.

    kind is one of "integers"/"ZZ", "rationals"/"QQ", or
    "prime_field"/"Fp" (modulus required, must be prime).
    """
    key = _KIND_ALIASES.get(str(kind).lower())
    if key == "integers":
        return ZZ
    if key == "rationals":
        return QQ
    if key == "prime_field":
        if modulus is None:
            raise ValueError("prime field needs a modulus")
        return GF(modulus)
    raise ValueError(f"unknown ring kind {kind!r}")


def ring_from_name(name):
    """Parse a ring name as used by the CLI: ZZ, QQ, or Fp:<p>."""
    text = name.strip()
    if ":" in text:
        kind, _, mod = text.partition(":")
        try:
            modulus = int(mod)
        except ValueError:
            raise ValueError(f"bad modulus in ring name {name!r}") from None
        return ring_make(kind, modulus)
    return ring_make(text)


@functools.total_ordering
class Scalar:
    """A ring element paired with its context.

    Immutable; arithmetic is exact and raises MixedContexts when the
    operands disagree on the ring.
    """

    __slots__ = ("value", "ctx")

    def __init__(self, value, ctx):
        object.__setattr__(self, "ctx", ctx)
        object.__setattr__(self, "value", ctx.coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    def _raw(self, other):
        if isinstance(other, Scalar):
            self.ctx.require_same(other.ctx)
            return other.value
        return self.ctx.coerce(other)

    def __add__(self, other):
        return Scalar(self.ctx.add(self.value, self._raw(other)), self.ctx)

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ctx.sub(self.value, self._raw(other)), self.ctx)

    def __rsub__(self, other):
        return Scalar(self.ctx.sub(self._raw(other), self.value), self.ctx)

    def __mul__(self, other):
        return Scalar(self.ctx.mul(self.value, self._raw(other)), self.ctx)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ctx.neg(self.value), self.ctx)

    def inv(self):
        return Scalar(self.ctx.inv(self.value), self.ctx)

    def __truediv__(self, other):
        raw = self._raw(other)
        return Scalar(self.ctx.mul(self.value, self.ctx.inv(raw)), self.ctx)

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ctx == other.ctx and self.value == other.value
        try:
            return self.value == self.ctx.coerce(other)
        except (TypeError, MixedContexts):
            return NotImplemented

    def __lt__(self, other):
        # ordering only meaningful over ZZ/QQ; used by tests for convenience
        return self.value < self._raw(other)

    def __hash__(self):
        return hash((self.ctx, self.value))

    def __repr__(self):
        return f"Scalar({self.value!r}, {self.ctx})"


def scalar_arith(op, a, b=None):
    """Dispatch exact scalar arithmetic: add, mul, neg, or inv."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    if op == "inv":
        if b is not None:
            raise TypeError("inv is unary")
        if not a.ctx.is_field and not isinstance(a.ctx, IntegerRing):
            raise RequiresField(f"inverse needs a field, got {a.ctx}")
        return a.inv()
    raise ValueError(f"unknown scalar operation {op!r}")
