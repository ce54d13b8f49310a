from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from qrules import GF, QQ, ZZ, Poly

settings.register_profile(
    "ci",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

RINGS = {"ZZ": ZZ, "QQ": QQ, "F5": GF(5)}


@pytest.fixture(params=sorted(RINGS), ids=sorted(RINGS))
def ring(request):
    return RINGS[request.param]


def rand_scalar(rng, ctx, span=9):
    """A random raw element with small entries."""
    if ctx is QQ:
        return Fraction(rng.randint(-span, span), rng.randint(1, 4))
    return ctx.coerce(rng.randint(-span, span))


def rand_poly(rng, ctx, max_deg, span=9, var="q"):
    degree = rng.randint(-1, max_deg)
    if degree < 0:
        return Poly([], ctx, var)
    coeffs = [rand_scalar(rng, ctx, span) for _ in range(degree + 1)]
    return Poly(coeffs, ctx, var)


def rand_poly_nonzero(rng, ctx, max_deg, span=9, var="q"):
    while True:
        f = rand_poly(rng, ctx, max_deg, span, var)
        if f:
            return f
