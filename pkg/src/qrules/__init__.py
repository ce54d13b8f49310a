"""Exact arithmetic for quantum integers and their addition rules.

The quantum integer [n]_q is the polynomial 1 + q + ... + q**(n-1).
This package constructs, verifies, classifies, and combines the linear
rules that add quantum integers, solves the attached linear,
multiplicative, and quadratic functional equations, and re-derives the
uniqueness and impossibility facts at bounded degree with an exact
linear-algebra prover.  All arithmetic is exact: arbitrary-precision
integers, reduced fractions, prime-field residues, or polynomial
coefficients; no floating point anywhere.
"""

from ._kernels import BACKEND as kernel_backend
from .errors import (
    AffineSumNotOne,
    BothZero,
    DimensionMismatch,
    DivisionByZero,
    InconsistentRule,
    IndexOutOfBound,
    InexactDivision,
    InvalidIndex,
    MissingPrimeValue,
    MixedContexts,
    NegativeExponent,
    NonPrimeModulus,
    NotInvertible,
    ParseError,
    QRulesError,
    RangeTooSmall,
    RationalOverNonField,
    RequiresField,
    SpecFormatError,
    UnsupportedNesting,
)
from .funceq import (
    MultFamilySpec,
    fe_linear_recover,
    fe_linear_solution,
    fe_linear_verify,
    mult_family,
    mult_rule_apply,
    mult_verify,
    quad_closed_form,
    quad_rule_apply,
)
from .linalg import AffineSpace, Inconsistent, UniqueSolution, linsolve_exact
from .parsing import (
    format_poly,
    format_ratfunc,
    format_scalar,
    parse_poly,
    parse_scalar,
)
from .poly import (
    NEG_INF,
    Poly,
    div_exact,
    lift,
    poly_eval,
    poly_gcd,
    q_derivative,
    quantum_integer,
    subst_power,
)
from .prover import (
    FORMS,
    Infeasible,
    ProofReport,
    SolutionSpace,
    Unique,
    prove_bounded,
    reverify,
)
from .ratfunc import RatFunc, rf_arith, rf_make, rf_subst_power
from .rings import (
    GF,
    QQ,
    ZZ,
    PolyExtension,
    PrimeField,
    RingCtx,
    Scalar,
    is_prime,
    ring_from_name,
    ring_make,
    scalar_arith,
)
from .rules import (
    CanonicalRule,
    Counterexample,
    LinearRule,
    TabulatedRule,
    VerifyReport,
    ZeroIdentity,
    rule_add_zero,
    rule_affine,
    rule_canonical,
    rule_classify,
    rule_expand,
    rule_verify,
    zero_identity,
    zero_verify,
)
from .specio import load_family_spec, load_rule_spec

__version__ = "0.1.0"
