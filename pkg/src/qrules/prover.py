"""Bounded-degree prover for rule and zero-identity index patterns.

Fixes an index pattern (which of m, n each coefficient sequence depends
on), a degree budget, and a finite index grid, then decides by exact
linear algebra whether coefficient polynomials exist.  Each unknown
polynomial gets degree_bound coefficients (powers q**0..q**(D-1)); one
equation per grid point per power of q; the system is solved exactly
over a field.

Outcomes are certificates, not claims: a Unique witness and a
SolutionSpace basis substitute back into the defining identity, and an
Infeasible certificate is a row combination c with c.A = 0, c.b = 1.
Infeasibility at budget D certifies nonexistence of solutions with all
unknowns below that budget on that grid, nothing stronger.

The six patterns are one template with two targets ([m+n]_q or 0):

    add_nm   u_n [m]_q + v_m [n]_q = [m+n]_q   (solution space: one
             polynomial parameter z, u_n = 1 + z[n]_q, v_m = q**m - z[m]_q)
    add_mm   u_m [m]_q + v_m [n]_q = [m+n]_q   (unique: u = 1, v = q**m)
    add_mn   u_m [m]_q + v_n [n]_q = [m+n]_q   (infeasible)
    zero_nm  s_n [m]_q + t_m [n]_q = 0         (space: s_n = z[n]_q,
             t_m = -z[m]_q)
    zero_mm  s_m [m]_q + t_m [n]_q = 0         (zero only)
    zero_mn  s_m [m]_q + t_n [n]_q = 0         (zero only once the degree
             budget is below the lcm of the quantum integers in range)
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RangeTooSmall
from .linalg import Inconsistent, UniqueSolution, dot, linsolve_exact, matvec, vecmat
from .poly import Poly
from .rings import QQ, RingCtx

# form -> (side1 label, side1 index, side2 label, side2 index, homogeneous)
FORMS = {
    "add_nm": ("u", "n", "v", "m", False),
    "add_mm": ("u", "m", "v", "m", False),
    "add_mn": ("u", "m", "v", "n", False),
    "zero_nm": ("s", "n", "t", "m", True),
    "zero_mm": ("s", "m", "t", "m", True),
    "zero_mn": ("s", "m", "t", "n", True),
}


@dataclass(frozen=True)
class Unique:
    """Exactly one coefficient assignment fits; witness maps each side
    label to its tuple of polynomials (index i at position i-1)."""

    witness: dict


@dataclass(frozen=True)
class SolutionSpace:
    """An affine space of assignments fits.

    basis spans the homogeneous part (each element shaped like a
    witness); particular is one concrete solution.  When every basis
    vector is a z-parameterized zero identity, z_basis lists the
    corresponding z polynomials in echelon form, else it is None.
    """

    dimension: int
    basis: tuple
    particular: dict
    z_basis: object

    def __post_init__(self):
        assert self.dimension == len(self.basis)


@dataclass(frozen=True)
class Infeasible:
    """No assignment fits; certificate is the sparse row combination
    ((m, n, k), coefficient) proving 0 = 1."""

    certificate: tuple


@dataclass(frozen=True)
class ProofReport:
    """Outcome of one bounded-degree solve, with enough data to rebuild
    the system and re-verify every certificate by substitution."""

    form: str
    degree_bound: int
    m_max: int
    n_max: int
    ctx: RingCtx
    outcome: object


def _side_range(index_var, m_max, n_max):
    return m_max if index_var == "m" else n_max


def _assemble(form, degree_bound, m_max, n_max, ctx):
    """Build the exact linear system for a form.

    Returns (labels, A, b, count1) where labels[i] = (m, n, k) names row
    i, columns are side1 coefficients then side2 coefficients (D per
    index), and count1 is the number of side1 unknowns.
    """
    _, idx1, _, idx2, homogeneous = FORMS[form]
    D = degree_bound
    count1 = _side_range(idx1, m_max, n_max)
    count2 = _side_range(idx2, m_max, n_max)
    ncols = (count1 + count2) * D
    zero, one = ctx.zero, ctx.one

    labels = []
    rows = []
    rhs = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            i1 = m if idx1 == "m" else n
            i2 = m if idx2 == "m" else n
            k_max = m + n - 1 if not homogeneous else -1
            if D:
                k_max = max(k_max, D - 1 + m - 1, D - 1 + n - 1)
            for k in range(k_max + 1):
                row = [zero] * ncols
                base1 = (i1 - 1) * D
                for j in range(max(0, k - m + 1), min(D - 1, k) + 1):
                    row[base1 + j] = one
                base2 = (count1 + i2 - 1) * D
                for j in range(max(0, k - n + 1), min(D - 1, k) + 1):
                    row[base2 + j] = one
                target = one if (not homogeneous and k <= m + n - 1) else zero
                labels.append((m, n, k))
                rows.append(row)
                rhs.append(target)
    return labels, rows, rhs, count1


def _unflatten(vec, form, degree_bound, m_max, n_max, ctx):
    """Split a solution vector into the two labeled polynomial lists."""
    label1, idx1, label2, idx2, _ = FORMS[form]
    D = degree_bound
    count1 = _side_range(idx1, m_max, n_max)
    count2 = _side_range(idx2, m_max, n_max)
    out = {}
    for label, count, offset in (
        (label1, count1, 0),
        (label2, count2, count1 * D),
    ):
        polys = []
        for i in range(count):
            coeffs = vec[offset + i * D : offset + (i + 1) * D]
            polys.append(Poly(list(coeffs), ctx))
        out[label] = tuple(polys)
    return out


def _flatten(witness, form, degree_bound, m_max, n_max, ctx):
    label1, idx1, label2, idx2, _ = FORMS[form]
    D = degree_bound
    vec = []
    for label, idx in ((label1, idx1), (label2, idx2)):
        for poly in witness[label]:
            vec.extend(poly[j] for j in range(D))
    return vec


def _zero_identity_z(witness, ctx):
    """If witness is s_i = z[i]_q, t_j = -z[j]_q for some z, return z."""
    sides = list(witness.values())
    side1, side2 = sides[0], sides[1]
    z = side1[0] if side1 else Poly([], ctx)
    for i, p in enumerate(side1, start=1):
        if p != z.times_qint(i):
            return None
    for j, p in enumerate(side2, start=1):
        if p != -z.times_qint(j):
            return None
    return z


def _echelon_polys(zs, degree_bound, ctx):
    """Reduce a list of polynomials to a reduced monic echelon basis.

    Pivots on leading (highest-power) coefficients and back-eliminates,
    so a basis spanning all polynomials below some degree comes out as
    the plain monomials.
    """
    pivots = {}
    for z in zs:
        row = [z[j] for j in range(degree_bound)]
        for _ in range(degree_bound + 1):
            lead = None
            for j in reversed(range(degree_bound)):
                if row[j]:
                    lead = j
                    break
            if lead is None:
                break
            if lead not in pivots:
                inv = ctx.inv(row[lead])
                pivots[lead] = [ctx.mul(inv, x) for x in row]
                break
            c = ctx.neg(row[lead])
            row = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(row, pivots[lead])]
    for li in sorted(pivots):
        row = pivots[li]
        for lj in sorted(pivots):
            if lj >= li:
                break
            if row[lj]:
                c = ctx.neg(row[lj])
                row = [ctx.add(x, ctx.mul(c, y)) for x, y in zip(row, pivots[lj])]
        pivots[li] = row
    return tuple(Poly(pivots[lead], ctx) for lead in sorted(pivots))


def prove_bounded(form, degree_bound, m_max, n_max, ctx=QQ):
    """Decide a rule/zero-identity pattern at a degree budget, exactly.

    degree_bound is the number of coefficients allowed per unknown
    polynomial (so each unknown has degree < degree_bound).  The grid
    needs at least two values of each index; the uniqueness and
    impossibility arguments use consecutive indices.
    """
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}; expected one of {sorted(FORMS)}")
    if not isinstance(degree_bound, int) or degree_bound < 0:
        raise ValueError(f"degree bound must be a nonnegative int, got {degree_bound}")
    if m_max < 2 or n_max < 2:
        raise RangeTooSmall("the index grid needs m_max >= 2 and n_max >= 2")

    labels, A, b, _ = _assemble(form, degree_bound, m_max, n_max, ctx)
    result = linsolve_exact(A, b, ctx)

    if isinstance(result, Inconsistent):
        certificate = tuple(
            (labels[i], c) for i, c in enumerate(result.certificate) if c
        )
        outcome = Infeasible(certificate)
    elif isinstance(result, UniqueSolution):
        witness = _unflatten(result.x, form, degree_bound, m_max, n_max, ctx)
        outcome = Unique(witness)
    else:
        basis = tuple(
            _unflatten(v, form, degree_bound, m_max, n_max, ctx)
            for v in result.nullspace_basis
        )
        particular = _unflatten(
            result.particular, form, degree_bound, m_max, n_max, ctx
        )
        z_basis = None
        if form in ("add_nm", "zero_nm"):
            zs = []
            for w in basis:
                z = _zero_identity_z(w, ctx)
                if z is None:
                    zs = None
                    break
                zs.append(z)
            if zs is not None:
                z_basis = _echelon_polys(zs, degree_bound, ctx)
        outcome = SolutionSpace(len(basis), basis, particular, z_basis)
    return ProofReport(form, degree_bound, m_max, n_max, ctx, outcome)


def reverify(report):
    """Re-check a report's certificates by substitution into the system.

    Returns True when every certificate checks out; raises nothing.
    """
    labels, A, b, _ = _assemble(
        report.form, report.degree_bound, report.m_max, report.n_max, report.ctx
    )
    ctx = report.ctx
    outcome = report.outcome
    args = (report.form, report.degree_bound, report.m_max, report.n_max, ctx)

    if isinstance(outcome, Infeasible):
        index = {label: i for i, label in enumerate(labels)}
        c = [ctx.zero] * len(labels)
        for label, coeff in outcome.certificate:
            if label not in index:
                return False
            c[index[label]] = coeff
        lhs = vecmat(c, A, ctx)
        if any(x for x in lhs):
            return False
        return bool(dot(c, b, ctx))

    def check(witness, rhs):
        vec = _flatten(witness, *args)
        return matvec(A, vec, ctx) == rhs

    zero_rhs = [ctx.zero] * len(b)
    if isinstance(outcome, Unique):
        return check(outcome.witness, b)
    if isinstance(outcome, SolutionSpace):
        if not check(outcome.particular, b):
            return False
        for w in outcome.basis:
            if not check(w, zero_rhs):
                return False
        return True
    return False
