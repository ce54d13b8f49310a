"""Exact linear-system solving over a field.

Reduced row echelon form with full pivoting bookkeeping.  Every row of
the working matrix carries a provenance vector (as a sparse dict), so an
inconsistent system yields a certificate c with c.A = 0 and c.b != 0
that callers can re-verify by substitution.  No rounding anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, RequiresField
from .rings import Scalar


@dataclass(frozen=True)
class UniqueSolution:
    """The system has exactly one solution."""

    x: tuple


@dataclass(frozen=True)
class AffineSpace:
    """Solutions form particular + span(nullspace_basis), dimension >= 1."""

    particular: tuple
    nullspace_basis: tuple  # tuple of tuples

    @property
    def dimension(self):
        return len(self.nullspace_basis)


@dataclass(frozen=True)
class Inconsistent:
    """No solution; certificate c satisfies c.A = 0 and c.b = 1."""

    certificate: tuple


def _raw_value(x, ctx):
    if isinstance(x, Scalar):
        ctx.require_same(x.ctx)
        return x.value
    return ctx.coerce(x)


def linsolve_exact(A, b, ctx):
    """Solve A x = b exactly over the field ctx.

    A is a sequence of rows, b the right-hand column; entries may be
    Scalars or raw ring elements.  Returns UniqueSolution, AffineSpace,
    or Inconsistent.
    """
    if not ctx.is_field:
        raise RequiresField(f"exact solving needs a field, got {ctx}")
    rows = [[_raw_value(x, ctx) for x in row] for row in A]
    rhs = [_raw_value(x, ctx) for x in b]
    if len(rows) != len(rhs):
        raise DimensionMismatch(f"{len(rows)} rows but {len(rhs)} right-hand sides")
    ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise DimensionMismatch("ragged matrix")

    zero, one = ctx.zero, ctx.one
    # provenance: current_row[i] = sum_j witness[i][j] * original_row[j]
    witness = [{i: one} for i in range(len(rows))]
    pivot_cols = []
    nrows = len(rows)
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        witness[r], witness[pivot] = witness[pivot], witness[r]
        lead = rows[r][col]
        if lead != one:
            inv = ctx.inv(lead)
            rows[r] = [ctx.mul(inv, x) for x in rows[r]]
            rhs[r] = ctx.mul(inv, rhs[r])
            witness[r] = {j: ctx.mul(inv, w) for j, w in witness[r].items()}
        prow, pw, prhs = rows[r], witness[r], rhs[r]
        for i in range(nrows):
            if i == r:
                continue
            factor = rows[i][col]
            if not factor:
                continue
            c = ctx.neg(factor)
            ctx.axpy(rows[i], prow, c)
            if prhs:
                rhs[i] = ctx.add(rhs[i], ctx.mul(c, prhs))
            wi = witness[i]
            for j, w in pw.items():
                acc = ctx.add(wi.get(j, zero), ctx.mul(c, w))
                if acc:
                    wi[j] = acc
                else:
                    wi.pop(j, None)
        pivot_cols.append(col)
        r += 1
        if r == nrows:
            break

    for i in range(r, nrows):
        if rhs[i]:
            inv = ctx.inv(rhs[i])
            cert = [zero] * nrows
            for j, w in witness[i].items():
                cert[j] = ctx.mul(inv, w)
            return Inconsistent(tuple(cert))

    particular = [zero] * ncols
    for i, col in enumerate(pivot_cols):
        particular[col] = rhs[i]
    pivot_set = set(pivot_cols)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    if not free_cols:
        return UniqueSolution(tuple(particular))
    basis = []
    for fc in free_cols:
        vec = [zero] * ncols
        vec[fc] = one
        for i, pc in enumerate(pivot_cols):
            entry = rows[i][fc]
            if entry:
                vec[pc] = ctx.neg(entry)
        basis.append(tuple(vec))
    return AffineSpace(tuple(particular), tuple(basis))


def matvec(A, x, ctx):
    """Exact matrix-vector product on raw values."""
    out = []
    for row in A:
        acc = ctx.zero
        for a, xi in zip(row, x):
            if a and xi:
                acc = ctx.add(acc, ctx.mul(a, xi))
        out.append(acc)
    return out


def vecmat(c, A, ctx):
    """Exact vector-matrix product c.A on raw values."""
    ncols = len(A[0]) if A else 0
    out = [ctx.zero] * ncols
    for ci, row in zip(c, A):
        if not ci:
            continue
        for j, a in enumerate(row):
            if a:
                out[j] = ctx.add(out[j], ctx.mul(ci, a))
    return out


def dot(a, b, ctx):
    """Exact dot product on raw values."""
    acc = ctx.zero
    for x, y in zip(a, b):
        if x and y:
            acc = ctx.add(acc, ctx.mul(x, y))
    return acc
