"""Pure-Python inner-loop kernels.

Fallback implementations of the hot loops (dense convolution and row
updates).  qrules._ckernels provides compiled equivalents; qrules._kernels
picks one implementation at import time.  Both must compute identical
values bit for bit.
"""

BACKEND = "python"


def conv_obj(a, b, zero):
    """Dense convolution of coefficient lists with object arithmetic.

    Works for any coefficient type supporting +, * and truth testing
    (int, Fraction, nested polynomials).  Inputs must be nonempty.
    """
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def conv_mod(a, b, p):
    """Dense convolution of int lists, reduced mod p."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return out


def axpy_obj(y, x, c):
    """In-place y[i] += c * x[i] with object arithmetic."""
    for i, xi in enumerate(x):
        if xi:
            y[i] = y[i] + c * xi


def axpy_mod(y, x, c, p):
    """In-place y[i] = (y[i] + c * x[i]) mod p for int lists."""
    for i, xi in enumerate(x):
        if xi:
            y[i] = (y[i] + c * xi) % p
