# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled inner-loop kernels.

Same contracts as qrules._pykernels: dense convolution and row updates.
conv_mod/axpy_mod use C integer arithmetic when the modulus fits in
31 bits (products then fit in 62 bits); otherwise they fall back to
Python integers so arbitrary moduli keep working.
"""

from libc.stdlib cimport free, malloc

BACKEND = "c"

DEF SMALL_MOD_BITS = 31


def conv_obj(list a, list b, zero):
    """Dense convolution of coefficient lists with object arithmetic."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef list out = [zero] * (na + nb - 1)
    cdef object ai, bj
    for i in range(na):
        ai = a[i]
        if not ai:
            continue
        for j in range(nb):
            bj = b[j]
            if bj:
                out[i + j] = out[i + j] + ai * bj
    return out


def conv_mod(list a, list b, p):
    """Dense convolution of int lists, reduced mod p."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long cp, ai_c
    cdef long long *ca
    cdef long long *cb
    cdef long long *cout
    if p >> SMALL_MOD_BITS:
        out = [0] * (na + nb - 1)
        for i in range(na):
            ai = a[i]
            if ai:
                for j in range(nb):
                    bj = b[j]
                    if bj:
                        out[i + j] = (out[i + j] + ai * bj) % p
        return out
    cp = p
    ca = <long long *> malloc(na * sizeof(long long))
    cb = <long long *> malloc(nb * sizeof(long long))
    cout = <long long *> malloc((na + nb - 1) * sizeof(long long))
    if ca == NULL or cb == NULL or cout == NULL:
        free(ca)
        free(cb)
        free(cout)
        raise MemoryError
    try:
        for i in range(na):
            ca[i] = a[i]
        for j in range(nb):
            cb[j] = b[j]
        for i in range(na + nb - 1):
            cout[i] = 0
        for i in range(na):
            ai_c = ca[i]
            if ai_c:
                for j in range(nb):
                    if cb[j]:
                        cout[i + j] = (cout[i + j] + ai_c * cb[j]) % cp
        return [cout[i] for i in range(na + nb - 1)]
    finally:
        free(ca)
        free(cb)
        free(cout)


def axpy_obj(list y, list x, c):
    """In-place y[i] += c * x[i] with object arithmetic."""
    cdef Py_ssize_t i, n = len(x)
    cdef object xi
    for i in range(n):
        xi = x[i]
        if xi:
            y[i] = y[i] + c * xi


def axpy_mod(list y, list x, c, p):
    """In-place y[i] = (y[i] + c * x[i]) mod p for int lists."""
    cdef Py_ssize_t i, n = len(x)
    cdef long long cc, cp
    if p >> SMALL_MOD_BITS:
        for i in range(n):
            xi = x[i]
            if xi:
                y[i] = (y[i] + c * xi) % p
        return
    cc = c
    cp = p
    for i in range(n):
        xi = x[i]
        if xi:
            y[i] = (<long long> y[i] + cc * <long long> xi) % cp
