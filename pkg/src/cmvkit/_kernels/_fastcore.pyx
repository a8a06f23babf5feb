"""Compiled kernels: banded matrix-power tables, Toeplitz pairings, Cauchy products.

The matrices seen here are five-diagonal (entries vanish for |i - j| > 2), so
the power iteration only touches the band instead of the full dense row.
"""

import numpy as np

cdef extern from "complex.h" nogil:
    double complex conj(double complex)

BACKEND = "cython"


def matpow_entry_table(mat, col, rows, Py_ssize_t nterms, bint adjoint):
    """Entries of successive matrix powers applied to a basis vector.

    table[t, i] = (A ** (t + 1))[rows[i], col] with A = mat* (adjoint) or mat.
    Assumes mat[i, j] == 0 for |i - j| > 2.
    """
    cdef double complex[:, ::1] m = np.ascontiguousarray(mat, dtype=complex)
    cdef Py_ssize_t[:] rr = np.ascontiguousarray(rows, dtype=np.intp)
    cdef Py_ssize_t n = m.shape[0]
    cdef Py_ssize_t nrows = rr.shape[0]

    out = np.empty((nterms, nrows), dtype=complex)
    cdef double complex[:, ::1] table = out
    xbuf = np.zeros(n, dtype=complex)
    ybuf = np.empty(n, dtype=complex)
    cdef double complex[::1] x = xbuf
    cdef double complex[::1] y = ybuf

    cdef Py_ssize_t t, i, j, jlo, jhi
    cdef double complex acc
    x[col] = 1.0
    with nogil:
        for t in range(nterms):
            for i in range(n):
                jlo = i - 2 if i >= 2 else 0
                jhi = i + 3 if i + 3 <= n else n
                acc = 0
                if adjoint:
                    for j in range(jlo, jhi):
                        acc = acc + conj(m[j, i]) * x[j]
                else:
                    for j in range(jlo, jhi):
                        acc = acc + m[i, j] * x[j]
                y[i] = acc
            for i in range(n):
                x[i] = y[i]
            for i in range(nrows):
                table[t, i] = x[rr[i]]
    return out


def toeplitz_inner(cfull, Py_ssize_t center, f, long ef, g, long eg):
    """sum_{i,j} conj(f[i]) g[j] c[(eg + j) - (ef + i)]; conjugate-linear in f."""
    cdef double complex[::1] c = np.ascontiguousarray(cfull, dtype=complex)
    cdef double complex[::1] fv = np.ascontiguousarray(f, dtype=complex)
    cdef double complex[::1] gv = np.ascontiguousarray(g, dtype=complex)
    cdef Py_ssize_t nf = fv.shape[0]
    cdef Py_ssize_t ng = gv.shape[0]
    cdef Py_ssize_t base = center + eg - ef
    cdef Py_ssize_t i, j
    cdef double complex total = 0
    cdef double complex fc
    with nogil:
        for i in range(nf):
            fc = conj(fv[i])
            for j in range(ng):
                total = total + fc * gv[j] * c[base + j - i]
    return complex(total)


def cauchy_product(a, b, Py_ssize_t order):
    """First order + 1 coefficients of the Cauchy product of two series."""
    cdef double complex[::1] av = np.ascontiguousarray(a, dtype=complex)
    cdef double complex[::1] bv = np.ascontiguousarray(b, dtype=complex)
    out = np.zeros(order + 1, dtype=complex)
    cdef double complex[::1] cv = out
    cdef Py_ssize_t na = av.shape[0]
    cdef Py_ssize_t nb = bv.shape[0]
    cdef Py_ssize_t k, j, jlo, jhi
    cdef double complex acc
    with nogil:
        for k in range(order + 1):
            jlo = k - nb + 1 if k - nb + 1 > 0 else 0
            jhi = k + 1 if k + 1 < na else na
            acc = 0
            for j in range(jlo, jhi):
                acc = acc + av[j] * bv[k - j]
            cv[k] = acc
    return out
