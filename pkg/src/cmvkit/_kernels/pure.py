"""Pure numpy implementations of the hot kernels.

Same call surface as the compiled module `_fastcore`; used as the fallback
backend and as the reference in backend-parity tests.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def matpow_entry_table(mat, col, rows, nterms, adjoint):
    """Entries of successive matrix powers applied to a basis vector.

    Returns `table` of shape (nterms, len(rows)) with
    ``table[t, i] = (A ** (t + 1))[rows[i], col]`` where ``A = mat.conj().T``
    when `adjoint` is true and ``A = mat`` otherwise.
    """
    mat = np.asarray(mat, dtype=complex)
    rows = np.asarray(rows, dtype=np.intp)
    a = mat.conj().T if adjoint else mat
    x = np.zeros(mat.shape[0], dtype=complex)
    x[col] = 1.0
    table = np.empty((nterms, len(rows)), dtype=complex)
    for t in range(nterms):
        x = a @ x
        table[t] = x[rows]
    return table


def toeplitz_inner(cfull, center, f, ef, g, eg):
    """Sesquilinear moment pairing of two dense coefficient slabs.

    ``sum_{i,j} conj(f[i]) g[j] c[(eg + j) - (ef + i)]`` with the two-sided
    moment array `cfull` (lag 0 at index `center`). Conjugate-linear in `f`.
    """
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    base = center + eg - ef
    lags = base + (np.arange(len(g))[None, :] - np.arange(len(f))[:, None])
    return complex(f.conj() @ np.asarray(cfull, dtype=complex)[lags] @ g)


def cauchy_product(a, b, order):
    """First ``order + 1`` coefficients of the Cauchy product of two series."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return np.convolve(a, b)[: order + 1]
