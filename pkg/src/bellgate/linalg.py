"""Dense complex matrix kernel.

Thin, validated wrappers around numpy/scipy dense routines. Everything in
this package stores operators as row-major ``numpy.ndarray`` of complex128,
so that flattening a matrix with ``reshape(-1)`` enumerates entries as
A[0,0], A[0,1], ... (the convention the double-ket module relies on).
All functions are pure and return fresh arrays.
"""

from __future__ import annotations

import numpy as np
import scipy.linalg


def as_matrix(a) -> np.ndarray:
    """Coerce input to a 2-D complex128 array, validating the shape."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a 2-D matrix, got shape {np.shape(a)}")
    return m


def matmul(a, b) -> np.ndarray:
    """Matrix product a @ b with an explicit conformability check."""
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def kron(a, b) -> np.ndarray:
    """Kronecker product with row-major blocks: (a kron b)[i*p+k, j*q+l] = a[i,j] b[k,l]."""
    return np.kron(as_matrix(a), as_matrix(b))


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def expm(a) -> np.ndarray:
    """Matrix exponential (scaling-and-squaring Pade, via scipy)."""
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expm requires a square matrix, got {a.shape}")
    return scipy.linalg.expm(a)


def frobenius_norm(a) -> float:
    """sqrt of the sum of squared moduli of the entries."""
    return float(np.linalg.norm(as_matrix(a)))
