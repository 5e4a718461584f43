"""Shift-and-multiply Bell bases for qudits and the controlled-shift gate.

For dimension d, the clock and shift operators are

    Z = sum_j w^j |j><j|,      W = sum_j |j+1 mod d><j|,      w = exp(2 pi i / d),

and F is the discrete Fourier matrix F[n, j] = w^(nj) / sqrt(d). The gate

    V = sum_i |i><i| kron W^i

(the controlled-NOT for d = 2) maps the product basis F|m> kron |n> onto the
maximally entangled basis vec(U(m, n)) / sqrt(d), where the shift-and-multiply
operators are indexed so that

    U(m, n)[i, j] = w^(i m) delta_{j, i+n mod d},

i.e. the clock power Z^m composed with n steps of the inverse cyclic shift,
U(m, n) = Z^m (W^T)^n. This labeling is the one V actually transports onto
the Bell basis; relabeling n -> -n recovers the plain product Z^m W^n. The
d^2 operators are trace-orthogonal, so the vectors form an orthonormal,
maximally entangled basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dket import DoubleKet, vec


@dataclass(frozen=True, eq=False)
class QuditGateSet:
    """Clock, shift, Fourier and controlled-shift matrices for one dimension."""

    d: int
    Z: np.ndarray
    W: np.ndarray
    F: np.ndarray
    V: np.ndarray


def make_gateset(d: int) -> QuditGateSet:
    """Build the gate set for dimension d >= 2 from the defining formulas."""
    if d < 2:
        raise ValueError(f"dimension must be >= 2, got {d}")
    omega = np.exp(2j * np.pi / d)
    Z = np.diag(omega ** np.arange(d))
    W = np.zeros((d, d), dtype=complex)
    W[(np.arange(d) + 1) % d, np.arange(d)] = 1.0
    F = omega ** np.outer(np.arange(d), np.arange(d)) / np.sqrt(d)
    V = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        V[i * d:(i + 1) * d, i * d:(i + 1) * d] = np.linalg.matrix_power(W, i)
    return QuditGateSet(d=d, Z=Z, W=W, F=F, V=V)


def shift_multiply(gs: QuditGateSet, m: int, n: int) -> np.ndarray:
    """The operator U(m, n) = Z^m (W^T)^n, with elements w^(im) delta_{j, i+n mod d}."""
    _check_index(gs, m, n)
    return np.linalg.matrix_power(gs.Z, m) @ np.linalg.matrix_power(gs.W.T, n)


def bell_vector(gs: QuditGateSet, m: int, n: int) -> DoubleKet:
    """Normalized Bell-basis vector vec(U(m, n)) / sqrt(d)."""
    _check_index(gs, m, n)
    return vec(shift_multiply(gs, m, n) / np.sqrt(gs.d))


def _bell_matrix(gs: QuditGateSet) -> np.ndarray:
    """d^2 x d^2 matrix whose column m*d+n is the Bell vector for (m, n)."""
    d = gs.d
    cols = np.empty((d * d, d * d), dtype=complex)
    for m in range(d):
        for n in range(d):
            cols[:, m * d + n] = bell_vector(gs, m, n).amplitudes
    return cols


def bell_map_max_error(gs: QuditGateSet) -> float:
    """Max over (m, n) of || V (F|m> kron |n>) - vec(U(m, n))/sqrt(d) ||."""
    d = gs.d
    mapped = gs.V @ np.kron(gs.F, np.eye(d))
    return float(np.linalg.norm(mapped - _bell_matrix(gs), axis=0).max())


def orthonormality_max_error(gs: QuditGateSet) -> float:
    """Max deviation of <<U(m,n)|U(m',n')>> from d * delta_mm' delta_nn'."""
    b = _bell_matrix(gs)
    gram = b.conj().T @ b
    return float(gs.d * np.abs(gram - np.eye(gs.d ** 2)).max())


def v_from_bell_basis(gs: QuditGateSet) -> np.ndarray:
    """Independent construction of V as sum_mn of |Bell(m,n)><(F|m>)(|n>)|.

    Used as a cross-check against the controlled-shift form built by
    :func:`make_gateset`; the two agree to rounding for every d.
    """
    d = gs.d
    return _bell_matrix(gs) @ np.kron(gs.F, np.eye(d)).conj().T


def _check_index(gs: QuditGateSet, m: int, n: int) -> None:
    if not (0 <= m < gs.d and 0 <= n < gs.d):
        raise ValueError(f"indices (m, n) = ({m}, {n}) out of range for d = {gs.d}")
