"""Exact 4x4 symplectic layer for the two-mode Gaussian decomposition.

The quadrature convention is x = (a + a^dag)/2, p = i(a^dag - a)/2, so
[x, p] = i/2 and the vacuum variance is 1/4. Symplectic matrices act in the
Heisenberg picture on the column (x_a, p_a, x_b, p_b): U^dag r U = M r, and
a product of unitaries composes as the product of their matrices in the same
order. Every matrix here satisfies M Omega M^T = Omega with Omega carrying
+-1/2 on the antidiagonal of each mode block.

The target gate is the continuous-variable SUM interaction exp(-2i P_a X_b);
its Heisenberg action is the shear x_a -> x_a + x_b, p_b -> p_b - p_a. The
five-factor optical chain (50-50 beam splitter, a squeezer pair r1, a
two-mode squeezer of exponent alpha, a mode mixer of angle beta/2, and a
second squeezer pair r2) reproduces that shear exactly for

    alpha = -2 atanh(2 - sqrt 3),  beta = -2 atan(2 - sqrt 3),
    gamma = log(sqrt 3 / 2),       r1 = 2^(-1/2),  r2 = (3/4)^(-1/4).

The same alpha, beta, gamma satisfy a closed 2x2 identity in the Pauli
realization of su(1,1), checked independently of the 4x4 route.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

OMEGA = 0.5 * np.array(
    [[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]], dtype=float
)

_SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
_SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)


@dataclass(frozen=True)
class DecompositionParams:
    """Closed-form constants of the optical decomposition and its hardware caption."""

    alpha: float
    beta: float
    gamma: float
    r1: float
    r2: float
    tau1: float
    g: float


@dataclass(frozen=True)
class HardwareParams:
    tau1: float
    g: float
    consistency_notes: tuple[str, ...]


def decomposition_params() -> DecompositionParams:
    t = 2.0 - np.sqrt(3.0)
    return DecompositionParams(
        alpha=float(-2.0 * np.arctanh(t)),
        beta=float(-2.0 * np.arctan(t)),
        gamma=float(np.log(np.sqrt(3.0) / 2.0)),
        r1=2.0 ** -0.5,
        r2=(3.0 / 4.0) ** -0.25,
        tau1=float(1.0 / (4.0 * t)),
        g=float(1.0 / (2.0 * (3.0 - 2.0 * np.sqrt(3.0)))),
    )


# ---------------------------------------------------------------------------
# su(1,1) identity in the 2x2 Pauli realization
# ---------------------------------------------------------------------------

def su11_pauli_sides(params: DecompositionParams) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of exp(sigma_minus / 2) = exp(i a Kx) exp(b Ky) exp(c Kz).

    In the realization Kx = (i/2) sigma_x, Ky = (i/2) sigma_y, Kz = sigma_z / 2
    the left side is the nilpotent exponential [[1, 0], [1/2, 1]]; the right
    side is assembled from closed-form 2x2 exponentials.
    """
    lhs = np.array([[1.0, 0.0], [0.5, 1.0]], dtype=complex)
    a, b, c = params.alpha, params.beta, params.gamma
    ex = np.cosh(a / 2) * np.eye(2) - np.sinh(a / 2) * _SIGMA_X
    ey = np.cos(b / 2) * np.eye(2) + 1j * np.sin(b / 2) * _SIGMA_Y
    ez = np.diag([np.exp(c / 2), np.exp(-c / 2)]).astype(complex)
    return lhs, ex @ ey @ ez


def su11_pauli_defect(params: DecompositionParams) -> float:
    """Entrywise max difference between the two sides of the 2x2 identity."""
    lhs, rhs = su11_pauli_sides(params)
    return float(np.abs(lhs - rhs).max())


# ---------------------------------------------------------------------------
# Symplectic matrices of the individual Gaussian elements
# ---------------------------------------------------------------------------

def _embed_single_mode(block: np.ndarray, mode: int) -> np.ndarray:
    if mode not in (0, 1):
        raise ValueError(f"mode must be 0 or 1, got {mode}")
    m = np.eye(4)
    m[2 * mode:2 * mode + 2, 2 * mode:2 * mode + 2] = block
    return m


def squeezer_symplectic(r: float, mode: int = 0) -> np.ndarray:
    """x -> r x, p -> p / r on one mode (generator log(r)(a^dag^2 - a^2)/2)."""
    if r <= 0:
        raise ValueError("squeezing parameter must be positive")
    return _embed_single_mode(np.diag([r, 1.0 / r]), mode)


def phase_shift_symplectic(theta: float, mode: int = 0) -> np.ndarray:
    """Quadrature rotation of exp(-i theta n): x -> x cos + p sin, p -> -x sin + p cos."""
    c, s = np.cos(theta), np.sin(theta)
    return _embed_single_mode(np.array([[c, s], [-s, c]]), mode)


def beam_splitter_symplectic(theta: float = np.pi / 4) -> np.ndarray:
    """Mode-space rotation of exp(theta(a^dag b - a b^dag)); theta = pi/4 is 50-50."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array(
        [[c, 0, s, 0], [0, c, 0, s], [-s, 0, c, 0], [0, -s, 0, c]], dtype=float
    )


def opa_symplectic(alpha: float) -> np.ndarray:
    """Hyperbolic mixing of exp(-(alpha/2)(a^dag b^dag - a b))."""
    c, s = np.cosh(alpha / 2.0), np.sinh(alpha / 2.0)
    return np.array(
        [[c, 0, -s, 0], [0, c, 0, s], [-s, 0, c, 0], [0, s, 0, c]], dtype=float
    )


def sum_gate_symplectic() -> np.ndarray:
    """Heisenberg action of exp(-2i P_a X_b): the shear confirmed by the Fock oracle."""
    return np.array(
        [[1, 0, 1, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, -1, 0, 1]], dtype=float
    )


def symplectic_of(kind: str, **params) -> np.ndarray:
    """Dispatch a named Gaussian element to its exact 4x4 Heisenberg action."""
    builders = {
        "squeezer": squeezer_symplectic,
        "beam_splitter": beam_splitter_symplectic,
        "phase_shift": phase_shift_symplectic,
        "opa": opa_symplectic,
        "sum_gate": sum_gate_symplectic,
    }
    if kind not in builders:
        raise ValueError(f"unknown Gaussian element kind: {kind!r}")
    return builders[kind](**params)


def symplectic_defect(m: np.ndarray) -> float:
    """Entrywise max of M Omega M^T - Omega (zero for exact symplectic matrices)."""
    return float(np.abs(m @ OMEGA @ m.T - OMEGA).max())


# ---------------------------------------------------------------------------
# The five-factor decomposition, verified exactly
# ---------------------------------------------------------------------------

def circuit_symplectic(params: DecompositionParams) -> np.ndarray:
    """Symplectic matrix of the optical chain, composed in operator order.

    The chain reads, as operators applied right to left,

        BS(pi/4) (S(r1) kron S(r1)^dag) OPA(alpha) MIX(beta/2) (S(r2)^dag kron S(r2)),

    and S(r)^dag = S(1/r).
    """
    return (
        beam_splitter_symplectic(np.pi / 4)
        @ squeezer_symplectic(params.r1, 0)
        @ squeezer_symplectic(1.0 / params.r1, 1)
        @ opa_symplectic(params.alpha)
        @ beam_splitter_symplectic(params.beta / 2.0)
        @ squeezer_symplectic(1.0 / params.r2, 0)
        @ squeezer_symplectic(params.r2, 1)
    )


def circuit_vs_target_error(params: DecompositionParams) -> float:
    """Entrywise max difference between the composed chain and the SUM-gate shear."""
    return float(np.abs(circuit_symplectic(params) - sum_gate_symplectic()).max())


def hardware_params(params: DecompositionParams) -> HardwareParams:
    """Beam-splitter transmissivity and OPA gain quoted for the optical scheme.

    tau1 is cross-checked against the mixing angle (tau = cos^2(beta/2)); the
    quoted gain g is negative as defined and its modulus equals cosh^2(alpha/2)
    rather than the amplitude gain cosh(alpha/2). Discrepancies are reported,
    not raised.
    """
    tau_from_angle = float(np.cos(params.beta / 2.0) ** 2)
    amp_gain = float(np.cosh(params.alpha / 2.0))
    notes = [
        f"tau1 = {params.tau1:.15g} vs cos^2(beta/2) = {tau_from_angle:.15g}"
        f" (|diff| = {abs(params.tau1 - tau_from_angle):.2e})",
    ]
    if params.g < 0:
        notes.append(
            f"g = {params.g:.15g} is negative as defined; modulus check:"
            f" |g| = {abs(params.g):.15g}, cosh^2(alpha/2) = {amp_gain ** 2:.15g}"
            f" (|diff| = {abs(abs(params.g) - amp_gain ** 2):.2e}),"
            f" amplitude gain cosh(alpha/2) = {amp_gain:.15g}"
        )
    return HardwareParams(
        tau1=params.tau1, g=params.g, consistency_notes=tuple(notes)
    )
