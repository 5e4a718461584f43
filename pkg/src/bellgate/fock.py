"""Truncated Fock-space realization of the bosonic objects.

Single-mode operators live on the first N+1 number states; two-mode operators
on the Kronecker product with mode a as the slow (row-major) factor, matching
the double-ket layout. The quadrature convention is X_phi =
(e^{i phi} a^dag + e^{-i phi} a) / 2, so X_0 and X_{pi/2} have commutator i/2
and the vacuum variance is 1/4.

All Gaussian unitaries are exponentials of the *truncated* generator, which is
exactly anti-Hermitian, so the resulting matrices are unitary to rounding; the
truncation shows up instead as a deviation from the untruncated operator near
the cutoff. Two diagnostics track this:

* ``unitarity_defect`` (max entry of U^dag U - I), attached as a warning when
  it exceeds 1e-8 (rare for this construction);
* ``cutoff_convergence_defect``, the column-wise difference against the same
  constructor at a padded cutoff, the honest measure of truncation error.

Dirac-like states are only ever represented in regularized form: the identity
double-ket as a two-mode squeezed vacuum with weight lambda^n, and quadrature
eigenvectors as rotated displaced squeezed vacua with sharpness s. Each
regularized constructor records its parameters and an estimated tail mass
above the cutoff; tails above 1e-8 attach a warning, and the identity
double-ket refuses lambda so large that the tail exceeds 1e-4.

Exponentials that conserve total photon number (beam splitters, mode mixers)
or the photon-number difference (the optical parametric amplifier) are
evaluated per invariant sector, which is exact and keeps large cutoffs cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np
import scipy.linalg

from . import gaussian

UNITARITY_WARN_TOL = 1e-8
TAIL_WARN_TOL = 1e-8
TAIL_ERROR_TOL = 1e-4
_TAIL_PAD = 12


@dataclass(frozen=True, eq=False)
class FockOperator:
    """A dense operator together with its photon-number cutoff and mode count."""

    cutoff: int
    modes: int
    matrix: np.ndarray
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.modes not in (1, 2):
            raise ValueError("modes must be 1 or 2")
        dim = (self.cutoff + 1) ** self.modes
        if self.matrix.shape != (dim, dim):
            raise ValueError(
                f"matrix shape {self.matrix.shape} inconsistent with cutoff"
                f" {self.cutoff} and {self.modes} mode(s)"
            )

    @property
    def dim(self) -> int:
        return (self.cutoff + 1) ** self.modes


@dataclass(frozen=True, eq=False)
class RegularizedState:
    """A normalized state vector with its regularization parameters."""

    cutoff: int
    modes: int
    amplitudes: np.ndarray
    params: dict[str, float] = field(default_factory=dict)
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        dim = (self.cutoff + 1) ** self.modes
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != dim:
            raise ValueError("amplitude count inconsistent with cutoff and modes")
        object.__setattr__(self, "amplitudes", amps)


# ---------------------------------------------------------------------------
# Elementary operators
# ---------------------------------------------------------------------------

def _ladder(cutoff: int) -> np.ndarray:
    a = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
    ns = np.arange(1, cutoff + 1)
    a[ns - 1, ns] = np.sqrt(ns)
    return a


def mode_ops(cutoff: int) -> tuple[FockOperator, FockOperator]:
    """Annihilation and creation matrices at the given cutoff."""
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    a = _ladder(cutoff)
    return (
        FockOperator(cutoff, 1, a),
        FockOperator(cutoff, 1, a.conj().T),
    )


def number_op(cutoff: int) -> np.ndarray:
    return np.diag(np.arange(cutoff + 1).astype(complex))


def quadrature(cutoff: int, phi: float) -> FockOperator:
    """Hermitian quadrature (e^{i phi} a^dag + e^{-i phi} a) / 2."""
    a = _ladder(cutoff)
    x = 0.5 * (np.exp(1j * phi) * a.conj().T + np.exp(-1j * phi) * a)
    return FockOperator(cutoff, 1, x)


def unitarity_defect(op: FockOperator) -> float:
    """Max entry of U^dag U - I."""
    return float(
        np.abs(op.matrix.conj().T @ op.matrix - np.eye(op.dim)).max()
    )


def _unitary_from_generator(cutoff: int, modes: int, gen: np.ndarray, label: str) -> FockOperator:
    op = FockOperator(cutoff, modes, scipy.linalg.expm(gen))
    defect = unitarity_defect(op)
    if defect > UNITARITY_WARN_TOL:
        op = FockOperator(
            cutoff, modes, op.matrix,
            (f"truncation: {label} unitarity defect {defect:.2e} at cutoff {cutoff}",),
        )
    return op


def displacement(cutoff: int, alpha: complex) -> FockOperator:
    """exp(alpha a^dag - conj(alpha) a) at the given cutoff."""
    a = _ladder(cutoff)
    return _unitary_from_generator(
        cutoff, 1, alpha * a.conj().T - np.conj(alpha) * a, f"D({alpha})"
    )


def squeezer(cutoff: int, r: float) -> FockOperator:
    """exp(log(r)(a^dag^2 - a^2)/2); maps x -> r x, p -> p / r in the Heisenberg picture."""
    if r <= 0:
        raise ValueError("squeezing parameter must be positive")
    a = _ladder(cutoff)
    ad = a.conj().T
    return _unitary_from_generator(
        cutoff, 1, 0.5 * np.log(r) * (ad @ ad - a @ a), f"S({r})"
    )


def phase_shift(cutoff: int, theta: float) -> FockOperator:
    """Diagonal phase rotation exp(-i theta n)."""
    return FockOperator(
        cutoff, 1, np.diag(np.exp(-1j * theta * np.arange(cutoff + 1)))
    )


def _mixing_expm(cutoff: int, theta: float) -> np.ndarray:
    """expm of theta (a^dag b - a b^dag), per total-photon sector (exact)."""
    n1 = cutoff + 1
    out = np.zeros((n1 * n1, n1 * n1), dtype=complex)
    for tot in range(2 * cutoff + 1):
        ks = np.arange(max(0, tot - cutoff), min(tot, cutoff) + 1)
        idx = ks * n1 + (tot - ks)
        g = np.zeros((len(ks), len(ks)), dtype=complex)
        for i, k in enumerate(ks):
            if k + 1 <= cutoff and tot - k - 1 >= 0:
                g[i + 1, i] += np.sqrt((k + 1) * (tot - k))
            if k - 1 >= max(0, tot - cutoff):
                g[i - 1, i] -= np.sqrt(k * (tot - k + 1))
        out[np.ix_(idx, idx)] = scipy.linalg.expm(theta * g)
    return out


def beam_splitter_5050(cutoff: int) -> FockOperator:
    """exp((pi/4)(a^dag b - a b^dag)); conserves total photon number exactly."""
    return FockOperator(cutoff, 2, _mixing_expm(cutoff, np.pi / 4))


def mode_mixer(cutoff: int, theta: float) -> FockOperator:
    """exp(theta (a^dag b - a b^dag)) for a general mixing angle."""
    return FockOperator(cutoff, 2, _mixing_expm(cutoff, theta))


def opa(cutoff: int, alpha_param: float) -> FockOperator:
    """exp(-(alpha/2)(a^dag b^dag - a b)), per photon-number-difference sector."""
    n1 = cutoff + 1
    out = np.zeros((n1 * n1, n1 * n1), dtype=complex)
    for diff in range(-cutoff, cutoff + 1):
        ks = np.array([k for k in range(n1) if 0 <= k - diff <= cutoff])
        idx = ks * n1 + (ks - diff)
        g = np.zeros((len(ks), len(ks)), dtype=complex)
        for i, k in enumerate(ks):
            if k + 1 <= cutoff and k - diff + 1 <= cutoff:
                g[i + 1, i] += -(alpha_param / 2.0) * np.sqrt((k + 1) * (k - diff + 1))
            if k - 1 >= 0 and k - diff - 1 >= 0:
                g[i - 1, i] += (alpha_param / 2.0) * np.sqrt(k * (k - diff))
        out[np.ix_(idx, idx)] = scipy.linalg.expm(g)
    op = FockOperator(cutoff, 2, out)
    defect = unitarity_defect(op)
    if defect > UNITARITY_WARN_TOL:
        op = FockOperator(
            cutoff, 2, out,
            (f"truncation: OPA({alpha_param}) unitarity defect {defect:.2e}"
             f" at cutoff {cutoff}",),
        )
    return op


# ---------------------------------------------------------------------------
# Basis helpers
# ---------------------------------------------------------------------------

def basis_state(cutoff: int, *ns: int) -> np.ndarray:
    """Number state |n> or |n_a, n_b> as a dense vector."""
    dim = (cutoff + 1) ** len(ns)
    idx = 0
    for n in ns:
        if not 0 <= n <= cutoff:
            raise ValueError(f"occupation {n} outside cutoff {cutoff}")
        idx = idx * (cutoff + 1) + n
    v = np.zeros(dim, dtype=complex)
    v[idx] = 1.0
    return v


def total_photon_numbers(cutoff: int) -> np.ndarray:
    """Total photon number of each two-mode basis state, in vector order."""
    n = np.arange(cutoff + 1)
    return np.add.outer(n, n).reshape(-1)


def block_mask(cutoff: int, max_total: int) -> np.ndarray:
    """Boolean mask selecting two-mode basis states with total photons <= max_total."""
    return total_photon_numbers(cutoff) <= max_total


# ---------------------------------------------------------------------------
# Regularized Dirac states
# ---------------------------------------------------------------------------

def identity_doubleket(cutoff: int, lam: float) -> RegularizedState:
    """Normalized two-mode squeezed vacuum sum_n lambda^n |n, n>.

    The sharp limit lambda -> 1 recovers the (non-normalizable) identity
    double-ket. Refuses lambda whose truncated tail mass lambda^(2(N+1))
    exceeds 1e-4; tails above 1e-8 attach a warning.
    """
    if not 0.0 < lam < 1.0:
        raise ValueError("lambda must lie in (0, 1)")
    tail = lam ** (2 * (cutoff + 1))
    if tail > TAIL_ERROR_TOL:
        raise ValueError(
            f"lambda = {lam} too close to 1 for cutoff {cutoff}:"
            f" tail mass {tail:.2e}"
        )
    warns = ()
    if tail > TAIL_WARN_TOL:
        warns = (f"truncation: identity double-ket tail mass {tail:.2e}"
                 f" at lambda = {lam}, cutoff {cutoff}",)
    n1 = cutoff + 1
    amps = np.zeros(n1 * n1, dtype=complex)
    amps[np.arange(n1) * n1 + np.arange(n1)] = lam ** np.arange(n1)
    amps /= np.linalg.norm(amps)
    return RegularizedState(cutoff, 2, amps, {"lam": lam}, warns)


def displaced_identity_doubleket(cutoff: int, lam: float, z: complex) -> RegularizedState:
    """(D(z) kron I) applied to the regularized identity double-ket, normalized."""
    base = identity_doubleket(cutoff, lam)
    d_op = displacement(cutoff, z)
    mat = d_op.matrix @ base.amplitudes.reshape(cutoff + 1, cutoff + 1)
    amps = mat.reshape(-1)
    amps /= np.linalg.norm(amps)
    # displacement can push weight over the cutoff; estimate from a padded build
    pad = _TAIL_PAD
    big = identity_doubleket(cutoff + pad, lam)
    big_mat = displacement(cutoff + pad, z).matrix @ big.amplitudes.reshape(
        cutoff + pad + 1, cutoff + pad + 1
    )
    tail = float(
        (np.abs(big_mat) ** 2).sum()
        - (np.abs(big_mat[: cutoff + 1, : cutoff + 1]) ** 2).sum()
    )
    warns = base.warnings + d_op.warnings
    if tail > TAIL_WARN_TOL:
        warns = warns + (
            f"truncation: displaced double-ket tail mass {tail:.2e}"
            f" at lambda = {lam}, z = {z}, cutoff {cutoff}",
        )
    return RegularizedState(
        cutoff, 2, amps,
        {"lam": lam, "z_re": float(np.real(z)), "z_im": float(np.imag(z))},
        warns,
    )


def heterodyne_eigen_residual(cutoff: int, lam: float, z: complex) -> float:
    """Norm of (a - b^dag - z) applied to the regularized displaced double-ket.

    Converges to zero as lambda -> 1 at adequate cutoff, certifying the state
    as a generalized eigenvector of the heterodyne photocurrent a - b^dag; the
    value is independent of z because the displacement commutes through.
    """
    state = displaced_identity_doubleket(cutoff, lam, z)
    a = _ladder(cutoff)
    m = state.amplitudes.reshape(cutoff + 1, cutoff + 1)
    # (a kron I) v = vec(a m); (I kron b^dag) v = vec(m b)
    resid = a @ m - m @ a - z * m
    return float(np.linalg.norm(resid))


def quad_eigenstate_approx(cutoff: int, x: float, phi: float, s: float) -> RegularizedState:
    """Normalizable stand-in for the quadrature eigenvector |x>_phi.

    Built as exp(i phi n) D(x) S(s) |0>: a squeezed vacuum of X_0 variance
    s^2/4, displaced to mean x, then rotated so the sharp axis lies along
    X_phi with mean <X_phi> = x. Smaller s means a sharper approximation.
    """
    if not 0.0 < s <= 1.0:
        raise ValueError("sharpness s must lie in (0, 1]")

    def build(n: int) -> np.ndarray:
        vac = np.zeros(n + 1, dtype=complex)
        vac[0] = 1.0
        st = squeezer(n, s).matrix @ vac
        st = displacement(n, x).matrix @ st
        return phase_shift(n, -phi).matrix @ st

    amps = build(cutoff)
    amps /= np.linalg.norm(amps)
    big = build(cutoff + _TAIL_PAD)
    tail = float((np.abs(big[cutoff + 1:]) ** 2).sum())
    warns = ()
    if tail > TAIL_WARN_TOL:
        warns = (f"truncation: quadrature eigenstate tail mass {tail:.2e}"
                 f" at x = {x}, phi = {phi}, s = {s}, cutoff {cutoff}",)
    return RegularizedState(cutoff, 1, amps, {"x": x, "phi": phi, "s": s}, warns)


# ---------------------------------------------------------------------------
# The SUM gate: direct exponential and the optical five-factor chain
# ---------------------------------------------------------------------------

def sum_gate(cutoff: int) -> FockOperator:
    """exp(-2i X_{pi/2} kron X_0), evaluated spectrally.

    Both quadratures are Hermitian, so the exponential of the Kronecker
    product factorizes over their eigenbases; this is exact and avoids a
    dense two-mode Pade exponential.
    """
    p = quadrature(cutoff, np.pi / 2).matrix
    x = quadrature(cutoff, 0.0).matrix
    dp, up = np.linalg.eigh(p)
    dx, ux = np.linalg.eigh(x)
    u = np.kron(up, ux)
    phases = np.exp(-2j * np.outer(dp, dx).reshape(-1))
    return FockOperator(cutoff, 2, (u * phases) @ u.conj().T)


def sum_gate_circuit(
    cutoff: int, params: gaussian.DecompositionParams | None = None
) -> FockOperator:
    """The optical realization of the SUM gate as a five-factor product.

    50-50 beam splitter, squeezer pair (r1, r1^dag), two-mode squeezer of
    exponent alpha, mode mixer of angle beta/2, squeezer pair (r2^dag, r2),
    multiplied in operator order. Warnings of the factors are propagated.
    """
    if params is None:
        params = gaussian.decomposition_params()
    s1 = squeezer(cutoff, params.r1)
    s2 = squeezer(cutoff, params.r2)
    opa_op = opa(cutoff, params.alpha)
    mat = (
        beam_splitter_5050(cutoff).matrix
        @ np.kron(s1.matrix, s1.matrix.conj().T)
        @ opa_op.matrix
        @ _mixing_expm(cutoff, params.beta / 2.0)
        @ np.kron(s2.matrix.conj().T, s2.matrix)
    )
    warns = s1.warnings + s2.warnings + opa_op.warnings
    return FockOperator(cutoff, 2, mat, warns)


def phase_aligned_block_distance(
    a: np.ndarray, b: np.ndarray, mask: np.ndarray
) -> float:
    """Entrywise max of a - e^{i theta} b on a basis block, theta chosen so the
    largest-modulus element of b on the block matches a (global phases are
    unobservable)."""
    sel = np.outer(mask, mask)
    ab = np.where(sel, a, 0.0)
    bb = np.where(sel, b, 0.0)
    i, j = np.unravel_index(np.argmax(np.abs(bb)), bb.shape)
    phase = ab[i, j] / bb[i, j]
    phase /= abs(phase)
    return float(np.abs(ab - phase * bb).max())


def sum_gate_block_distance(cutoff: int, block_photons: int = 10) -> float:
    """Distance between the optical chain and the direct exponential on the
    subspace of total photon number <= block_photons, modulo global phase."""
    mask = block_mask(cutoff, block_photons)
    return phase_aligned_block_distance(
        sum_gate(cutoff).matrix, sum_gate_circuit(cutoff).matrix, mask
    )


# ---------------------------------------------------------------------------
# Beam-splitter factorization of the heterodyne eigenvectors
# ---------------------------------------------------------------------------

def matched_lambda(s: float) -> float:
    """Damping parameter of the two-mode squeezed vacuum produced by feeding a
    50-50 beam splitter with orthogonally squeezed inputs of sharpness s."""
    return (1.0 - s * s) / (1.0 + s * s)


def entbs_output(cutoff: int, x: float, y: float, s: float) -> RegularizedState:
    """Beam-splitter image of |x/sqrt2>_0 kron |y/sqrt2>_{pi/2} at sharpness s."""
    in_a = quad_eigenstate_approx(cutoff, x / np.sqrt(2.0), 0.0, s)
    in_b = quad_eigenstate_approx(cutoff, y / np.sqrt(2.0), np.pi / 2.0, s)
    out = beam_splitter_5050(cutoff).matrix @ np.kron(
        in_a.amplitudes, in_b.amplitudes
    )
    return RegularizedState(
        cutoff, 2, out, {"x": x, "y": y, "s": s},
        in_a.warnings + in_b.warnings,
    )


def entbs_fidelity(cutoff: int, x: float, y: float, s: float) -> float:
    """Squared overlap of the beam-splitter image with the regularized
    displaced double-ket |D(x+iy)>> at the matched lambda."""
    out = entbs_output(cutoff, x, y, s)
    ref = displaced_identity_doubleket(cutoff, matched_lambda(s), x + 1j * y)
    return float(abs(np.vdot(ref.amplitudes, out.amplitudes)) ** 2)


def entbs_fidelity_scan(
    cutoff: int, x: float, y: float, s: float, lambdas
) -> np.ndarray:
    """Fidelity of the beam-splitter image against references over a lambda grid,
    to confirm empirically that the matched lambda maximizes the overlap."""
    out = entbs_output(cutoff, x, y, s)
    fids = np.empty(len(lambdas))
    for i, lam in enumerate(lambdas):
        ref = displaced_identity_doubleket(cutoff, float(lam), x + 1j * y)
        fids[i] = abs(np.vdot(ref.amplitudes, out.amplitudes)) ** 2
    return fids


# ---------------------------------------------------------------------------
# Truncation diagnostics and algebra helpers
# ---------------------------------------------------------------------------

def cutoff_convergence_defect(
    build: Callable[[int], FockOperator],
    cutoff: int,
    pad: int = 8,
    source_fraction: float = 0.25,
) -> float:
    """Truncation error of a constructor at a given cutoff.

    Builds the operator at ``cutoff`` and at ``cutoff + pad``, restricts the
    larger one to the smaller space, and returns the worst column-wise norm
    difference over source states in the lowest ``source_fraction`` of the
    spectrum. Decays to zero as the cutoff grows for every Gaussian element.
    """
    small = build(cutoff)
    big = build(cutoff + pad)
    n1 = cutoff + 1
    if small.modes == 1:
        restricted = big.matrix[:n1, :n1]
        src = np.arange(n1) <= int(source_fraction * cutoff)
    else:
        idx = (np.arange(n1)[:, None] * (cutoff + pad + 1) + np.arange(n1)).reshape(-1)
        restricted = big.matrix[np.ix_(idx, idx)]
        src = total_photon_numbers(cutoff) <= int(source_fraction * cutoff)
    diff = small.matrix - restricted
    return float(np.linalg.norm(diff[:, src], axis=0).max())


def su11_generators(cutoff: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Two-mode su(1,1) generators Kx, Ky, Kz at the given cutoff.

    Kx = (a^dag b^dag + a b)/2, Ky = i(a b^dag + a^dag b)/2,
    Kz = (a^dag^2 - a^2 + b^dag^2 - b^2)/4; on states far enough from the
    cutoff they satisfy Kz = i [Kx, Ky], and X_0 kron X_0 = (Kx - i Ky)/2.
    """
    a = _ladder(cutoff)
    ad = a.conj().T
    eye = np.eye(cutoff + 1)
    kx = 0.5 * (np.kron(ad, ad) + np.kron(a, a))
    ky = 0.5j * (np.kron(a, ad) + np.kron(ad, a))
    sq_gen = ad @ ad - a @ a
    kz = 0.25 * (np.kron(sq_gen, eye) + np.kron(eye, sq_gen))
    return kx, ky, kz
