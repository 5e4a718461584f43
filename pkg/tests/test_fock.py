"""Tests for the truncated Fock-space operators and regularized states."""

import numpy as np
import pytest
import scipy.linalg

from bellgate import fock


def vacuum_expectation(op: np.ndarray) -> complex:
    return op[0, 0]


class TestLadderOps:
    def test_annihilation_on_one(self):
        a, _ = fock.mode_ops(5)
        np.testing.assert_allclose(a.matrix @ fock.basis_state(5, 1), fock.basis_state(5, 0))

    def test_creation_on_vacuum(self):
        _, adag = fock.mode_ops(5)
        np.testing.assert_allclose(adag.matrix @ fock.basis_state(5, 0), fock.basis_state(5, 1))

    def test_commutator_identity_below_cutoff(self):
        n = 9
        a, adag = fock.mode_ops(n)
        comm = a.matrix @ adag.matrix - adag.matrix @ a.matrix
        # sqrt(n)^2 rounds at machine epsilon, so "exact" means to eps here
        np.testing.assert_allclose(comm[:n, :n], np.eye(n + 1)[:n, :n], atol=1e-14)

    def test_bad_cutoff(self):
        with pytest.raises(ValueError):
            fock.mode_ops(0)


class TestQuadratures:
    def test_position_real_symmetric(self):
        x = fock.quadrature(8, 0.0).matrix
        assert np.abs(x.imag).max() == 0.0
        np.testing.assert_array_equal(x, x.T)

    def test_canonical_commutator(self):
        n = 10
        x = fock.quadrature(n, 0.0).matrix
        p = fock.quadrature(n, np.pi / 2).matrix
        comm = x @ p - p @ x
        block = slice(0, n - 1)
        np.testing.assert_allclose(
            comm[block, block], 0.5j * np.eye(n + 1)[block, block], atol=1e-14
        )

    def test_vacuum_variance(self):
        x = fock.quadrature(10, 0.0).matrix
        assert vacuum_expectation(x @ x).real == pytest.approx(0.25, abs=1e-14)


class TestDisplacement:
    def test_zero_is_identity(self):
        np.testing.assert_array_equal(fock.displacement(6, 0.0).matrix, np.eye(7))

    def test_coherent_vacuum_overlap(self):
        alpha = 1 + 1j
        d = fock.displacement(40, alpha)
        assert abs(d.matrix[0, 0]) == pytest.approx(
            np.exp(-abs(alpha) ** 2 / 2), abs=1e-8
        )

    def test_inverse_composition(self):
        d_plus = fock.displacement(40, 1.0)
        d_minus = fock.displacement(40, -1.0)
        np.testing.assert_allclose(
            d_plus.matrix @ d_minus.matrix, np.eye(41), atol=1e-8
        )

    def test_unitary_to_rounding(self):
        assert fock.unitarity_defect(fock.displacement(30, 1 + 1j)) <= 1e-12


class TestSqueezer:
    def test_unit_parameter_is_identity(self):
        np.testing.assert_array_equal(fock.squeezer(6, 1.0).matrix, np.eye(7))

    def test_inverse_composition(self):
        s = fock.squeezer(40, 1.3)
        s_inv = fock.squeezer(40, 1 / 1.3)
        np.testing.assert_allclose(s.matrix @ s_inv.matrix, np.eye(41), atol=1e-8)

    def test_invalid_parameter(self):
        with pytest.raises(ValueError):
            fock.squeezer(6, -0.5)


class TestPhaseShift:
    def test_zero_angle(self):
        np.testing.assert_array_equal(fock.phase_shift(5, 0.0).matrix, np.eye(6))

    def test_quarter_turns_compose(self):
        quarter = fock.phase_shift(5, np.pi / 2).matrix
        np.testing.assert_allclose(
            quarter @ quarter, fock.phase_shift(5, np.pi).matrix, atol=1e-14
        )

    def test_conjugation_inverts_squeezer(self):
        n, r = 40, 1.2
        quarter = fock.phase_shift(n, np.pi / 2).matrix
        conjugated = quarter @ fock.squeezer(n, r).matrix @ quarter.conj().T
        np.testing.assert_allclose(
            conjugated, fock.squeezer(n, 1 / r).matrix, atol=1e-9
        )


class TestBeamSplitter:
    def test_vacuum_invariant(self):
        v = fock.beam_splitter_5050(8).matrix
        np.testing.assert_allclose(
            v @ fock.basis_state(8, 0, 0), fock.basis_state(8, 0, 0), atol=1e-14
        )

    def test_single_photon_splits_evenly(self):
        v = fock.beam_splitter_5050(8).matrix
        out = v @ fock.basis_state(8, 1, 0)
        p10 = abs(np.vdot(fock.basis_state(8, 1, 0), out)) ** 2
        p01 = abs(np.vdot(fock.basis_state(8, 0, 1), out)) ** 2
        assert p10 == pytest.approx(0.5, abs=1e-10)
        assert p01 == pytest.approx(0.5, abs=1e-10)
        assert p10 + p01 == pytest.approx(1.0, abs=1e-12)

    def test_unitary(self):
        assert fock.unitarity_defect(fock.beam_splitter_5050(12)) <= 1e-10

    def test_number_conservation(self):
        n_tot = np.diag(fock.total_photon_numbers(10).astype(complex))
        v = fock.beam_splitter_5050(10).matrix
        assert np.abs(v @ n_tot - n_tot @ v).max() <= 1e-12
        rot = np.kron(np.eye(11), fock.phase_shift(10, np.pi / 2).matrix)
        assert np.abs(rot @ n_tot - n_tot @ rot).max() <= 1e-12

    def test_sector_route_matches_dense_expm(self):
        n = 10
        a = fock._ladder(n)
        gen = (np.pi / 4) * (np.kron(a.conj().T, a) - np.kron(a, a.conj().T))
        np.testing.assert_allclose(
            fock.beam_splitter_5050(n).matrix, scipy.linalg.expm(gen), atol=1e-12
        )


class TestOpa:
    def test_zero_gain_is_identity(self):
        np.testing.assert_array_equal(fock.opa(6, 0.0).matrix, np.eye(49))

    def test_pair_creation_structure(self):
        out = fock.opa(10, 0.7).matrix @ fock.basis_state(10, 0, 0)
        nonzero = np.flatnonzero(np.abs(out) > 1e-12)
        pairs = np.arange(11) * 12  # indices of |n, n>
        assert set(nonzero) <= set(pairs)

    def test_sector_route_matches_dense_expm(self):
        n, alpha = 10, -0.5493061443340549
        a = fock._ladder(n)
        ad = a.conj().T
        gen = -(alpha / 2) * (np.kron(ad, ad) - np.kron(a, a))
        np.testing.assert_allclose(
            fock.opa(n, alpha).matrix, scipy.linalg.expm(gen), atol=1e-12
        )

    def test_truncation_defect_decreases_with_cutoff(self):
        alpha = -0.5493061443340549
        defects = [
            fock.cutoff_convergence_defect(lambda n: fock.opa(n, alpha), n)
            for n in (20, 30, 40)
        ]
        assert defects[0] > defects[1] > defects[2]


class TestIdentityDoubleKet:
    def test_small_lambda_limit_is_vacuum(self):
        state = fock.identity_doubleket(6, 1e-6)
        assert abs(state.amplitudes[0]) == pytest.approx(1.0, abs=1e-11)

    def test_reduced_state_geometric_ratio(self):
        lam = 0.4
        state = fock.identity_doubleket(12, lam)
        m = state.amplitudes.reshape(13, 13)
        rho = m @ m.conj().T
        off_diag = rho - np.diag(np.diag(rho))
        assert np.abs(off_diag).max() <= 1e-14
        pops = np.diag(rho).real
        ratios = pops[1:6] / pops[:5]
        np.testing.assert_allclose(ratios, lam ** 2, atol=1e-12)

    def test_two_mode_squeezed_vacuum_relation(self):
        lam, n = 0.5, 20
        state = fock.identity_doubleket(n, lam)
        a = fock._ladder(n)
        m = state.amplitudes.reshape(n + 1, n + 1)
        # (a kron I - lam I kron b^dag) annihilates the state
        resid = a @ m - lam * (m @ a)
        assert np.linalg.norm(resid) <= 1e-9

    def test_normalized(self):
        state = fock.identity_doubleket(30, 0.7)
        assert np.linalg.norm(state.amplitudes) == pytest.approx(1.0, abs=1e-12)

    def test_lambda_too_large_for_cutoff(self):
        with pytest.raises(ValueError, match="too close"):
            fock.identity_doubleket(10, 0.9)

    def test_heavy_tail_warns_but_builds(self):
        state = fock.identity_doubleket(60, 0.9)
        assert any("tail" in w for w in state.warnings)

    def test_domain_validation(self):
        with pytest.raises(ValueError):
            fock.identity_doubleket(10, 0.0)
        with pytest.raises(ValueError):
            fock.identity_doubleket(10, 1.0)


class TestHeterodyneResidual:
    def test_closed_form_at_half(self):
        residual = fock.heterodyne_eigen_residual(40, 0.5, 0.0)
        assert residual == pytest.approx(np.sqrt(1.0 / 3.0), abs=1e-9)

    def test_residual_equals_scaled_creation_norm(self):
        # at z = 0 the defect reduces to (1 - lam) * || b^dag |state>> ||
        n, lam = 40, 0.5
        state = fock.identity_doubleket(n, lam)
        m = state.amplitudes.reshape(n + 1, n + 1)
        bdag_norm = np.linalg.norm(m @ fock._ladder(n))
        assert fock.heterodyne_eigen_residual(n, lam, 0.0) == pytest.approx(
            (1 - lam) * bdag_norm, abs=1e-9
        )

    def test_sharper_regularization_shrinks_residual(self):
        res_05 = fock.heterodyne_eigen_residual(60, 0.5, 1.0)
        res_09 = fock.heterodyne_eigen_residual(60, 0.9, 1.0)
        assert res_09 < res_05

    @pytest.mark.parametrize("z", [1.0, 1.0 - 0.5j, 2.0j])
    def test_displacement_independence(self, z):
        base = fock.heterodyne_eigen_residual(60, 0.5, 0.0)
        assert abs(fock.heterodyne_eigen_residual(60, 0.5, z) - base) <= 1e-8

    def test_reshape_route_matches_kron_route(self):
        n, lam, z = 12, 0.4, 0.3 + 0.2j
        state = fock.displaced_identity_doubleket(n, lam, z)
        a = fock._ladder(n)
        eye = np.eye(n + 1)
        zop = np.kron(a, eye) - np.kron(eye, a.conj().T) - z * np.eye((n + 1) ** 2)
        expected = np.linalg.norm(zop @ state.amplitudes)
        assert fock.heterodyne_eigen_residual(n, lam, z) == pytest.approx(
            expected, abs=1e-12
        )


class TestQuadEigenstate:
    def test_unsqueezed_origin_is_vacuum(self):
        state = fock.quad_eigenstate_approx(10, 0.0, 0.0, 1.0)
        np.testing.assert_allclose(state.amplitudes, fock.basis_state(10, 0), atol=1e-14)

    def test_mean_position(self):
        n = 120
        state = fock.quad_eigenstate_approx(n, 0.7, 0.0, 0.3)
        x = fock.quadrature(n, 0.0).matrix
        mean = np.vdot(state.amplitudes, x @ state.amplitudes).real
        assert mean == pytest.approx(0.7, abs=1e-8)

    def test_rotated_mean_follows_quadrature(self):
        n = 120
        state = fock.quad_eigenstate_approx(n, 0.7, np.pi / 2, 0.3)
        p = fock.quadrature(n, np.pi / 2).matrix
        mean = np.vdot(state.amplitudes, p @ state.amplitudes).real
        assert mean == pytest.approx(0.7, abs=1e-8)

    def test_variance_set_by_sharpness(self):
        n, s = 120, 0.3
        state = fock.quad_eigenstate_approx(n, 0.0, 0.0, s)
        x = fock.quadrature(n, 0.0).matrix
        var = np.vdot(state.amplitudes, x @ x @ state.amplitudes).real
        assert var == pytest.approx(s ** 2 / 4.0, abs=1e-6)

    def test_heavy_tail_warns(self):
        state = fock.quad_eigenstate_approx(60, 0.7, 0.0, 0.3)
        assert any("tail" in w for w in state.warnings)

    def test_sharpness_validation(self):
        with pytest.raises(ValueError):
            fock.quad_eigenstate_approx(10, 0.0, 0.0, 0.0)


class TestSumGate:
    def test_spectral_route_matches_dense_expm(self):
        n = 12
        p = fock.quadrature(n, np.pi / 2).matrix
        x = fock.quadrature(n, 0.0).matrix
        dense = scipy.linalg.expm(-2j * np.kron(p, x))
        np.testing.assert_allclose(fock.sum_gate(n).matrix, dense, atol=1e-12)

    def test_circuit_unitary_on_inner_block(self):
        n = 20
        circuit = fock.sum_gate_circuit(n)
        sel = np.outer(fock.block_mask(n, n // 2), fock.block_mask(n, n // 2))
        defect = np.abs(
            (circuit.matrix.conj().T @ circuit.matrix - np.eye(circuit.dim)) * sel
        ).max()
        assert defect <= 1e-6

    def test_block_distance_shrinks_with_cutoff(self):
        d20 = fock.sum_gate_block_distance(20)
        d30 = fock.sum_gate_block_distance(30)
        assert d30 < d20

    def test_vacuum_image_agreement(self):
        n = 30
        target = fock.sum_gate(n).matrix @ fock.basis_state(n, 0, 0)
        circuit = fock.sum_gate_circuit(n).matrix @ fock.basis_state(n, 0, 0)
        phase = np.vdot(circuit, target)
        phase /= abs(phase)
        assert np.linalg.norm(target - phase * circuit) <= 1e-4


class TestEntbs:
    def test_matched_lambda_closed_form(self):
        assert fock.matched_lambda(0.5) == pytest.approx(0.6, abs=1e-15)
        assert fock.matched_lambda(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_origin_fidelity_high(self):
        assert fock.entbs_fidelity(40, 0.0, 0.0, 0.5) >= 0.999

    def test_scan_peaks_at_matched_lambda(self):
        lams = np.arange(0.40, 0.81, 0.05)
        fids = fock.entbs_fidelity_scan(40, 0.0, 0.0, 0.5, lams)
        assert lams[np.argmax(fids)] == pytest.approx(fock.matched_lambda(0.5), abs=0.051)

    def test_output_normalized(self):
        out = fock.entbs_output(30, 0.5, -0.3, 0.5)
        assert np.linalg.norm(out.amplitudes) == pytest.approx(1.0, abs=1e-10)


class TestSu11Generators:
    def test_commutator_on_inner_block(self):
        n = 20
        kx, ky, kz = fock.su11_generators(n)
        mask = fock.block_mask(n, n - 2)
        sel = np.outer(mask, mask)
        resid = (1j * (kx @ ky - ky @ kx) - kz) * sel
        assert np.abs(resid).max() <= 1e-12

    def test_quadrature_product_generator_identity(self):
        n = 14
        kx, ky, _ = fock.su11_generators(n)
        x = fock.quadrature(n, 0.0).matrix
        xx = np.kron(x, x)
        np.testing.assert_allclose(xx, 0.5 * (kx - 1j * ky), atol=1e-13)


class TestTruncationDiagnostics:
    @pytest.mark.parametrize(
        "build",
        [
            lambda n: fock.displacement(n, 1 + 1j),
            lambda n: fock.squeezer(n, 1.3),
        ],
    )
    def test_single_mode_convergence(self, build):
        d_small = fock.cutoff_convergence_defect(build, 20)
        d_large = fock.cutoff_convergence_defect(build, 32)
        assert d_large < d_small

    def test_validation(self):
        with pytest.raises(ValueError):
            fock.FockOperator(3, 2, np.eye(4))
        with pytest.raises(ValueError):
            fock.RegularizedState(3, 1, np.zeros(3))
        with pytest.raises(ValueError):
            fock.basis_state(4, 5)
