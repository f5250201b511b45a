import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from singlewell import (
    DoubleWellParams,
    HermitianOperator,
    InvariantError,
    SystemParams,
    acceleration_hamiltonian,
    build_spin_operators,
    double_well_hamiltonian,
    renormalized_q,
    single_well_hamiltonian,
    total_hamiltonian,
)
from conftest import harmonic_params, random_valid_params


class TestHermitianOperator:
    def test_rejects_non_hermitian(self):
        with pytest.raises(InvariantError):
            HermitianOperator(matrix=np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square(self):
        with pytest.raises(InvariantError):
            HermitianOperator(matrix=np.zeros((2, 3)))

    def test_dimension(self):
        assert HermitianOperator(matrix=np.eye(4)).dimension == 4


class TestSingleWell:
    def test_free_hamiltonian_is_diagonal(self):
        ops = build_spin_operators(10)
        h = single_well_hamiltonian(harmonic_params(n_particles=10, g=0.0, delta_eps=3.0), ops)
        assert np.allclose(h.matrix, -3.0 * ops.jz, atol=0)

    def test_two_constructions_agree_at_reference_point(self):
        ops = build_spin_operators(50)
        p = harmonic_params(g=80.0, delta_eps=10.0)
        q = renormalized_q(p)
        assert abs(q - (-0.2)) < 1e-12
        direct = single_well_hamiltonian(p, ops).matrix
        via_q = q * ops.jz + (p.eta * p.g / 50) * (ops.jx @ ops.jx + p.xi * (ops.jy @ ops.jy))
        assert np.abs(direct - via_q).max() < 1e-12

    @given(st.integers(min_value=0, max_value=2 ** 31 - 1))
    @settings(deadline=None, max_examples=30)
    def test_two_constructions_agree_randomly(self, seed):
        rng = np.random.default_rng(seed)
        p = random_valid_params(rng, n_particles=int(rng.integers(1, 31)))
        ops = build_spin_operators(p.n_particles)
        direct = single_well_hamiltonian(p, ops).matrix
        via_q = renormalized_q(p) * ops.jz + (p.eta * p.g / p.n_particles) * (
            ops.jx @ ops.jx + p.xi * (ops.jy @ ops.jy)
        )
        assert np.abs(direct - via_q).max() < 1e-12

    def test_isotropic_point_commutes_with_jz(self):
        # xi = 1, eta = -1, delta_a = 0: H = -de*Jz - (j(j+1) I - Jz^2)
        n = 12
        ops = build_spin_operators(n)
        p = SystemParams(n, float(n), 2.0, 0.0, -1.0, 1.0, 0.0, 1.0)
        h = single_well_hamiltonian(p, ops).matrix
        j = n / 2
        expected = -2.0 * ops.jz - (j * (j + 1) * np.eye(n + 1) - ops.jz @ ops.jz)
        assert np.abs(h - expected).max() < 1e-10
        assert np.abs(h @ ops.jz - ops.jz @ h).max() < 1e-12

    @given(st.integers(min_value=0, max_value=2 ** 31 - 1))
    @settings(deadline=None, max_examples=30)
    def test_parity_selection_rule(self, seed):
        # only Jz, Jx^2, Jy^2 appear: odd-offset matrix elements vanish identically
        rng = np.random.default_rng(seed)
        p = random_valid_params(rng, n_particles=int(rng.integers(2, 25)))
        ops = build_spin_operators(p.n_particles)
        h = single_well_hamiltonian(p, ops).matrix
        k = np.arange(p.n_particles + 1)
        odd = (np.abs(k[:, None] - k[None, :]) % 2) == 1
        assert np.all(h[odd] == 0.0)


class TestAcceleration:
    def test_zero_acceleration(self):
        ops = build_spin_operators(3)
        assert np.all(acceleration_hamiltonian(0.0, ops).matrix == 0.0)

    def test_unit_acceleration_is_jx(self):
        ops = build_spin_operators(2)
        assert np.array_equal(acceleration_hamiltonian(1.0, ops).matrix, ops.jx)

    def test_force_times_dipole_scaling(self):
        # lambda = 2 * chi * kappa with chi = 1, kappa = 1/sqrt(2)
        ops = build_spin_operators(6)
        h = acceleration_hamiltonian(2.0 * 1.0 * 2.0 ** -0.5, ops)
        assert np.abs(h.matrix - np.sqrt(2.0) * ops.jx).max() < 1e-12


class TestDoubleWell:
    def test_levels_only(self):
        ops = build_spin_operators(5)
        h = double_well_hamiltonian(DoubleWellParams(delta_eps=2.0, omega=0.0, u=0.0), ops)
        assert np.allclose(h.matrix, 2.0 * ops.jz, atol=0)

    def test_pure_tunneling_matches_acceleration_form(self):
        ops = build_spin_operators(5)
        h = double_well_hamiltonian(DoubleWellParams(delta_eps=0.0, omega=0.7, u=0.0), ops)
        assert np.abs(h.matrix - acceleration_hamiltonian(0.7, ops).matrix).max() == 0.0

    def test_interaction_commutes_with_jz(self):
        ops = build_spin_operators(8)
        dw = DoubleWellParams(delta_eps=1.0, omega=0.5, u=0.3)
        h = double_well_hamiltonian(dw, ops).matrix
        comm = h @ ops.jz - ops.jz @ h
        tunneling = 0.5 * (ops.jx @ ops.jz - ops.jz @ ops.jx)
        assert np.abs(comm - tunneling).max() < 1e-10


class TestTotal:
    def test_noninteracting_form(self):
        ops = build_spin_operators(9)
        p = harmonic_params(n_particles=9, g=0.0, delta_eps=4.0, lambda_acc=2.0)
        h = total_hamiltonian(p, ops)
        assert np.abs(h.matrix - (2.0 * ops.jx - 4.0 * ops.jz)).max() < 1e-12

    def test_lambda_derivative_is_exactly_jx(self):
        ops = build_spin_operators(9)
        p = harmonic_params(n_particles=9, g=30.0, delta_eps=4.0)
        h = 0.5
        plus = total_hamiltonian(harmonic_params(n_particles=9, g=30.0, delta_eps=4.0, lambda_acc=1.0 + h), ops)
        minus = total_hamiltonian(harmonic_params(n_particles=9, g=30.0, delta_eps=4.0, lambda_acc=1.0 - h), ops)
        diff = (plus.matrix - minus.matrix) / (2.0 * h)
        assert np.abs(diff - ops.jx).max() < 1e-13
        assert p.lambda_acc == 1.0

    def test_zero_acceleration_zero_coupling(self):
        ops = build_spin_operators(4)
        p = harmonic_params(n_particles=4, g=0.0, delta_eps=1.5, lambda_acc=0.0)
        assert np.abs(total_hamiltonian(p, ops).matrix - (-1.5) * ops.jz).max() < 1e-13

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            total_hamiltonian(harmonic_params(n_particles=5), build_spin_operators(6))

    @given(st.integers(min_value=0, max_value=2 ** 31 - 1))
    @settings(deadline=None, max_examples=30)
    def test_every_construction_is_hermitian(self, seed):
        rng = np.random.default_rng(seed)
        p = random_valid_params(rng, n_particles=int(rng.integers(1, 31)))
        ops = build_spin_operators(p.n_particles)
        for h in (
            single_well_hamiltonian(p, ops),
            acceleration_hamiltonian(p.lambda_acc, ops),
            total_hamiltonian(p, ops),
        ):
            assert np.abs(h.matrix - h.matrix.conj().T).max() < 1e-12
