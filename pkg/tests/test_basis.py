import numpy as np
import pytest

from animdmp import (
    BasisSet,
    DmpModel,
    ValidationError,
    basis_activations,
    forcing,
    uniform_basis,
)


class TestUniformBasis:
    def test_centers_span_one_to_zero(self):
        basis = uniform_basis(10)
        assert basis.centers[0] == 1.0
        assert basis.centers[-1] == 0.0
        assert np.all(np.diff(basis.centers) < 0.0)
        spacing = np.diff(basis.centers)
        assert np.max(np.abs(spacing - spacing[0])) <= 1e-12

    def test_adjacent_gaussians_cross_at_half(self):
        basis = uniform_basis(10)
        mid = 0.5 * (basis.centers[0] + basis.centers[1])
        acts = basis_activations(basis, mid)
        assert acts[0] == pytest.approx(0.5, abs=1e-12)
        assert acts[1] == pytest.approx(0.5, abs=1e-12)

    def test_single_gaussian_allowed(self):
        basis = uniform_basis(1)
        assert basis.count == 1
        assert basis.centers[0] == 1.0


class TestActivations:
    def test_activation_at_center_is_one(self):
        basis = uniform_basis(7)
        for i, c in enumerate(basis.centers):
            assert basis_activations(basis, c)[i] == 1.0

    def test_two_basis_midpoint_symmetry(self):
        basis = uniform_basis(2)
        acts = basis_activations(basis, 0.5)
        assert acts[0] == acts[1]

    def test_all_positive(self):
        basis = uniform_basis(15)
        rng = np.random.Generator(np.random.Philox(3))
        xs = rng.uniform(0.0, 1.0, 200)
        acts = basis_activations(basis, xs)
        assert acts.shape == (200, 15)
        assert np.all(acts > 0.0)
        assert np.all(acts <= 1.0)


class TestForcing:
    def model(self, weights):
        weights = np.atleast_2d(np.asarray(weights, dtype=float))
        return DmpModel(basis=uniform_basis(weights.shape[1]), weights=weights,
                        goal=np.zeros(weights.shape[0]),
                        start=np.zeros(weights.shape[0]), tau=1.0, dt=0.01)

    def test_zero_weights_give_zero_everywhere(self):
        model = self.model(np.zeros((3, 8)))
        for x in np.linspace(0.0, 1.0, 17):
            assert np.all(forcing(model, float(x)) == 0.0)

    def test_phase_gating_at_zero(self):
        rng = np.random.Generator(np.random.Philox(5))
        model = self.model(rng.uniform(-40, 40, size=(2, 12)))
        assert np.all(forcing(model, 0.0) == 0.0)

    def test_single_basis_collapses_to_weight_times_phase(self):
        model = self.model([[3.5]])
        for x in (0.0, 0.25, 0.7, 1.0):
            assert forcing(model, x)[0] == pytest.approx(3.5 * x, abs=1e-15)


class TestValidation:
    def test_unequal_spacing_rejected(self):
        with pytest.raises(ValidationError):
            BasisSet(centers=np.array([1.0, 0.6, 0.0]),
                     widths=np.array([1.0, 1.0, 1.0]))

    def test_increasing_centers_rejected(self):
        with pytest.raises(ValidationError):
            BasisSet(centers=np.array([0.0, 0.5, 1.0]),
                     widths=np.array([1.0, 1.0, 1.0]))

    def test_nonpositive_width_rejected(self):
        with pytest.raises(ValidationError):
            BasisSet(centers=np.array([1.0, 0.0]), widths=np.array([1.0, 0.0]))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            BasisSet(centers=np.array([1.0, 0.0]), widths=np.array([1.0]))

    def test_immutability(self):
        basis = uniform_basis(5)
        with pytest.raises(ValueError):
            basis.centers[0] = 2.0
