import numpy as np
import pytest

from animdmp import (
    DmpModel,
    NumericAbort,
    Rollout,
    RolloutOptions,
    ValidationError,
    Trajectory,
    basis_activations,
    rollout,
    uniform_basis,
)


def zero_forcing_model(goal=1.0, start=0.0, tau=1.0, dt=0.01, ndim=1):
    basis = uniform_basis(2)
    return DmpModel(basis=basis, weights=np.zeros((ndim, 2)),
                    goal=[goal] * ndim, start=[start] * ndim, tau=tau, dt=dt)


def critically_damped_oracle(t, start, goal, tau, alpha):
    """Closed-form step response of the unforced attractor from rest."""
    lam = alpha / (2.0 * tau)
    return goal + (start - goal) * (1.0 + lam * t) * np.exp(-lam * t)


def reintegrate(model, goal_switch=None):
    """Independent Euler re-integration oracle (same scheme, own code)."""
    steps = int(round(model.tau / model.dt))
    settle = int(round(0.5 * model.tau / model.dt))
    rows = steps + 1 + settle
    y = model.start.copy()
    yd = np.zeros_like(y)
    g = model.goal.copy()
    out = np.zeros((rows, y.size))
    out[0] = y
    for n in range(rows - 1):
        if goal_switch is not None and n == goal_switch[0]:
            g = np.asarray(goal_switch[1], dtype=float)
        x = max(0.0, 1.0 - n / steps) if n <= steps else 0.0
        psi = basis_activations(model.basis, x)
        f = (model.weights @ psi) / psi.sum() * x
        ydd = (model.alpha * (model.beta * (g - y) - model.tau * yd) + f) / model.tau**2
        yd = yd + ydd * model.dt
        y = y + yd * model.dt
        out[n + 1] = y
    return out


class TestAttractor:
    def test_step_response_matches_closed_form(self):
        model = zero_forcing_model(dt=0.0001)
        traj = rollout(model)  # default settle: total window 1.5 tau
        oracle = critically_damped_oracle(traj.times(), 0.0, 1.0,
                                          model.tau, model.alpha)
        assert np.max(np.abs(traj.positions[:, 0] - oracle)) < 5e-4
        assert abs(traj.positions[-1, 0] - 1.0) < 1e-3

    def test_no_overshoot(self):
        model = zero_forcing_model(dt=0.0001)
        traj = rollout(model)
        assert np.max(traj.positions[:, 0]) <= 1.0 + 1e-9

    def test_equilibrium_holds_exactly(self):
        model = zero_forcing_model(goal=0.7, start=0.7)
        traj = rollout(model)
        assert np.all(traj.positions == 0.7)
        assert np.all(traj.velocities == 0.0)

    def test_determinism(self, rich_model):
        a = rollout(rich_model)
        b = rollout(rich_model)
        assert np.array_equal(a.positions, b.positions)
        assert np.array_equal(a.velocities, b.velocities)
        assert np.array_equal(a.accelerations, b.accelerations)
        assert np.array_equal(a.phase, b.phase)

    def test_shared_phase_single_trace(self, model_4d):
        traj = rollout(model_4d)
        steps = int(round(model_4d.tau / model_4d.dt))
        assert traj.phase.shape == (traj.n_steps,)
        expected = 1.0 - np.arange(steps + 1) / steps
        assert np.array_equal(traj.phase[:steps + 1], expected)
        assert np.all(traj.phase[steps + 1:] == 0.0)

    def test_settle_rows_appended(self, rich_model):
        steps = int(round(rich_model.tau / rich_model.dt))
        traj = rollout(rich_model, RolloutOptions(settle_steps=25))
        assert traj.n_steps == steps + 1 + 25
        bare = rollout(rich_model, RolloutOptions(settle_steps=0))
        assert bare.n_steps == steps + 1

    def test_bounded_weights_converge_with_long_settle(self):
        # Large-weight models still reach the goal once the attractor
        # gets enough forcing-free time (phase pinned at 0).
        rng = np.random.Generator(np.random.Philox(11))
        for _ in range(10):
            nb = int(rng.integers(5, 20))
            w = rng.uniform(-1e4, 1e4, size=(2, nb))
            model = DmpModel(basis=uniform_basis(nb), weights=w,
                             goal=[0.3, -0.2], start=[0.0, 0.0],
                             tau=1.0, dt=0.005)
            steps = int(round(model.tau / model.dt))
            traj = rollout(model, RolloutOptions(settle_steps=3 * steps))
            assert np.max(np.abs(traj.positions[-1] - model.goal)) < 1e-3


class TestGoalSwitch:
    def test_switch_mid_rollout_converges(self):
        model = zero_forcing_model(goal=1.0)
        r = Rollout(model)
        half = int(round(0.5 * model.tau / model.dt))
        for _ in range(half):
            r.step()
        r.set_goal([2.0])
        traj = r.run()
        assert abs(traj.positions[-1, 0] - 2.0) < 1e-3
        oracle = reintegrate(model, goal_switch=(half, [2.0]))
        assert np.max(np.abs(traj.positions - oracle)) < 1e-9

    def test_switch_to_same_goal_is_noop(self, rich_model):
        r = Rollout(rich_model)
        for _ in range(40):
            r.step()
        r.set_goal(rich_model.goal)
        switched = r.run()
        plain = rollout(rich_model)
        assert np.array_equal(switched.positions, plain.positions)
        assert np.array_equal(switched.velocities, plain.velocities)

    def test_switch_at_step_zero_equals_retarget(self, rich_model):
        import dataclasses

        r = Rollout(rich_model)
        r.set_goal([2.5])
        switched = r.run()
        retargeted = dataclasses.replace(rich_model, goal=np.array([2.5]))
        plain = rollout(retargeted)
        assert np.array_equal(switched.positions, plain.positions)

    def test_dimension_mismatch_rejected(self, rich_model):
        r = Rollout(rich_model)
        with pytest.raises(ValidationError):
            r.set_goal([1.0, 2.0])

    def test_nonfinite_goal_rejected(self, rich_model):
        r = Rollout(rich_model)
        with pytest.raises(ValidationError):
            r.set_goal([np.inf])


class TestNumericAbort:
    def test_abort_carries_step_and_dimension(self):
        # The normalized forcing never exceeds max|w|, so overflow needs
        # the 1/tau^2 amplification of a short execution time.
        basis = uniform_basis(2)
        model = DmpModel(basis=basis, weights=np.full((1, 2), 1e308),
                         goal=[0.0], start=[0.0], tau=0.01, dt=0.01)
        with pytest.raises(NumericAbort) as err:
            rollout(model)
        assert err.value.step >= 0
        assert err.value.dim == 0


class TestSystemState:
    def test_snapshot_tracks_progress(self, rich_model):
        r = Rollout(rich_model)
        s0 = r.state
        assert s0.step == 0 and s0.x == 1.0
        assert np.array_equal(s0.y, rich_model.start)
        for _ in range(10):
            r.step()
        s = r.state
        assert s.step == 10
        assert 0.0 <= s.x <= 1.0
        assert s.y.shape == (rich_model.n_dims,)

    def test_snapshot_is_detached(self, rich_model):
        r = Rollout(rich_model)
        s = r.state
        r.step()
        assert np.array_equal(s.y, rich_model.start)  # copy, not a view


class TestTrajectoryType:
    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValidationError):
            Trajectory(dt=0.01, positions=np.zeros((5, 1)),
                       velocities=np.zeros((4, 1)),
                       accelerations=np.zeros((5, 1)),
                       phase=np.linspace(1, 0, 5))

    def test_increasing_phase_rejected(self):
        with pytest.raises(ValidationError):
            Trajectory(dt=0.01, positions=np.zeros((3, 1)),
                       velocities=np.zeros((3, 1)),
                       accelerations=np.zeros((3, 1)),
                       phase=np.array([0.0, 0.5, 1.0]))
