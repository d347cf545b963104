"""Attractor integration: turn a model (plus optional modulations) into motion.

A rollout is a single-threaded state machine stepped with explicit Euler
at the model's dt. The nominal window covers steps 0..N with the phase
decaying 1 -> 0; an appended settling window holds the phase at 0 so the
critically damped attractor finishes converging. The goal may be swapped
while the rollout runs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NumericAbort, ValidationError
from .model import DmpModel, forcing
from .phase import phase_linear

DEFAULT_SETTLE_FRACTION = 0.5


@dataclass(frozen=True)
class RolloutOptions:
    """Rollout window and initial state.

    steps defaults to round(tau / dt); settle_steps to half the nominal
    window (phase pinned at 0). start/velocity override the initial
    state, which defaults to (model.start, 0).
    """

    steps: int | None = None
    settle_steps: int | None = None
    start: tuple | None = None
    velocity: tuple | None = None


@dataclass(frozen=True)
class SystemState:
    """Snapshot of a running rollout: kinematic state, phase, step index."""

    y: np.ndarray
    yd: np.ndarray
    ydd: np.ndarray
    x: float
    step: int

    def __post_init__(self):
        if not 0.0 <= self.x <= 1.0:
            raise ValidationError("phase must lie in [0, 1]")
        if self.step < 0:
            raise ValidationError("step must be >= 0")


@dataclass(frozen=True)
class Trajectory:
    """Generated motion: positions, derivatives, and the phase trace."""

    dt: float
    positions: np.ndarray
    velocities: np.ndarray
    accelerations: np.ndarray
    phase: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        vel = np.asarray(self.velocities, dtype=float)
        acc = np.asarray(self.accelerations, dtype=float)
        phase = np.asarray(self.phase, dtype=float)
        if pos.ndim != 2:
            raise ValidationError("positions must be a (steps, dims) matrix")
        if vel.shape != pos.shape or acc.shape != pos.shape:
            raise ValidationError("kinematic matrices must share one shape")
        if phase.shape != (pos.shape[0],):
            raise ValidationError("phase length must match the row count")
        if np.any(np.diff(phase) > 0.0):
            raise ValidationError("phase trace must be non-increasing")
        if not (np.isfinite(self.dt) and self.dt > 0.0):
            raise ValidationError("dt must be positive and finite")
        for arr in (pos, vel, acc, phase):
            arr.flags.writeable = False
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "velocities", vel)
        object.__setattr__(self, "accelerations", acc)
        object.__setattr__(self, "phase", phase)
        object.__setattr__(self, "dt", float(self.dt))

    @property
    def n_steps(self) -> int:
        return int(self.positions.shape[0])

    @property
    def n_dims(self) -> int:
        return int(self.positions.shape[1])

    def times(self) -> np.ndarray:
        return np.arange(self.n_steps) * self.dt


def default_steps(model: DmpModel) -> int:
    return max(1, int(round(model.tau / model.dt)))


def default_settle_steps(model: DmpModel) -> int:
    return int(round(DEFAULT_SETTLE_FRACTION * model.tau / model.dt))


class Rollout:
    """Stepwise integrator with online goal adaptation.

    Use `step()` to advance one integration step (False once complete),
    `set_goal()` to retarget the attractor from the next step onward,
    and `run()` to finish and collect the Trajectory.
    """

    def __init__(self, model: DmpModel, options: RolloutOptions | None = None,
                 pipeline=None):
        if pipeline is not None and pipeline.model is not model:
            raise ValidationError(
                "rollout with a pipeline must use pipeline.model "
                "(the pipeline already carries the transformed model)"
            )
        options = options or RolloutOptions()
        steps = options.steps if options.steps is not None else default_steps(model)
        settle = (options.settle_steps if options.settle_steps is not None
                  else default_settle_steps(model))
        if steps < 1:
            raise ValidationError("steps must be >= 1")
        if settle < 0:
            raise ValidationError("settle_steps must be >= 0")

        self._model = model
        self._pipeline = pipeline
        self._dt = model.dt
        self._tau = model.tau
        self._tau2 = model.tau**2
        self._alpha = model.alpha
        self._beta = model.beta
        self._steps = steps
        self._rows = steps + 1 + settle
        self._goal = model.goal.copy()

        if pipeline is not None:
            phase_fn = pipeline.build_phase(steps)
        else:
            phase_fn = phase_linear(steps)
        self._phase = np.zeros(self._rows)
        self._phase[: steps + 1] = phase_fn.values

        ndim = model.n_dims
        y0 = model.start if options.start is None else np.asarray(options.start, dtype=float)
        v0 = (np.zeros(ndim) if options.velocity is None
              else np.asarray(options.velocity, dtype=float))
        if y0.shape != (ndim,) or v0.shape != (ndim,):
            raise ValidationError("initial state dimension mismatch")
        if not (np.all(np.isfinite(y0)) and np.all(np.isfinite(v0))):
            raise ValidationError("initial state must be finite")

        self._pos = np.zeros((self._rows, ndim))
        self._vel = np.zeros((self._rows, ndim))
        self._acc = np.zeros((self._rows, ndim))
        self._pos[0] = y0
        self._vel[0] = v0
        self._y = y0.copy()
        self._yd = v0.copy()
        self._n = 0
        self._result = None

    @property
    def model(self) -> DmpModel:
        return self._model

    @property
    def current_step(self) -> int:
        return self._n

    @property
    def total_steps(self) -> int:
        return self._rows - 1

    @property
    def state(self) -> SystemState:
        """Snapshot of the current integration state."""
        n = self._n
        return SystemState(y=self._y.copy(), yd=self._yd.copy(),
                           ydd=self._acc[max(0, n - 1)].copy(),
                           x=float(self._phase[n]), step=n)

    def set_goal(self, new_goal) -> None:
        """Swap the attractor target from the next integration step onward.

        Positions and velocities stay continuous; only the acceleration
        changes as the system converges toward the new goal.
        """
        g = np.asarray(new_goal, dtype=float).reshape(-1)
        if g.shape != self._goal.shape:
            raise ValidationError(
                f"goal has {g.size} dimensions, model has {self._goal.size}"
            )
        if not np.all(np.isfinite(g)):
            raise ValidationError("goal must be finite")
        self._goal[:] = g

    def _acceleration(self, n: int, y: np.ndarray, yd: np.ndarray) -> np.ndarray:
        x = self._phase[n]
        with np.errstate(over="ignore", invalid="ignore"):
            # Overflow surfaces as a NumericAbort via the finiteness checks.
            if self._pipeline is not None:
                f = self._pipeline.forcing(x)
            else:
                f = forcing(self._model, x)
            ydd = (self._alpha * (self._beta * (self._goal - y)
                                  - self._tau * yd) + f) / self._tau2
        if self._pipeline is not None:
            ydd = self._pipeline.acceleration_stage(ydd, n, self._dt)
        return ydd

    def step(self) -> bool:
        """Advance one Euler step; returns False once the window is done."""
        n = self._n
        if n >= self._rows - 1:
            return False
        ydd = self._acceleration(n, self._y, self._yd)
        if not np.all(np.isfinite(ydd)):
            raise NumericAbort(n, int(np.flatnonzero(~np.isfinite(ydd))[0]))
        self._acc[n] = ydd
        self._yd += ydd * self._dt
        self._y += self._yd * self._dt
        if not (np.all(np.isfinite(self._y)) and np.all(np.isfinite(self._yd))):
            bad = ~(np.isfinite(self._y) & np.isfinite(self._yd))
            raise NumericAbort(n + 1, int(np.flatnonzero(bad)[0]))
        self._n = n + 1
        self._pos[self._n] = self._y
        self._vel[self._n] = self._yd
        return self._n < self._rows - 1

    def run(self) -> Trajectory:
        """Integrate to completion and return the Trajectory."""
        if self._result is not None:
            return self._result
        while self.step():
            pass
        # Final row: record the acceleration the dynamics would apply there.
        self._acc[-1] = self._acceleration(self._rows - 1, self._y, self._yd)
        positions = self._pos
        if self._pipeline is not None:
            positions = self._pipeline.output_stage(positions, self._vel)
        self._result = Trajectory(
            dt=self._dt,
            positions=positions,
            velocities=self._vel,
            accelerations=self._acc,
            phase=self._phase,
        )
        return self._result


def rollout(model: DmpModel, options: RolloutOptions | None = None,
            pipeline=None) -> Trajectory:
    """Integrate the model over its nominal plus settling window.

    With a pipeline (see `principles.compose`), pass `pipeline.model` as
    the model: weight-, goal-, and time-stage modulations are already
    baked into it, while phase, acceleration, and output stages are
    applied here, step-locally.
    """
    return Rollout(model, options, pipeline).run()
