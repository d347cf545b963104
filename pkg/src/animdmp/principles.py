"""Animation-principle modulations as composable transforms over a model.

Each principle is a small parameterized operator on one of the rollout's
surfaces: the weight matrix (arc, randomization), the model itself
(exaggeration factor, time scaling, goal override), the phase (slow-in/
slow-out, sector timing), the per-step acceleration (anticipation,
follow-through), or the output positions (secondary action). `compose`
bundles an entire ModulationConfig into a pipeline with a pinned,
deterministic application order.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field

import numpy as np
from scipy.ndimage import convolve1d

from .demonstration import Demonstration
from .errors import ValidationError
from .kinematics import (
    RobotConfig,
    validate_follow_coupling,
    validate_secondary_coupling,
)
from .model import DmpModel, forcing
from .phase import PhaseFunction, phase_linear, phase_slow, phase_timing
from .rollout import RolloutOptions, rollout


@dataclass(frozen=True)
class Coupling:
    """Directed source -> target dimension pair with sign delta (+1/-1)."""

    source: int
    target: int
    delta: int = 1

    def __post_init__(self):
        if self.source == self.target:
            raise ValidationError("coupling source and target must differ",
                                  rule="self-coupling")
        if self.delta not in (-1, 1):
            raise ValidationError("coupling delta must be +1 or -1",
                                  rule="delta")


@dataclass(frozen=True)
class ModulationConfig:
    """All principle intensities and coupling declarations.

    The default instance is neutral: it acts as the identity on any
    rollout. `t_ant` is the anticipation window in absolute seconds;
    `t_ant_fraction` is a convenience alternative expressed as a
    fraction of the (time-scaled) execution time. `slow_k` and
    `timing_sectors` are mutually exclusive, since both own the single
    shared phase.
    """

    p_arc: float = 0.0
    p_ant: float = 0.0
    t_ant: float = 0.0
    t_ant_fraction: float | None = None
    n_ant: int = 1
    important_dims: tuple | None = None
    slow_k: float | None = None
    p_time: float = 1.0
    timing_sectors: tuple | None = None
    p_exa: float = 1.0
    p_sec: float = 0.0
    sec_couplings: tuple = ()
    p_follow: float = 0.0
    follow_couplings: tuple = ()
    p_rand: float = 0.0
    seed: int = 0
    goal_override: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "sec_couplings", tuple(self.sec_couplings))
        object.__setattr__(self, "follow_couplings", tuple(self.follow_couplings))
        if self.important_dims is not None:
            object.__setattr__(self, "important_dims",
                               tuple(int(d) for d in self.important_dims))
        if self.timing_sectors is not None:
            object.__setattr__(
                self, "timing_sectors",
                tuple((float(f), float(s)) for f, s in self.timing_sectors))
        if self.goal_override is not None:
            object.__setattr__(self, "goal_override",
                               tuple(float(g) for g in self.goal_override))
        self._validate()

    def _validate(self):
        if not np.isfinite(self.p_arc):
            raise ValidationError("p_arc must be finite")
        if not (np.isfinite(self.p_ant) and self.p_ant >= 0.0):
            raise ValidationError("p_ant must be >= 0")
        if not (np.isfinite(self.t_ant) and self.t_ant >= 0.0):
            raise ValidationError("t_ant must be >= 0")
        if self.t_ant_fraction is not None:
            if not (np.isfinite(self.t_ant_fraction) and self.t_ant_fraction >= 0.0):
                raise ValidationError("t_ant_fraction must be >= 0")
            if self.t_ant != 0.0:
                raise ValidationError("give t_ant or t_ant_fraction, not both")
        if self.n_ant < 1:
            raise ValidationError("n_ant must be >= 1")
        if self.slow_k is not None and not (np.isfinite(self.slow_k) and self.slow_k > 0.0):
            raise ValidationError("slow_k must be positive")
        if not (np.isfinite(self.p_time) and self.p_time > 0.0):
            raise ValidationError("p_time must be positive")
        if not (np.isfinite(self.p_exa) and self.p_exa >= 0.0):
            raise ValidationError("p_exa must be >= 0")
        if not (np.isfinite(self.p_sec) and self.p_sec >= 0.0):
            raise ValidationError("p_sec must be >= 0")
        if not (np.isfinite(self.p_follow) and self.p_follow >= 0.0):
            raise ValidationError("p_follow must be >= 0")
        if not (np.isfinite(self.p_rand) and self.p_rand >= 0.0):
            raise ValidationError("p_rand must be >= 0")

    @property
    def is_neutral(self) -> bool:
        return (
            self.p_arc == 0.0
            and (self.p_ant == 0.0 or (self.t_ant == 0.0 and not self.t_ant_fraction))
            and self.slow_k is None
            and self.p_time == 1.0
            and self.timing_sectors is None
            and self.p_exa == 1.0
            and self.p_sec == 0.0
            and self.p_follow == 0.0
            and self.p_rand == 0.0
            and self.goal_override is None
        )


# ---------------------------------------------------------------------------
# weight-stage operators


def modulate_arc(weights: np.ndarray, p_arc: float) -> np.ndarray:
    """Broaden (p_arc > 0) or sharpen (p_arc < 0) the motion's arc.

    Positive intensities low-pass the per-dimension weight sequence with
    a 1-D Gaussian of sigma = p_arc basis indices (kernel truncated at
    +-3 sigma, renormalized, reflect padding, so constants pass through).
    Negative intensities apply the unsharp-mask complement
    w + (w - G(-p) * w), boosting high-frequency weight structure.
    """
    if not np.isfinite(p_arc):
        raise ValidationError("p_arc must be finite")
    if p_arc == 0.0:
        return weights
    sigma = abs(float(p_arc))
    radius = max(1, int(3.0 * sigma))
    offsets = np.arange(-radius, radius + 1)
    kernel = np.exp(-(offsets**2) / (2.0 * sigma**2))
    kernel /= kernel.sum()
    smoothed = convolve1d(weights, kernel, axis=-1, mode="reflect")
    if p_arc > 0.0:
        return smoothed
    return weights + (weights - smoothed)


def randomize_weights(weights: np.ndarray, p_rand: float, seed: int) -> np.ndarray:
    """Add seeded Gaussian noise scaled by each row's mean |weight|.

    Per entry w' = w + (1 + mean_i |w_i|) * p_rand * eps with
    eps ~ N(0, 1) from a Philox counter-based generator, so identical
    seeds reproduce identical weights across runs.
    """
    if not (np.isfinite(p_rand) and p_rand >= 0.0):
        raise ValidationError("p_rand must be >= 0")
    if p_rand == 0.0:
        return weights
    rng = np.random.Generator(np.random.Philox(int(seed)))
    eps = rng.standard_normal(weights.shape)
    scale = 1.0 + np.mean(np.abs(weights), axis=-1, keepdims=True)
    return weights + scale * p_rand * eps


# ---------------------------------------------------------------------------
# model-stage operators


def scale_time(model: DmpModel, p_time: float) -> DmpModel:
    """Scale the execution time: tau' = p_time * tau, weights untouched."""
    if not (np.isfinite(p_time) and p_time > 0.0):
        raise ValidationError("p_time must be positive")
    if p_time == 1.0:
        return model
    return dataclasses.replace(model, tau=p_time * model.tau)


def exaggerate(f: np.ndarray, p_exa: float) -> np.ndarray:
    """Scale the forcing term: amplify (> 1) or attenuate (< 1) the action."""
    return p_exa * f


def select_important_dims(demo: Demonstration, n_ant: int) -> list:
    """Indices of the n_ant dimensions with the largest position range.

    Importance is the per-dimension max - min position difference;
    returned descending by range, ties broken by the lower index.
    """
    if n_ant < 1 or n_ant > demo.n_dims:
        raise ValidationError(f"n_ant must be in [1, {demo.n_dims}]")
    return _rank_dims_by_range(demo.positions)[:n_ant]


def _rank_dims_by_range(positions: np.ndarray) -> list:
    ranges = positions.max(axis=0) - positions.min(axis=0)
    order = np.lexsort((np.arange(ranges.size), -ranges))
    return [int(i) for i in order]


# ---------------------------------------------------------------------------
# step-stage operators


def anticipation_hook(ydd: np.ndarray, step: int, dt: float, p_ant: float,
                      t_ant: float, important_dims) -> np.ndarray:
    """Invert the generated acceleration during the opening time window.

    For steps with step * dt < t_ant, the important dimensions get
    ydd' = -p_ant * ydd, producing a counter-movement that leads into
    the key action. Outside the window the acceleration passes through.
    """
    if step * dt >= t_ant:
        return ydd
    out = ydd.copy()
    idx = list(important_dims)
    out[idx] = -p_ant * ydd[idx]
    return out


def follow_through_hook(ydd_target: float, ydd_source: float, p_follow: float,
                        delta: int) -> float:
    """Drag a connected dimension: ydd' = ydd_target - delta * p_follow * ydd_source.

    Injected inside the integration loop, so it feeds back into the
    state and produces lag plus overshoot once the source stops.
    """
    return ydd_target - delta * p_follow * ydd_source


def secondary_action(y_target, yd_source, p_sec: float, delta: int):
    """Output-stage offset: y' = y_target + delta * p_sec * yd_source.

    Induces the source dimension's velocity into the target position
    without feeding back into the dynamics.
    """
    return y_target + delta * p_sec * yd_source


# ---------------------------------------------------------------------------
# composition


@dataclass(frozen=True)
class ModulationPipeline:
    """A ModulationConfig bound to a model, ready to roll out.

    `model` already carries the weight-stage (randomize, then arc) and
    model-stage (time scaling, goal override) results. The remaining
    stages run inside `rollout`: the phase function, the exaggeration
    factor on every forcing evaluation, the acceleration hooks
    (anticipation, then follow-through against a pre-stage snapshot),
    and the output-stage secondary-action offsets. Pipelines are
    immutable; concurrent rollouts may share one.
    """

    model: DmpModel
    config: ModulationConfig
    exa: float = 1.0
    slow_k: float | None = None
    timing_sectors: tuple | None = None
    ant_dims: tuple = ()
    ant_window: float = 0.0
    sec_couplings: tuple = ()
    follow_couplings: tuple = ()

    def build_phase(self, total_steps: int) -> PhaseFunction:
        if self.slow_k is not None:
            return phase_slow(total_steps, self.slow_k)
        if self.timing_sectors is not None:
            return phase_timing(total_steps, self.timing_sectors)
        return phase_linear(total_steps)

    def forcing(self, x: float) -> np.ndarray:
        f = forcing(self.model, x)
        if self.exa != 1.0:
            f = exaggerate(f, self.exa)
        return f

    def acceleration_stage(self, ydd: np.ndarray, step: int, dt: float) -> np.ndarray:
        if self.ant_dims and self.config.p_ant > 0.0:
            ydd = anticipation_hook(ydd, step, dt, self.config.p_ant,
                                    self.ant_window, self.ant_dims)
        if self.follow_couplings:
            snapshot = ydd
            ydd = ydd.copy()
            for c in self.follow_couplings:
                ydd[c.target] = follow_through_hook(
                    ydd[c.target], snapshot[c.source],
                    self.config.p_follow, c.delta)
        return ydd

    def output_stage(self, positions: np.ndarray, velocities: np.ndarray) -> np.ndarray:
        if not self.sec_couplings:
            return positions
        out = positions.copy()
        for c in self.sec_couplings:
            out[:, c.target] = secondary_action(
                out[:, c.target], velocities[:, c.source],
                self.config.p_sec, c.delta)
        return out


def _validate_couplings(config: ModulationConfig, model: DmpModel,
                        robot: RobotConfig | None):
    violations = []
    ndim = model.n_dims
    if config.p_sec > 0.0:
        for c in config.sec_couplings:
            if robot is not None:
                v = validate_secondary_coupling(robot, c)
                if v is not None:
                    violations.append(v)
            elif not (0 <= c.source < ndim and 0 <= c.target < ndim):
                raise ValidationError(
                    f"secondary coupling {c.source}->{c.target} is outside "
                    f"the model's {ndim} dimensions", rule="unknown-dim")
    if config.p_follow > 0.0:
        if not config.follow_couplings:
            raise ValidationError(
                "p_follow > 0 requires at least one coupling", rule="coupling")
        if robot is None:
            raise ValidationError(
                "follow-through needs a robot config to check the kinematic "
                "chain and axis alignment", rule="follow-requires-robot")
        for c in config.follow_couplings:
            v = validate_follow_coupling(robot, c)
            if v is not None:
                violations.append(v)
    if config.p_sec > 0.0 and not config.sec_couplings:
        raise ValidationError(
            "p_sec > 0 requires at least one coupling", rule="coupling")
    for c in list(config.sec_couplings) + list(config.follow_couplings):
        if not (0 <= c.source < ndim and 0 <= c.target < ndim):
            raise ValidationError(
                f"coupling {c.source}->{c.target} is outside the model's "
                f"{ndim} dimensions", rule="unknown-dim")
    if violations:
        lines = "; ".join(f"{v.rule}: {v.message}" for v in violations)
        raise ValidationError(f"coupling validation failed: {lines}",
                              rule=violations[0].rule, violations=violations)


def compose(config: ModulationConfig, model: DmpModel,
            demo: Demonstration | None = None,
            robot: RobotConfig | None = None) -> ModulationPipeline:
    """Bundle a ModulationConfig into an immutable rollout pipeline.

    Application order is pinned: (1) weight stage, randomize then arc;
    (2) model stage, exaggeration factor, time scaling, goal override;
    (3) phase stage, slow or sector timing (mutually exclusive);
    (4) per-step acceleration stage, anticipation then follow-through;
    (5) output stage, secondary action. A neutral config yields an
    identity pipeline whose `model` is the input object itself.

    Anticipation importance is inferred from the demo's per-dimension
    position ranges when a demo is given; otherwise from a plain rollout
    of the unmodulated model (both are the motion's y-ranges). A manual
    `important_dims` list overrides the inference.
    """
    if config.slow_k is not None and config.timing_sectors is not None:
        raise ValidationError(
            "slow-in/slow-out and sector timing both redefine the single "
            "shared phase; configure only one",
            rule="phase-exclusive",
        )
    _validate_couplings(config, model, robot)

    weights = model.weights
    if config.p_rand > 0.0:
        weights = randomize_weights(weights, config.p_rand, config.seed)
    if config.p_arc != 0.0:
        weights = modulate_arc(weights, config.p_arc)

    m = model
    if weights is not model.weights:
        m = dataclasses.replace(m, weights=weights)
    if config.p_time != 1.0:
        m = scale_time(m, config.p_time)
    if config.goal_override is not None:
        goal = np.asarray(config.goal_override, dtype=float)
        if goal.shape != (model.n_dims,):
            raise ValidationError(
                f"goal override has {goal.size} dimensions, model has "
                f"{model.n_dims}", rule="unknown-dim")
        if not np.all(np.isfinite(goal)):
            raise ValidationError("goal override must be finite")
        m = dataclasses.replace(m, goal=goal)

    ant_window = config.t_ant
    if config.t_ant_fraction is not None:
        ant_window = config.t_ant_fraction * m.tau
    ant_dims: tuple = ()
    if config.p_ant > 0.0 and ant_window > 0.0:
        if config.important_dims is not None:
            ant_dims = config.important_dims
            if any(d < 0 or d >= model.n_dims for d in ant_dims):
                raise ValidationError("important_dims outside model dimensions",
                                      rule="unknown-dim")
        elif model.n_dims == 1:
            ant_dims = (0,)
        elif demo is not None:
            ant_dims = tuple(select_important_dims(demo, min(config.n_ant,
                                                             demo.n_dims)))
        else:
            baseline = rollout(model)
            ranked = _rank_dims_by_range(baseline.positions)
            ant_dims = tuple(ranked[: min(config.n_ant, model.n_dims)])

    return ModulationPipeline(
        model=m,
        config=config,
        exa=config.p_exa,
        slow_k=config.slow_k,
        timing_sectors=config.timing_sectors,
        ant_dims=ant_dims,
        ant_window=ant_window,
        sec_couplings=config.sec_couplings if config.p_sec > 0.0 else (),
        follow_couplings=config.follow_couplings if config.p_follow > 0.0 else (),
    )


def modulated_rollout(model: DmpModel, config: ModulationConfig,
                      demo: Demonstration | None = None,
                      robot: RobotConfig | None = None,
                      options: RolloutOptions | None = None,
                      settle_fraction: float | None = None):
    """Compose a config against a model and roll it out in one call.

    `settle_fraction` expresses the settling window as a fraction of the
    (time-scaled) execution time; it is ignored when explicit options
    are given.
    """
    pipe = compose(config, model, demo=demo, robot=robot)
    if options is None and settle_fraction is not None:
        if settle_fraction < 0.0:
            raise ValidationError("settle fraction must be >= 0")
        settle = int(round(settle_fraction * pipe.model.tau / pipe.model.dt))
        options = RolloutOptions(settle_steps=settle)
    return rollout(pipe.model, options, pipe)
