"""Learned motion primitive: attractor gains plus forcing-term weights."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import BasisSet, basis_activations
from .errors import ValidationError

DEFAULT_ALPHA = 25.0


@dataclass(frozen=True)
class DmpModel:
    """A point-to-point motion encoded as a forced spring-damper system.

    Per dimension the dynamics are

        tau^2 * ydd = alpha * (beta * (g - y) - tau * yd) + f(x)

    where f is the phase-gated weighted Gaussian mix of `weights` over
    `basis`. alpha = 4 * beta keeps the unforced attractor critically
    damped, so it converges to the goal without overshoot.

    Attributes
    ----------
    basis : BasisSet
        Shared Gaussian basis over the phase axis.
    weights : numpy.ndarray
        (n_dims, n_basis) forcing weights.
    goal, start : numpy.ndarray
        Attractor target g and initial position y0, one entry per dimension.
    tau : float
        Nominal execution time in seconds.
    dt : float
        Integration step in seconds (taken from the demonstration).
    alpha, beta : float
        Gains with alpha == 4 * beta exactly.
    dim_names : tuple of str, optional
        Labels carried over from the demonstration.
    """

    basis: BasisSet
    weights: np.ndarray
    goal: np.ndarray
    start: np.ndarray
    tau: float
    dt: float
    alpha: float = DEFAULT_ALPHA
    beta: float = DEFAULT_ALPHA / 4.0
    dim_names: tuple | None = None

    def __post_init__(self):
        weights = np.asarray(self.weights, dtype=float)
        goal = np.asarray(self.goal, dtype=float).reshape(-1)
        start = np.asarray(self.start, dtype=float).reshape(-1)
        if weights.ndim != 2:
            raise ValidationError("weights must be a (dims, basis) matrix")
        if weights.shape[0] != goal.size or weights.shape[0] != start.size:
            raise ValidationError("weights rows must match goal/start length")
        if weights.shape[1] != self.basis.count:
            raise ValidationError("weights columns must match basis count")
        for name, arr in (("weights", weights), ("goal", goal), ("start", start)):
            if not np.all(np.isfinite(arr)):
                raise ValidationError(f"{name} contains non-finite values")
        if not (np.isfinite(self.tau) and self.tau > 0.0):
            raise ValidationError("tau must be positive and finite")
        if not (np.isfinite(self.dt) and self.dt > 0.0):
            raise ValidationError("dt must be positive and finite")
        if not (np.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValidationError("alpha must be positive and finite")
        if self.alpha != 4.0 * self.beta:
            raise ValidationError("critical damping requires alpha == 4 * beta")
        if self.dim_names is not None:
            names = tuple(str(n) for n in self.dim_names)
            if len(names) != goal.size:
                raise ValidationError("dim_names length must match dimensions")
            object.__setattr__(self, "dim_names", names)
        for arr in (weights, goal, start):
            arr.flags.writeable = False
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "goal", goal)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "tau", float(self.tau))
        object.__setattr__(self, "dt", float(self.dt))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    @property
    def n_dims(self) -> int:
        return int(self.weights.shape[0])

    @property
    def n_basis(self) -> int:
        return int(self.weights.shape[1])


def forcing(model: DmpModel, x: float) -> np.ndarray:
    """Forcing vector at phase `x`: normalized Gaussian mix, gated by x.

    Per dimension f = (sum_i w_i psi_i(x) / sum_i psi_i(x)) * x, so the
    forcing vanishes exactly at x = 0 and the attractor alone finishes
    the motion.
    """
    psi = basis_activations(model.basis, x)
    denom = psi.sum()
    if not denom > 0.0:  # fully decayed custom basis; forcing contributes nothing
        return np.zeros(model.n_dims)
    return (model.weights @ psi) / denom * x
