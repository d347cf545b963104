"""Weight learning via locally weighted regression against a linear phase."""

from __future__ import annotations

import warnings

import numpy as np

from .basis import basis_activations, uniform_basis
from .demonstration import Demonstration
from .errors import LearnError
from .model import DEFAULT_ALPHA, DmpModel

# Per-basis normal-equation denominators below this are treated as
# degenerate (the basis never activates where the phase is non-zero).
_DEGENERATE_DENOM = 1e-10


def learn(
    demo: Demonstration,
    n_basis: int,
    tau: float | None = None,
    alpha: float = DEFAULT_ALPHA,
) -> DmpModel:
    """Fit a DmpModel to a demonstration in a single shot.

    The goal is the last demo sample and the start the first one, per
    dimension. Velocities and accelerations are estimated with central
    finite differences (one-sided at the boundaries). The target forcing

        f_t = tau^2 * ydd - alpha * (beta * (g - y) - tau * yd)

    is evaluated per step against the linear phase, and each basis
    weight solves its own weighted least squares

        w_i = sum_t psi_i(x_t) x_t f_t / sum_t psi_i(x_t) x_t^2

    independently per dimension.

    Parameters
    ----------
    demo : Demonstration
        Training trajectory; at least 3 samples.
    n_basis : int
        Number of Gaussian basis functions, >= 2.
    tau : float, optional
        Execution time; defaults to the demo duration (n_steps - 1) * dt.
    alpha : float, optional
        Attractor gain; beta is fixed to alpha / 4 (critical damping).

    Raises
    ------
    LearnError
        On an invalid basis request or execution time.
    """
    if n_basis < 2:
        raise LearnError("learning needs at least 2 basis functions")
    if tau is None:
        tau = demo.duration
    if not (np.isfinite(tau) and tau > 0.0):
        raise LearnError("tau must be positive and finite")
    if not (np.isfinite(alpha) and alpha > 0.0):
        raise LearnError("alpha must be positive and finite")
    beta = alpha / 4.0

    pos = demo.positions
    dt = demo.dt
    goal = pos[-1].copy()
    start = pos[0].copy()

    vel = np.gradient(pos, dt, axis=0, edge_order=1)
    acc = np.gradient(vel, dt, axis=0, edge_order=1)

    n_steps = demo.n_steps
    x = 1.0 - np.arange(n_steps) / (n_steps - 1)
    f_target = tau**2 * acc - alpha * (beta * (goal - pos) - tau * vel)

    basis = uniform_basis(n_basis)
    psi = basis_activations(basis, x)  # (steps, basis)
    numer = (psi * x[:, None]).T @ f_target  # (basis, dims)
    denom = (psi * x[:, None] ** 2).sum(axis=0)  # (basis,)

    degenerate = denom < _DEGENERATE_DENOM
    if np.any(degenerate):
        warnings.warn(
            f"{int(degenerate.sum())} basis function(s) never activate on the "
            "phase support; their weights are set to 0",
            RuntimeWarning,
            stacklevel=2,
        )
        denom = np.where(degenerate, 1.0, denom)
        numer[degenerate] = 0.0
    weights = (numer / denom[:, None]).T

    return DmpModel(
        basis=basis,
        weights=weights,
        goal=goal,
        start=start,
        tau=float(tau),
        dt=dt,
        alpha=float(alpha),
        beta=float(beta),
        dim_names=demo.dim_names,
    )
