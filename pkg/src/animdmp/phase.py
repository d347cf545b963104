"""Phase generation: the shared progress signal decaying from 1 to 0.

All dimensions of a rollout read the same phase. The default is linear
(also used during learning); slow-in/slow-out and sector timing replace
it with a tabulated monotone curve over the step index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.interpolate import PchipInterpolator

from .errors import ValidationError


def linear_phase(step: int, total_steps: int) -> float:
    """Linear phase 1 - step/total_steps; exactly 1 at 0, 0 at the end."""
    if total_steps < 1:
        raise ValidationError("total_steps must be >= 1")
    if step < 0 or step > total_steps:
        raise ValidationError(f"step {step} out of range [0, {total_steps}]")
    return 1.0 - step / total_steps


@dataclass(frozen=True)
class PhaseFunction:
    """Tabulated monotone phase over rollout steps 0..total_steps.

    values[0] == 1 and values[-1] == 0 exactly (curves are renormalized
    after construction); values are non-increasing and within [0, 1].
    """

    kind: str
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size < 2:
            raise ValidationError("phase table needs at least two values")
        if values[0] != 1.0 or values[-1] != 0.0:
            raise ValidationError("phase must start at 1 and end at 0")
        if np.any(np.diff(values) > 0.0):
            raise ValidationError("phase must be non-increasing")
        if np.any(values < 0.0) or np.any(values > 1.0):
            raise ValidationError("phase values must lie in [0, 1]")
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def total_steps(self) -> int:
        return int(self.values.size - 1)

    def value(self, step: int) -> float:
        return float(self.values[step])


def phase_linear(total_steps: int) -> PhaseFunction:
    if total_steps < 1:
        raise ValidationError("total_steps must be >= 1")
    values = 1.0 - np.arange(total_steps + 1) / total_steps
    return PhaseFunction(kind="linear", values=values)


def phase_slow(total_steps: int, k: float) -> PhaseFunction:
    """Inverted logistic phase: slow progression at both ends.

    `k` is the sigmoid steepness; larger values flatten the curve near
    the boundaries. The raw logistic is renormalized affinely so the
    endpoints hit 1 and 0 exactly.
    """
    if total_steps < 1:
        raise ValidationError("total_steps must be >= 1")
    if not (np.isfinite(k) and k > 0.0):
        raise ValidationError("sigmoid steepness k must be positive")
    u = np.arange(total_steps + 1) / total_steps
    raw = 1.0 / (1.0 + np.exp(k * (u - 0.5)))
    values = (raw - raw[-1]) / (raw[0] - raw[-1])
    return PhaseFunction(kind="slow_sigmoid", values=values)


def phase_timing(total_steps: int, sectors) -> PhaseFunction:
    """Sector-based phase: per-sector progression speeds, splined smooth.

    `sectors` is a sequence of (fraction_of_duration, speed_factor)
    pairs; fractions must be positive and sum to 1, speeds positive.
    Phase consumption within a sector is proportional to its speed.
    Knots at the sector boundaries are interpolated with a monotone
    cubic (PCHIP) over the step index and renormalized to [1, 0].
    """
    if total_steps < 1:
        raise ValidationError("total_steps must be >= 1")
    sectors = [(float(f), float(s)) for f, s in sectors]
    if not sectors:
        raise ValidationError("at least one sector is required")
    fractions = np.array([f for f, _ in sectors])
    speeds = np.array([s for _, s in sectors])
    if np.any(~np.isfinite(fractions)) or np.any(fractions <= 0.0):
        raise ValidationError("sector fractions must be positive")
    if np.any(~np.isfinite(speeds)) or np.any(speeds <= 0.0):
        raise ValidationError("sector speeds must be positive")
    if abs(fractions.sum() - 1.0) > 1e-9:
        raise ValidationError("sector fractions must sum to 1")
    fractions = fractions / fractions.sum()

    boundaries = np.concatenate(([0.0], np.cumsum(fractions)))
    boundaries[-1] = 1.0
    consumed = np.concatenate(([0.0], np.cumsum(fractions * speeds)))
    knot_steps = boundaries * total_steps
    if np.any(np.diff(knot_steps) <= 0.0):
        raise ValidationError("sector fractions are too small to resolve")
    knot_phase = 1.0 - consumed / consumed[-1]

    spline = PchipInterpolator(knot_steps, knot_phase)
    values = np.asarray(spline(np.arange(total_steps + 1)), dtype=float)
    values = (values - values[-1]) / (values[0] - values[-1])
    np.clip(values, 0.0, 1.0, out=values)
    # PCHIP through monotone knots is monotone; guard the float tail anyway.
    np.minimum.accumulate(values, out=values)
    values[0] = 1.0
    values[-1] = 0.0
    return PhaseFunction(kind="sector_spline", values=values)
