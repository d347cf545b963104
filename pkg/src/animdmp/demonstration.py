"""Demonstration container: the training input for weight learning."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError


@dataclass(frozen=True)
class Demonstration:
    """Uniformly sampled multi-dimensional position trajectory.

    Attributes
    ----------
    dt : float
        Seconds per sample; sampling is uniform by construction.
    positions : numpy.ndarray
        (n_steps, n_dims) matrix of positions (radians, meters, ...).
    dim_names : tuple of str, optional
        Labels per column.
    """

    dt: float
    positions: np.ndarray
    dim_names: tuple | None = None

    def __post_init__(self):
        positions = np.asarray(self.positions, dtype=float)
        if positions.ndim == 1:
            positions = positions[:, None]
        if positions.ndim != 2:
            raise ValidationError("positions must be a (steps, dims) matrix")
        if positions.shape[0] < 3:
            raise ValidationError("demonstration needs at least 3 samples")
        if positions.shape[1] < 1:
            raise ValidationError("demonstration needs at least one dimension")
        if not np.all(np.isfinite(positions)):
            raise ValidationError("demonstration contains non-finite values")
        if not (np.isfinite(self.dt) and self.dt > 0.0):
            raise ValidationError("dt must be positive and finite")
        if self.dim_names is not None:
            names = tuple(str(n) for n in self.dim_names)
            if len(names) != positions.shape[1]:
                raise ValidationError("dim_names length must match dimensions")
            object.__setattr__(self, "dim_names", names)
        positions.flags.writeable = False
        object.__setattr__(self, "positions", positions)
        object.__setattr__(self, "dt", float(self.dt))

    @property
    def n_steps(self) -> int:
        return int(self.positions.shape[0])

    @property
    def n_dims(self) -> int:
        return int(self.positions.shape[1])

    @property
    def duration(self) -> float:
        """Time spanned by the samples, (n_steps - 1) * dt."""
        return (self.n_steps - 1) * self.dt

    def times(self) -> np.ndarray:
        return np.arange(self.n_steps) * self.dt
