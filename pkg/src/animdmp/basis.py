"""Gaussian basis sets over the phase interval [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

# Precision h = 1/(2 s^2) with s = spacing / sqrt(8 ln 2): adjacent
# Gaussians then cross at activation 0.5.
_CROSSING_FACTOR = 4.0 * np.log(2.0)


@dataclass(frozen=True)
class BasisSet:
    """Equally spaced Gaussian basis functions on the phase axis.

    Attributes
    ----------
    centers : numpy.ndarray
        Basis centers, strictly decreasing from 1 to 0 (the phase decays).
    widths : numpy.ndarray
        Precision values h_i of exp(-h_i (x - c_i)^2); all positive.
    """

    centers: np.ndarray
    widths: np.ndarray

    def __post_init__(self):
        centers = np.asarray(self.centers, dtype=float)
        widths = np.asarray(self.widths, dtype=float)
        if centers.ndim != 1 or widths.ndim != 1:
            raise ValidationError("centers and widths must be 1-D")
        if centers.size < 1:
            raise ValidationError("basis needs at least one center")
        if centers.size != widths.size:
            raise ValidationError("centers and widths must have equal length")
        if not (np.all(np.isfinite(centers)) and np.all(np.isfinite(widths))):
            raise ValidationError("basis parameters must be finite")
        if np.any(widths <= 0.0):
            raise ValidationError("basis widths must be positive")
        if centers.size >= 2:
            if abs(centers[0] - 1.0) > 1e-12 or abs(centers[-1]) > 1e-12:
                raise ValidationError("centers must run from 1 down to 0")
            spacing = np.diff(centers)
            if np.any(spacing >= 0.0):
                raise ValidationError("centers must be strictly decreasing")
            if np.max(np.abs(spacing - spacing[0])) > 1e-12:
                raise ValidationError("centers must be equally spaced")
        centers.flags.writeable = False
        widths.flags.writeable = False
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "widths", widths)

    @property
    def count(self) -> int:
        return int(self.centers.size)


def uniform_basis(count: int) -> BasisSet:
    """Build a basis of `count` Gaussians equally spaced from phase 1 to 0.

    Widths are chosen so adjacent activations intersect at 0.5. A single
    Gaussian (count == 1) is the degenerate case centered at phase 1 with
    unit nominal spacing; learning requires count >= 2.
    """
    if count < 1:
        raise ValidationError("basis count must be >= 1")
    if count == 1:
        centers = np.array([1.0])
        spacing = 1.0
    else:
        centers = np.linspace(1.0, 0.0, count)
        spacing = 1.0 / (count - 1)
    widths = np.full(count, _CROSSING_FACTOR / spacing**2)
    return BasisSet(centers=centers, widths=widths)


def basis_activations(basis: BasisSet, x) -> np.ndarray:
    """Evaluate every Gaussian at phase `x`.

    `x` may be a scalar (returns shape (count,)) or a 1-D array of phases
    (returns shape (len(x), count)). Activations are in (0, 1]; a phase
    sitting exactly on a center activates that Gaussian at 1.
    """
    x = np.asarray(x, dtype=float)
    diff = x[..., None] - basis.centers
    return np.exp(-basis.widths * diff * diff)
