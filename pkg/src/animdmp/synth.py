"""Synthetic demonstrations for demos, tests, and the playground samples."""

from __future__ import annotations

import numpy as np
from scipy.interpolate import CubicSpline

from .demonstration import Demonstration


def min_jerk_demo(start: float = 0.0, goal: float = 1.0, duration: float = 1.0,
                  dt: float = 0.01) -> Demonstration:
    """Classic smooth point-to-point reach (zero end velocities/accelerations)."""
    n = int(round(duration / dt)) + 1
    s = np.arange(n) / (n - 1)
    y = start + (goal - start) * (10 * s**3 - 15 * s**4 + 6 * s**5)
    return Demonstration(dt=dt, positions=y[:, None])


def feature_demo(duration: float = 2.0, dt: float = 0.01) -> Demonstration:
    """1-D trajectory exercising a mix of key action features.

    Position changes at the beginning and the end, velocities and
    accelerations of both signs, and both steep and gentle slopes.
    Built from a clamped cubic spline (zero velocity at both ends).
    """
    knots_t = np.array([0.0, 0.15, 0.3, 0.45, 0.65, 0.8, 1.0]) * duration
    knots_y = np.array([0.0, 0.75, 0.55, 0.62, 0.15, 0.2, 0.85])
    spline = CubicSpline(knots_t, knots_y, bc_type="clamped")
    t = np.arange(int(round(duration / dt)) + 1) * dt
    return Demonstration(dt=dt, positions=spline(t)[:, None])


def sphere_spiral_demo(turns: float = 4.0, samples: int = 400,
                       dt: float = 0.01, radius: float = 1.0) -> Demonstration:
    """3-D spiral sampling a sphere's surface from top to bottom."""
    theta = np.linspace(0.0, np.pi, samples)
    phi = turns * 2.0 * np.pi * theta / np.pi
    xyz = np.column_stack([
        radius * np.sin(theta) * np.cos(phi),
        radius * np.sin(theta) * np.sin(phi),
        radius * np.cos(theta),
    ])
    return Demonstration(dt=dt, positions=xyz, dim_names=("x", "y", "z"))


def reach_and_stop_demo(distance: float = 1.0, duration: float = 1.0,
                        dt: float = 0.01, rest: float = 0.5) -> Demonstration:
    """Min-jerk reach followed by a resting tail; source motion for couplings."""
    reach = min_jerk_demo(0.0, distance, duration, dt).positions[:, 0]
    tail = np.full(int(round(rest / dt)), distance)
    return Demonstration(dt=dt, positions=np.concatenate([reach, tail])[:, None])
