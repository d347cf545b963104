"""Minimal kinematic descriptions and coupling validation.

Follow-through couplings are only physically meaningful when the source
joint drives the target through the kinematic chain with a near-parallel
rotation axis; secondary-action couplings are free design choices and
only need valid indices. Axes are interpreted in a shared root frame at
the robot's zero pose; no forward kinematics is performed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

DEFAULT_AXIS_THRESHOLD_DEG = 10.0


@dataclass(frozen=True)
class JointInfo:
    """One degree of freedom: its place in the tree and its rotation axis."""

    name: str
    parent: str | None
    axis: tuple
    dim_index: int
    limits: tuple | None = None

    def __post_init__(self):
        axis = np.asarray(self.axis, dtype=float)
        if axis.shape != (3,):
            raise ValidationError(f"joint {self.name}: axis must be a 3-vector")
        if not np.all(np.isfinite(axis)):
            raise ValidationError(f"joint {self.name}: axis must be finite")
        if abs(np.linalg.norm(axis) - 1.0) > 1e-9:
            raise ValidationError(
                f"joint {self.name}: axis must be a unit vector "
                "(normalize it to 1 within 1e-9)")
        object.__setattr__(self, "axis", tuple(float(a) for a in axis))
        if self.limits is not None:
            lo, hi = self.limits
            if not (np.isfinite(lo) and np.isfinite(hi) and lo < hi):
                raise ValidationError(f"joint {self.name}: bad limits")
            object.__setattr__(self, "limits", (float(lo), float(hi)))
        if self.dim_index < 0:
            raise ValidationError(f"joint {self.name}: dim_index must be >= 0")


@dataclass(frozen=True)
class RobotConfig:
    """A forest of joints plus the axis-alignment threshold in degrees."""

    joints: tuple
    axis_threshold: float = DEFAULT_AXIS_THRESHOLD_DEG

    def __post_init__(self):
        joints = tuple(self.joints)
        if not joints:
            raise ValidationError("robot needs at least one joint")
        names = [j.name for j in joints]
        if len(set(names)) != len(names):
            raise ValidationError("joint names must be unique")
        dims = [j.dim_index for j in joints]
        if len(set(dims)) != len(dims):
            raise ValidationError("joint dim_index values must be unique")
        by_name = {j.name: j for j in joints}
        for j in joints:
            if j.parent is not None and j.parent not in by_name:
                raise ValidationError(
                    f"joint {j.name}: unknown parent {j.parent!r}")
        # Reject parent cycles by walking each chain with a step budget.
        for j in joints:
            seen = 0
            cur = j
            while cur.parent is not None:
                cur = by_name[cur.parent]
                seen += 1
                if seen > len(joints):
                    raise ValidationError(
                        f"joint {j.name}: parent chain contains a cycle")
        if not (0.0 < self.axis_threshold < 90.0):
            raise ValidationError("axis threshold must be in (0, 90) degrees")
        object.__setattr__(self, "joints", joints)
        object.__setattr__(self, "axis_threshold", float(self.axis_threshold))

    @property
    def n_dims(self) -> int:
        return max(j.dim_index for j in self.joints) + 1

    def joint_by_dim(self, dim_index: int) -> JointInfo:
        for j in self.joints:
            if j.dim_index == dim_index:
                return j
        raise ValidationError(f"no joint maps to dimension {dim_index}",
                              rule="unknown-dim")

    def joint_by_name(self, name: str) -> JointInfo:
        for j in self.joints:
            if j.name == name:
                return j
        raise ValidationError(f"unknown joint {name!r}")

    def is_strict_ancestor(self, source: JointInfo, target: JointInfo) -> bool:
        cur = target
        while cur.parent is not None:
            cur = self.joint_by_name(cur.parent)
            if cur.name == source.name:
                return True
        return False

    def chain_between(self, source: JointInfo, target: JointInfo) -> list:
        """Joints strictly between source and target along the parent chain."""
        chain = []
        cur = target
        while cur.parent is not None:
            cur = self.joint_by_name(cur.parent)
            if cur.name == source.name:
                return chain
            chain.append(cur)
        return []


@dataclass(frozen=True)
class Violation:
    """A named rule failure from coupling validation."""

    rule: str
    message: str


def _axis_angle_deg(a, b) -> float:
    dot = float(np.clip(np.dot(a, b), -1.0, 1.0))
    return float(np.degrees(np.arccos(dot)))


def validate_follow_coupling(robot: RobotConfig, coupling) -> Violation | None:
    """Check the chain-and-axis rules for a follow-through coupling.

    Returns None when the source joint is a strict ancestor of the
    target and their rotation axes align within the robot's threshold;
    otherwise a Violation naming the failed rule. Unknown dimension
    indices raise.
    """
    src = robot.joint_by_dim(coupling.source)
    tgt = robot.joint_by_dim(coupling.target)
    if not robot.is_strict_ancestor(src, tgt):
        return Violation(
            rule="chain",
            message=(f"source {src.name} is not an ancestor of target "
                     f"{tgt.name}; both must sit in one kinematic chain with "
                     "the source higher in the hierarchy"))
    angle = _axis_angle_deg(src.axis, tgt.axis)
    if angle > robot.axis_threshold:
        between = robot.chain_between(src, tgt)
        hint = ""
        if between:
            names = ", ".join(j.name for j in between)
            hint = (f"; intermediate joint(s) {names} may need manual "
                    "adjustment within their limits to align the axes")
        return Violation(
            rule="axis-alignment",
            message=(f"axes of {src.name} and {tgt.name} differ by "
                     f"{angle:.1f} deg (threshold "
                     f"{robot.axis_threshold:.1f} deg){hint}"))
    return None


def validate_secondary_coupling(robot: RobotConfig, coupling) -> Violation | None:
    """Secondary action assumes suitable joint relationships are given.

    Only index validity and source != target are checked. Unknown
    dimension indices raise.
    """
    robot.joint_by_dim(coupling.source)
    robot.joint_by_dim(coupling.target)
    if coupling.source == coupling.target:
        return Violation(rule="self-coupling",
                         message="source and target must differ")
    return None
