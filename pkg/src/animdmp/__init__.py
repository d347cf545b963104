"""Expressive motion generation with dynamic movement primitives.

Learn point-to-point motions from demonstrated trajectories as stable
spring-damper systems with a learned forcing term, then regenerate them
under parameterized animation-principle modulations: arcs, anticipation,
slow-in/slow-out, timing, exaggeration, secondary action, follow-through,
randomization, and online goal adaptation.
"""

from .basis import BasisSet, basis_activations, uniform_basis
from .demonstration import Demonstration
from .errors import FormatError, LearnError, NumericAbort, ValidationError
from .kinematics import (
    JointInfo,
    RobotConfig,
    Violation,
    validate_follow_coupling,
    validate_secondary_coupling,
)
from .learning import learn
from .model import DEFAULT_ALPHA, DmpModel, forcing
from .phase import (
    PhaseFunction,
    linear_phase,
    phase_linear,
    phase_slow,
    phase_timing,
)
from .principles import (
    Coupling,
    ModulationConfig,
    ModulationPipeline,
    anticipation_hook,
    compose,
    exaggerate,
    follow_through_hook,
    modulate_arc,
    modulated_rollout,
    randomize_weights,
    scale_time,
    secondary_action,
    select_important_dims,
)
from .rollout import (
    DEFAULT_SETTLE_FRACTION,
    Rollout,
    RolloutOptions,
    SystemState,
    Trajectory,
    default_settle_steps,
    default_steps,
    rollout,
)

__version__ = "0.1.0"

__all__ = [
    "BasisSet",
    "Coupling",
    "DEFAULT_ALPHA",
    "DEFAULT_SETTLE_FRACTION",
    "Demonstration",
    "DmpModel",
    "FormatError",
    "JointInfo",
    "LearnError",
    "ModulationConfig",
    "ModulationPipeline",
    "NumericAbort",
    "PhaseFunction",
    "RobotConfig",
    "Rollout",
    "RolloutOptions",
    "SystemState",
    "Trajectory",
    "ValidationError",
    "Violation",
    "anticipation_hook",
    "basis_activations",
    "compose",
    "default_settle_steps",
    "default_steps",
    "exaggerate",
    "follow_through_hook",
    "forcing",
    "learn",
    "linear_phase",
    "modulate_arc",
    "modulated_rollout",
    "phase_linear",
    "phase_slow",
    "phase_timing",
    "randomize_weights",
    "rollout",
    "scale_time",
    "secondary_action",
    "select_important_dims",
    "uniform_basis",
    "validate_follow_coupling",
    "validate_secondary_coupling",
]
