"""Exception types shared across the package."""


class FormatError(ValueError):
    """A file or byte stream could not be parsed into a valid object."""


class ValidationError(ValueError):
    """A config, coupling, or model invariant check failed.

    `rule` names the violated rule when the failure maps to one
    (e.g. "chain", "axis-alignment", "phase-exclusive").
    """

    def __init__(self, message, rule=None, violations=None):
        super().__init__(message)
        self.rule = rule
        self.violations = list(violations) if violations else []


class LearnError(ValueError):
    """Weight learning could not proceed (bad demo or basis request)."""


class NumericAbort(RuntimeError):
    """Integration produced a non-finite state."""

    def __init__(self, step, dim):
        super().__init__(
            f"non-finite state at integration step {step}, dimension {dim}"
        )
        self.step = step
        self.dim = dim
