"""Exception types shared across the package."""


class JanusimError(Exception):
    """Base class for all janusim errors."""


class DomainError(JanusimError, ValueError):
    """An argument is outside the physical or mathematical domain."""


class SingularityError(DomainError):
    """Field evaluation requested on or too close to a wire segment."""


class GeometryError(JanusimError, ValueError):
    """Coil geometry cannot produce the requested field (e.g. rank deficient)."""


class ConfigurationError(JanusimError, ValueError):
    """Inconsistent or incomplete parameterization."""


class ScheduleError(JanusimError, ValueError):
    """Malformed control schedule."""


class StiffnessError(JanusimError, RuntimeError):
    """The stiff integrator failed to advance.

    Carries the simulation time at which the failure occurred.
    """

    def __init__(self, message: str, time: float):
        super().__init__(message)
        self.time = time


class InsufficientDataError(JanusimError, ValueError):
    """Too few samples for the requested fit."""


class SegmentationError(JanusimError, ValueError):
    """A fit window spans a control-command change."""


class DegenerateDirectionError(JanusimError, ValueError):
    """Net displacement too small to define a direction of motion."""


class AlignmentError(JanusimError, ValueError):
    """Two trajectories share no usable time range."""


class ScenarioError(JanusimError, ValueError):
    """A scenario, schedule, windows or rig file failed validation."""
