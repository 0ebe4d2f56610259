"""Domain types, physical constants and small derived-parameter helpers.

Everything in this package works in SI base units (m, kg, s, A, T, rad).
Micro-scale unit conversions (um, ng, cP, mT) happen only at the file and
CLI boundaries, see :mod:`janusim.io_files`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DomainError

TWO_PI = 2.0 * math.pi

# Default magnetic dipole moment for particles that do not specify one.
# Sized so that at B = 1 mT the overdamped heading-alignment time constant
# 8*pi*eta*r^3/(d*B) is a few milliseconds for 4-5 um particles in water-like
# fluids: orders of magnitude below command timescales, and a physically
# plausible magnetization (d/V ~ kA/m) for a doped polystyrene sphere.
DEFAULT_DIPOLE_MOMENT = 1e-12  # A m^2


def normalize_angle(angle: float) -> float:
    """Wrap an angle into the half-open interval (-pi, pi].

    Idempotent; exact multiples of pi map to +pi.
    """
    if not math.isfinite(angle):
        raise DomainError(f"angle must be finite, got {angle!r}")
    wrapped = math.fmod(angle, TWO_PI)
    if wrapped <= -math.pi:
        wrapped += TWO_PI
    elif wrapped > math.pi:
        wrapped -= TWO_PI
    return wrapped


def moment_of_inertia(mass: float, radius: float) -> float:
    """Moment of inertia of a uniform solid sphere, (2/5) m r^2."""
    if mass <= 0.0:
        raise DomainError(f"mass must be positive, got {mass!r}")
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return 0.4 * mass * radius * radius


def particle_volume(radius: float) -> float:
    """Volume of a sphere, (4/3) pi r^3."""
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return (4.0 / 3.0) * math.pi * radius**3


@dataclass(frozen=True)
class PhysicalConstants:
    """Vacuum permeability, Boltzmann constant and bath temperature."""

    mu0: float = 4.0e-7 * math.pi  # T m / A
    kB: float = 1.380649e-23  # J / K
    temperature: float = 298.0  # K

    def __post_init__(self):
        if self.mu0 <= 0.0 or self.kB <= 0.0:
            raise DomainError("mu0 and kB must be positive")
        if self.temperature <= 0.0:
            raise DomainError(
                f"temperature must be positive, got {self.temperature!r}"
            )


@dataclass(frozen=True)
class ParticleParams:
    """Immutable physical description of one Janus particle.

    ``propulsion_force`` is the magnitude of the catalytic thrust in N.
    When ``None``, the magnitude is derived from the fluid's propulsion
    gain and peroxide concentration instead (see
    :func:`janusim.dynamics.propulsion_magnitude`).

    ``dipole_offset_phi`` is the fixed angle from the magnetic dipole axis
    to the propulsion axis, counterclockwise positive. With the dipole
    aligned to the field, the particle therefore swims along
    field angle + phi.
    """

    mass: float  # kg
    radius: float  # m
    propulsion_force: float | None = None  # N
    dipole_offset_phi: float = 0.0  # rad
    dipole_moment: float = DEFAULT_DIPOLE_MOMENT  # A m^2
    label: str = ""

    def __post_init__(self):
        if self.mass <= 0.0:
            raise DomainError(f"mass must be positive, got {self.mass!r}")
        if self.radius <= 0.0:
            raise DomainError(f"radius must be positive, got {self.radius!r}")
        if self.propulsion_force is not None and self.propulsion_force < 0.0:
            raise DomainError(
                f"propulsion_force must be >= 0, got {self.propulsion_force!r}"
            )
        if self.dipole_moment <= 0.0:
            raise DomainError(
                f"dipole_moment must be positive, got {self.dipole_moment!r}"
            )
        object.__setattr__(
            self, "dipole_offset_phi", normalize_angle(self.dipole_offset_phi)
        )

    @property
    def moment_of_inertia(self) -> float:
        return moment_of_inertia(self.mass, self.radius)

    @property
    def volume(self) -> float:
        return particle_volume(self.radius)


@dataclass(frozen=True)
class FluidParams:
    """Viscous medium and fuel description."""

    viscosity: float  # Pa s
    peroxide_concentration: float = 0.0  # dimensionless fraction in [0, 1]
    propulsion_gain: float | None = None  # N per unit concentration

    def __post_init__(self):
        if self.viscosity <= 0.0:
            raise DomainError(
                f"viscosity must be positive, got {self.viscosity!r}"
            )
        if not 0.0 <= self.peroxide_concentration <= 1.0:
            raise DomainError(
                "peroxide_concentration must lie in [0, 1], got "
                f"{self.peroxide_concentration!r}"
            )
        if self.propulsion_gain is not None and self.propulsion_gain < 0.0:
            raise DomainError(
                f"propulsion_gain must be >= 0, got {self.propulsion_gain!r}"
            )


@dataclass(frozen=True)
class ParticleState:
    """Planar kinematic state at one time instant."""

    position: tuple[float, float] = (0.0, 0.0)  # m
    velocity: tuple[float, float] = (0.0, 0.0)  # m / s
    heading: float = 0.0  # rad, propulsion axis from workspace x-axis
    angular_velocity: float = 0.0  # rad / s
    time: float = 0.0  # s

    def __post_init__(self):
        values = (*self.position, *self.velocity, self.angular_velocity, self.time)
        if not all(math.isfinite(v) for v in values):
            raise DomainError(f"non-finite component in state: {self!r}")
        object.__setattr__(self, "position", tuple(float(v) for v in self.position))
        object.__setattr__(self, "velocity", tuple(float(v) for v in self.velocity))
        object.__setattr__(self, "heading", normalize_angle(self.heading))
