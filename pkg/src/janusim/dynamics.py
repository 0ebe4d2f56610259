"""Force and torque laws plus both particle models.

The full model is the planar Newton-Euler balance of catalytic thrust,
Stokes drag, magnetic alignment torque and optional Langevin disturbances:

    m dv/dt = F_prop(theta) - 6 pi eta r v + xi_f
    I dw/dt = d B sin(field - theta + phi) - 8 pi eta r^3 w + xi_t

Its velocity and heading relax on microsecond scales (tau = m/(6 pi eta r)
and I/(8 pi eta r^3)), six orders of magnitude below experiment durations,
which justifies the reduced first-order model

    dp/dt = v_ss * (cos(field + phi), sin(field + phi)),   v_ss = F/(6 pi eta r)

where phi is the fixed dipole-to-propulsion offset of each particle. Both
models live here as pure functions; time stepping is in
:mod:`janusim.integrate`.

Brownian disturbances are realized as overdamped position and heading
increments with Stokes-Einstein diffusion coefficients: at microsecond
momentum relaxation times the velocity process is not resolvable at
practical simulation steps, so white-noise forces inside the inertial
equations would be all transient and no displacement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    FluidParams,
    ParticleParams,
    ParticleState,
    PhysicalConstants,
)
from .errors import ConfigurationError, DomainError
from .magnetics import FieldCommand, magnetic_torque


def translational_drag_coefficient(fluid: FluidParams, radius: float) -> float:
    """Stokes drag coefficient 6 pi eta r for a sphere, N s / m."""
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return 6.0 * math.pi * fluid.viscosity * radius


def rotational_drag_coefficient(fluid: FluidParams, radius: float) -> float:
    """Rotational Stokes drag coefficient 8 pi eta r^3, N m s."""
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return 8.0 * math.pi * fluid.viscosity * radius**3


def drag_force(v, fluid: FluidParams, radius: float) -> np.ndarray:
    """Stokes drag -6 pi eta r v on a sphere, N."""
    v = np.asarray(v, dtype=float)
    return -translational_drag_coefficient(fluid, radius) * v


def drag_torque(omega: float, fluid: FluidParams, radius: float) -> float:
    """Rotational Stokes drag -8 pi eta r^3 omega, N m."""
    return -rotational_drag_coefficient(fluid, radius) * omega


def propulsion_magnitude(params: ParticleParams, fluid: FluidParams) -> float:
    """Catalytic thrust magnitude in N.

    Uses the particle's directly fitted force when present, otherwise the
    fuel model gain x peroxide concentration.
    """
    if params.propulsion_force is not None:
        return params.propulsion_force
    if fluid.propulsion_gain is None:
        raise ConfigurationError(
            f"particle {params.label!r} has no propulsion_force and the fluid "
            "has no propulsion_gain"
        )
    return fluid.propulsion_gain * fluid.peroxide_concentration


def propulsion_force(
    params: ParticleParams, fluid: FluidParams, heading: float
) -> np.ndarray:
    """Catalytic thrust vector along the particle heading, N."""
    F = propulsion_magnitude(params, fluid)
    return F * np.array([math.cos(heading), math.sin(heading)])


@dataclass(frozen=True)
class DerivedConstants:
    """Reduction constants of one particle in one fluid."""

    tau_linear: float  # s, velocity relaxation m / (6 pi eta r)
    tau_rot: float  # s, angular velocity relaxation I / (8 pi eta r^3)
    v_ss: float  # m / s, terminal speed F / (6 pi eta r)
    D_t: float  # m^2 / s, translational diffusion kB T / (6 pi eta r)
    D_r: float  # rad^2 / s, rotational diffusion kB T / (8 pi eta r^3)

    def __post_init__(self):
        if min(self.tau_linear, self.tau_rot) <= 0.0 or min(self.D_t, self.D_r) < 0.0:
            raise DomainError(f"invalid derived constants: {self}")
        if self.v_ss < 0.0:
            raise DomainError(f"v_ss must be >= 0, got {self.v_ss!r}")

    @property
    def transient_distance(self) -> float:
        """Distance v_ss * 300 tau covered while the velocity transient decays."""
        return self.v_ss * 300.0 * self.tau_linear


def derived_constants(
    params: ParticleParams,
    fluid: FluidParams,
    consts: PhysicalConstants | None = None,
) -> DerivedConstants:
    """Relaxation times, terminal speed and diffusion coefficients."""
    consts = consts or PhysicalConstants()
    c_t = translational_drag_coefficient(fluid, params.radius)
    c_r = rotational_drag_coefficient(fluid, params.radius)
    kT = consts.kB * consts.temperature
    return DerivedConstants(
        tau_linear=params.mass / c_t,
        tau_rot=params.moment_of_inertia / c_r,
        v_ss=propulsion_magnitude(params, fluid) / c_t,
        D_t=kT / c_t,
        D_r=kT / c_r,
    )


@dataclass(frozen=True)
class Disturbance:
    """One realization of the Langevin force and torque, or a noise config.

    ``enabled`` gates both the sampled components here and stochastic
    stepping downstream; a disabled disturbance is identically zero.
    ``seed`` is the master seed from which per-particle streams derive.
    """

    translational: tuple[float, float] = (0.0, 0.0)  # N
    rotational: float = 0.0  # N m
    enabled: bool = False
    seed: int = 0

    def __post_init__(self):
        if not self.enabled:
            if self.translational != (0.0, 0.0) or self.rotational != 0.0:
                raise DomainError("a disabled disturbance must be zero")
        object.__setattr__(
            self, "translational", tuple(float(v) for v in self.translational)
        )


NO_DISTURBANCE = Disturbance()


def full_accel(
    state: ParticleState,
    params: ParticleParams,
    fluid: FluidParams,
    field: FieldCommand,
    dist: Disturbance = NO_DISTURBANCE,
) -> tuple[np.ndarray, float]:
    """Accelerations (dv/dt, dw/dt) of the full second-order model.

    Magnetic gradient forces are omitted (negligible in a near-uniform
    field) and propulsion exerts no torque.
    """
    f = propulsion_force(params, fluid, state.heading)
    f = f + drag_force(state.velocity, fluid, params.radius)
    f = f + np.asarray(dist.translational)
    torque = (
        magnetic_torque(params, state.heading, field)
        + drag_torque(state.angular_velocity, fluid, params.radius)
        + dist.rotational
    )
    return f / params.mass, torque / params.moment_of_inertia


def reduced_velocity(
    params: ParticleParams, fluid: FluidParams, field: FieldCommand
) -> np.ndarray:
    """Terminal velocity of the reduced model, v_ss along field angle + phi."""
    dc_angle = field.angle + params.dipole_offset_phi
    c_t = translational_drag_coefficient(fluid, params.radius)
    v_ss = propulsion_magnitude(params, fluid) / c_t
    return v_ss * np.array([math.cos(dc_angle), math.sin(dc_angle)])


def brownian_increment(
    dc: DerivedConstants, dt: float, rng: np.random.Generator
) -> tuple[np.ndarray, float]:
    """Overdamped Brownian increments over a step dt.

    Position components are independent N(0, 2 D_t dt); the heading
    increment is N(0, 2 D_r dt). Consumes exactly three normal draws from
    the stream, so realizations are reproducible and method-independent.
    """
    if dt <= 0.0:
        raise DomainError(f"dt must be positive, got {dt!r}")
    dp = rng.normal(0.0, math.sqrt(2.0 * dc.D_t * dt), size=2)
    dtheta = rng.normal(0.0, math.sqrt(2.0 * dc.D_r * dt))
    return dp, float(dtheta)
