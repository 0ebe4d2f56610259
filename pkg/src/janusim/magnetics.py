"""Magnetic field evaluation and the wrench a field exerts on a particle.

Two field sources are supported: a uniform in-plane field given directly by a
:class:`FieldCommand` (the default path for particle dynamics, where field
gradients are negligible), and a Biot-Savart sum over a :class:`CoilRig` of
polygonal current loops (for rig design and uniformity studies).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import ParticleParams, PhysicalConstants, normalize_angle
from .errors import DomainError, GeometryError, SingularityError

_MU0_OVER_4PI = 1e-7  # T m / A


@dataclass(frozen=True)
class FieldCommand:
    """Commanded uniform in-plane field: direction angle plus magnitude."""

    angle: float = 0.0  # rad
    magnitude: float = 0.0  # T

    def __post_init__(self):
        if not math.isfinite(self.magnitude) or self.magnitude < 0.0:
            raise DomainError(f"magnitude must be >= 0, got {self.magnitude!r}")
        object.__setattr__(self, "angle", normalize_angle(self.angle))

    def unit_vector(self) -> np.ndarray:
        return np.array([math.cos(self.angle), math.sin(self.angle), 0.0])


@dataclass(frozen=True, eq=False)
class FieldSample:
    """Flux density at a point, optionally with its spatial gradient.

    ``grad_B[i, j]`` is dB_i/dx_j; for a physical (divergence-free) field its
    trace vanishes up to numerical error.
    """

    B: np.ndarray  # (3,) T
    grad_B: np.ndarray | None = None  # (3, 3) T / m

    def __post_init__(self):
        B = np.asarray(self.B, dtype=float)
        if B.shape != (3,) or not np.all(np.isfinite(B)):
            raise DomainError(f"B must be a finite 3-vector, got {self.B!r}")
        object.__setattr__(self, "B", B)
        if self.grad_B is not None:
            g = np.asarray(self.grad_B, dtype=float)
            if g.shape != (3, 3) or not np.all(np.isfinite(g)):
                raise DomainError("grad_B must be a finite 3x3 matrix")
            object.__setattr__(self, "grad_B", g)


@dataclass(frozen=True, eq=False)
class CurrentLoop:
    """Closed polyline of vertices (m) carrying a current (A).

    The stored vertex array is closed: vertices[0] == vertices[-1].
    """

    vertices: np.ndarray  # (N, 3), closed
    current: float  # A

    def __post_init__(self):
        verts = np.asarray(self.vertices, dtype=float)
        if verts.ndim != 2 or verts.shape[1] != 3:
            raise DomainError("loop vertices must have shape (N, 3)")
        if not np.all(np.isfinite(verts)):
            raise DomainError("loop vertices must be finite")
        if not np.allclose(verts[0], verts[-1]):
            verts = np.vstack([verts, verts[0]])
        if verts.shape[0] < 4:  # 3 distinct vertices plus the closing one
            raise DomainError("a loop needs at least 3 distinct vertices")
        verts.setflags(write=False)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "current", float(self.current))

    def with_current(self, current: float) -> "CurrentLoop":
        return CurrentLoop(self.vertices, current)


def circular_loop(
    center, axis, radius: float, current: float = 0.0, segments: int = 128
) -> CurrentLoop:
    """Regular polygon inscribed in a circle, wound right-handed about axis."""
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    if segments < 3:
        raise DomainError(f"need at least 3 segments, got {segments!r}")
    center = np.asarray(center, dtype=float)
    n = np.asarray(axis, dtype=float)
    norm = np.linalg.norm(n)
    if norm == 0.0:
        raise DomainError("axis must be nonzero")
    n = n / norm
    # Any unit vector not parallel to the axis seeds the in-plane basis.
    helper = np.array([0.0, 0.0, 1.0]) if abs(n[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    e1 = np.cross(helper, n)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    theta = np.linspace(0.0, 2.0 * math.pi, segments + 1)
    verts = center + radius * (np.outer(np.cos(theta), e1) + np.outer(np.sin(theta), e2))
    return CurrentLoop(verts, current)


@dataclass(frozen=True, eq=False)
class CoilRig:
    """A set of current loops evaluated jointly by superposition."""

    loops: tuple[CurrentLoop, ...]

    def __post_init__(self):
        object.__setattr__(self, "loops", tuple(self.loops))

    def with_currents(self, currents) -> "CoilRig":
        currents = np.asarray(currents, dtype=float)
        if currents.shape != (len(self.loops),):
            raise DomainError(
                f"expected {len(self.loops)} currents, got shape {currents.shape}"
            )
        return CoilRig(tuple(l.with_current(c) for l, c in zip(self.loops, currents)))

    @property
    def characteristic_length(self) -> float:
        """Largest vertex distance from any loop centroid (coil radius scale)."""
        best = 0.0
        for loop in self.loops:
            centroid = loop.vertices[:-1].mean(axis=0)
            best = max(best, float(np.linalg.norm(loop.vertices - centroid, axis=1).max()))
        return best


def default_rig(
    coil_radius: float = 0.02,
    distance: float = 0.04,
    segments: int = 128,
    currents=(0.0, 0.0, 0.0, 0.0),
) -> CoilRig:
    """Four identical circular coils on +-X and +-Y with axes through the origin.

    Geometry is a placeholder for rig studies; particle dynamics use uniform
    commanded fields.
    """
    cx = np.array([1.0, 0.0, 0.0])
    cy = np.array([0.0, 1.0, 0.0])
    loops = (
        circular_loop(+distance * cx, cx, coil_radius, currents[0], segments),
        circular_loop(-distance * cx, cx, coil_radius, currents[1], segments),
        circular_loop(+distance * cy, cy, coil_radius, currents[2], segments),
        circular_loop(-distance * cy, cy, coil_radius, currents[3], segments),
    )
    return CoilRig(loops)


def _loop_field(loop: CurrentLoop, point: np.ndarray) -> np.ndarray:
    starts = loop.vertices[:-1]
    ends = loop.vertices[1:]
    dl = ends - starts
    seg_len = np.linalg.norm(dl, axis=1)
    live = seg_len > 0.0
    if not live.any():
        return np.zeros(3)
    starts, dl, seg_len = starts[live], dl[live], seg_len[live]

    # Distance from the evaluation point to each segment, for the
    # singularity guard.
    rel = point - starts
    t = np.clip(np.einsum("ij,ij->i", rel, dl) / seg_len**2, 0.0, 1.0)
    closest = starts + t[:, None] * dl
    dist = np.linalg.norm(point - closest, axis=1)
    if np.any(dist <= seg_len * 1e-6):
        raise SingularityError("field point lies on a wire segment")

    mid = starts + 0.5 * dl
    r = point - mid
    r3 = np.linalg.norm(r, axis=1) ** 3
    contrib = np.cross(dl, r) / r3[:, None]
    return _MU0_OVER_4PI * loop.current * contrib.sum(axis=0)


def _rig_field(rig: CoilRig, point: np.ndarray) -> np.ndarray:
    if not rig.loops:
        raise DomainError("rig has no loops")
    return sum((_loop_field(loop, point) for loop in rig.loops), np.zeros(3))


def biot_savart(rig: CoilRig, point, gradient: bool = False) -> FieldSample:
    """Field of a coil rig at a point, by midpoint-rule segment summation.

    The gradient, when requested, is a central difference with step
    1e-4 x the rig's characteristic length.
    """
    point = np.asarray(point, dtype=float)
    if point.shape != (3,):
        raise DomainError(f"point must be a 3-vector, got shape {point.shape}")
    B = _rig_field(rig, point)
    grad = None
    if gradient:
        h = 1e-4 * rig.characteristic_length
        if h <= 0.0:
            raise DomainError("rig has zero extent, cannot take gradient")
        grad = np.empty((3, 3))
        for j in range(3):
            step = np.zeros(3)
            step[j] = h
            grad[:, j] = (_rig_field(rig, point + step) - _rig_field(rig, point - step)) / (2.0 * h)
    return FieldSample(B=B, grad_B=grad)


def command_to_field(cmd: FieldCommand) -> FieldSample:
    """Uniform in-plane field for a command; the gradient is identically zero."""
    return FieldSample(B=cmd.magnitude * cmd.unit_vector(), grad_B=np.zeros((3, 3)))


def rig_currents_for_direction(rig: CoilRig, cmd: FieldCommand) -> np.ndarray:
    """Minimum-norm coil currents reproducing a command's in-plane field at the origin.

    Solves the 2 x N linear system of per-unit-current origin fields.
    """
    if not rig.loops:
        raise DomainError("rig has no loops")
    origin = np.zeros(3)
    columns = []
    for loop in rig.loops:
        unit = loop.with_current(1.0)
        columns.append(_loop_field(unit, origin)[:2])
    A = np.column_stack(columns)  # (2, n_loops)
    if np.linalg.matrix_rank(A, tol=np.abs(A).max() * 1e-9 if A.size else None) < 2:
        raise GeometryError("rig cannot span the workspace plane at the origin")
    target = cmd.magnitude * np.array([math.cos(cmd.angle), math.sin(cmd.angle)])
    currents, *_ = np.linalg.lstsq(A, target, rcond=None)
    return currents


def dipole_angle(params: ParticleParams, heading: float) -> float:
    """Workspace angle of the dipole axis for a particle at a given heading.

    The propulsion axis leads the dipole axis by the particle's offset angle,
    so the dipole sits at heading - phi.
    """
    return heading - params.dipole_offset_phi


def magnetic_torque(
    params: ParticleParams, heading: float, field: FieldCommand
) -> float:
    """Out-of-plane torque d x B on the particle's dipole, in N m.

    Zero iff the dipole is aligned or anti-aligned with the field; otherwise
    its sign rotates the dipole toward the field direction.
    """
    misalignment = field.angle - dipole_angle(params, heading)
    return params.dipole_moment * field.magnitude * math.sin(misalignment)


def magnetic_force(
    params: ParticleParams, heading: float, field: FieldSample
) -> np.ndarray:
    """In-plane force (d m_hat . grad) B on the dipole, in N.

    Exactly zero in a uniform field, which is why gradient forces are
    neglected in the particle dynamics.
    """
    if field.grad_B is None:
        raise DomainError("magnetic_force needs a field sample with a gradient")
    delta = dipole_angle(params, heading)
    m_hat = np.array([math.cos(delta), math.sin(delta), 0.0])
    force = params.dipole_moment * field.grad_B @ m_hat
    return force[:2]


def loop_center_field_magnitude(
    current: float, radius: float, consts: PhysicalConstants | None = None
) -> float:
    """Closed-form |B| at the center of an ideal circular loop, mu0 I / (2 a).

    Kept as an independent oracle for the polygonal Biot-Savart sum.
    """
    if radius <= 0.0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    mu0 = (consts or PhysicalConstants()).mu0
    return mu0 * abs(current) / (2.0 * radius)
