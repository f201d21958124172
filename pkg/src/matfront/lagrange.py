"""Lagrange-Projection schemes.

A step is an acoustic Lagrangian update on a mesh moving with the interface
velocities, followed by a projection back onto the fixed grid. Three
projections are offered:

* conservative averaging of ``(rho, rho u, rho E, rho Y)``;
* averaging of ``p`` instead of ``rho E`` on cells flagged near a material
  front;
* the same pressure averaging with ``Y`` picked by random sampling, which keeps
  ``Y`` sharp and isolated fronts exactly at uniform velocity and pressure.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .eos import MixtureEOS
from .errors import CFLViolationError, PositivityError
from .grid import Boundary, pad


class ProjectionKind(str, Enum):
    CONSERVATIVE = "conservative"
    PRESSURE = "pressure"
    PRESSURE_SAMPLING = "pressure-sampling"


@dataclass(frozen=True)
class LagrangianSnapshot:
    """Cell and interface data at the end of the Lagrangian step.

    Cell arrays have ``n`` entries, interface arrays ``n + 1``; ``x_star`` is
    measured in the same frame as ``x_faces``.
    """

    tau: np.ndarray
    vel: np.ndarray
    etot: np.ndarray
    y: np.ndarray
    u_star: np.ndarray
    p_star: np.ndarray
    x_faces: np.ndarray
    dt: float
    boundary: Boundary = Boundary.TRANSMISSIVE

    @property
    def dx(self):
        return (self.x_faces[-1] - self.x_faces[0]) / (len(self.x_faces) - 1)

    @property
    def x_star(self):
        return self.x_faces + self.u_star * self.dt

    @property
    def dx_star(self):
        # formed from the velocity jump so a uniform flow gives exactly dx
        return self.dx + self.dt * np.diff(self.u_star)

    @property
    def rho(self):
        return 1.0 / self.tau

    def conserved(self):
        """Conserved vector on the moved cells."""
        rho = 1.0 / self.tau
        return np.array([rho, rho * self.vel, rho * self.etot, rho * self.y])


class SamplingSequence:
    """Stateful van der Corput stream; :meth:`next` returns ``a_1, a_2, ...``."""

    def __init__(self, start=1):
        self.index = start - 1

    def next(self):
        self.index += 1
        return van_der_corput(self.index)

    def copy(self):
        clone = SamplingSequence()
        clone.index = self.index
        return clone


def van_der_corput(n):
    """Base-2 radical inverse of ``n >= 1``."""
    if n < 1:
        raise ValueError("van der Corput index starts at 1")
    value, scale = 0.0, 0.5
    while n:
        if n & 1:
            value += scale
        n >>= 1
        scale *= 0.5
    return value


def interface_upstar(eos: MixtureEOS, V_left, V_right):
    """Acoustic interface velocity and pressure between two primitive states.

    The impedance is the larger of the two cell values ``rho c``.
    """
    rho_l, mom_l, p_l, y_l = V_left
    rho_r, mom_r, p_r, y_r = V_right
    u_l = mom_l / rho_l
    u_r = mom_r / rho_r
    z = np.maximum(
        rho_l * eos.sound_speed(rho_l, p_l, y_l), rho_r * eos.sound_speed(rho_r, p_r, y_r)
    )
    u_star = 0.5 * (u_l + u_r) + (p_l - p_r) / (2.0 * z)
    p_star = 0.5 * (p_l + p_r) + 0.5 * z * (u_l - u_r)
    return u_star, p_star


def lagrangian_step(
    eos: MixtureEOS, U, lam, x_faces, boundary=Boundary.TRANSMISSIVE, step=None
):
    """Acoustic Lagrangian update of the cells ``U`` over ``dt = lam * dx``."""
    U = np.asarray(U, dtype=float)
    x_faces = np.asarray(x_faces, dtype=float)
    dx = (x_faces[-1] - x_faces[0]) / (len(x_faces) - 1)
    dt = lam * dx
    V = eos.to_primitive(U, step=step)
    Vp = pad(V, boundary)
    u_star, p_star = interface_upstar(eos, Vp[:, :-1], Vp[:, 1:])

    rho, mom, etot, rhoy = U
    tau = 1.0 / rho
    vel = mom / rho
    E = etot / rho
    du = np.diff(u_star)
    tau_m = tau + lam * tau * du
    vel_m = vel - lam * tau * np.diff(p_star)
    E_m = E - lam * tau * np.diff(p_star * u_star)
    if np.any(tau_m <= 0.0):
        raise CFLViolationError(
            f"specific volume collapsed in cell {int(np.flatnonzero(tau_m <= 0.0)[0])}"
            + (f" at step {step}" if step is not None else "")
        )
    snap = LagrangianSnapshot(
        tau=tau_m, vel=vel_m, etot=E_m, y=V[3].copy(), u_star=u_star, p_star=p_star,
        x_faces=x_faces, dt=dt, boundary=Boundary(boundary),
    )
    if np.any(snap.dx_star <= 0.0):
        raise CFLViolationError("moved mesh is tangled")
    return snap


def _project(snap: LagrangianSnapshot, phi):
    """Average a piecewise-constant Lagrangian field back onto the fixed cells."""
    phi_p = pad(phi, snap.boundary)
    u = snap.u_star
    # upwind neighbour of each interface: left cell for u >= 0
    upwind = np.where(u >= 0.0, phi_p[:-1], phi_p[1:])
    transport = u * upwind
    return (snap.dx_star * phi - snap.dt * np.diff(transport)) / snap.dx


def project_conservative(snap: LagrangianSnapshot):
    """Conservative projection of ``(rho, rho u, rho E, rho Y)``."""
    return np.array([_project(snap, phi) for phi in snap.conserved()])


def detect_front_cells(y, eps, boundary=Boundary.TRANSMISSIVE):
    """Mask of cells whose mass-fraction jump to a neighbour exceeds ``eps``."""
    if not eps > 0.0:
        raise ValueError("front threshold must be positive")
    yp = pad(np.asarray(y, dtype=float), boundary)
    jump = np.abs(np.diff(yp))
    return np.maximum(jump[:-1], jump[1:]) > eps


def _lagrangian_pressure(eos, snap):
    rho = 1.0 / snap.tau
    e = snap.etot - 0.5 * snap.vel**2
    if np.any(e <= 0.0):
        raise PositivityError(
            "non-positive internal energy after Lagrangian step",
            cell=int(np.flatnonzero(e <= 0.0)[0]),
        )
    return eos.pressure(rho, e, snap.y)


def project_pressure(eos: MixtureEOS, snap: LagrangianSnapshot, front, y_new=None):
    """Projection averaging ``p`` instead of ``rho E`` on the ``front`` cells.

    ``y_new`` overrides the projected mass fraction (used by the sampling
    variant); ``rho Y`` is then rebuilt as ``rho * y_new`` everywhere.
    """
    front = np.asarray(front, dtype=bool)
    U_new = project_conservative(snap)
    if y_new is not None:
        U_new[3] = U_new[0] * y_new
    if not front.any():
        return U_new
    p_avg = _project(snap, _lagrangian_pressure(eos, snap))
    rho, mom, _, rhoy = U_new[:, front]
    V_front = np.array([rho, mom, p_avg[front], rhoy / rho])
    U_new[:, front] = eos.to_conserved(V_front)
    return U_new


def sample_mass_fraction(snap: LagrangianSnapshot, a):
    """Glimm-type choice of ``Y`` on the fixed cells from one sample ``a``.

    The sample point sits at ``a * dx`` from the left face of each cell and
    picks the Lagrangian cell (left neighbour, self or right neighbour) that
    covers it once the faces have moved.
    """
    if not 0.0 < a < 1.0:
        raise ValueError("sample must lie in (0, 1)")
    dx, dt, u = snap.dx, snap.dt, snap.u_star
    # offsets from each fixed left face x_{j-1/2}
    point = a * dx
    left_moved = u[:-1] * dt
    right_moved = dx + u[1:] * dt
    yp = pad(snap.y, snap.boundary)
    return np.where(
        point <= left_moved, yp[:-2], np.where(point >= right_moved, yp[2:], snap.y)
    )


def lp_step(
    eos: MixtureEOS,
    U,
    lam,
    x_faces,
    kind=ProjectionKind.CONSERVATIVE,
    eps=0.05,
    seq: SamplingSequence | None = None,
    boundary=Boundary.TRANSMISSIVE,
    step=None,
):
    """One Lagrange-Projection step with the chosen projection.

    The front set is taken from the time-n mass fractions. The sampling
    variant draws one value from ``seq`` per call.
    """
    kind = ProjectionKind(kind)
    snap = lagrangian_step(eos, U, lam, x_faces, boundary, step=step)
    if kind is ProjectionKind.CONSERVATIVE:
        return project_conservative(snap)
    front = detect_front_cells(snap.y, eps, boundary)
    if kind is ProjectionKind.PRESSURE:
        return project_pressure(eos, snap, front)
    if seq is None:
        raise ValueError("sampling projection needs a SamplingSequence")
    y_new = sample_mass_fraction(snap, seq.next())
    return project_pressure(eos, snap, front, y_new=y_new)
