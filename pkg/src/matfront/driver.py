"""Time loop, test presets and CSV output."""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import lagrange, twoflux
from .diagnostics import ConservationLedger, l1_error, riemann_sampler
from .eos import MixtureEOS
from .errors import SolverError, VacuumError
from .flux import NumericalFluxKind, physical_flux
from .grid import Boundary, Grid, pad
from .riemann import solve_riemann


class SchemeKind(str, Enum):
    TWOFLUX = "twoflux"
    TWOFLUX_QC = "twoflux-qc"
    LP = "lp"
    LP_P = "lp-p"
    LP_PS = "lp-ps"

    @property
    def is_lagrangian(self):
        return self in (SchemeKind.LP, SchemeKind.LP_P, SchemeKind.LP_PS)


_PROJECTION = {
    SchemeKind.LP: lagrange.ProjectionKind.CONSERVATIVE,
    SchemeKind.LP_P: lagrange.ProjectionKind.PRESSURE,
    SchemeKind.LP_PS: lagrange.ProjectionKind.PRESSURE_SAMPLING,
}


@dataclass
class SimulationConfig:
    """Everything needed to reproduce a run.

    ``left`` and ``right`` are primitive states ``(rho, rho u, p, Y)``.
    ``initial_cells`` replaces the Riemann data by a tabulated conserved
    array of shape ``(4, n_cells)``.
    """

    left: tuple = (1.0, 1.0, 1.0, 1.0)
    right: tuple = (0.1, 0.1, 1.0, 0.0)
    x_disc: float = 0.5
    x_min: float = 0.0
    x_max: float = 1.0
    dx: float = 0.005
    gamma1: float = 1.4
    gamma2: float = 1.6
    cv1: float = 1.0
    cv2: float = 1.0
    scheme: SchemeKind = SchemeKind.LP_PS
    flux: NumericalFluxKind = NumericalFluxKind.HLLC
    eps: float = 0.05
    cfl: float = 0.45
    t_end: float = 0.15
    boundary: Boundary = Boundary.TRANSMISSIVE
    initial_cells: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        self.scheme = SchemeKind(self.scheme)
        self.flux = NumericalFluxKind(self.flux)
        self.boundary = Boundary(self.boundary)
        self.left = tuple(float(v) for v in self.left)
        self.right = tuple(float(v) for v in self.right)
        if not 0.0 < self.cfl <= 0.5:
            raise ValueError(f"CFL must lie in (0, 0.5], got {self.cfl}")
        if not self.dx > 0.0:
            raise ValueError("dx must be positive")
        if self.t_end < 0.0:
            raise ValueError("end time must be non-negative")
        if self.scheme in (SchemeKind.LP_P, SchemeKind.LP_PS) and not self.eps > 0.0:
            raise ValueError("front threshold eps must be positive")

    @property
    def eos(self):
        return MixtureEOS.from_gammas(self.gamma1, self.gamma2, self.cv1, self.cv2)

    @property
    def grid(self):
        return Grid.from_dx(self.x_min, self.x_max, self.dx)

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)


def preset(name, **overrides):
    """Return the configuration of test ``"A"`` (isolated front) or ``"B"`` (strong shock)."""
    name = name.upper()
    if name == "A":
        base = dict(left=(1.0, 1.0, 1.0, 1.0), right=(0.1, 0.1, 1.0, 0.0), dx=0.005, t_end=0.15)
    elif name == "B":
        base = dict(left=(1.0, 0.0, 500.0, 1.0), right=(1.0, 0.0, 0.2, 0.0), dx=0.00125, t_end=0.008)
    else:
        raise ValueError(f"unknown test preset {name!r}")
    base.update(gamma1=1.4, gamma2=1.6, x_disc=0.5, x_min=0.0, x_max=1.0)
    base.update(overrides)
    return SimulationConfig(**base)


def initialize(config: SimulationConfig):
    """Exact cell averages of the Riemann data on the configured grid."""
    grid = config.grid
    eos = config.eos
    if config.initial_cells is not None:
        U = np.array(config.initial_cells, dtype=float)
        if U.shape != (4, grid.n_cells):
            raise ValueError(f"initial_cells must have shape (4, {grid.n_cells})")
        eos.to_primitive(U)
        return U
    UL = eos.to_conserved(config.left)
    UR = eos.to_conserved(config.right)
    faces = grid.interfaces
    # fraction of each cell lying left of the discontinuity
    frac = np.clip((config.x_disc - faces[:-1]) / grid.dx, 0.0, 1.0)
    return frac * UL[:, None] + (1.0 - frac) * UR[:, None]


def compute_dt(eos, U, dx, cfl, lagrangian=False, remaining=None, boundary=Boundary.TRANSMISSIVE):
    """Stable time step for the current cells.

    Lagrangian schemes are further limited by the acoustic condition
    ``dt * max(rho c)_{j+-1/2} * tau_j / dx <= cfl``.
    """
    rho, mom, p, y = eos.to_primitive(U)
    c = eos.sound_speed(rho, p, y)
    dt = cfl * dx / np.max(np.abs(mom / rho) + c)
    if lagrangian:
        z = pad(rho * c, boundary)
        z_face = np.maximum(z[:-1], z[1:])
        z_cell = np.maximum(z_face[:-1], z_face[1:])
        dt = min(dt, cfl * dx / np.max(z_cell / rho))
    if remaining is not None and dt >= remaining:
        dt = remaining
    return float(dt)


@dataclass
class RunResult:
    config: SimulationConfig
    U: np.ndarray
    time: float
    steps: int
    ledger: ConservationLedger
    l1: np.ndarray | None = None

    @property
    def primitive(self):
        return self.config.eos.to_primitive(self.U)


def make_stepper(config: SimulationConfig):
    """Return ``step(U, lam, n) -> U`` for the configured scheme."""
    eos, scheme, boundary = config.eos, config.scheme, config.boundary
    if scheme is SchemeKind.TWOFLUX:
        return lambda U, lam, n: twoflux.twoflux_step_original(
            eos, config.flux, U, lam, boundary, step=n
        )
    if scheme is SchemeKind.TWOFLUX_QC:
        return lambda U, lam, n: twoflux.twoflux_step_quasiconservative(
            eos, config.flux, U, lam, boundary, step=n
        )
    faces = config.grid.interfaces
    seq = lagrange.SamplingSequence()
    kind = _PROJECTION[scheme]
    return lambda U, lam, n: lagrange.lp_step(
        eos, U, lam, faces, kind, config.eps, seq, boundary, step=n
    )


def run(config: SimulationConfig, max_steps=10_000_000):
    """Integrate the configured problem up to ``config.t_end``."""
    eos = config.eos
    grid = config.grid
    U = initialize(config)
    ledger = ConservationLedger.start(U, grid.dx)
    stepper = make_stepper(config)
    t, n = 0.0, 0
    while t < config.t_end and n < max_steps:
        remaining = config.t_end - t
        dt = compute_dt(
            eos, U, grid.dx, config.cfl, config.scheme.is_lagrangian, remaining, config.boundary
        )
        if config.boundary is Boundary.PERIODIC:
            fluxes = None
        else:
            fluxes = (physical_flux(eos, U[:, 0]), physical_flux(eos, U[:, -1]))
        try:
            U = stepper(U, dt / grid.dx, n + 1)
        except SolverError as exc:
            raise type(exc)(f"{exc} [scheme {config.scheme.value}, t={t:.6g}]") from exc
        n += 1
        t = config.t_end if dt == remaining else t + dt
        ledger.record_step(U, fluxes, dt, time=t)

    result = RunResult(config, U, t, n, ledger)
    if config.initial_cells is None and t > 0.0:
        try:
            sampler = exact_sampler(config)
        except VacuumError:
            return result
        result.l1 = l1_error(result.primitive, sampler, grid.centers, grid.dx, t)
    return result


def exact_sampler(config: SimulationConfig):
    sol = solve_riemann(config.eos, config.left, config.right)
    return riemann_sampler(sol, config.x_disc)


PROFILE_HEADER = ("x", "rho", "u", "p", "Y", "E", "T")


def profile_table(V, centers, eos):
    rho, mom, p, y = V
    u = mom / rho
    e = eos.internal_energy(rho, p, y)
    return np.array([centers, rho, u, p, y, e + 0.5 * u * u, eos.temperature(e, y)])


def _write_table(table, path):
    try:
        with open(path, "w") as fh:
            fh.write(",".join(PROFILE_HEADER) + "\n")
            for row in table.T:
                fh.write(",".join(f"{v:.17g}" for v in row) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write profile to {path}: {exc}") from exc


def write_profile_csv(U, grid: Grid, eos: MixtureEOS, path):
    """Write cell-centre primitive data with header ``x,rho,u,p,Y,E,T``."""
    _write_table(profile_table(eos.to_primitive(U), grid.centers, eos), path)


def write_exact_csv(config: SimulationConfig, path, t=None):
    t = config.t_end if t is None else t
    grid = config.grid
    if t > 0.0:
        V = exact_sampler(config)(grid.centers, t)
    else:
        V = config.eos.to_primitive(initialize(config))
    _write_table(profile_table(V, grid.centers, config.eos), path)


def write_meta(config: SimulationConfig, result: RunResult, path):
    lines = [f"{f.name} = {_fmt(getattr(config, f.name))}"
             for f in dataclasses.fields(config) if f.name != "initial_cells"]
    lines += [f"steps = {result.steps}", f"final_time = {result.time!r}"]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def _fmt(value):
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, tuple):
        return ",".join(repr(v) for v in value)
    return repr(value)


def write_outputs(result: RunResult, out_dir):
    """Write ``profile.csv``, ``exact.csv``, ``conservation.csv`` and ``meta``."""
    os.makedirs(out_dir, exist_ok=True)
    config = result.config
    write_profile_csv(result.U, config.grid, config.eos, os.path.join(out_dir, "profile.csv"))
    if config.initial_cells is None:
        write_exact_csv(config, os.path.join(out_dir, "exact.csv"), result.time)
    result.ledger.write_csv(os.path.join(out_dir, "conservation.csv"))
    write_meta(config, result, os.path.join(out_dir, "meta"))
