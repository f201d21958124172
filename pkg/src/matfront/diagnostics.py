"""Conservation budgets and errors against a reference solution."""
from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

QUANTITIES = ("rho", "mom", "etot", "rho_y")
# below this initial total the error is reported in absolute terms
ABS_GUARD = 1e-12


@dataclass
class ConservationLedger:
    """Running budget of the four conserved totals.

    Boundary fluxes enter as ``(flux_in_at_left, flux_out_at_right)`` pairs of
    length-4 vectors; pass ``None`` on periodic domains.
    """

    initial: np.ndarray
    dx: float
    boundary_integral: np.ndarray = field(default_factory=lambda: np.zeros(4))
    steps: list = field(default_factory=list)
    times: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @classmethod
    def start(cls, U, dx):
        ledger = cls(initial=np.asarray(U, dtype=float).sum(axis=1) * dx, dx=dx)
        ledger.steps.append(0)
        ledger.times.append(0.0)
        ledger.errors.append(np.zeros(4))
        return ledger

    @property
    def absolute(self):
        """Per-quantity flag: True where the error is absolute, not relative."""
        return np.abs(self.initial) < ABS_GUARD

    def record_step(self, U, boundary_fluxes, dt, time=None):
        if boundary_fluxes is not None:
            f_in, f_out = boundary_fluxes
            self.boundary_integral = self.boundary_integral + dt * (
                np.asarray(f_out) - np.asarray(f_in)
            )
        total = np.asarray(U, dtype=float).sum(axis=1) * self.dx
        defect = np.abs(total - self.initial + self.boundary_integral)
        scale = np.where(self.absolute, 1.0, np.abs(self.initial))
        self.steps.append(self.steps[-1] + 1)
        self.times.append((self.times[-1] + dt) if time is None else time)
        self.errors.append(defect / scale)
        return self

    def history(self):
        return np.array(self.errors)

    def peak(self):
        return self.history().max(axis=0)

    def write_csv(self, path):
        flags = "".join("a" if f else "r" for f in self.absolute)
        try:
            with open(path, "w", newline="") as fh:
                writer = csv.writer(fh)
                writer.writerow(["step", "time"] + [f"err_{q}" for q in QUANTITIES] + ["flags"])
                for step, t, err in zip(self.steps, self.times, self.errors):
                    writer.writerow([step, repr(t)] + [repr(float(e)) for e in err] + [flags])
        except OSError as exc:
            raise OSError(f"cannot write conservation history to {path}: {exc}") from exc


def l1_error(V, exact_sampler, centers, dx, t):
    """L1 norms ``sum |q - q_exact| dx`` of ``rho``, ``u``, ``p`` and ``Y``.

    ``V`` is the primitive array and ``exact_sampler(x, t)`` returns exact
    primitive states at the cell centres (see :func:`riemann_sampler`).
    """
    if not t > 0.0:
        raise ValueError("exact comparison needs t > 0")
    exact = np.asarray(exact_sampler(np.asarray(centers), t))
    num = np.array([V[0], V[1] / V[0], V[2], V[3]])
    ref = np.array([exact[0], exact[1] / exact[0], exact[2], exact[3]])
    return np.abs(num - ref).sum(axis=1) * dx


def riemann_sampler(solution, x_disc):
    """Adapter turning a Riemann solution into ``sampler(x, t)``."""

    def sampler(x, t):
        return solution.sample((np.asarray(x) - x_disc) / t)

    return sampler
