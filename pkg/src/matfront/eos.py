"""Two-species perfect gas closure.

State arrays carry their four components on the leading axis, so a single
state has shape ``(4,)`` and a row of cells has shape ``(4, n)``:

* conserved ``U = (rho, rho*u, rho*E, rho*Y)``
* primitive ``V = (rho, rho*u, p, Y)``

The second primitive slot is the momentum, not the velocity.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PositivityError

# mass fractions this far outside [0, 1] are clamped inside the closure only;
# the original Two-Flux update overshoots by O(1e-9) at strong shocks
Y_DUST = 1e-8


@dataclass(frozen=True)
class GasComponent:
    """A calorically perfect gas described by ``gamma``, ``cp`` and ``cv``.

    Any two of the three determine the third; passing all three requires
    ``cp / cv == gamma``.
    """

    gamma: float
    cv: float = 1.0
    cp: float | None = None

    def __post_init__(self):
        if self.cp is None:
            object.__setattr__(self, "cp", self.gamma * self.cv)
        if not self.gamma > 1.0:
            raise ValueError(f"gamma must exceed 1, got {self.gamma}")
        if not (self.cv > 0.0 and self.cp > 0.0):
            raise ValueError("specific heats must be positive")
        if abs(self.cp / self.cv - self.gamma) > 1e-12 * self.gamma:
            raise ValueError(
                f"cp/cv = {self.cp / self.cv!r} inconsistent with gamma = {self.gamma!r}"
            )


def _checked_y(y):
    y = np.asarray(y, dtype=float)
    if np.any(y < -Y_DUST) or np.any(y > 1.0 + Y_DUST):
        bad = np.flatnonzero(np.atleast_1d((y < -Y_DUST) | (y > 1.0 + Y_DUST)))
        raise PositivityError(
            f"mass fraction outside [0, 1]: {np.atleast_1d(y)[bad[0]]!r}",
            cell=int(bad[0]) if y.ndim else None,
        )
    return np.clip(y, 0.0, 1.0)


@dataclass(frozen=True)
class MixtureEOS:
    """Mixture of two perfect gases in mechanical and thermal equilibrium.

    Species 1 is the one tracked by the mass fraction ``Y``.
    """

    gas1: GasComponent
    gas2: GasComponent

    @classmethod
    def from_gammas(cls, gamma1, gamma2, cv1=1.0, cv2=1.0):
        return cls(GasComponent(gamma1, cv1), GasComponent(gamma2, cv2))

    def cv(self, y):
        """Mixture heat capacity at constant volume."""
        y = _checked_y(y)
        return y * self.gas1.cv + (1.0 - y) * self.gas2.cv

    def cp(self, y):
        y = _checked_y(y)
        return y * self.gas1.cp + (1.0 - y) * self.gas2.cp

    def gamma(self, y):
        """Adiabatic coefficient of the mixture at mass fraction ``y``."""
        y = _checked_y(y)
        cp = y * self.gas1.cp + (1.0 - y) * self.gas2.cp
        cv = y * self.gas1.cv + (1.0 - y) * self.gas2.cv
        return cp / cv

    def pressure(self, rho, e, y):
        """Pressure from density and specific internal energy."""
        return (self.gamma(y) - 1.0) * rho * e

    def internal_energy(self, rho, p, y):
        """Specific internal energy, inverse of :meth:`pressure`."""
        return p / ((self.gamma(y) - 1.0) * rho)

    def temperature(self, e, y):
        return e / self.cv(y)

    def sound_speed(self, rho, p, y):
        rho = np.asarray(rho, dtype=float)
        p = np.asarray(p, dtype=float)
        if np.any(rho <= 0.0) or np.any(p <= 0.0):
            bad = np.flatnonzero(np.atleast_1d((rho <= 0.0) | (p <= 0.0)))
            raise PositivityError(
                "non-positive density or pressure in sound speed",
                cell=int(bad[0]) if np.ndim(rho) or np.ndim(p) else None,
            )
        return np.sqrt(self.gamma(y) * p / rho)

    def to_primitive(self, U, step=None):
        """Map ``(rho, rho u, rho E, rho Y)`` to ``(rho, rho u, p, Y)``."""
        U = np.asarray(U, dtype=float)
        rho, mom, etot, rhoy = U
        if np.any(rho <= 0.0):
            bad = np.flatnonzero(np.atleast_1d(rho <= 0.0))
            raise PositivityError("non-positive density", cell=_cell(U, bad), step=step)
        y = rhoy / rho
        p = (self.gamma(y) - 1.0) * (etot - 0.5 * mom * mom / rho)
        if np.any(p <= 0.0):
            bad = np.flatnonzero(np.atleast_1d(p <= 0.0))
            raise PositivityError("non-positive pressure", cell=_cell(U, bad), step=step)
        return np.array([rho, mom, p, y])

    def to_conserved(self, V):
        """Map ``(rho, rho u, p, Y)`` to ``(rho, rho u, rho E, rho Y)``."""
        V = np.asarray(V, dtype=float)
        rho, mom, p, y = V
        etot = p / (self.gamma(y) - 1.0) + 0.5 * mom * mom / rho
        return np.array([rho, mom, etot, rho * y])

    def eigenvalues(self, U):
        """Wave speeds ``(u - c, u, u + c)`` stacked on the leading axis."""
        rho, mom, p, y = self.to_primitive(U)
        u = mom / rho
        c = self.sound_speed(rho, p, y)
        return np.array([u - c, u, u + c])


def _cell(U, bad):
    return int(bad[0]) if U.ndim > 1 else None

