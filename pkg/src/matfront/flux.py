"""Physical flux and two-point numerical fluxes.

All functions accept a single state ``(4,)`` or a batch ``(4, n)`` and work
componentwise on the trailing axis.
"""
from __future__ import annotations

from enum import Enum

import numpy as np

from .eos import MixtureEOS


class NumericalFluxKind(str, Enum):
    RUSANOV = "rusanov"
    HLL = "hll"
    HLLC = "hllc"


def physical_flux(eos: MixtureEOS, U):
    """Return ``(rho u, rho u^2 + p, (rho E + p) u, rho Y u)``."""
    U = np.asarray(U, dtype=float)
    rho, mom, etot, rhoy = U
    p = eos.to_primitive(U)[2]
    u = mom / rho
    return np.array([mom, mom * u + p, (etot + p) * u, rhoy * u])


def _speeds(eos, U):
    rho, mom, p, y = eos.to_primitive(U)
    u = mom / rho
    return u, eos.sound_speed(rho, p, y), p


def rusanov_flux(eos: MixtureEOS, UL, UR):
    """Local Lax-Friedrichs flux with ``s = max(|u| + c)`` over both states."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    uL, cL, _ = _speeds(eos, UL)
    uR, cR, _ = _speeds(eos, UR)
    s = np.maximum(np.abs(uL) + cL, np.abs(uR) + cR)
    return 0.5 * (physical_flux(eos, UL) + physical_flux(eos, UR)) - 0.5 * s * (UR - UL)


def hll_flux(eos: MixtureEOS, UL, UR):
    """Two-wave HLL flux with Davis speed estimates."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    uL, cL, _ = _speeds(eos, UL)
    uR, cR, _ = _speeds(eos, UR)
    sL = np.minimum(uL - cL, uR - cR)
    sR = np.maximum(uL + cL, uR + cR)
    FL = physical_flux(eos, UL)
    FR = physical_flux(eos, UR)
    width = np.where(sR > sL, sR - sL, 1.0)
    mid = (sR * FL - sL * FR + sL * sR * (UR - UL)) / width
    return np.where(sL >= 0.0, FL, np.where(sR <= 0.0, FR, mid))


def hllc_flux(eos: MixtureEOS, UL, UR):
    """Three-wave HLLC flux; resolves isolated contacts exactly."""
    UL = np.asarray(UL, dtype=float)
    UR = np.asarray(UR, dtype=float)
    uL, cL, pL = _speeds(eos, UL)
    uR, cR, pR = _speeds(eos, UR)
    rhoL, rhoR = UL[0], UR[0]
    sL = np.minimum(uL - cL, uR - cR)
    sR = np.maximum(uL + cL, uR + cR)
    s_star = (pR - pL + rhoL * uL * (sL - uL) - rhoR * uR * (sR - uR)) / (
        rhoL * (sL - uL) - rhoR * (sR - uR)
    )
    FL = physical_flux(eos, UL)
    FR = physical_flux(eos, UR)

    def star(U, rho, u, p, s):
        factor = rho * (s - u) / (s - s_star)
        return factor * np.array(
            [
                np.ones_like(factor),
                s_star,
                U[2] / rho + (s_star - u) * (s_star + p / (rho * (s - u))),
                U[3] / rho,
            ]
        )

    # the unselected branches may divide by zero
    with np.errstate(divide="ignore", invalid="ignore"):
        FsL = FL + sL * (star(UL, rhoL, uL, pL, sL) - UL)
        FsR = FR + sR * (star(UR, rhoR, uR, pR, sR) - UR)
    return np.where(
        sL >= 0.0, FL, np.where(s_star >= 0.0, FsL, np.where(sR > 0.0, FsR, FR))
    )


_FLUXES = {
    NumericalFluxKind.RUSANOV: rusanov_flux,
    NumericalFluxKind.HLL: hll_flux,
    NumericalFluxKind.HLLC: hllc_flux,
}


def numerical_flux(kind):
    """Look up the flux function for a :class:`NumericalFluxKind` or its name."""
    return _FLUXES[NumericalFluxKind(kind)]
