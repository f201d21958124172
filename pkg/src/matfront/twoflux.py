"""Two-Flux method for the two-species Euler system.

Each interface carries two single-fluid fluxes: the one used by the left cell
sees the left mass fraction on both sides, the one used by the right cell sees
the right mass fraction. The partial density is then advanced with a plain
conservative flux computed from the time-n states.
"""
from __future__ import annotations

import numpy as np

from .eos import MixtureEOS
from .errors import PositivityError
from .flux import numerical_flux
from .grid import Boundary, pad


def ghost_pair(eos: MixtureEOS, U_j, U_jp1):
    """Return ``(ubar_{j+1,L}, ubar_{j,R})`` for the interface ``j+1/2``.

    ``ubar_{j+1,L}`` keeps density, momentum and pressure of cell ``j+1`` with
    the mass fraction of cell ``j``; ``ubar_{j,R}`` is the mirror image.
    """
    V_j = eos.to_primitive(U_j)
    V_jp1 = eos.to_primitive(U_jp1)
    ghost_left = V_jp1.copy()
    ghost_left[3] = V_j[3]
    ghost_right = V_j.copy()
    ghost_right[3] = V_jp1[3]
    return eos.to_conserved(ghost_left), eos.to_conserved(ghost_right)


def _interface_fluxes(eos, g, Up):
    """Fluxes on every interface of the padded array ``Up``."""
    left, right = Up[:, :-1], Up[:, 1:]
    ubar_L, ubar_R = ghost_pair(eos, left, right)
    g_L = g(eos, left, ubar_L)
    g_R = g(eos, ubar_R, right)
    g_c = g(eos, left, right)
    return g_L, g_R, g_c


def _step(eos, flux, U, lam, boundary, quasi_conservative, step):
    g = numerical_flux(flux)
    U = np.asarray(U, dtype=float)
    Up = pad(U, boundary)
    try:
        g_L, g_R, g_c = _interface_fluxes(eos, g, Up)
    except PositivityError as exc:
        raise PositivityError("invalid state in interface fluxes", step=step) from exc

    # interface k lies between padded cells k and k+1; real cell j is padded j+1
    rho, mom, etot, rhoy = U
    y = rhoy / rho
    if quasi_conservative:
        rho_m = rho - lam * (g_c[0, 1:] - g_c[0, :-1])
        mom_m = mom - lam * (g_c[1, 1:] - g_c[1, :-1])
    else:
        rho_m = rho - lam * (g_L[0, 1:] - g_R[0, :-1])
        mom_m = mom - lam * (g_L[1, 1:] - g_R[1, :-1])
    etot_m = etot - lam * (g_L[2, 1:] - g_R[2, :-1])
    if np.any(rho_m <= 0.0):
        raise PositivityError(
            "non-positive density after first step",
            cell=int(np.flatnonzero(rho_m <= 0.0)[0]), step=step,
        )
    p_m = eos.to_primitive(np.array([rho_m, mom_m, etot_m, rho_m * y]), step=step)[2]

    rhoy_new = rhoy - lam * (g_c[3, 1:] - g_c[3, :-1])
    y_new = rhoy_new / rho_m
    return eos.to_conserved(np.array([rho_m, mom_m, p_m, y_new]))


def twoflux_step_original(
    eos: MixtureEOS, flux, U, lam, boundary=Boundary.TRANSMISSIVE, step=None
):
    """Advance ``U`` by one step of the original Two-Flux algorithm.

    Density, momentum and total energy are updated with the two
    single-fluid fluxes; the result is conservative on ``rho Y`` only.
    """
    return _step(eos, flux, U, lam, boundary, False, step)


def twoflux_step_quasiconservative(
    eos: MixtureEOS, flux, U, lam, boundary=Boundary.TRANSMISSIVE, step=None
):
    """Advance ``U`` by one step of the quasi-conservative Two-Flux variant.

    Same as :func:`twoflux_step_original` except that density and momentum
    use the single conservative flux, so only ``rho E`` is non-conservative.
    """
    return _step(eos, flux, U, lam, boundary, True, step)
