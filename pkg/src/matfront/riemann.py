"""Exact Riemann solver for two perfect gases separated by a contact.

The gas left of the contact uses ``gamma(Y_L)``, the gas right of it
``gamma(Y_R)``. Star pressure comes from the usual two-sided pressure
function, solved by Newton iteration safeguarded with bisection.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eos import MixtureEOS
from .errors import ConvergenceError, VacuumError


@dataclass(frozen=True)
class Side:
    rho: float
    u: float
    p: float
    y: float
    gamma: float

    @property
    def c(self):
        return np.sqrt(self.gamma * self.p / self.rho)


def _pressure_function(p, side: Side):
    """Velocity jump across one nonlinear wave and its derivative in ``p``."""
    g, rho, pk, c = side.gamma, side.rho, side.p, side.c
    if p > pk:
        A = 2.0 / ((g + 1.0) * rho)
        B = (g - 1.0) / (g + 1.0) * pk
        root = np.sqrt(A / (p + B))
        return (p - pk) * root, root * (1.0 - 0.5 * (p - pk) / (p + B))
    z = (g - 1.0) / (2.0 * g)
    ratio = p / pk
    return 2.0 * c / (g - 1.0) * (ratio**z - 1.0), ratio ** (-(g + 1.0) / (2.0 * g)) / (rho * c)


@dataclass(frozen=True)
class RiemannSolution:
    left: Side
    right: Side
    p_star: float
    u_star: float
    rho_star_left: float
    rho_star_right: float

    @property
    def left_wave(self):
        return "shock" if self.p_star > self.left.p else "rarefaction"

    @property
    def right_wave(self):
        return "shock" if self.p_star > self.right.p else "rarefaction"

    def shock_speed(self, which):
        side = self.left if which == "left" else self.right
        sign = -1.0 if which == "left" else 1.0
        g = side.gamma
        ratio = self.p_star / side.p
        return side.u + sign * side.c * np.sqrt(
            (g + 1.0) / (2.0 * g) * ratio + (g - 1.0) / (2.0 * g)
        )

    def sample(self, xi):
        """Primitive state ``(rho, rho u, p, Y)`` at similarity coordinates ``xi``."""
        xi = np.asarray(xi, dtype=float)
        rho = np.empty(xi.shape)
        u = np.empty(xi.shape)
        p = np.empty(xi.shape)
        left_of_contact = xi <= self.u_star
        for mask, side, rho_star, sign in (
            (left_of_contact, self.left, self.rho_star_left, -1.0),
            (~left_of_contact, self.right, self.rho_star_right, 1.0),
        ):
            r, v, q = self._sample_side(xi[mask], side, rho_star, sign)
            rho[mask], u[mask], p[mask] = r, v, q
        y = np.where(left_of_contact, self.left.y, self.right.y)
        return np.array([rho, rho * u, p, y])

    def _sample_side(self, xi, side, rho_star, sign):
        # sign = -1 for the left wave, +1 for the right wave; xi measured so
        # that "outside" means farther from the contact than the wave
        g, c = side.gamma, side.c
        n = xi.shape
        rho = np.full(n, rho_star)
        u = np.full(n, self.u_star)
        p = np.full(n, self.p_star)
        if self.p_star > side.p:
            s = self.shock_speed("left" if sign < 0 else "right")
            outside = sign * (xi - s) > 0.0
        else:
            c_star = c * (self.p_star / side.p) ** ((g - 1.0) / (2.0 * g))
            head = side.u + sign * c
            tail = self.u_star + sign * c_star
            outside = sign * (xi - head) > 0.0
            fan = ~outside & (sign * (xi - tail) > 0.0)
            ufan = 2.0 / (g + 1.0) * (-sign * c + 0.5 * (g - 1.0) * side.u + xi)
            cfan = -sign * (ufan - xi)
            rho[fan] = side.rho * (cfan[fan] / c) ** (2.0 / (g - 1.0))
            u[fan] = ufan[fan]
            p[fan] = side.p * (cfan[fan] / c) ** (2.0 * g / (g - 1.0))
        rho[outside] = side.rho
        u[outside] = side.u
        p[outside] = side.p
        return rho, u, p


def _star_density(p_star, side: Side):
    g = side.gamma
    ratio = p_star / side.p
    if p_star > side.p:
        k = (g - 1.0) / (g + 1.0)
        return side.rho * (ratio + k) / (k * ratio + 1.0)
    return side.rho * ratio ** (1.0 / g)


def solve_riemann(eos: MixtureEOS, VL, VR, tol=1e-12, max_iter=200):
    """Solve the Riemann problem between primitive states ``(rho, rho u, p, Y)``."""
    sides = []
    for V in (VL, VR):
        rho, mom, p, y = (float(v) for v in V)
        if rho <= 0.0 or p <= 0.0:
            raise ValueError("Riemann data need positive density and pressure")
        sides.append(Side(rho, mom / rho, p, y, float(eos.gamma(y))))
    L, R = sides
    du = R.u - L.u
    if 2.0 * L.c / (L.gamma - 1.0) + 2.0 * R.c / (R.gamma - 1.0) <= du:
        raise VacuumError("initial data generate vacuum")

    def f(p):
        fl, dl = _pressure_function(p, L)
        fr, dr = _pressure_function(p, R)
        return fl + fr + du, dl + dr

    # two-rarefaction guess with the mean exponent
    z = 0.5 * ((L.gamma - 1.0) / (2.0 * L.gamma) + (R.gamma - 1.0) / (2.0 * R.gamma))
    g_mean = 0.5 * (L.gamma + R.gamma)
    num = L.c + R.c - 0.5 * (g_mean - 1.0) * du
    p = (max(num, 1e-14) / (L.c / L.p**z + R.c / R.p**z)) ** (1.0 / z)

    lo, hi = 0.0, max(L.p, R.p, p)
    while f(hi)[0] < 0.0:
        hi *= 2.0
    for _ in range(max_iter):
        val, slope = f(p)
        if val > 0.0:
            hi = min(hi, p)
        else:
            lo = max(lo, p)
        p_new = p - val / slope
        if not lo < p_new < hi:
            p_new = 0.5 * (lo + hi)
        if abs(p_new - p) <= tol * p_new:
            p = p_new
            break
        p = p_new
    else:
        raise ConvergenceError(f"star pressure did not converge, residual {f(p)[0]:.3e}")

    fl, _ = _pressure_function(p, L)
    fr, _ = _pressure_function(p, R)
    u_star = 0.5 * (L.u + R.u) + 0.5 * (fr - fl)
    return RiemannSolution(L, R, p, u_star, _star_density(p, L), _star_density(p, R))


def sample_solution(sol: RiemannSolution, xi):
    return sol.sample(xi)
