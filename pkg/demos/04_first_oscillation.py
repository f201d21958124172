# Where the pressure oscillation comes from: one conservative Lagrange-Projection
# step on a uniform (u, p) front already moves p in the first downstream cell,
# by exactly the amount predicted from mixing the two internal energies.
import numpy as np

from matfront import MixtureEOS, lp_step

eos = MixtureEOS.from_gammas(1.4, 1.6)
n = 8
V = np.array([np.ones(n), np.ones(n), np.ones(n), np.r_[np.ones(n // 2), np.zeros(n // 2)]])
U = eos.to_conserved(V)
faces = np.linspace(0.0, 1.0, n + 1)

print(" lambda    p computed     p predicted")
for lam in (0.05, 0.1, 0.2, 0.3, 0.4):
    p = eos.to_primitive(lp_step(eos, U, lam, faces))[2][n // 2]
    y = lam  # uniform density: the downstream cell receives a fraction lam of gas 1
    predicted = (eos.gamma(y) - 1) * ((1 - lam) / 0.6 + lam / 0.4)
    print(f"  {lam:4.2f}   {p:.12f}  {predicted:.12f}")
