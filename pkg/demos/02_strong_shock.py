# Strong shock (Test B): pressure ratio 2500 across two gases. Overlay the
# density of each scheme on the exact Riemann solution.
#
#   python demos/02_strong_shock.py        (writes demos/out/strong_shock.png)
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from matfront import SchemeKind, preset, run, solve_riemann

out = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out, exist_ok=True)

cfg = preset("B")
sol = solve_riemann(cfg.eos, cfg.left, cfg.right)
print(f"exact star state: p*={sol.p_star:.4f}, u*={sol.u_star:.4f}, "
      f"shock speed={sol.shock_speed('right'):.4f}")

x = np.linspace(0.0, 1.0, 4001)
exact = sol.sample((x - cfg.x_disc) / cfg.t_end)

fig, ax = plt.subplots(figsize=(7, 4))
ax.plot(x, exact[0], "k-", lw=1, label="exact")
for scheme in SchemeKind:
    res = run(cfg.replace(scheme=scheme))
    print(f"{scheme.value:>11}: L1(rho) = {res.l1[0]:.4f}, steps = {res.steps}")
    ax.plot(cfg.grid.centers, res.primitive[0], ".", ms=2, label=scheme.value)
ax.set_xlim(0.55, 0.7)
ax.set_title("density, Test B, t=0.008")
ax.legend()
fig.tight_layout()
fig.savefig(os.path.join(out, "strong_shock.png"), dpi=120)
