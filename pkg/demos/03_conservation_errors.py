# Relative conservation error on rho E over time, for both tests. The budget
# accounts for the fluxes of the constant end states entering the domain.
#
#   python demos/03_conservation_errors.py (writes demos/out/conservation.png)
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from matfront import SchemeKind, preset, run

out = os.path.join(os.path.dirname(__file__), "out")
os.makedirs(out, exist_ok=True)

fig, axes = plt.subplots(1, 2, figsize=(11, 4))
for ax, test in zip(axes, "AB"):
    for scheme in (SchemeKind.TWOFLUX, SchemeKind.TWOFLUX_QC, SchemeKind.LP_P, SchemeKind.LP_PS):
        res = run(preset(test, scheme=scheme))
        err = res.ledger.history()[:, 2]
        ax.plot(res.ledger.times, 100 * err, label=scheme.value)
        print(f"Test {test} {scheme.value:>11}: peak rho E error {100 * err.max():.3f}%")
    ax.set_title(f"rho E relative error (%), Test {test}")
    ax.set_xlabel("t")
    ax.legend()
fig.tight_layout()
fig.savefig(os.path.join(out, "conservation.png"), dpi=120)
