"""One-dimensional two-species compressible flow solvers for material fronts."""
from .diagnostics import ConservationLedger, l1_error
from .driver import RunResult, SchemeKind, SimulationConfig, compute_dt, initialize, preset, run
from .eos import GasComponent, MixtureEOS
from .flux import NumericalFluxKind, hll_flux, hllc_flux, physical_flux, rusanov_flux
from .grid import Boundary, Grid
from .lagrange import ProjectionKind, SamplingSequence, lp_step, van_der_corput
from .riemann import RiemannSolution, solve_riemann
from .twoflux import twoflux_step_original, twoflux_step_quasiconservative

__version__ = "0.1.0"
