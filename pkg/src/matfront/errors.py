"""Exceptions raised by the solvers."""


class SolverError(RuntimeError):
    """Base class for failures during a simulation."""


class PositivityError(SolverError):
    """A cell lost density, pressure or mass-fraction admissibility."""

    def __init__(self, message, cell=None, step=None):
        self.cell = cell
        self.step = step
        where = []
        if step is not None:
            where.append(f"step {step}")
        if cell is not None:
            where.append(f"cell {cell}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class CFLViolationError(SolverError):
    """Lagrangian cells collapsed or the moved mesh got tangled."""


class VacuumError(SolverError):
    """The Riemann data generate vacuum."""


class ConvergenceError(SolverError):
    """Iterative root finding did not converge."""
