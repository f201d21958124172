"""Uniform 1D grid and ghost-cell padding."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Boundary(str, Enum):
    TRANSMISSIVE = "transmissive"
    PERIODIC = "periodic"


@dataclass(frozen=True)
class Grid:
    x_min: float
    x_max: float
    n_cells: int

    def __post_init__(self):
        if self.n_cells < 2:
            raise ValueError("need at least two cells")
        if not self.x_max > self.x_min:
            raise ValueError("empty domain")

    @classmethod
    def from_dx(cls, x_min, x_max, dx):
        n = round((x_max - x_min) / dx)
        if n < 2 or abs(n * dx - (x_max - x_min)) > 1e-9 * (x_max - x_min):
            raise ValueError(f"dx={dx} does not divide [{x_min}, {x_max}]")
        return cls(x_min, x_max, n)

    @property
    def dx(self):
        return (self.x_max - self.x_min) / self.n_cells

    @property
    def interfaces(self):
        return self.x_min + self.dx * np.arange(self.n_cells + 1)

    @property
    def centers(self):
        return self.x_min + self.dx * (np.arange(self.n_cells) + 0.5)


def pad(a, boundary=Boundary.TRANSMISSIVE, width=1):
    """Add ``width`` ghost cells on both ends of the trailing axis."""
    mode = "wrap" if Boundary(boundary) is Boundary.PERIODIC else "edge"
    pad_width = [(0, 0)] * (np.ndim(a) - 1) + [(width, width)]
    return np.pad(a, pad_width, mode=mode)
