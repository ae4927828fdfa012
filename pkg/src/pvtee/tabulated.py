"""Numeric distribution tables: the common currency between characteristic-
function inversion and Monte-Carlo histograms.

Heavy-tailed laws cannot close their mass on any finite grid, so a table
carries an explicit atom at zero and an explicit tail mass beyond the grid;
atom + cdf[-1] + tail_mass must account for all probability.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

__all__ = ["TabulatedDistribution"]

_MASS_TOL = 1e-4


@dataclass(frozen=True)
class TabulatedDistribution:
    grid: np.ndarray  # strictly increasing values
    pdf: np.ndarray  # density of the continuous part on grid
    cdf: np.ndarray  # P(X <= grid[i]), atom at zero included
    atom_at_zero: float = 0.0
    tail_mass: float = field(default=0.0)  # P(X > grid[-1])

    def __post_init__(self) -> None:
        grid = np.asarray(self.grid, dtype=float)
        pdf = np.asarray(self.pdf, dtype=float)
        cdf = np.asarray(self.cdf, dtype=float)
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "pdf", pdf)
        object.__setattr__(self, "cdf", cdf)
        if grid.ndim != 1 or len(grid) < 2:
            raise ValueError("grid must hold at least two points")
        if not np.all(np.diff(grid) > 0.0):
            raise ValueError("grid must be strictly increasing")
        if pdf.shape != grid.shape or cdf.shape != grid.shape:
            raise ValueError("pdf/cdf must match the grid shape")
        if np.any(pdf < 0.0):
            raise ValueError("pdf must be nonnegative")
        if np.any(np.diff(cdf) < -1e-9):
            raise ValueError("cdf must be nondecreasing")
        if not (0.0 <= self.atom_at_zero <= 1.0):
            raise ValueError("atom_at_zero must be a probability")
        total = self.cdf[-1] + self.tail_mass
        if abs(total - 1.0) > _MASS_TOL:
            raise ValueError(
                f"cdf plus tail mass accounts for {total:.6f}, "
                f"not 1 within {_MASS_TOL}"
            )

    @classmethod
    def from_pdf(
        cls,
        grid: np.ndarray,
        pdf: np.ndarray,
        atom_at_zero: float = 0.0,
        tail_mass: float | None = None,
    ) -> "TabulatedDistribution":
        """Build from a density; the cdf is the atom plus the trapezoid
        cumulative of the continuous part.  ``tail_mass`` defaults to the
        residual needed to close total mass at 1."""
        grid = np.asarray(grid, dtype=float)
        pdf = np.maximum(np.asarray(pdf, dtype=float), 0.0)
        inc = np.concatenate(
            [[0.0], np.cumsum(0.5 * (pdf[1:] + pdf[:-1]) * np.diff(grid))]
        )
        cdf = atom_at_zero + inc
        if tail_mass is None:
            tail_mass = max(0.0, 1.0 - cdf[-1])
        return cls(grid=grid, pdf=pdf, cdf=np.minimum(cdf, 1.0),
                   atom_at_zero=atom_at_zero, tail_mass=tail_mass)

    @classmethod
    def from_samples(
        cls,
        samples: np.ndarray,
        n_bins: int = 200,
        grid: np.ndarray | None = None,
    ) -> "TabulatedDistribution":
        """Empirical table.  Zeros form the atom; +inf draws (unattainable
        demands) land in the tail mass."""
        samples = np.asarray(samples, dtype=float)
        n = len(samples)
        if n == 0:
            raise ValueError("no samples")
        atom = float(np.count_nonzero(samples == 0.0)) / n
        pos = samples[np.isfinite(samples) & (samples > 0.0)]
        if len(pos) < 2:
            raise ValueError("need at least two positive finite samples")
        if grid is None:
            hi = float(pos.max())
            lo = float(pos.min())
            grid = np.linspace(lo, hi, n_bins)
        grid = np.asarray(grid, dtype=float)
        hist, edges = np.histogram(pos, bins=grid, density=False)
        widths = np.diff(edges)
        dens = hist / (n * widths)
        centers = 0.5 * (edges[1:] + edges[:-1])
        pos_sorted = np.sort(pos)
        cdf = atom + np.searchsorted(pos_sorted, centers, side="right") / n
        return cls(grid=centers, pdf=dens, cdf=cdf, atom_at_zero=atom,
                   tail_mass=float(1.0 - cdf[-1]))

    def cdf_at(self, x) -> np.ndarray:
        """Interpolated cdf; atom value left of the grid, 1 - tail_mass right."""
        x = np.asarray(x, dtype=float)
        return np.interp(x, self.grid, self.cdf,
                         left=self.atom_at_zero, right=self.cdf[-1])

    def quantile(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=float)
        if np.any((q < 0.0) | (q > 1.0)):
            raise ValueError("quantile levels must lie in [0,1]")
        return np.interp(q, self.cdf, self.grid)

    def total_mass(self) -> float:
        """Trapezoid mass of the continuous part plus atom and tail."""
        cont = float(np.trapezoid(self.pdf, self.grid))
        return cont + self.atom_at_zero + self.tail_mass

    def to_pdf_csv(self, path: str) -> None:
        self._write_csv(path, "density", self.pdf)

    def to_cdf_csv(self, path: str) -> None:
        self._write_csv(path, "cdf", self.cdf)

    def _write_csv(self, path: str, name: str, col: np.ndarray) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["value", name])
            for v, c in zip(self.grid, col):
                writer.writerow([repr(float(v)), repr(float(c))])
