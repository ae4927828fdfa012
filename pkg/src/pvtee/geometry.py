"""Poisson point-process realization and nearest-base-station distance laws.

The typical mobile sits at the origin; base stations form a homogeneous
Poisson process on a finite disc.  An outer guard annulus is kept inside the
window so that edge truncation feeds interference sums but never the
statistics collected at the origin.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Window",
    "PointPattern",
    "default_window",
    "sample_ppp",
    "nearest_distance_pdf",
    "nearest_distance_cdf",
    "sample_nearest_distance",
    "pathloss_distance_pdf",
    "pathloss_distance_cdf",
]


@dataclass(frozen=True)
class Window:
    """Simulation disc (meters).  guard_radius < r <= radius is the guard
    annulus: included in interference, excluded from origin statistics."""

    radius: float
    guard_radius: float

    def __post_init__(self) -> None:
        if not (self.radius > self.guard_radius > 0.0):
            raise ValueError(
                f"window requires radius > guard_radius > 0, got "
                f"radius={self.radius}, guard_radius={self.guard_radius}"
            )

    @property
    def area(self) -> float:
        return np.pi * self.radius**2


@dataclass(frozen=True)
class PointPattern:
    """One realization of a planar Poisson process inside a window."""

    points: np.ndarray  # shape (n, 2), meters
    intensity: float  # points per m^2
    window: Window

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float).reshape(-1, 2)
        object.__setattr__(self, "points", pts)
        if self.intensity <= 0.0:
            raise ValueError("intensity must be positive")
        r = np.hypot(pts[:, 0], pts[:, 1]) if len(pts) else np.empty(0)
        if len(pts) and r.max() > self.window.radius * (1.0 + 1e-12):
            raise ValueError("pattern contains points outside its window")

    def __len__(self) -> int:
        return len(self.points)

    def radii(self) -> np.ndarray:
        """Distances of all points from the origin."""
        return np.hypot(self.points[:, 0], self.points[:, 1])

    def interior(self) -> np.ndarray:
        """Points inside the guard radius (origin-statistics region)."""
        return self.points[self.radii() <= self.window.guard_radius]

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["x_m", "y_m"])
            for x, y in self.points:
                writer.writerow([repr(float(x)), repr(float(y))])


def default_window(bs_intensity: float, radius_factor: float = 10.0) -> Window:
    """Disc large enough that edge truncation sits below Monte-Carlo noise.

    Radius defaults to 10 / sqrt(pi * intensity) with a 20% guard annulus.
    """
    if bs_intensity <= 0.0:
        raise ValueError("intensity must be positive")
    radius = radius_factor / np.sqrt(np.pi * bs_intensity)
    return Window(radius=radius, guard_radius=0.8 * radius)


def sample_ppp(
    intensity: float, window: Window, rng: np.random.Generator
) -> PointPattern:
    """Homogeneous Poisson pattern on the window disc.

    Count ~ Poisson(intensity * area), positions uniform on the disc;
    fully determined by the supplied generator state.
    """
    if intensity <= 0.0:
        raise ValueError("intensity must be positive")
    n = rng.poisson(intensity * window.area)
    radii = window.radius * np.sqrt(rng.uniform(size=n))
    theta = rng.uniform(0.0, 2.0 * np.pi, size=n)
    pts = np.column_stack([radii * np.cos(theta), radii * np.sin(theta)])
    return PointPattern(points=pts, intensity=intensity, window=window)


def nearest_distance_pdf(r, bs_intensity: float):
    """Density of the distance from the origin to the closest base station:
    2 pi lambda r exp(-pi lambda r^2)."""
    if bs_intensity <= 0.0:
        raise ValueError("intensity must be positive")
    r = np.asarray(r, dtype=float)
    out = 2.0 * np.pi * bs_intensity * r * np.exp(-np.pi * bs_intensity * r * r)
    return np.where(r >= 0.0, out, 0.0)


def nearest_distance_cdf(r, bs_intensity: float):
    if bs_intensity <= 0.0:
        raise ValueError("intensity must be positive")
    r = np.asarray(r, dtype=float)
    return np.where(r >= 0.0, -np.expm1(-np.pi * bs_intensity * r * r), 0.0)


def sample_nearest_distance(
    bs_intensity: float, rng: np.random.Generator, size=None
):
    """Inverse-CDF draw of the nearest-base-station distance."""
    if bs_intensity <= 0.0:
        raise ValueError("intensity must be positive")
    u = rng.uniform(size=size)
    return np.sqrt(-np.log1p(-u) / (np.pi * bs_intensity))


def pathloss_distance_pdf(v, bs_intensity: float, sigma: float):
    """Density of R0^sigma, R0 the nearest-base-station distance:
    (1/sigma) v^(2/sigma - 1) 2 pi lambda exp(-pi lambda v^(2/sigma))."""
    _check_sigma(sigma)
    if bs_intensity <= 0.0:
        raise ValueError("intensity must be positive")
    v = np.asarray(v, dtype=float)
    if np.any(v <= 0.0):
        raise ValueError("pathloss_distance_pdf requires v > 0")
    a = 2.0 / sigma
    return (
        (a / 2.0)
        * v ** (a - 1.0)
        * 2.0
        * np.pi
        * bs_intensity
        * np.exp(-np.pi * bs_intensity * v**a)
    )


def pathloss_distance_cdf(v, bs_intensity: float, sigma: float):
    _check_sigma(sigma)
    v = np.asarray(v, dtype=float)
    return -np.expm1(-np.pi * bs_intensity * np.maximum(v, 0.0) ** (2.0 / sigma))


def _check_sigma(sigma: float) -> None:
    if not sigma > 2.0:
        raise ValueError("sigma must exceed 2")
