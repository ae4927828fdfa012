"""Heavy-tailed per-mobile traffic rate model.

Rates are Pareto with tail index in (1, 2]: finite mean, infinite variance.
The law is unit-agnostic; the network configuration feeds it rates in nats
so a single logarithm base runs through the rate formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "TrafficLaw",
    "pareto_pdf",
    "pareto_cdf",
    "mean_rate",
    "mean_cell_traffic",
    "sample_rate",
]


@dataclass(frozen=True)
class TrafficLaw:
    theta: float  # tail index
    rho_min: float  # minimum rate

    def __post_init__(self) -> None:
        if not (1.0 < self.theta <= 2.0):
            raise ValueError("tail index must lie in (1,2]")
        if not self.rho_min > 0.0:
            raise ValueError("rho_min must be positive")


def pareto_pdf(x, law: TrafficLaw):
    """theta rho_min^theta / x^(theta+1) on [rho_min, inf), zero below."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    ok = x >= law.rho_min
    out[ok] = law.theta * law.rho_min**law.theta / x[ok] ** (law.theta + 1.0)
    return out if out.ndim else float(out)


def pareto_cdf(x, law: TrafficLaw):
    x = np.asarray(x, dtype=float)
    return np.where(x < law.rho_min, 0.0, 1.0 - (law.rho_min / np.maximum(x, law.rho_min)) ** law.theta)


def mean_rate(law: TrafficLaw) -> float:
    """theta rho_min / (theta - 1)."""
    return law.theta * law.rho_min / (law.theta - 1.0)


def mean_cell_traffic(law: TrafficLaw, lambda_m: float, lambda_b: float) -> float:
    """Mean summed rate over the typical cell: (lambda_m/lambda_b) x mean rate."""
    if lambda_m < 0.0 or lambda_b <= 0.0:
        raise ValueError("intensities must be positive (lambda_m may be zero)")
    return (lambda_m / lambda_b) * mean_rate(law)


def sample_rate(law: TrafficLaw, rng: np.random.Generator, size=None):
    """Inverse-CDF Pareto draw: rho_min * U^(-1/theta)."""
    u = rng.uniform(size=size)
    return law.rho_min * (1.0 - u) ** (-1.0 / law.theta)
