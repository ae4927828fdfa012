"""Special functions and semi-infinite quadrature shared by the analytic layer.

Gamma, log-Gamma and the modified Bessel function of the second kind cover
every closed-form expression in the toolkit; the quadrature wrapper handles
the remaining one-dimensional integrals on [lower, inf).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
from scipy import integrate, special

__all__ = [
    "QuadratureSpec",
    "QuadratureWarning",
    "gamma_fn",
    "gammaln_fn",
    "bessel_k",
    "log_bessel_k",
    "integrate_semi_infinite",
]


class QuadratureWarning(UserWarning):
    """Emitted when a quadrature cannot certify the requested tolerance."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Tolerances and subdivision budget for adaptive quadrature."""

    rel_tol: float = 1e-8
    abs_tol: float = 1e-12
    max_subdivisions: int = 2000

    def __post_init__(self) -> None:
        if not (self.rel_tol > 0.0 and self.abs_tol > 0.0):
            raise ValueError("quadrature tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be at least 1")


DEFAULT_QUADRATURE = QuadratureSpec()


def gamma_fn(x: float) -> float:
    """Gamma function restricted to positive arguments.

    Raises ``ValueError`` for x <= 0 and ``OverflowError`` once the result
    exceeds the double range (x > ~171.6).
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"gamma_fn requires x > 0, got {x}")
    return math.gamma(x)


def gammaln_fn(x: float) -> float:
    """Natural log of Gamma for positive arguments."""
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"gammaln_fn requires x > 0, got {x}")
    return math.lgamma(x)


def _log_k_small_x_series(nu: float, x: float) -> float:
    # Ascending series, leading branch only:
    #   K_nu(x) = 0.5*Gamma(nu)*(x/2)^(-nu) * sum_k (x^2/4)^k / (k! (1-nu)_k)
    # Valid when the second branch (x/2)^(2 nu) Gamma(-nu)/Gamma(nu) is
    # negligible, which holds whenever the direct kve path has overflowed
    # (that forces x << sqrt(nu)).
    q = 0.25 * x * x
    term = 1.0
    acc = 1.0
    k_max = 12
    if nu == math.floor(nu):
        k_max = min(k_max, int(nu) - 1)  # (1-nu)_k hits zero at k = nu
    for k in range(1, k_max + 1):
        term *= -q / (k * (nu - k))  # (1-nu)_k = (-1)^k (nu-1)...(nu-k)
        acc += term
        if abs(term) < 1e-18 * abs(acc):
            break
    if not acc > 0.0:
        raise ArithmeticError(
            f"bessel_k series lost significance at order {nu}, x={x}"
        )
    return math.log(0.5) + math.lgamma(nu) - nu * math.log(0.5 * x) + math.log(acc)


def log_bessel_k(order: float, x: float) -> float:
    """log K_nu(x), robust where K_nu itself over- or underflows.

    Uses the scaled library routine where representable and falls back to
    the ascending series for large order with small argument (the regime
    where the composite-fading density drives the order to tens).
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"bessel_k requires x > 0, got {x}")
    nu = abs(float(order))
    kve = special.kve(nu, x)
    if np.isfinite(kve) and kve > 0.0:
        return float(np.log(kve)) - x
    return _log_k_small_x_series(nu, x)


def bessel_k(order: float, x: float, scaled: bool = False) -> float:
    """Modified Bessel function of the second kind, any real order.

    K_{-nu} = K_nu is applied, so large negative orders are legal.  With
    ``scaled=True`` the returned value is exp(x) * K_nu(x), which stays
    representable for large x where the plain value underflows.
    """
    x = float(x)
    if not x > 0.0:
        raise ValueError(f"bessel_k requires x > 0, got {x}")
    nu = abs(float(order))
    val = special.kve(nu, x) if scaled else special.kv(nu, x)
    if not np.isfinite(val):
        raise OverflowError(
            f"bessel_k({order}, {x}) exceeds the double range; "
            "use log_bessel_k instead"
        )
    return float(val)


def integrate_semi_infinite(
    f: Callable[[float], float],
    lower: float = 0.0,
    spec: QuadratureSpec | None = None,
    points: Sequence[float] | None = None,
) -> float:
    """Adaptive integral of ``f`` on [lower, inf).

    ``points`` may list interior landmarks (peaks, scale breaks); the range
    is then split there so the infinite-interval transform cannot step over
    a localized mass.  On a tolerance miss the best estimate is returned and
    a ``QuadratureWarning`` carries the achieved error bound.
    """
    spec = spec or DEFAULT_QUADRATURE
    kwargs = dict(
        epsabs=spec.abs_tol, epsrel=spec.rel_tol, limit=spec.max_subdivisions
    )
    total = 0.0
    err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        if points:
            cuts = [lower] + sorted(p for p in points if p > lower)
            for a, b in zip(cuts[:-1], cuts[1:]):
                val, e = integrate.quad(f, a, b, **kwargs)
                total += val
                err += e
            val, e = integrate.quad(f, cuts[-1], np.inf, **kwargs)
            total += val
            err += e
        else:
            total, err = integrate.quad(f, lower, np.inf, **kwargs)
    if err > max(spec.abs_tol, spec.rel_tol * abs(total)) * 10.0:
        warnings.warn(
            f"semi-infinite quadrature achieved abs error {err:.3e} "
            f"on estimate {total:.6e}, above the requested tolerance",
            QuadratureWarning,
            stacklevel=2,
        )
    return total
