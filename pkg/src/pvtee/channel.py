"""Composite shadowing/multipath channel model.

Lognormal shadowing is replaced by a moment-matched Gamma factor; multipath
power per antenna pair is Gamma with the Nakagami shape.  The aggregate link
gain over all antenna pairs (one shared shadowing draw per link) then has the
product-Gamma density whose kernel is a modified Bessel function, and its
fractional moments are available in closed form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .specfun import gammaln_fn, log_bessel_k

__all__ = [
    "FadingParams",
    "shadowing_params",
    "kg_pdf",
    "kg_log_pdf",
    "kg_fractional_moment",
    "sample_H",
    "sample_direct_eigenvalues",
]

_DB_TO_NEPER = 8.686  # 20/ln(10): dB std-dev to natural-log std-dev


def shadowing_params(sigma_db: float) -> tuple[float, float]:
    """Gamma shape and scale anchor matched to lognormal shadowing.

    Returns (lambda_shape, omega) with
    lambda = 1 / (exp((sigma_dB/8.686)^2) - 1)^2 and
    omega  = sqrt((lambda + 1) / lambda).
    """
    if not sigma_db > 0.0:
        raise ValueError("sigma_db must be positive")
    s2 = (sigma_db / _DB_TO_NEPER) ** 2
    lam = 1.0 / math.expm1(s2) ** 2
    omega = math.sqrt((lam + 1.0) / lam)
    return lam, omega


@dataclass(frozen=True)
class FadingParams:
    """Fading/antenna configuration with derived Gamma-shadowing parameters.

    ``lambda_shape`` and ``omega`` are computed from ``sigma_db`` on
    construction and must not be supplied.
    """

    m: float
    sigma_db: float
    nt: int
    nr: int
    lambda_shape: float = field(init=False)
    omega: float = field(init=False)

    def __post_init__(self) -> None:
        if self.m < 0.5:
            raise ValueError("Nakagami shape m must be at least 0.5")
        if self.nt < 1 or self.nr < 1:
            raise ValueError("antenna counts must be at least 1")
        lam, omega = shadowing_params(self.sigma_db)
        object.__setattr__(self, "lambda_shape", lam)
        object.__setattr__(self, "omega", omega)

    @property
    def shape_product(self) -> float:
        """Total multipath Gamma shape: nt * nr * m."""
        return self.nt * self.nr * self.m

    @property
    def rank(self) -> int:
        return min(self.nt, self.nr)


def kg_log_pdf(y, params: FadingParams):
    """Natural log of the composite-gain density; log space keeps the
    Gamma/Bessel prefactors representable at large shape products."""
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0.0):
        raise ValueError("composite gain density requires y > 0")
    lam = params.lambda_shape
    n_m = params.shape_product
    rate = params.m * lam / params.omega
    order = lam - n_m
    arg = 2.0 * np.sqrt(rate * y)
    log_k = np.array(
        [log_bessel_k(order, a) for a in np.atleast_1d(arg)], dtype=float
    ).reshape(np.shape(arg))
    out = (
        math.log(2.0)
        + 0.5 * (n_m + lam) * math.log(rate)
        - gammaln_fn(n_m)
        - gammaln_fn(lam)
        + 0.5 * (n_m + lam - 2.0) * np.log(y)
        + log_k
    )
    return out if out.ndim else float(out)


def kg_pdf(y, params: FadingParams):
    """Density of the aggregate link gain (product-Gamma law)."""
    return np.exp(kg_log_pdf(y, params))


def kg_fractional_moment(alpha: float, params: FadingParams) -> float:
    """Closed-form E{H^alpha} of the composite gain.

    (m lam / omega)^(-alpha) * G(lam+alpha) G(ntnrm+alpha) / (G(ntnrm) G(lam)).
    The interference scale uses alpha in (0, 1); any positive alpha is legal
    here (alpha = 1 gives the plain mean).
    """
    if not alpha > 0.0:
        raise ValueError("alpha must be positive")
    lam = params.lambda_shape
    n_m = params.shape_product
    rate = params.m * lam / params.omega
    return math.exp(
        -alpha * math.log(rate)
        + gammaln_fn(lam + alpha)
        + gammaln_fn(n_m + alpha)
        - gammaln_fn(n_m)
        - gammaln_fn(lam)
    )


def sample_H(params: FadingParams, rng: np.random.Generator, size=None):
    """Draw the aggregate link gain as shadowing x summed multipath power.

    Shadowing w ~ Gamma(lambda, omega/lambda) (mean omega); multipath sum
    ~ Gamma(nt*nr*m, 1/m) (mean nt*nr).  The product has exactly the
    ``kg_pdf`` law: the Gamma scales multiply to omega/(m*lambda).
    """
    w = rng.gamma(params.lambda_shape, params.omega / params.lambda_shape, size)
    g = rng.gamma(params.shape_product, 1.0 / params.m, size)
    return w * g


def sample_channel_matrix(
    params: FadingParams, rng: np.random.Generator, size: int | None = None
) -> np.ndarray:
    """i.i.d. complex entries: Nakagami-m magnitude (unit mean power),
    uniform phase.  Shadowing and path loss are applied by the caller."""
    shape = (params.nr, params.nt) if size is None else (size, params.nr, params.nt)
    mag2 = rng.gamma(params.m, 1.0 / params.m, shape)
    phase = rng.uniform(0.0, 2.0 * np.pi, shape)
    return np.sqrt(mag2) * np.exp(1j * phase)


def sample_direct_eigenvalues(
    params: FadingParams,
    r0: float,
    sigma: float,
    rng: np.random.Generator,
) -> np.ndarray:
    """Eigenvalues of the desired-link Gram matrix, descending.

    One shadowing draw scales the whole matrix; per-entry Nakagami fading
    and the r0^-sigma path loss multiply in.  Exactly min(nt, nr) nonzero
    eigenvalues exist almost surely.
    """
    if not r0 > 0.0:
        raise ValueError("r0 must be positive")
    w0 = rng.gamma(params.lambda_shape, params.omega / params.lambda_shape)
    z = sample_channel_matrix(params, rng)
    h = np.sqrt(w0 / r0**sigma) * z
    gram = h @ h.conj().T if params.nr <= params.nt else h.conj().T @ h
    eig = np.linalg.eigvalsh(gram)[::-1]
    return np.maximum(eig[: params.rank], 0.0)
