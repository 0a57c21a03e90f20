"""Exact mapping between mean-square error and the concordance correlation,
plus the constructive ccc extremes attainable at a fixed mse.

Core identities, for a pair (X, Y) with population moments:

    var_x + var_y + (mu_x - mu_y)^2  =  mse + 2*cov          (moment identity)
    ccc = 2*cov / (mse + 2*cov)                              (exact mapping)

With a fixed gold standard G (variance var_g > 0) and a fixed mse, ccc ranges
over [lower_envelope(x), upper_envelope(x)] where x = sqrt(mse / var_g):

    upper_envelope(x) = 2(1+x) / (1 + (1+x)^2)      errors  +x * (g_i - mu_g)
    lower_envelope(x) = 2(1-x) / (1 + (1-x)^2)      errors  -x * (g_i - mu_g)

Both envelopes are values of the same kernel 2t/(1+t^2) at t = 1+x and t = 1-x.
Because lower_envelope is not monotone, a smaller mse can map to a smaller ccc.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateVariance, InvalidInput, Singularity
from .stats import as_sequence, covariance, mse, population_variance

#: Column names of the region table rows produced by :func:`mse_region_table`.
MSE_REGION_COLUMNS = ("x", "psi_upper", "psi_lower")


def ccc_from_mse_cov(mse_value: float, cov: float) -> float:
    """ccc reconstructed from (mse, covariance) alone: 2*cov / (mse + 2*cov)."""
    if mse_value < 0:
        raise InvalidInput(f"mse must be nonnegative, got {mse_value}")
    denom = mse_value + 2.0 * cov
    if denom == 0.0:
        raise Singularity("mse + 2*cov is exactly zero; ccc undefined")
    return float(2.0 * cov / denom)


def variance_identity_residual(x, y) -> float:
    """Left minus right of var_x + var_y + (mu_x-mu_y)^2 == mse + 2*cov.

    Zero in exact arithmetic; the float residual stays below 1e-12 relative.
    """
    xv, yv = as_sequence(x), as_sequence(y)
    left = (
        population_variance(xv)
        + population_variance(yv)
        + (xv.mean() - yv.mean()) ** 2
    )
    right = mse(xv, yv) + 2.0 * covariance(xv, yv)
    return float(left - right)


def envelope_kernel(t):
    """2t / (1 + t^2), the shared kernel of both envelopes."""
    t = np.asarray(t, dtype=np.float64)
    value = 2.0 * t / (1.0 + t * t)
    return float(value) if value.ndim == 0 else value


def upper_envelope(x):
    """Largest ccc attainable at normalized error level x >= 0."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x < 0):
        raise InvalidInput("x must be nonnegative")
    return envelope_kernel(1.0 + x)


def lower_envelope(x):
    """Smallest ccc attainable at normalized error level x >= 0."""
    x = np.asarray(x, dtype=np.float64)
    if np.any(x < 0):
        raise InvalidInput("x must be nonnegative")
    return envelope_kernel(1.0 - x)


@dataclass(frozen=True)
class CenteredGold:
    """A gold-standard sequence with its centering precomputed.

    ``centered`` holds g_i - mu_g and sums to zero; ``var_g`` is positive by
    construction (constant gold is rejected).
    """

    gold: np.ndarray
    centered: np.ndarray
    mu_g: float
    var_g: float

    @property
    def n(self) -> int:
        return int(self.gold.size)


def center_gold(gold) -> CenteredGold:
    arr = as_sequence(gold)
    mu = float(arr.mean())
    centered = arr - mu
    var_g = float((centered * centered).mean())
    if var_g == 0.0:
        raise DegenerateVariance("gold standard is constant; bounds undefined")
    return CenteredGold(gold=arr, centered=centered, mu_g=mu, var_g=var_g)


@dataclass(frozen=True)
class MseBoundsResult:
    """ccc extremes at a fixed mse, with the error vectors that attain them."""

    x_param: float
    ccc_max: float
    ccc_min: float
    err_max: np.ndarray
    err_min: np.ndarray


def bounds_given_mse(gold: CenteredGold, mse_value: float) -> MseBoundsResult:
    """Constructive ccc range for a gold standard at a fixed mse.

    The extremes are attained by spreading the error budget in the same ratio
    as the gold's deviations from its mean: err = +-x * (g_i - mu_g) with
    x = sqrt(mse / var_g). The positive sign attains the maximum, the
    negative sign the minimum.
    """
    if mse_value < 0:
        raise InvalidInput(f"mse must be nonnegative, got {mse_value}")
    x = float(np.sqrt(mse_value / gold.var_g))
    err = x * gold.centered
    return MseBoundsResult(
        x_param=x,
        ccc_max=float(upper_envelope(x)),
        ccc_min=float(lower_envelope(x)),
        err_max=err,
        err_min=-err,
    )


def mse_region_table(x_max: float, steps: int) -> np.ndarray:
    """Uniformly sampled envelope table: rows of (x, upper, lower).

    Deterministic row order; x runs linearly from 0 to x_max inclusive.
    """
    if x_max < 0:
        raise InvalidInput("x_max must be nonnegative")
    if steps < 2:
        raise InvalidInput("steps must be at least 2")
    xs = np.linspace(0.0, x_max, steps)
    return np.column_stack([xs, upper_envelope(xs), lower_envelope(xs)])
