"""Population statistics and error norms for paired real sequences.

All moments divide by N (population convention, no Bessel correction) and are
computed with a two-pass mean-then-moments scheme. Every function is pure.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateVariance, InvalidInput


def as_sequence(values) -> np.ndarray:
    """Validate and convert input to a 1-D float64 array of finite samples."""
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise InvalidInput(f"expected a 1-D sequence, got shape {arr.shape}")
    if arr.size == 0:
        raise InvalidInput("sequence is empty")
    if not np.all(np.isfinite(arr)):
        raise InvalidInput("sequence contains NaN or Inf")
    return arr


def _as_pair(x, y) -> tuple[np.ndarray, np.ndarray]:
    xv, yv = as_sequence(x), as_sequence(y)
    if xv.size != yv.size:
        raise InvalidInput(f"length mismatch: {xv.size} vs {yv.size}")
    return xv, yv


def mean(s) -> float:
    return float(as_sequence(s).mean())


def population_variance(s) -> float:
    arr = as_sequence(s)
    centered = arr - arr.mean()
    return float((centered * centered).mean())


def covariance(x, y) -> float:
    xv, yv = _as_pair(x, y)
    return float(((xv - xv.mean()) * (yv - yv.mean())).mean())


def pearson(x, y) -> float:
    """Normalized covariance; both inputs must be nonconstant."""
    xv, yv = _as_pair(x, y)
    var_x = population_variance(xv)
    var_y = population_variance(yv)
    if var_x == 0.0 or var_y == 0.0:
        raise DegenerateVariance("pearson undefined for constant input")
    rho = covariance(xv, yv) / np.sqrt(var_x * var_y)
    return float(min(1.0, max(-1.0, rho)))  # clamp rounding spill past +-1


def ccc(x, y) -> float:
    """Concordance correlation: 2*cov / (var_x + var_y + (mu_x - mu_y)^2).

    Penalizes departure from the identity line, unlike pearson. Returns
    exactly 0.0 when the covariance is zero and the denominator is positive.
    """
    xv, yv = _as_pair(x, y)
    var_x = population_variance(xv)
    var_y = population_variance(yv)
    if var_x == 0.0 and var_y == 0.0:
        raise DegenerateVariance("ccc undefined when both sequences are constant")
    cov = covariance(xv, yv)
    if cov == 0.0:
        return 0.0
    denom = var_x + var_y + (xv.mean() - yv.mean()) ** 2
    return float(2.0 * cov / denom)


def lp_norm(e, p: float) -> float:
    """(sum |e_i|^p)^(1/p) for p > 0."""
    arr = as_sequence(e)
    if not p > 0:
        raise InvalidInput(f"p must be positive, got {p}")
    return float(np.sum(np.abs(arr) ** p) ** (1.0 / p))


def mse(x, y) -> float:
    xv, yv = _as_pair(x, y)
    d = xv - yv
    return float((d * d).mean())


def mae(x, y) -> float:
    xv, yv = _as_pair(x, y)
    return float(np.abs(xv - yv).mean())


def mke(x, y, k: float) -> float:
    """Mean k-powered error: (1/N) sum |x_i - y_i|^k; k=2 gives mse, k=1 mae."""
    xv, yv = _as_pair(x, y)
    if not k > 0:
        raise InvalidInput(f"k must be positive, got {k}")
    return float((np.abs(xv - yv) ** k).mean())


@dataclass(frozen=True)
class PairStats:
    """All pairwise population statistics of two equal-length sequences."""

    n: int
    mu_x: float
    mu_y: float
    var_x: float
    var_y: float
    cov_xy: float
    pearson: float
    c_b: float
    ccc: float
    mse: float
    mae: float
    shift_penalty: float
    scale_penalty: float


def pair_stats(x, y) -> PairStats:
    """Compute the full statistics block; requires both sequences nonconstant."""
    xv, yv = _as_pair(x, y)
    var_x = population_variance(xv)
    var_y = population_variance(yv)
    if var_x == 0.0 or var_y == 0.0:
        raise DegenerateVariance("pair statistics need nonconstant sequences")
    mu_x, mu_y = float(xv.mean()), float(yv.mean())
    sig_x, sig_y = float(np.sqrt(var_x)), float(np.sqrt(var_y))
    cov = covariance(xv, yv)
    denom = var_x + var_y + (mu_x - mu_y) ** 2
    return PairStats(
        n=int(xv.size),
        mu_x=mu_x,
        mu_y=mu_y,
        var_x=float(var_x),
        var_y=float(var_y),
        cov_xy=float(cov),
        pearson=pearson(xv, yv),
        c_b=float(2.0 * sig_x * sig_y / denom),
        ccc=ccc(xv, yv),
        mse=mse(xv, yv),
        mae=mae(xv, yv),
        shift_penalty=float((mu_x - mu_y) / np.sqrt(sig_x * sig_y)),
        scale_penalty=float(sig_x / sig_y),
    )
