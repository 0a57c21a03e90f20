"""Independent brute-force verifiers: exhaustive enumeration and sphere sampling.

These are the ground-truth generators the tests check closed forms against.
They never call the closed-form code paths they are meant to audit. All
randomness is seeded and every report is reproducible bit for bit.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInput, TooLarge
from .ordering import GOLD_MINUS_PRED, PRED_MINUS_GOLD, Convention, ErrorSet
from .stats import as_sequence, population_variance

#: Enumerating beyond 9! orderings is refused.
MAX_ENUM_N = 9

_CHUNK = 200_000


@dataclass(frozen=True)
class OracleReport:
    trials: int
    best_value: float
    worst_value: float
    witness_best: np.ndarray
    witness_worst: np.ndarray
    seed: int


def _ccc_rows(gold: np.ndarray, preds: np.ndarray) -> np.ndarray:
    """Vectorized ccc of one gold sequence against every row of preds."""
    n = gold.size
    gz = gold - gold.mean()
    var_g = float((gz * gz).mean())
    mu_p = preds.mean(axis=1)
    centered = preds - mu_p[:, None]
    var_p = (centered * centered).mean(axis=1)
    cov = centered @ gz / n
    denom = var_g + var_p + (gold.mean() - mu_p) ** 2
    return 2.0 * cov / denom


def permutation_oracle(gold, errors: ErrorSet, convention: Convention) -> OracleReport:
    """Exact ccc extremes over every ordering of the error multiset.

    Enumerates all N! orderings (duplicates included) in lexicographic order
    of the canonical ascending values; ties resolve to the first ordering
    encountered, so the report is deterministic.
    """
    g = as_sequence(gold)
    if g.size != errors.n:
        raise InvalidInput(f"length mismatch: gold {g.size} vs errors {errors.n}")
    if g.size > MAX_ENUM_N:
        raise TooLarge(f"N={g.size} exceeds the enumeration guard of {MAX_ENUM_N}")
    if convention not in (PRED_MINUS_GOLD, GOLD_MINUS_PRED):
        raise InvalidInput(f"unknown convention {convention!r}")
    if population_variance(g) == 0.0:
        raise InvalidInput("gold standard is constant")

    sign = 1.0 if convention == PRED_MINUS_GOLD else -1.0
    best_val, worst_val = -np.inf, np.inf
    best_wit = worst_wit = None
    trials = 0
    perms_iter = itertools.permutations(errors.values.tolist())
    while True:
        block = list(itertools.islice(perms_iter, _CHUNK))
        if not block:
            break
        perm_arr = np.asarray(block, dtype=np.float64)
        preds = g[None, :] + sign * perm_arr
        vals = _ccc_rows(g, preds)
        trials += len(block)
        i_max = int(np.argmax(vals))
        i_min = int(np.argmin(vals))
        if vals[i_max] > best_val:
            best_val, best_wit = float(vals[i_max]), preds[i_max].copy()
        if vals[i_min] < worst_val:
            worst_val, worst_wit = float(vals[i_min]), preds[i_min].copy()
    return OracleReport(
        trials=trials,
        best_value=best_val,
        worst_value=worst_val,
        witness_best=best_wit,
        witness_worst=worst_wit,
        seed=0,
    )


def _sphere_report(gold: np.ndarray, scale_fn, trials: int, seed: int) -> OracleReport:
    if trials < 1:
        raise InvalidInput("trials must be at least 1")
    rng = np.random.default_rng(seed)
    n = gold.size
    best_val, worst_val = -np.inf, np.inf
    best_wit = worst_wit = None
    done = 0
    while done < trials:
        m = min(_CHUNK, trials - done)
        d = rng.standard_normal((m, n))
        d = scale_fn(d)
        preds = gold[None, :] + d
        vals = _ccc_rows(gold, preds)
        i_max = int(np.argmax(vals))
        i_min = int(np.argmin(vals))
        if vals[i_max] > best_val:
            best_val, best_wit = float(vals[i_max]), d[i_max].copy()
        if vals[i_min] < worst_val:
            worst_val, worst_wit = float(vals[i_min]), d[i_min].copy()
        done += m
    return OracleReport(
        trials=trials,
        best_value=best_val,
        worst_value=worst_val,
        witness_best=best_wit,
        witness_worst=worst_wit,
        seed=seed,
    )


def mse_sphere_oracle(gold, mse: float, trials: int, seed: int) -> OracleReport:
    """ccc extremes over random error vectors with sum(d^2) = N*mse.

    Directions are isotropic (normalized Gaussians); witnesses are the error
    vectors, not the predictions.
    """
    g = as_sequence(gold)
    if population_variance(g) == 0.0:
        raise InvalidInput("gold standard is constant")
    if mse < 0:
        raise InvalidInput(f"mse must be nonnegative, got {mse}")
    radius = np.sqrt(g.size * mse)

    def scale(d):
        norms = np.linalg.norm(d, axis=1)
        return d * (radius / norms)[:, None]

    return _sphere_report(g, scale, trials, seed)


def lk_sphere_oracle(gold, k: float, lk: float, trials: int, seed: int) -> OracleReport:
    """ccc extremes over random error vectors rescaled onto the L_k sphere.

    The rescaling is not a uniform measure on the L_k sphere for k != 2, but
    it covers it, which suffices for auditing outer bounds.
    """
    g = as_sequence(gold)
    if population_variance(g) == 0.0:
        raise InvalidInput("gold standard is constant")
    if not k > 0:
        raise InvalidInput(f"k must be positive, got {k}")
    if not lk > 0:
        raise InvalidInput(f"lk must be positive, got {lk}")

    def scale(d):
        norms = np.sum(np.abs(d) ** k, axis=1) ** (1.0 / k)
        return d * (lk / norms)[:, None]

    return _sphere_report(g, scale, trials, seed)


def finite_difference(f, at, h: float) -> np.ndarray:
    """Central-difference gradient estimate of a scalar function of a sequence."""
    x = as_sequence(at).copy()
    if not h > 0:
        raise InvalidInput(f"h must be positive, got {h}")
    grad = np.empty_like(x)
    for i in range(x.size):
        orig = x[i]
        x[i] = orig + h
        up = f(x)
        x[i] = orig - h
        down = f(x)
        x[i] = orig
        grad[i] = (up - down) / (2.0 * h)
    return grad
