"""Laplace exponents, aging correlation estimators and diagnostics.

The aging functions of a path ensemble are estimated as plain binomial
fractions: Pi (no event in a window), R (same value at both endpoints)
and Q (a new running maximum appears in the window).  The arcsine law of
Dynkin and Lamperti gives the exact limit of Pi and R for the small-time
process, evaluated here through the regularized incomplete beta function.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .environment import JumpField, alpha_hat as _alpha_hat_of
from .paths import StepPath, count_events, running_sup, value_at
from .special import regularized_incomplete_beta

_CURVE_LABELS = ("finite-n", "jump-field", "rescaled", "limit")


# ---------------------------------------------------------------------------
# domain types


@dataclass(eq=False)
class AgingEstimate:
    """Binomial point estimate of an aging function at window (t, t+s]."""

    t: float
    s: float
    estimate: float
    stderr: float
    replicates: int
    oracle: float | None = None

    def __post_init__(self):
        if self.t <= 0.0 or self.s <= 0.0:
            raise ValueError("t and s must be positive")
        if not 0.0 <= self.estimate <= 1.0:
            raise ValueError(f"estimate must lie in [0, 1], got {self.estimate}")
        if self.replicates < 1:
            raise ValueError("replicates must be >= 1")
        expected = math.sqrt(self.estimate * (1.0 - self.estimate) / self.replicates)
        if not math.isclose(self.stderr, expected, rel_tol=1e-9, abs_tol=1e-15):
            raise ValueError("stderr inconsistent with binomial formula")
        if self.oracle is not None and not 0.0 <= self.oracle <= 1.0:
            raise ValueError("oracle must lie in [0, 1]")

    @classmethod
    def from_hits(cls, t, s, hits: int, replicates: int, oracle=None):
        p = hits / replicates
        return cls(
            t=t,
            s=s,
            estimate=p,
            stderr=math.sqrt(p * (1.0 - p) / replicates),
            replicates=replicates,
            oracle=oracle,
        )


@dataclass(eq=False)
class LaplaceCurve:
    """A Laplace exponent sampled on a lambda grid.

    Subordinator exponents vanish at 0, increase and are concave; the
    constructor enforces those shape constraints on the grid.
    """

    lambdas: np.ndarray
    values: np.ndarray
    label: str

    def __post_init__(self):
        self.lambdas = np.asarray(self.lambdas, dtype=np.float64)
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.label not in _CURVE_LABELS:
            raise ValueError(f"label must be one of {_CURVE_LABELS}, got {self.label!r}")
        if self.lambdas.shape != self.values.shape or self.lambdas.size < 1:
            raise ValueError("lambdas and values must be nonempty and equal length")
        if self.lambdas[0] < 0.0 or np.any(np.diff(self.lambdas) <= 0.0):
            raise ValueError("lambdas must be increasing and nonnegative")
        if np.any(self.values < 0.0):
            raise ValueError("exponent values must be nonnegative")
        slack = 1e-9 * max(1.0, float(np.abs(self.values).max()))
        if self.lambdas[0] == 0.0 and abs(self.values[0]) > slack:
            raise ValueError("exponent must vanish at lambda = 0")
        if np.any(np.diff(self.values) < -slack):
            raise ValueError("exponent must be nondecreasing")
        if self.lambdas.size >= 3:
            slopes = np.diff(self.values) / np.diff(self.lambdas)
            if np.any(np.diff(slopes) > slack):
                raise ValueError("exponent must be concave")


# ---------------------------------------------------------------------------
# Laplace exponents


def empirical_laplace(weights, depths, lam: float) -> float:
    """Quenched Laplace exponent sum_x w_x (1 - exp(-lam * d_x))."""
    if lam < 0.0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    w = np.asarray(weights, dtype=np.float64)
    d = np.asarray(depths, dtype=np.float64)
    if w.shape != d.shape:
        raise ValueError("weights and depths must have equal length")
    return float(np.sum(w * -np.expm1(-lam * d)))


def rescaled_laplace(jumps: JumpField, a: float, epsilon: float, lam: float) -> float:
    """Exponent of the rescaled clock over a retained jump field.

    eps**alpha_hat * sum_x g_x**a (1 - exp(-lam * g_x**(1-a) / eps)),
    which converges to c_hat * lam**alpha_hat as eps -> 0.
    """
    if epsilon <= 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    ahat = _alpha_hat_of(jumps.alpha_eff, a)
    if ahat <= 0.0:
        raise ValueError(
            f"degenerate index alpha_hat={ahat} (a >= alpha): no rescaled limit"
        )
    return epsilon**ahat * empirical_laplace(
        jumps.weights(a), jumps.depths(a), lam / epsilon
    )


def limit_laplace(c_hat: float, alpha_hat: float, lam: float) -> float:
    """Limit exponent c_hat * lam**alpha_hat."""
    if lam < 0.0:
        raise ValueError(f"lambda must be nonnegative, got {lam}")
    return c_hat * lam**alpha_hat


# ---------------------------------------------------------------------------
# aging functions


def arcsine_pi(t: float, s: float, alpha_hat: float) -> float:
    """Exact no-event probability of the limit process on (t, t+s].

    Dynkin-Lamperti arcsine law: the regularized incomplete beta
    I_{t/(t+s)}(alpha_hat, 1 - alpha_hat); a function of t/(t+s) only.
    """
    if t <= 0.0 or s <= 0.0:
        raise ValueError("t and s must be positive")
    if not 0.0 < alpha_hat < 1.0:
        raise ValueError(f"alpha_hat must lie in (0, 1), got {alpha_hat}")
    x = t / (t + s)
    return regularized_incomplete_beta(alpha_hat, 1.0 - alpha_hat, x)


def _check_ensemble(ensemble: Sequence[StepPath], t: float, s: float) -> None:
    if not ensemble:
        raise ValueError("ensemble must be nonempty")
    if t <= 0.0 or s <= 0.0:
        raise ValueError("t and s must be positive")
    for p in ensemble:
        if p.horizon < t + s:
            raise ValueError(
                f"path horizon {p.horizon} does not cover the window up to {t + s}"
            )


def estimate_pi(
    ensemble: Sequence[StepPath],
    t: float,
    s: float,
    convention: str = "transition",
    alpha_hat: float | None = None,
) -> AgingEstimate:
    """Fraction of paths with no event in (t, t+s]."""
    _check_ensemble(ensemble, t, s)
    hits = sum(1 for p in ensemble if count_events(p, t, s, convention) == 0)
    oracle = arcsine_pi(t, s, alpha_hat) if alpha_hat is not None else None
    return AgingEstimate.from_hits(t, s, hits, len(ensemble), oracle)


def estimate_r(
    ensemble: Sequence[StepPath],
    t: float,
    s: float,
    alpha_hat: float | None = None,
) -> AgingEstimate:
    """Fraction of paths with the same stored value at t and t + s.

    Values originate from one stored sample per site, so equality is
    exact float identity; its small-time limit coincides with Pi.
    """
    _check_ensemble(ensemble, t, s)
    hits = sum(1 for p in ensemble if value_at(p, t) == value_at(p, t + s))
    oracle = arcsine_pi(t, s, alpha_hat) if alpha_hat is not None else None
    return AgingEstimate.from_hits(t, s, hits, len(ensemble), oracle)


def estimate_q(ensemble: Sequence[StepPath], t: float, s: float) -> AgingEstimate:
    """Fraction of paths whose running maximum grows on (t, t+s].

    No closed-form limit is available; the oracle field stays empty.
    """
    _check_ensemble(ensemble, t, s)
    hits = sum(1 for p in ensemble if running_sup(p, t) < running_sup(p, t + s))
    return AgingEstimate.from_hits(t, s, hits, len(ensemble), None)


# ---------------------------------------------------------------------------
# diagnostics


def ks_statistic(samples_a, samples_b) -> float:
    """Two-sample Kolmogorov-Smirnov statistic sup |F_a - F_b|."""
    a = np.sort(np.asarray(samples_a, dtype=np.float64))
    b = np.sort(np.asarray(samples_b, dtype=np.float64))
    if a.size == 0 or b.size == 0:
        raise ValueError("both samples must be nonempty")
    grid = np.concatenate([a, b])
    fa = np.searchsorted(a, grid, side="right") / a.size
    fb = np.searchsorted(b, grid, side="right") / b.size
    return float(np.abs(fa - fb).max())


def occupation_fractions(path: StepPath, values: Iterable[float]) -> list[float]:
    """Fraction of [0, horizon] spent at each listed value.

    Matching is exact float identity of the stored values; time at
    unlisted values (including the cemetery value 0) accounts for any
    deficit from 1.
    """
    starts = np.concatenate([[0.0], path.times])
    ends = np.concatenate([path.times, [path.horizon]])
    durations = np.clip(ends - starts, 0.0, None)
    sojourn_values = np.concatenate([[path.initial_value], path.values])
    out = []
    for v in values:
        out.append(float(durations[sojourn_values == v].sum()) / path.horizon)
    return out


# ---------------------------------------------------------------------------
# table output


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def write_aging_csv(rows: Iterable[tuple[str, AgingEstimate]], fp) -> None:
    """Write ``t,s,ratio,kind,estimate,stderr,replicates,oracle`` rows."""
    if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
        with open(fp, "w", newline="") as handle:
            write_aging_csv(rows, handle)
        return
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(
        ["t", "s", "ratio", "kind", "estimate", "stderr", "replicates", "oracle"]
    )
    for kind, est in rows:
        writer.writerow(
            [
                _fmt(est.t),
                _fmt(est.s),
                _fmt(est.t / est.s),
                kind,
                _fmt(est.estimate),
                _fmt(est.stderr),
                est.replicates,
                "" if est.oracle is None else _fmt(est.oracle),
            ]
        )


def write_laplace_csv(curves: Iterable[LaplaceCurve], fp) -> None:
    """Write ``lambda,value,label`` rows for one or more curves."""
    if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
        with open(fp, "w", newline="") as handle:
            write_laplace_csv(curves, handle)
        return
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["lambda", "value", "label"])
    for curve in curves:
        for lam, val in zip(curve.lambdas, curve.values):
            writer.writerow([_fmt(lam), _fmt(val), curve.label])
