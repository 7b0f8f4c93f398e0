"""Random disorder: heavy-tailed trap landscapes and stable jump fields.

The finite-volume disorder is an i.i.d. pure-Pareto landscape ``tau``
(tail P(tau > t) = t**(-alpha) on [1, inf)); the infinite-volume disorder
is the jump set of an alpha-stable subordinator, sampled through the
decreasing series representation so the retained jumps are exactly the
largest ones.  Also hosts the two constants of the small-time limit: the
index ``alpha_hat`` and the Laplace-exponent multiplier ``c_hat``.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad


# ---------------------------------------------------------------------------
# domain types


@dataclass(eq=False)
class Environment:
    """A finite trap landscape: n sites with trap parameters tau."""

    n: int
    alpha: float
    a: float
    tau: np.ndarray
    c_n: float

    def __post_init__(self):
        self.tau = np.asarray(self.tau, dtype=np.float64)
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if not 0.0 < self.alpha < 1.0:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if not 0.0 <= self.a <= 1.0:
            raise ValueError(f"a must lie in [0, 1], got {self.a}")
        if self.tau.shape != (self.n,):
            raise ValueError(f"tau must have length n={self.n}")
        if np.any(self.tau < 1.0):
            raise ValueError("tau values must be >= 1 (pure Pareto support)")
        if self.c_n <= 0.0:
            raise ValueError(f"c_n must be positive, got {self.c_n}")

    def depths(self) -> np.ndarray:
        """Mean sojourn times tau**(1-a), one per site."""
        return self.tau ** (1.0 - self.a)

    def weights(self) -> np.ndarray:
        """Unnormalized transition weights tau**a, one per site."""
        return self.tau**self.a

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "alpha": self.alpha,
                "a": self.a,
                "tau": self.tau.tolist(),
                "c_n": self.c_n,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "Environment":
        d = json.loads(text)
        return cls(n=d["n"], alpha=d["alpha"], a=d["a"],
                   tau=np.asarray(d["tau"]), c_n=d["c_n"])


@dataclass(eq=False)
class JumpField:
    """Truncated jump set of a stable subordinator over a location window.

    ``sizes`` are the ``M`` largest jumps (strictly decreasing) of a
    Poisson point process with intensity scale * alpha_eff * x**(-1-alpha_eff)
    per unit location; ``locations`` are their positions in [0, window].
    ``tail_mass`` estimates the total size of the discarded smaller jumps.
    """

    alpha_eff: float
    window: float
    sizes: np.ndarray
    locations: np.ndarray
    scale: float = 1.0
    tail_mass: float = 0.0

    def __post_init__(self):
        self.sizes = np.asarray(self.sizes, dtype=np.float64)
        self.locations = np.asarray(self.locations, dtype=np.float64)
        if not 0.0 < self.alpha_eff < 1.0:
            raise ValueError(f"alpha_eff must lie in (0, 1), got {self.alpha_eff}")
        if self.window <= 0.0:
            raise ValueError(f"window must be positive, got {self.window}")
        if self.scale <= 0.0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.sizes.shape != self.locations.shape:
            raise ValueError("sizes and locations must have equal length")
        if self.sizes.size and np.any(np.diff(self.sizes) >= 0.0):
            raise ValueError("sizes must be strictly decreasing")
        if self.sizes.size and self.sizes[-1] <= 0.0:
            raise ValueError("sizes must be positive")
        if self.locations.size and (
            self.locations.min() < 0.0 or self.locations.max() > self.window
        ):
            raise ValueError("locations must lie in [0, window]")
        if self.tail_mass < 0.0:
            raise ValueError("tail_mass must be nonnegative")

    def __len__(self) -> int:
        return self.sizes.size

    def total_mass(self) -> float:
        """Sum of retained jump sizes (the truncated subordinator increment)."""
        return float(self.sizes.sum())

    def weights(self, a: float) -> np.ndarray:
        """Revisit-clock rates sizes**a."""
        return self.sizes**a

    def depths(self, a: float) -> np.ndarray:
        """Mean sojourn times sizes**(1-a)."""
        return self.sizes ** (1.0 - a)

    def to_json(self) -> str:
        return json.dumps(
            {
                "alpha_eff": self.alpha_eff,
                "window": self.window,
                "sizes": self.sizes.tolist(),
                "locations": self.locations.tolist(),
                "scale": self.scale,
                "tail_mass": self.tail_mass,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "JumpField":
        d = json.loads(text)
        return cls(
            alpha_eff=d["alpha_eff"],
            window=d["window"],
            sizes=np.asarray(d["sizes"]),
            locations=np.asarray(d["locations"]),
            scale=d["scale"],
            tail_mass=d["tail_mass"],
        )


# ---------------------------------------------------------------------------
# landscape sampling


def pareto_from_uniform(u, alpha: float):
    """Map a uniform tail variable u in (0, 1] to a Pareto(alpha) variate.

    Inverse-transform: P(tau > t) = t**(-alpha) gives tau = u**(-1/alpha).
    """
    return np.asarray(u) ** (-1.0 / alpha)


def normalizer_cn(n: int, alpha: float) -> float:
    """Normalizing constant 1 / inf{t >= 0 : P(tau > t) <= 1/n}.

    For the pure Pareto tail this is n**(-1/alpha).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return float(n) ** (-1.0 / alpha)


def sample_pareto_env(n: int, alpha: float, a: float, seed: int) -> Environment:
    """Draw an i.i.d. pure-Pareto landscape; deterministic given the seed."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    rng = np.random.default_rng(seed)
    # 1 - U lies in (0, 1], keeping the power map finite.
    tau = pareto_from_uniform(1.0 - rng.random(n), alpha)
    return Environment(n=n, alpha=alpha, a=a, tau=tau, c_n=normalizer_cn(n, alpha))


# ---------------------------------------------------------------------------
# stable jump fields


def tail_time_mass(
    alpha_eff: float, max_jumps: int, window: float = 1.0, scale: float = 1.0
) -> float:
    """Expected total size of the jumps discarded beyond the largest M.

    Analytic approximation
    (scale*window)**(1/alpha_eff) * alpha_eff/(1-alpha_eff)
        * M**(-(1-alpha_eff)/alpha_eff),
    from E[A_i**(-1/alpha)] ~ i**(-1/alpha) for the arrival times of the
    series representation.
    """
    if not 0.0 < alpha_eff < 1.0:
        raise ValueError(f"alpha_eff must lie in (0, 1), got {alpha_eff}")
    if max_jumps < 1:
        raise ValueError(f"max_jumps must be >= 1, got {max_jumps}")
    rate = scale * window
    return (
        rate ** (1.0 / alpha_eff)
        * alpha_eff
        / (1.0 - alpha_eff)
        * float(max_jumps) ** (-(1.0 - alpha_eff) / alpha_eff)
    )


def _draw_stable_sizes(
    rng: np.random.Generator,
    alpha_eff: float,
    window: float,
    max_jumps: int,
    scale: float,
) -> np.ndarray:
    """The M largest jump sizes, via the decreasing series representation.

    J_i = (A_i / (scale * window))**(-1/alpha_eff) with A_i the i-th
    arrival of a unit-rate Poisson process.
    """
    arrivals = np.cumsum(rng.standard_exponential(max_jumps))
    return (arrivals / (scale * window)) ** (-1.0 / alpha_eff)


def sample_stable_jumps(
    alpha_eff: float,
    window: float,
    max_jumps: int,
    scale: float = 1.0,
    seed: int = 0,
) -> JumpField:
    """Draw the M largest jumps of a stable Poisson point process.

    Sizes have intensity scale * alpha_eff * x**(-1-alpha_eff) * window;
    locations are i.i.d. uniform on [0, window].
    """
    if not 0.0 < alpha_eff < 1.0:
        raise ValueError(f"alpha_eff must lie in (0, 1), got {alpha_eff}")
    if window <= 0.0:
        raise ValueError(f"window must be positive, got {window}")
    if max_jumps < 0:
        raise ValueError(f"max_jumps must be >= 0, got {max_jumps}")
    rng = np.random.default_rng(seed)
    if max_jumps == 0:
        return JumpField(
            alpha_eff=alpha_eff,
            window=window,
            sizes=np.empty(0),
            locations=np.empty(0),
            scale=scale,
            tail_mass=0.0,
        )
    sizes = _draw_stable_sizes(rng, alpha_eff, window, max_jumps, scale)
    locations = rng.random(max_jumps) * window
    return JumpField(
        alpha_eff=alpha_eff,
        window=window,
        sizes=sizes,
        locations=locations,
        scale=scale,
        tail_mass=tail_time_mass(alpha_eff, max_jumps, window, scale),
    )


# ---------------------------------------------------------------------------
# limit constants


def alpha_hat(alpha: float, a: float) -> float:
    """Index of the small-time limit: (alpha - a) / (1 - a).

    Nonpositive values signal the degenerate (interrupted-aging) regime
    a >= alpha; see :func:`is_interrupted`.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if not 0.0 <= a < 1.0:
        raise ValueError(f"a must lie in [0, 1), got {a}")
    return (alpha - a) / (1.0 - a)


def is_interrupted(alpha: float, a: float) -> bool:
    """True in the degenerate regime a >= alpha where aging is interrupted."""
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must lie in [0, 1], got {a}")
    return a >= alpha


def c_hat(alpha: float, a: float = 0.0, rel_tol: float = 1e-8) -> float:
    """Laplace-exponent constant of the small-time limit.

    Evaluates alpha * int_0^inf (1 - exp(-x**(1-a))) / x**(1+alpha-a) dx
    by adaptive quadrature, split at x = 1.  On (0, 1) the substitution
    u = x**(1-a) turns the integrand into g(u) * u**(-alpha_hat) with g
    bounded, which quadrature handles as an algebraic end-point weight.
    """
    if not 0.0 < alpha < 1.0:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if not 0.0 <= a < alpha:
        raise ValueError(
            f"need 0 <= a < alpha (integral diverges otherwise), got a={a}, alpha={alpha}"
        )
    ahat = alpha_hat(alpha, a)
    eps = min(rel_tol * 1e-2, 1e-10)

    def bounded_part(u: float) -> float:
        # (1 - e^{-u}) / u, extended by its limit 1 at u = 0
        return -math.expm1(-u) / u if u > 0.0 else 1.0

    # int_0^1 (1 - e^{-u}) u^{-1-ahat} du / (1-a), weight u^{-ahat} split off
    inner, _ = quad(
        bounded_part,
        0.0,
        1.0,
        weight="alg",
        wvar=(-ahat, 0.0),
        epsabs=0.0,
        epsrel=eps,
        limit=200,
    )
    head = inner / (1.0 - a)
    tail, _ = quad(
        lambda x: -math.expm1(-(x ** (1.0 - a))) * x ** (-(1.0 + alpha - a)),
        1.0,
        np.inf,
        epsabs=0.0,
        epsrel=eps,
        limit=200,
    )
    return alpha * (head + tail)
