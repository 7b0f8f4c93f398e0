"""Path-level simulators: finite-n depth process, K process, small-time limit.

All three processes are piecewise-constant in physical time.  The finite-n
trap model and the truncated K process share one mechanism: sites are
visited i.i.d. with probability proportional to a weight w_x, and each
visit holds an exponential sojourn with site-dependent mean d_x (recorded
path value d_x).  The small-time limit process visits each retained jump
of a stable subordinator once, in location order.

Every sojourn boundary is recorded as a transition event, including
self-transitions that do not change the value; both jump-counting
conventions stay computable from the same path.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from . import backend
from .environment import Environment, JumpField, _draw_stable_sizes

#: sojourns generated per batch of random draws; part of the deterministic
#: draw schedule, so changing it changes the exact sampled paths.
DEFAULT_BATCH = 4096

_MAX_STRIPS = 64

KIND_START = "start"
KIND_TRANSITION = "transition"


# ---------------------------------------------------------------------------
# domain types


@dataclass(eq=False)
class StepPath:
    """Cadlag piecewise-constant trajectory on [0, horizon].

    ``times``/``values`` hold the transition events: at ``times[i]`` the
    path jumps to ``values[i]``; before the first event it sits at
    ``initial_value``.  All recorded events are transitions (sojourn
    boundaries); value 0 encodes the infinite-depth cemetery state.
    """

    initial_value: float
    times: np.ndarray
    values: np.ndarray
    horizon: float

    def __post_init__(self):
        self.times = np.asarray(self.times, dtype=np.float64)
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.horizon <= 0.0:
            raise ValueError(f"horizon must be positive, got {self.horizon}")
        if self.initial_value < 0.0:
            raise ValueError("initial_value must be nonnegative")
        if self.times.shape != self.values.shape:
            raise ValueError("times and values must have equal length")
        if self.times.size:
            if self.times[0] <= 0.0:
                raise ValueError("event times must be positive")
            if np.any(np.diff(self.times) <= 0.0):
                raise ValueError("event times must be strictly increasing")
            if self.times[-1] > self.horizon:
                raise ValueError("event times must not exceed the horizon")
            if np.any(self.values < 0.0):
                raise ValueError("values must be nonnegative")

    def __len__(self) -> int:
        return self.times.size


@dataclass(eq=False)
class ClockRecord:
    """Exploration-time marks and the physical clock evaluated at them."""

    exploration_times: np.ndarray
    physical_times: np.ndarray

    def __post_init__(self):
        self.exploration_times = np.asarray(self.exploration_times, dtype=np.float64)
        self.physical_times = np.asarray(self.physical_times, dtype=np.float64)
        if self.exploration_times.shape != self.physical_times.shape:
            raise ValueError("clock record arrays must have equal length")
        if np.any(np.diff(self.physical_times) < 0.0):
            raise ValueError("physical times must be nondecreasing")


# ---------------------------------------------------------------------------
# shared assembly


def _assemble_categorical(weights, depths, horizon, rng, batch, want_clock):
    """Run the i.i.d.-site sojourn mechanism until the horizon is covered."""
    cum_w = np.cumsum(weights)
    total_rate = float(cum_w[-1])
    times_chunks: list[np.ndarray] = []
    vals_chunks: list[np.ndarray] = []
    gap_chunks: list[np.ndarray] = []
    cum = 0.0
    first = True
    initial = 0.0
    while True:
        u = rng.random(batch)
        sites = backend.kernels.categorical_from_uniform(cum_w, u)
        e_soj = rng.standard_exponential(batch)
        # exploration gaps are always drawn so the stream does not depend
        # on whether the clock record is requested
        gaps = rng.standard_exponential(batch)
        values = depths[sites]
        durations = values * e_soj
        if first:
            initial = float(values[0])
        t, v, consumed, cum, done = backend.kernels.sojourn_events(
            values, durations, cum, first, horizon
        )
        times_chunks.append(t)
        vals_chunks.append(v)
        if want_clock:
            gap_chunks.append(gaps[:consumed])
        first = False
        if done:
            break
    path = StepPath(
        initial_value=initial,
        times=np.concatenate(times_chunks),
        values=np.concatenate(vals_chunks),
        horizon=horizon,
    )
    if not want_clock:
        return path, None
    exploration = np.cumsum(np.concatenate(gap_chunks)) / total_rate
    physical = np.append(path.times, cum)
    return path, ClockRecord(exploration_times=exploration, physical_times=physical)


# ---------------------------------------------------------------------------
# simulators


def simulate_trap_path(
    env: Environment,
    horizon: float,
    seed: int,
    *,
    return_clock: bool = False,
    batch: int = DEFAULT_BATCH,
):
    """Simulate the depth process of the complete-graph trap model.

    The initial site and every subsequent site (self-transitions included)
    are i.i.d. with probability tau_x**a / sum tau_z**a; the sojourn at x
    is exponential with mean tau_x**(1-a) and the recorded value is that
    same depth tau_x**(1-a).
    """
    if horizon <= 0.0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    rng = np.random.default_rng(seed)
    path, clock = _assemble_categorical(
        env.weights(), env.depths(), horizon, rng, batch, return_clock
    )
    return (path, clock) if return_clock else path


def simulate_k_path(
    jumps: JumpField,
    a: float,
    horizon: float,
    seed: int,
    *,
    return_clock: bool = False,
    batch: int = DEFAULT_BATCH,
):
    """Simulate the truncated K process driven by a retained jump field.

    Each retained jump of size g carries a Poisson revisit clock of rate
    g**a; marks arrive in physical order by competing exponentials and
    each contributes a sojourn of mean g**(1-a) at value g**(1-a).  Time
    the full process would spend outside the retained jumps is omitted
    (no compensation); ``jumps.tail_mass`` quantifies the bias.
    """
    if not 0.0 <= a <= 1.0:
        raise ValueError(f"a must lie in [0, 1], got {a}")
    if horizon <= 0.0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    if len(jumps) == 0:
        if a > jumps.alpha_eff:
            # degenerate but representable: all mass at the cemetery state
            path = StepPath(
                initial_value=0.0,
                times=np.empty(0),
                values=np.empty(0),
                horizon=horizon,
            )
            clock = ClockRecord(np.empty(0), np.empty(0))
            return (path, clock) if return_clock else path
        raise ValueError(
            "empty jump field with a <= alpha: truncated dynamics has no states"
        )
    rng = np.random.default_rng(seed)
    path, clock = _assemble_categorical(
        jumps.weights(a), jumps.depths(a), horizon, rng, batch, return_clock
    )
    return (path, clock) if return_clock else path


def simulate_zhat_path(
    alpha_hat: float,
    c_hat: float,
    horizon: float,
    max_jumps: int,
    seed: int,
    *,
    return_clock: bool = False,
):
    """Simulate the self-similar small-time limit process.

    Draws the jump field of an alpha_hat-stable subordinator with scale
    c_hat / Gamma(1 - alpha_hat) (so the subordinator's Laplace exponent
    is exactly c_hat * lambda**alpha_hat), visits the retained jumps once
    each in location order, and holds value g for a duration g * Exp(1)
    at each jump g.  The location window starts near the horizon scale
    and doubles, one independent strip at a time, until the accumulated
    clock covers the horizon; earlier strips are never redrawn.
    """
    if alpha_hat <= 0.0:
        raise ValueError(
            f"alpha_hat must be positive, got {alpha_hat}: "
            "a >= alpha is the interrupted (degenerate) regime"
        )
    if alpha_hat >= 1.0:
        raise ValueError(f"alpha_hat must lie in (0, 1), got {alpha_hat}")
    if c_hat <= 0.0:
        raise ValueError(f"c_hat must be positive, got {c_hat}")
    if max_jumps < 1:
        raise ValueError(f"max_jumps must be >= 1, got {max_jumps}")
    if horizon <= 0.0:
        raise ValueError(f"horizon must be positive, got {horizon}")
    scale = c_hat / math.gamma(1.0 - alpha_hat)
    rng = np.random.default_rng(seed)
    # window sized so the clock typically covers the horizon in one strip
    strip_start = 0.0
    strip_len = horizon**alpha_hat / c_hat
    times_chunks: list[np.ndarray] = []
    vals_chunks: list[np.ndarray] = []
    loc_chunks: list[np.ndarray] = []
    cum = 0.0
    first = True
    initial = 0.0
    for _ in range(_MAX_STRIPS):
        sizes = _draw_stable_sizes(rng, alpha_hat, strip_len, max_jumps, scale)
        locs = strip_start + rng.random(max_jumps) * strip_len
        order = np.argsort(locs)
        values = sizes[order]
        durations = values * rng.standard_exponential(max_jumps)
        if first:
            initial = float(values[0])
        t, v, consumed, cum, done = backend.kernels.sojourn_events(
            values, durations, cum, first, horizon
        )
        times_chunks.append(t)
        vals_chunks.append(v)
        if return_clock:
            loc_chunks.append(locs[order][:consumed])
        first = False
        if done:
            break
        strip_start += strip_len
        strip_len = strip_start  # doubles the total window
    else:
        raise RuntimeError(
            "location window doubled too many times without covering the horizon"
        )
    path = StepPath(
        initial_value=initial,
        times=np.concatenate(times_chunks),
        values=np.concatenate(vals_chunks),
        horizon=horizon,
    )
    if not return_clock:
        return path
    exploration = np.concatenate(loc_chunks)
    physical = np.append(path.times, cum)
    return path, ClockRecord(exploration_times=exploration, physical_times=physical)


# ---------------------------------------------------------------------------
# path operators


def rescale_path(path: StepPath, space_factor: float, time_factor: float) -> StepPath:
    """Multiply values by space_factor and divide times by time_factor.

    The result is t -> space_factor * path(t * time_factor); e.g. the
    small-time rescaling eps**-1 Z(eps t) is space_factor=1/eps,
    time_factor=eps.
    """
    if space_factor <= 0.0 or time_factor <= 0.0:
        raise ValueError("rescaling factors must be positive")
    return StepPath(
        initial_value=path.initial_value * space_factor,
        times=path.times / time_factor,
        values=path.values * space_factor,
        horizon=path.horizon / time_factor,
    )


def value_at(path: StepPath, t: float) -> float:
    """Right-continuous evaluation of the path at time t."""
    if t < 0.0 or t > path.horizon:
        raise ValueError(f"t={t} outside [0, horizon={path.horizon}]")
    idx = int(np.searchsorted(path.times, t, side="right"))
    if idx == 0:
        return float(path.initial_value)
    return float(path.values[idx - 1])


def running_sup(path: StepPath, t: float) -> float:
    """Supremum of the path over [0, t]."""
    if t < 0.0 or t > path.horizon:
        raise ValueError(f"t={t} outside [0, horizon={path.horizon}]")
    idx = int(np.searchsorted(path.times, t, side="right"))
    sup = float(path.initial_value)
    if idx:
        sup = max(sup, float(path.values[:idx].max()))
    return sup


def count_events(path: StepPath, t: float, s: float, convention: str = "transition") -> int:
    """Number of events in (t, t+s] under the chosen counting convention.

    ``transition`` counts every sojourn boundary; ``value-change`` counts
    only boundaries where the stored value differs from the previous one.
    For the limit processes the two agree almost surely; they differ when
    self-transitions occur (finite n, or a truncated jump field).
    """
    if s <= 0.0:
        raise ValueError(f"s must be positive, got {s}")
    if t < 0.0 or t + s > path.horizon:
        raise ValueError(f"window ({t}, {t + s}] outside [0, horizon={path.horizon}]")
    i0 = int(np.searchsorted(path.times, t, side="right"))
    i1 = int(np.searchsorted(path.times, t + s, side="right"))
    if convention == "transition":
        return i1 - i0
    if convention == "value-change":
        count = 0
        for k in range(i0, i1):
            prev = path.values[k - 1] if k > 0 else path.initial_value
            if path.values[k] != prev:
                count += 1
        return count
    raise ValueError(f"unknown convention {convention!r}")


# ---------------------------------------------------------------------------
# serialization


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def write_path_csv(path: StepPath, fp) -> None:
    """Write ``time,value,kind`` rows; row 0 is the start of the path."""
    if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
        with open(fp, "w", newline="") as handle:
            write_path_csv(path, handle)
        return
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(["time", "value", "kind"])
    writer.writerow([_fmt(0.0), _fmt(path.initial_value), KIND_START])
    for t, v in zip(path.times, path.values):
        writer.writerow([_fmt(t), _fmt(v), KIND_TRANSITION])


def read_path_csv(fp, horizon: float | None = None) -> StepPath:
    """Inverse of :func:`write_path_csv`.

    The horizon is not stored in the CSV; it defaults to the last event
    time (or 1.0 for an event-free path) unless given explicitly.
    """
    if isinstance(fp, (str, bytes)) or hasattr(fp, "__fspath__"):
        with open(fp, newline="") as handle:
            return read_path_csv(handle, horizon)
    rows = list(csv.reader(fp))
    if not rows or rows[0] != ["time", "value", "kind"]:
        raise ValueError("not a path CSV: bad header")
    if len(rows) < 2 or rows[1][2] != KIND_START:
        raise ValueError("not a path CSV: missing start row")
    initial = float(rows[1][1])
    times = []
    values = []
    for row in rows[2:]:
        if row[2] != KIND_TRANSITION:
            raise ValueError(f"unknown event kind {row[2]!r}")
        times.append(float(row[0]))
        values.append(float(row[1]))
    if horizon is None:
        horizon = times[-1] if times else 1.0
    return StepPath(
        initial_value=initial,
        times=np.asarray(times),
        values=np.asarray(values),
        horizon=horizon,
    )
