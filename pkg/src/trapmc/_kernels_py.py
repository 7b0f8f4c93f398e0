"""Pure NumPy event-loop kernels (fallback backend).

Both backends consume the same pre-drawn random arrays and must return
bit-identical results; randomness never enters a kernel.  The compiled
backend in ``_kernels.pyx`` implements the same two functions.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def categorical_from_uniform(cum_weights: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Map uniforms in [0, 1) to indices with probability prop. to weights.

    ``cum_weights`` is the cumulative sum of the (positive) weights; index
    i is chosen when u * total falls in (cum_weights[i-1], cum_weights[i]].
    """
    total = cum_weights[-1]
    idx = np.searchsorted(cum_weights, u * total, side="right")
    # u*total can round up onto the total itself; clamp to the last site.
    return np.minimum(idx, cum_weights.shape[0] - 1).astype(np.int64, copy=False)


def sojourn_events(
    values: np.ndarray,
    durations: np.ndarray,
    cum0: float,
    first: bool,
    horizon: float,
):
    """Turn one batch of sojourns into transition events up to ``horizon``.

    Sojourn i of the batch starts at cum0 + durations[:i].sum() and holds
    ``values[i]``.  Every sojourn start is a transition event except the
    global path start (``first`` batch, i = 0).  Events stop at the first
    start exceeding ``horizon``.

    Returns ``(times, vals, consumed, cum_end, done)`` where ``consumed``
    counts sojourns actually entered, ``cum_end`` is the running clock to
    resume from, and ``done`` tells whether the path now covers the horizon.
    """
    k = durations.shape[0]
    ends = cum0 + np.cumsum(durations)
    starts = np.empty(k, dtype=np.float64)
    starts[0] = cum0
    starts[1:] = ends[:-1]
    skip = 1 if first else 0
    cand_t = starts[skip:]
    m = int(np.searchsorted(cand_t, horizon, side="right"))
    if m < cand_t.shape[0]:
        consumed = m + skip
        return (
            cand_t[:m].copy(),
            values[skip : skip + m].copy(),
            consumed,
            float(cand_t[m]),
            True,
        )
    cum_end = float(ends[-1])
    return (
        cand_t.copy(),
        values[skip:].copy(),
        k,
        cum_end,
        cum_end > horizon,
    )
