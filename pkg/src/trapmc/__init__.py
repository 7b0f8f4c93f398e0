"""Monte Carlo toolkit for complete-graph trap models and K processes.

Simulates the finite-n depth process, its infinite-volume K-process
limit and the self-similar small-time limit, and estimates the aging
correlation functions Pi, R and Q against the exact arcsine-law oracle.
"""

from .analysis import (
    AgingEstimate,
    LaplaceCurve,
    arcsine_pi,
    empirical_laplace,
    estimate_pi,
    estimate_q,
    estimate_r,
    ks_statistic,
    limit_laplace,
    occupation_fractions,
    rescaled_laplace,
)
from .backend import BACKEND, available_backends
from .environment import (
    Environment,
    JumpField,
    alpha_hat,
    c_hat,
    is_interrupted,
    normalizer_cn,
    pareto_from_uniform,
    sample_pareto_env,
    sample_stable_jumps,
    tail_time_mass,
)
from .paths import (
    ClockRecord,
    StepPath,
    count_events,
    read_path_csv,
    rescale_path,
    running_sup,
    simulate_k_path,
    simulate_trap_path,
    simulate_zhat_path,
    value_at,
    write_path_csv,
)
from .seeds import mix64, replicate_rng
from .special import regularized_incomplete_beta

__version__ = "0.1.0"

__all__ = [
    "AgingEstimate",
    "BACKEND",
    "ClockRecord",
    "Environment",
    "JumpField",
    "LaplaceCurve",
    "StepPath",
    "alpha_hat",
    "arcsine_pi",
    "available_backends",
    "c_hat",
    "count_events",
    "empirical_laplace",
    "estimate_pi",
    "estimate_q",
    "estimate_r",
    "is_interrupted",
    "ks_statistic",
    "limit_laplace",
    "mix64",
    "normalizer_cn",
    "occupation_fractions",
    "pareto_from_uniform",
    "read_path_csv",
    "regularized_incomplete_beta",
    "replicate_rng",
    "rescale_path",
    "rescaled_laplace",
    "running_sup",
    "sample_pareto_env",
    "sample_stable_jumps",
    "simulate_k_path",
    "simulate_trap_path",
    "simulate_zhat_path",
    "tail_time_mass",
    "value_at",
    "write_path_csv",
    "__version__",
]
