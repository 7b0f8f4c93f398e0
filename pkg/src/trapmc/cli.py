"""Experiment driver: config parsing, parallel replication, file output.

Every run resolves a full configuration (JSON file merged with flags,
flags winning), derives replicate seeds as mix64(master_seed, i), and
writes CSV outputs plus a JSON run manifest.  Data CSVs are a pure
function of (config, master_seed) regardless of worker count; the
manifest additionally records wall time and versions.

Exit codes: 0 success, 2 config error, 3 runtime error.  The environment
variable TRAPMC_OUTPUT_DIR overrides the configured output directory.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import multiprocessing
import os
import platform
import sys
import time
from pathlib import Path

import numpy as np
import scipy

from . import __version__, backend
from .analysis import (
    AgingEstimate,
    LaplaceCurve,
    arcsine_pi,
    empirical_laplace,
    rescaled_laplace,
    limit_laplace,
    ks_statistic,
    write_aging_csv,
    write_laplace_csv,
)
from .environment import (
    alpha_hat,
    c_hat,
    sample_pareto_env,
    sample_stable_jumps,
    tail_time_mass,
)
from .paths import (
    rescale_path,
    simulate_k_path,
    simulate_trap_path,
    simulate_zhat_path,
    value_at,
    running_sup,
    count_events,
    write_path_csv,
)
from .seeds import mix64

OUTPUT_DIR_ENV = "TRAPMC_OUTPUT_DIR"

#: default jump-field truncation when a subcommand does not require one
DEFAULT_MAX_JUMPS = 2000

_RAW_HORIZON_MARGIN = 1.0 + 1e-9


class ConfigError(Exception):
    """Invalid or incomplete experiment configuration."""


# ---------------------------------------------------------------------------
# config schema


def _positive_float(key, v):
    v = float(v)
    if not v > 0.0 or not math.isfinite(v):
        raise ConfigError(f"{key}: must be a positive finite real, got {v}")
    return v


def _unit_open(key, v):
    v = float(v)
    if not 0.0 < v < 1.0:
        raise ConfigError(f"{key}: must lie in the range (0,1), got {v}")
    return v


def _unit_closed(key, v):
    v = float(v)
    if not 0.0 <= v <= 1.0:
        raise ConfigError(f"{key}: must lie in the range [0,1], got {v}")
    return v


def _positive_int(key, v):
    if isinstance(v, float) and not v.is_integer():
        raise ConfigError(f"{key}: must be an integer, got {v}")
    v = int(v)
    if v < 1:
        raise ConfigError(f"{key}: must be >= 1, got {v}")
    return v


def _seed64(key, v):
    if isinstance(v, float) and not v.is_integer():
        raise ConfigError(f"{key}: must be an integer, got {v}")
    v = int(v)
    if v < 0 or v >= 1 << 64:
        raise ConfigError(f"{key}: must be a 64-bit nonnegative integer, got {v}")
    return v


def _ts_grid(key, v):
    if isinstance(v, str):
        pairs = []
        for part in v.split(","):
            bits = part.split(":")
            if len(bits) != 2:
                raise ConfigError(f"{key}: expected t:s pairs, got {part!r}")
            pairs.append([float(bits[0]), float(bits[1])])
        v = pairs
    try:
        grid = [(float(t), float(s)) for t, s in v]
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: expected a list of [t, s] pairs") from None
    if not grid:
        raise ConfigError(f"{key}: must be nonempty")
    for t, s in grid:
        if t <= 0.0 or s <= 0.0:
            raise ConfigError(f"{key}: t and s must be positive, got ({t}, {s})")
    return grid


def _lambdas(key, v):
    if isinstance(v, str):
        v = [float(x) for x in v.split(",")]
    try:
        lam = [float(x) for x in v]
    except (TypeError, ValueError):
        raise ConfigError(f"{key}: expected a list of reals") from None
    if not lam:
        raise ConfigError(f"{key}: must be nonempty")
    if any(x < 0.0 for x in lam) or any(b <= a for a, b in zip(lam, lam[1:])):
        raise ConfigError(f"{key}: must be increasing and nonnegative")
    return lam


def _choice(options):
    def check(key, v):
        if v not in options:
            raise ConfigError(f"{key}: must be one of {sorted(options)}, got {v!r}")
        return v

    return check


_VALIDATORS = {
    "alpha": _unit_open,
    "a": _unit_closed,
    "alpha_hat": _unit_open,
    "n": _positive_int,
    "max_jumps": _positive_int,
    "window": _positive_float,
    "scale": _positive_float,
    "epsilon": _positive_float,
    "horizon": _positive_float,
    "t_s_grid": _ts_grid,
    "lambdas": _lambdas,
    "replicates": _positive_int,
    "master_seed": _seed64,
    "workers": _positive_int,
    "output_path": lambda key, v: str(v),
    "process": _choice({"zhat", "k"}),
    "convention": _choice({"transition", "value-change"}),
}

# per-subcommand key sets: (required, optional-with-default)
_SUBCOMMANDS = {
    "gen-env": (
        {"alpha", "master_seed"},
        {"a": 0.0, "n": None, "max_jumps": None, "window": 1.0, "scale": 1.0,
         "output_path": None},
    ),
    "sim-trap": (
        {"alpha", "a", "n", "horizon", "master_seed"},
        {"replicates": 1, "workers": 1, "output_path": None},
    ),
    "sim-k": (
        {"alpha", "a", "max_jumps", "horizon", "master_seed"},
        {"window": 1.0, "replicates": 1, "workers": 1, "output_path": None},
    ),
    "sim-zhat": (
        {"alpha", "a", "horizon", "master_seed"},
        {"max_jumps": DEFAULT_MAX_JUMPS, "replicates": 1, "workers": 1,
         "output_path": None},
    ),
    "laplace": (
        {"alpha", "a", "lambdas", "master_seed"},
        {"n": None, "max_jumps": None, "epsilon": None, "window": 1.0,
         "output_path": None},
    ),
    "aging": (
        {"alpha", "a", "t_s_grid", "replicates", "master_seed"},
        {"max_jumps": DEFAULT_MAX_JUMPS, "epsilon": None, "process": None,
         "convention": "transition", "window": 1.0, "workers": 1,
         "output_path": None},
    ),
    "arcsine": (
        {"alpha_hat", "t_s_grid"},
        {"master_seed": 0, "output_path": None},
    ),
    "selfsim": (
        {"alpha", "a", "replicates", "master_seed"},
        {"max_jumps": DEFAULT_MAX_JUMPS, "workers": 1, "output_path": None},
    ),
}


def parse_config(subcommand: str, file_path: str | None, flags: dict) -> dict:
    """Merge JSON file and flag values into a validated config dict.

    Flags override file values; unknown keys and out-of-range values are
    rejected with a message naming the offending key.
    """
    if subcommand not in _SUBCOMMANDS:
        raise ConfigError(f"unknown subcommand {subcommand!r}")
    required, optional = _SUBCOMMANDS[subcommand]
    allowed = required | set(optional)

    merged: dict = {}
    if file_path is not None:
        try:
            with open(file_path) as fh:
                loaded = json.load(fh)
        except FileNotFoundError:
            raise ConfigError(f"config file not found: {file_path}") from None
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config file is not valid JSON: {exc}") from None
        if not isinstance(loaded, dict):
            raise ConfigError("config file must hold a JSON object")
        sub = loaded.pop("subcommand", subcommand)
        if sub != subcommand:
            raise ConfigError(
                f"subcommand: config file says {sub!r} but {subcommand!r} was invoked"
            )
        merged.update(loaded)
    for key, value in flags.items():
        if value is not None:
            merged[key] = value

    for key in merged:
        if key not in allowed:
            raise ConfigError(f"{key}: unknown key for subcommand {subcommand!r}")
    for key in required:
        if merged.get(key) is None:
            raise ConfigError(f"{key}: required for subcommand {subcommand!r}")
    for key, default in optional.items():
        merged.setdefault(key, default)

    config = {"subcommand": subcommand}
    for key, value in merged.items():
        if value is None:
            config[key] = None
        else:
            config[key] = _VALIDATORS[key](key, value)

    _validate_cross(config)
    return config


def _validate_cross(config: dict) -> None:
    sub = config["subcommand"]
    if sub == "gen-env":
        have_n = config.get("n") is not None
        have_m = config.get("max_jumps") is not None
        if have_n == have_m:
            raise ConfigError("n: give exactly one of n (landscape) or max_jumps (jump field)")
    if sub == "laplace":
        have_n = config.get("n") is not None
        have_m = config.get("max_jumps") is not None
        if not have_n and not have_m:
            raise ConfigError("n: laplace needs n (finite-n curve) and/or max_jumps (field curve)")
        if config.get("epsilon") is not None and not have_m:
            raise ConfigError("epsilon: the rescaled curve requires max_jumps")
    if sub == "aging":
        if config["process"] is None:
            config["process"] = "k" if config.get("epsilon") is not None else "zhat"
        if config["process"] == "k" and config.get("epsilon") is None:
            raise ConfigError("epsilon: required when aging runs on the rescaled K process")
        if config["process"] == "zhat":
            if config.get("epsilon") is not None:
                raise ConfigError("epsilon: not used when aging runs on the limit process")
            if config["a"] >= config["alpha"]:
                raise ConfigError(
                    "a: limit-process aging needs a < alpha "
                    f"(got a={config['a']}, alpha={config['alpha']})"
                )
    if sub in ("sim-zhat", "selfsim") and config["a"] >= config["alpha"]:
        raise ConfigError(
            f"a: must satisfy a < alpha for the limit process "
            f"(got a={config['a']}, alpha={config['alpha']})"
        )


# ---------------------------------------------------------------------------
# replicate workers (top-level for multiprocessing)


def _trap_replicate(args):
    i, master_seed, n, alpha, a, horizon = args
    rep = mix64(master_seed, i)
    env = sample_pareto_env(n, alpha, a, mix64(rep, 0))
    return simulate_trap_path(env, horizon, mix64(rep, 1))


def _k_replicate(args):
    i, master_seed, alpha, a, max_jumps, window, horizon = args
    rep = mix64(master_seed, i)
    jumps = sample_stable_jumps(alpha, window, max_jumps, 1.0, mix64(rep, 0))
    return simulate_k_path(jumps, a, horizon, mix64(rep, 1))


def _zhat_replicate(args):
    i, master_seed, ahat, chat, max_jumps, horizon = args
    return simulate_zhat_path(ahat, chat, horizon, max_jumps, mix64(master_seed, i))


def _aging_replicate(args):
    (i, master_seed, process, alpha, a, ahat, chat, max_jumps, window,
     epsilon, grid, convention) = args
    rep = mix64(master_seed, i)
    horizon = max(t + s for t, s in grid)
    if process == "zhat":
        path = simulate_zhat_path(ahat, chat, horizon, max_jumps, rep)
    else:
        jumps = sample_stable_jumps(alpha, window, max_jumps, 1.0, mix64(rep, 0))
        raw = simulate_k_path(
            jumps, a, epsilon * horizon * _RAW_HORIZON_MARGIN, mix64(rep, 1)
        )
        path = rescale_path(raw, 1.0 / epsilon, epsilon)
    out = []
    for t, s in grid:
        out.append(
            (
                count_events(path, t, s, convention) == 0,
                value_at(path, t) == value_at(path, t + s),
                running_sup(path, t) < running_sup(path, t + s),
            )
        )
    return out


def _selfsim_replicate(args):
    i, master_seed, ahat, chat, max_jumps = args
    pa = simulate_zhat_path(ahat, chat, 1.0, max_jumps, mix64(master_seed, 2 * i))
    pb = simulate_zhat_path(ahat, chat, 2.0, max_jumps, mix64(master_seed, 2 * i + 1))
    return value_at(pa, 1.0), 0.5 * value_at(pb, 2.0)


def _map_replicates(worker, tasks, workers: int):
    if workers <= 1 or len(tasks) <= 1:
        return [worker(t) for t in tasks]
    chunk = max(1, len(tasks) // (workers * 4))
    with multiprocessing.get_context("fork").Pool(workers) as pool:
        return pool.map(worker, tasks, chunksize=chunk)


# ---------------------------------------------------------------------------
# subcommand runners; each returns (diagnostics, printed summary lines)


def _run_gen_env(config, outdir, written):
    seed = mix64(config["master_seed"], 0)
    if config["n"] is not None:
        env = sample_pareto_env(config["n"], config["alpha"], config["a"], seed)
        target = outdir / "environment.json"
        target.write_text(env.to_json())
        written.append(target)
        return {"tau_max": float(env.tau.max())}, [f"wrote {target}"]
    jumps = sample_stable_jumps(
        config["alpha"], config["window"], config["max_jumps"], config["scale"], seed
    )
    target = outdir / "jumpfield.json"
    target.write_text(jumps.to_json())
    written.append(target)
    diag = {"tail_mass": jumps.tail_mass, "total_mass": jumps.total_mass()}
    return diag, [f"wrote {target}"]


def _write_paths(paths, outdir, written):
    lines = []
    for i, path in enumerate(paths):
        target = outdir / f"path_{i:05d}.csv"
        write_path_csv(path, target)
        written.append(target)
    lines.append(f"wrote {len(paths)} path file(s) to {outdir}")
    return lines


def _run_sim_trap(config, outdir, written):
    tasks = [
        (i, config["master_seed"], config["n"], config["alpha"], config["a"],
         config["horizon"])
        for i in range(config["replicates"])
    ]
    paths = _map_replicates(_trap_replicate, tasks, config["workers"])
    lines = _write_paths(paths, outdir, written)
    return {"events": [len(p) for p in paths]}, lines


def _run_sim_k(config, outdir, written):
    tasks = [
        (i, config["master_seed"], config["alpha"], config["a"],
         config["max_jumps"], config["window"], config["horizon"])
        for i in range(config["replicates"])
    ]
    paths = _map_replicates(_k_replicate, tasks, config["workers"])
    lines = _write_paths(paths, outdir, written)
    diag = {
        "tail_mass": tail_time_mass(
            config["alpha"], config["max_jumps"], config["window"], 1.0
        ),
        "events": [len(p) for p in paths],
    }
    return diag, lines


def _run_sim_zhat(config, outdir, written):
    ahat = alpha_hat(config["alpha"], config["a"])
    chat = c_hat(config["alpha"], config["a"])
    tasks = [
        (i, config["master_seed"], ahat, chat, config["max_jumps"], config["horizon"])
        for i in range(config["replicates"])
    ]
    paths = _map_replicates(_zhat_replicate, tasks, config["workers"])
    lines = _write_paths(paths, outdir, written)
    diag = {"alpha_hat": ahat, "c_hat": chat, "events": [len(p) for p in paths]}
    return diag, lines


def _run_laplace(config, outdir, written):
    alpha, a = config["alpha"], config["a"]
    lam = np.asarray(config["lambdas"])
    curves = []
    diag = {}
    if config["n"] is not None:
        env = sample_pareto_env(config["n"], alpha, a, mix64(config["master_seed"], 0))
        gam = env.c_n * env.tau
        vals = [empirical_laplace(gam**a, gam ** (1.0 - a), x) for x in lam]
        curves.append(LaplaceCurve(lam, vals, "finite-n"))
        diag["c_n"] = env.c_n
    if config["max_jumps"] is not None:
        jumps = sample_stable_jumps(
            alpha, config["window"], config["max_jumps"], 1.0,
            mix64(config["master_seed"], 1),
        )
        diag["tail_mass"] = jumps.tail_mass
        if config["epsilon"] is None:
            vals = [empirical_laplace(jumps.weights(a), jumps.depths(a), x) for x in lam]
            curves.append(LaplaceCurve(lam, vals, "jump-field"))
        else:
            vals = [rescaled_laplace(jumps, a, config["epsilon"], x) for x in lam]
            curves.append(LaplaceCurve(lam, vals, "rescaled"))
    if a < alpha:
        ahat = alpha_hat(alpha, a)
        chat = c_hat(alpha, a)
        curves.append(LaplaceCurve(lam, [limit_laplace(chat, ahat, x) for x in lam], "limit"))
        diag.update({"alpha_hat": ahat, "c_hat": chat})
    target = outdir / "laplace.csv"
    write_laplace_csv(curves, target)
    written.append(target)
    return diag, [f"wrote {target}"]


def _run_aging(config, outdir, written):
    alpha, a = config["alpha"], config["a"]
    grid = config["t_s_grid"]
    reps = config["replicates"]
    interrupted = a >= alpha
    ahat = None if interrupted else alpha_hat(alpha, a)
    chat = None if interrupted else c_hat(alpha, a)
    tasks = [
        (i, config["master_seed"], config["process"], alpha, a, ahat, chat,
         config["max_jumps"], config["window"], config["epsilon"], grid,
         config["convention"])
        for i in range(reps)
    ]
    results = _map_replicates(_aging_replicate, tasks, config["workers"])
    rows = []
    lines = []
    for j, (t, s) in enumerate(grid):
        pi_hits = sum(r[j][0] for r in results)
        r_hits = sum(r[j][1] for r in results)
        q_hits = sum(r[j][2] for r in results)
        oracle = None if interrupted else arcsine_pi(t, s, ahat)
        rows.append(("pi", AgingEstimate.from_hits(t, s, pi_hits, reps, oracle)))
        rows.append(("r", AgingEstimate.from_hits(t, s, r_hits, reps, oracle)))
        rows.append(("q", AgingEstimate.from_hits(t, s, q_hits, reps, None)))
        lines.append(
            f"t={t:g} s={s:g}: pi={pi_hits / reps:.4f} r={r_hits / reps:.4f} "
            f"q={q_hits / reps:.4f}"
            + ("" if oracle is None else f" oracle={oracle:.4f}")
        )
    target = outdir / "aging.csv"
    write_aging_csv(rows, target)
    written.append(target)
    diag = {"process": config["process"], "alpha_hat": ahat, "c_hat": chat}
    if config["process"] == "k":
        diag["tail_mass"] = tail_time_mass(
            alpha, config["max_jumps"], config["window"], 1.0
        )
    return diag, lines + [f"wrote {target}"]


def _run_arcsine(config, outdir, written):
    target = outdir / "arcsine.csv"
    with open(target, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(
            ["t", "s", "ratio", "kind", "estimate", "stderr", "replicates", "oracle"]
        )
        lines = []
        for t, s in config["t_s_grid"]:
            val = arcsine_pi(t, s, config["alpha_hat"])
            writer.writerow(
                [
                    format(t, ".12g"),
                    format(s, ".12g"),
                    format(t / s, ".12g"),
                    "arcsine",
                    format(val, ".12g"),
                    "0",
                    "0",
                    format(val, ".12g"),
                ]
            )
            lines.append(f"arcsine_pi(t={t:g}, s={s:g}) = {val:.10f}")
    written.append(target)
    return {}, lines + [f"wrote {target}"]


def _run_selfsim(config, outdir, written):
    ahat = alpha_hat(config["alpha"], config["a"])
    chat = c_hat(config["alpha"], config["a"])
    tasks = [
        (i, config["master_seed"], ahat, chat, config["max_jumps"])
        for i in range(config["replicates"])
    ]
    results = _map_replicates(_selfsim_replicate, tasks, config["workers"])
    z1 = [r[0] for r in results]
    z2_half = [r[1] for r in results]
    stat = ks_statistic(z1, z2_half)
    target = outdir / "selfsim.csv"
    with open(target, "w", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["comparison", "n_a", "n_b", "statistic"])
        writer.writerow(
            ["Z(1) vs 0.5*Z(2)", len(z1), len(z2_half), format(stat, ".12g")]
        )
    written.append(target)
    diag = {"alpha_hat": ahat, "c_hat": chat, "ks_statistic": stat}
    return diag, [f"self-similarity KS statistic: {stat:.5f}", f"wrote {target}"]


_RUNNERS = {
    "gen-env": _run_gen_env,
    "sim-trap": _run_sim_trap,
    "sim-k": _run_sim_k,
    "sim-zhat": _run_sim_zhat,
    "laplace": _run_laplace,
    "aging": _run_aging,
    "arcsine": _run_arcsine,
    "selfsim": _run_selfsim,
}


def resolve_output_dir(config: dict) -> Path:
    env_dir = os.environ.get(OUTPUT_DIR_ENV)
    if env_dir:
        return Path(env_dir)
    if config.get("output_path"):
        return Path(config["output_path"])
    return Path("trapmc-runs") / config["subcommand"]


def run_experiment(config: dict):
    """Execute a validated config; returns (manifest dict, summary lines)."""
    outdir = resolve_output_dir(config)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    start = time.perf_counter()
    try:
        diagnostics, lines = _RUNNERS[config["subcommand"]](config, outdir, written)
        manifest = {
            "subcommand": config["subcommand"],
            "config": config,
            "package_version": __version__,
            "python_version": platform.python_version(),
            "numpy_version": np.__version__,
            "scipy_version": scipy.__version__,
            "backend": backend.BACKEND,
            "wall_time_s": time.perf_counter() - start,
            "diagnostics": diagnostics,
            "outputs": [p.name for p in written],
        }
        manifest_path = outdir / "manifest.json"
        manifest_path.write_text(json.dumps(manifest, indent=2) + "\n")
    except Exception:
        for p in written:
            try:
                p.unlink()
            except OSError:
                pass
        raise
    return manifest, lines


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trapmc",
        description="Monte Carlo experiments on trap models and K processes",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text, *specs):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--config", help="JSON config file (flags override it)")
        p.add_argument("--output", dest="output_path", help="output directory")
        for flag, kwargs in specs:
            p.add_argument(flag, **kwargs)
        return p

    f = float
    num = lambda dest: (f"--{dest.replace('_', '-')}", {"dest": dest, "type": f})
    integer = lambda dest: (f"--{dest.replace('_', '-')}", {"dest": dest, "type": int})

    add("gen-env", "sample a trap landscape or a stable jump field",
        num("alpha"), num("a"), integer("n"), integer("max_jumps"),
        num("window"), num("scale"), integer("master_seed"))
    add("sim-trap", "simulate finite-n depth paths",
        num("alpha"), num("a"), integer("n"), num("horizon"),
        integer("replicates"), integer("master_seed"), integer("workers"))
    add("sim-k", "simulate truncated K-process paths",
        num("alpha"), num("a"), integer("max_jumps"), num("window"),
        num("horizon"), integer("replicates"), integer("master_seed"),
        integer("workers"))
    add("sim-zhat", "simulate small-time limit paths",
        num("alpha"), num("a"), integer("max_jumps"), num("horizon"),
        integer("replicates"), integer("master_seed"), integer("workers"))
    add("laplace", "evaluate empirical/rescaled/limit Laplace exponents",
        num("alpha"), num("a"), integer("n"), integer("max_jumps"),
        num("window"), num("epsilon"), integer("master_seed"),
        ("--lambdas", {"dest": "lambdas", "type": str,
                       "help": "comma-separated increasing grid"}))
    add("aging", "estimate Pi/R/Q over a (t, s) grid",
        num("alpha"), num("a"), integer("max_jumps"), num("epsilon"),
        num("window"), integer("replicates"), integer("master_seed"),
        integer("workers"),
        ("--process", {"dest": "process", "choices": ["zhat", "k"]}),
        ("--convention", {"dest": "convention",
                          "choices": ["transition", "value-change"]}),
        ("--grid", {"dest": "t_s_grid", "type": str,
                    "help": "comma-separated t:s pairs, e.g. 1:1,2:1"}))
    add("arcsine", "evaluate the exact arcsine-law oracle",
        num("alpha_hat"),
        ("--grid", {"dest": "t_s_grid", "type": str,
                    "help": "comma-separated t:s pairs"}),
        integer("master_seed"))
    add("selfsim", "KS check of index-1 self-similarity of the limit process",
        num("alpha"), num("a"), integer("max_jumps"), integer("replicates"),
        integer("master_seed"), integer("workers"))
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    ns = parser.parse_args(argv)
    flags = {
        k: v
        for k, v in vars(ns).items()
        if k not in ("subcommand", "config") and v is not None
    }
    try:
        config = parse_config(ns.subcommand, ns.config, flags)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        _, lines = run_experiment(config)
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {exc}", file=sys.stderr)
        return 3
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
