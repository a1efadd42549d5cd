"""Command-line front door.

Subcommands:

``run``
    Execute one experiment (named via ``--experiment`` or a config file via
    ``--config``) and write ``sim.csv``, ``oracle.csv``, ``analysis.csv``,
    event-record CSVs where the experiment produces them, and
    ``manifest.json`` into the output directory.
``list``
    Enumerate available experiments with their default parameter sets.
``oracle``
    Write the closed-form reference curve only.

Exit codes: 0 success, 2 configuration error, 3 runtime abort.
"""
from __future__ import annotations

import argparse
import datetime
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__, oracles
from .analysis import compare_to_oracle, fit_amplitude, fit_cosine, visibility
from .common import TWO_PI
from .config import ConfigError, parse_config
from .experiments import (
    EXPERIMENT_DEFAULTS,
    EXPERIMENT_NAMES,
    ExperimentConfig,
    ExperimentResult,
    config_as_dict,
    default_sweep,
    make_config,
    run_experiment,
)
from .kernels import BACKEND
from .records import write_curve_csv, write_event_records, write_manifest


def oracle_columns(cfg: ExperimentConfig, values: np.ndarray) -> dict[str, np.ndarray]:
    """Closed-form reference columns matching the simulation CSV columns."""
    exp = cfg.experiment
    if exp == "indivisibility":
        return {"coincidences": np.zeros_like(values)}
    if exp == "interface":
        theta = np.radians(values)
        return {
            f"refl_{pol}": oracles.fresnel_oracle(theta, cfg.n1, cfg.n2, pol)
            for pol in ("s", "mix", "p")
        }
    if exp == "plate":
        theta = math.radians(cfg.theta_deg)
        return {
            f"refl_{pol}": oracles.plate_oracle(
                theta, cfg.n1, cfg.n2, cfg.n3, values / cfg.n2, pol
            )
            for pol in ("s", "mix", "p")
        }
    if exp == "two_beam":
        return {"relative_intensity": oracles.two_beam_oracle(values, cfg.slit_width, cfg.slit_distance)}
    if exp == "mzi":
        p0 = oracles.mzi_oracle(TWO_PI * values, 0.0)[0]
        return {f"d0_{pol}": p0 for pol in ("s", "mix", "p")}
    if exp == "wheeler":
        i0_on, _ = oracles.wheeler_network_oracle(cfg.theta_eom_on, values)
        return {"d0_choice0": np.full_like(values, 0.5), "d0_choice1": i0_on}
    if exp == "eraser":
        i0, i1 = oracles.eraser_network_oracle(cfg.theta0, cfg.theta1, cfg.theta2, values)
        p0, p1 = oracles.eraser_oracle(cfg.theta0, cfg.theta1, cfg.theta2, values)
        return {
            "i0": i0,
            "i1": i1,
            "d0": i0 / (i0 + i1),
            "d1": i1 / (i0 + i1),
            "i0_expansion": p0,
            "i1_expansion": p1,
        }
    if exp == "tunneling":
        out = {}
        for pol in ("s", "mix", "p"):
            out[f"trans_{pol}"] = oracles.ftir_oracle(values, cfg.gap_n, cfg.gap_theta, pol)
        return out
    if exp == "eprb":
        e1, e2, e12, rho = oracles.eprb_oracle(cfg.state, values, cfg.alpha2, cfg.eta1, cfg.eta2)
        out = {"e1": np.broadcast_to(e1, values.shape).copy(),
               "e2": np.broadcast_to(e2, values.shape).copy(),
               "e12_w": np.broadcast_to(e12, values.shape).copy(),
               "rho12": np.broadcast_to(rho, values.shape).copy()}
        if cfg.state == "singlet":
            # Without windowing the event model reaches half the windowed amplitude.
            out["e12_full"] = 0.5 * e12
        return out
    if exp == "hbt":
        src_y = np.array([cfg.hbt_d / 2.0, -cfg.hbt_d / 2.0])
        fdT = np.empty_like(values)
        for i, y0 in enumerate(values):
            det_y = np.array([y0, 0.0])
            tof = np.sqrt(cfg.hbt_x**2 + (src_y[:, None] - det_y[None, :]) ** 2)
            fdT[i] = (tof[0, 0] - tof[1, 0]) - (tof[0, 1] - tof[1, 1])
        n = cfg.events_per_point
        singles, coinc, _ = oracles.hbt_oracle(fdT, n)
        return {
            "fdT": fdT,
            "counts0": np.full_like(values, singles),
            "counts1": np.full_like(values, singles),
            "coinc": coinc,
        }
    raise ValueError(exp)


def analysis_rows(cfg: ExperimentConfig, result: ExperimentResult, oracle: dict) -> list[tuple[str, float]]:
    """Summary metrics comparing the run against its reference curves."""
    rows: list[tuple[str, float]] = []
    exp = cfg.experiment
    if exp == "two_beam":
        sim = result.columns["clicks"]
        model = oracle["relative_intensity"]
        amp = fit_amplitude(result.sweep_values, sim, lambda t: oracles.two_beam_oracle(t, cfg.slit_width, cfg.slit_distance))
        resid = sim - amp * model
        rows.append(("fitted_amplitude", amp))
        rows.append(("relative_rms", float(np.sqrt(np.mean(resid**2)) / amp)))
        rows.append(("click_ratio", result.meta["click_ratio"]))
        return rows
    if exp == "hbt":
        fdT = result.columns["fdT"]
        for name in ("counts0", "counts1"):
            _, b, _ = fit_cosine(fdT, result.columns[name])
            rows.append((f"{name}_modulation", b))
        for name in ("coinc", "coinc_delay"):
            a, b, rms = fit_cosine(fdT, result.columns[name])
            rows.append((f"{name}_visibility", abs(b)))
            rows.append((f"{name}_fit_rms", rms))
        return rows
    if exp == "eprb":
        amp_w = fit_amplitude(result.sweep_values, result.columns["e12_w"],
                              lambda t: -np.cos(2.0 * (t - cfg.alpha2)))
        amp_full = fit_amplitude(result.sweep_values, result.columns["e12_full"],
                                 lambda t: -np.cos(2.0 * (t - cfg.alpha2)))
        rows.append(("e12_w_fitted_amplitude", amp_w))
        rows.append(("e12_full_fitted_amplitude", amp_full))
        rows.append(("max_abs_rho12_w", float(np.max(np.abs(result.columns["rho12_w"])))))
        return rows
    for name, ref in oracle.items():
        if name not in result.columns:
            continue
        max_dev, rms, _ = compare_to_oracle(result.columns[name], ref)
        rows.append((f"{name}_max_dev", max_dev))
        rows.append((f"{name}_rms", rms))
        if exp in ("mzi", "wheeler", "eraser") and not name.endswith("_expansion"):
            rows.append((f"{name}_visibility", visibility(result.columns[name])))
    return rows


def _write_outputs(cfg: ExperimentConfig, result: ExperimentResult, out_dir: Path) -> dict:
    out_dir.mkdir(parents=True, exist_ok=True)
    paths: dict[str, str] = {}

    sim_cols = {result.sweep_name: result.sweep_values}
    sim_cols.update(result.columns)
    sim_cols["emissions"] = result.emissions
    sim_path = out_dir / "sim.csv"
    write_curve_csv(sim_path, list(sim_cols), list(sim_cols.values()))
    paths["sim"] = str(sim_path)

    oracle = oracle_columns(cfg, result.sweep_values)
    ora_cols = {result.sweep_name: result.sweep_values, **oracle}
    ora_path = out_dir / "oracle.csv"
    write_curve_csv(ora_path, list(ora_cols), list(ora_cols.values()))
    paths["oracle"] = str(ora_path)

    ana_path = out_dir / "analysis.csv"
    rows = analysis_rows(cfg, result, oracle)
    write_curve_csv(
        ana_path,
        ["metric", "value"],
        [np.array([r[0] for r in rows], dtype=object), np.array([r[1] for r in rows])],
    )
    paths["analysis"] = str(ana_path)

    for name, records in result.records.items():
        rec_path = out_dir / f"events_{name}.csv"
        write_event_records(rec_path, records)
        paths[f"events_{name}"] = str(rec_path)
    return paths


def _build_config(args) -> ExperimentConfig:
    if args.config:
        cfg = parse_config(args.config)
        if args.experiment and args.experiment != cfg.experiment:
            raise ConfigError(
                f"--experiment {args.experiment} conflicts with config [{cfg.experiment}]"
            )
    elif args.experiment:
        cfg = make_config(args.experiment)
    else:
        raise ConfigError("one of --experiment or --config is required")
    overrides = {}
    seed = args.seed if args.seed is not None else os.environ.get("EBCM_SEED")
    if seed is not None:
        overrides["seed"] = int(seed)
    if args.events is not None:
        overrides["events_per_point"] = args.events
    if args.gamma is not None:
        overrides["gamma"] = args.gamma
    if args.gamma_hat is not None:
        overrides["gamma_hat"] = args.gamma_hat
    if getattr(args, "state", None):
        overrides["state"] = args.state
    if overrides:
        kw = config_as_dict(cfg)
        kw.pop("experiment")
        kw.update(overrides)
        cfg = ExperimentConfig(experiment=cfg.experiment, **kw)
    return cfg


def _cmd_run(args) -> int:
    cfg = _build_config(args)
    out_dir = Path(args.out)
    start = datetime.datetime.now(datetime.timezone.utc).isoformat()
    result = run_experiment(cfg, max_workers=args.threads)
    paths = _write_outputs(cfg, result, out_dir)
    end = datetime.datetime.now(datetime.timezone.utc).isoformat()
    manifest = {
        "config": config_as_dict(cfg),
        "rng": "numpy PCG64 (default_rng), stream seed = seed XOR point index",
        "seed": cfg.seed,
        "backend": BACKEND,
        "started": start,
        "finished": end,
        "emissions_per_point": [int(v) for v in result.emissions],
        "total_emissions": int(result.emissions.sum()),
        "outputs": paths,
        "version": __version__,
    }
    man_path = out_dir / "manifest.json"
    write_manifest(man_path, manifest)
    print(f"wrote {man_path}")
    return 0


def _cmd_oracle(args) -> int:
    cfg = _build_config(args)
    sweep_name, values = default_sweep(cfg)
    oracle = oracle_columns(cfg, np.asarray(values, dtype=float))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    cols = {sweep_name: np.asarray(values, dtype=float), **oracle}
    path = out_dir / "oracle.csv"
    write_curve_csv(path, list(cols), list(cols.values()))
    print(f"wrote {path}")
    return 0


def _cmd_list(_args) -> int:
    for name in EXPERIMENT_NAMES:
        cfg = make_config(name)
        sweep_name, values = default_sweep(cfg)
        overrides = EXPERIMENT_DEFAULTS[name]
        extra = ", ".join(f"{k}={v}" for k, v in overrides.items())
        print(
            f"{name:15s} sweep={sweep_name} ({len(values)} points), "
            f"events/point={cfg.events_per_point}, gamma={cfg.gamma}"
            + (f", {extra}" if extra else "")
        )
    return 0


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--experiment", choices=EXPERIMENT_NAMES)
    p.add_argument("--config", help="path to a [experiment] key=value config file")
    p.add_argument("--seed", type=int, default=None, help="overrides EBCM_SEED")
    p.add_argument("--events", type=int, default=None, help="events per sweep point")
    p.add_argument("--gamma", type=float, default=None)
    p.add_argument("--gamma-hat", dest="gamma_hat", type=float, default=None)
    p.add_argument("--out", default="out", help="output directory")
    p.add_argument("--state", choices=("singlet", "product"), default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ebcm", description="Event-based corpuscular optics simulator"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p_run = sub.add_parser("run", help="run an experiment and write CSV outputs")
    _add_common(p_run)
    p_run.add_argument("--threads", type=int, default=1, help="sweep-point worker count")
    p_run.set_defaults(func=_cmd_run)
    p_or = sub.add_parser("oracle", help="write the closed-form reference curve only")
    _add_common(p_or)
    p_or.set_defaults(func=_cmd_oracle)
    p_ls = sub.add_parser("list", help="enumerate experiments and defaults")
    p_ls.set_defaults(func=_cmd_list)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"runtime error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
