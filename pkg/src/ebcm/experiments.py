"""Experiment networks and their one-messenger-at-a-time event loops.

Each experiment wires processing units into a network, streams messengers
through it one at a time (enforced inside the kernels), and reports detector
statistics per sweep point.  Sweep points are independent: point i uses RNG
stream seed XOR i, so serial and parallel execution produce identical output.
With reset_per_point disabled, unit/detector learning state instead carries
over from point to point (serial execution only).

All RNG draws for a point are generated up front, in a fixed documented
order, as uniform arrays consumed by the kernels.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict

import numpy as np

from . import kernels
from .common import TWO_PI
from .analysis import correlation, make_records, single_particle_averages
from .messaging import Message
from .units import (
    make_bs_unit,
    make_gap_unit,
    make_interface_unit,
    make_pbs_unit,
    snell_refract,
    waveplate_matrix,
)

EXPERIMENT_NAMES = (
    "indivisibility",
    "interface",
    "plate",
    "two_beam",
    "mzi",
    "wheeler",
    "eraser",
    "tunneling",
    "eprb",
    "hbt",
)


@dataclass
class ExperimentConfig:
    experiment: str
    events_per_point: int = 10_000
    gamma: float = 0.99
    gamma_hat: float = 0.99
    n_ports: int = 1
    seed: int = 0
    sweep_values: tuple = ()
    reset_per_point: bool = True
    # interface / thin film
    n1: float = 1.0
    n2: float = 1.52
    n3: float = 1.5
    theta_deg: float = 0.0
    xi: float = 0.0
    # two-beam geometry (units c/f)
    slit_width: float = 1.0
    slit_distance: float = 5.0
    screen_radius: float = 100.0
    n_detectors: int = 181
    # delayed choice / tagged interferometer
    theta_eom_on: float = math.pi / 8
    theta0: float = math.pi / 3
    theta1: float = math.pi / 4
    theta2: float = math.pi / 8
    # tunneling
    gap_n: float = 1.52
    gap_theta: float = math.pi / 4
    # paired-particle correlation runs
    state: str = "singlet"
    t_eprb: float = 1000.0
    window: float = 1.0
    tag_power: int = 4
    eta1: float = 0.0
    eta2: float = math.pi / 2
    alpha2: float = 0.0
    # intensity interferometry
    refresh_period: int = 40
    hbt_d: float = 2000.0
    hbt_x: float = 1.0e5
    t_max: float = 2000.0
    delay_h: int = 8
    delay_window: float = 2.0

    def __post_init__(self) -> None:
        if self.experiment not in EXPERIMENT_NAMES:
            raise ValueError(f"unknown experiment {self.experiment!r}")
        if self.events_per_point < 1:
            raise ValueError("events_per_point must be >= 1")
        for name in ("gamma", "gamma_hat"):
            v = getattr(self, name)
            if not 0.0 <= v < 1.0:
                raise ValueError(f"{name} must lie in [0, 1)")
        if self.window <= 0.0:
            raise ValueError("window must be positive")
        self.sweep_values = tuple(float(v) for v in self.sweep_values)


#: Per-experiment overrides applied on top of the dataclass defaults.
EXPERIMENT_DEFAULTS: dict[str, dict] = {
    "indivisibility": {"events_per_point": 1_000_000},
    "interface": {},
    "plate": {"n2": 3.0, "n3": 1.5},
    "two_beam": {"n_ports": 500, "xi": 0.0},
    "mzi": {},
    "wheeler": {"events_per_point": 2600},
    "eraser": {},
    "tunneling": {},
    "eprb": {"events_per_point": 300_000},
    "hbt": {"events_per_point": 200_000},
}


def make_config(experiment: str, **overrides) -> ExperimentConfig:
    """Config with the per-experiment default parameter set, then overrides."""
    if experiment not in EXPERIMENT_DEFAULTS:
        raise ValueError(f"unknown experiment {experiment!r}")
    kw = dict(EXPERIMENT_DEFAULTS[experiment])
    kw.update(overrides)
    return ExperimentConfig(experiment=experiment, **kw)


def default_sweep(cfg: ExperimentConfig) -> tuple[str, np.ndarray]:
    """Sweep variable name and value grid (config override or per-experiment default)."""
    values = np.array(cfg.sweep_values, dtype=float) if cfg.sweep_values else None
    if cfg.experiment == "indivisibility":
        return "run", values if values is not None else np.array([0.0])
    if cfg.experiment == "interface":
        default = np.append(np.arange(0.0, 86.0, 5.0), 89.0)
        return "theta_deg", values if values is not None else default
    if cfg.experiment == "plate":
        return "optical_thickness", values if values is not None else np.linspace(0.0, 1.0, 41)
    if cfg.experiment == "two_beam":
        return "theta", np.linspace(-math.pi / 2, math.pi / 2, cfg.n_detectors)
    if cfg.experiment in ("mzi", "wheeler", "eraser"):
        return "fdT", values if values is not None else np.linspace(0.0, 1.0, 21)
    if cfg.experiment == "tunneling":
        return "gap_width", values if values is not None else np.linspace(0.0, 5.0, 26)
    if cfg.experiment == "eprb":
        return "theta", values if values is not None else np.linspace(0.0, TWO_PI, 33)
    if cfg.experiment == "hbt":
        if values is not None:
            return "y0", values
        # Detector-0 positions chosen so the path-difference variable f*dT
        # spans [0, 2] (detector 1 fixed at y = 0).
        return "y0", np.linspace(0.0, -2.0 * cfg.hbt_x / cfg.hbt_d, 21)
    raise ValueError(cfg.experiment)


@dataclass
class ExperimentResult:
    experiment: str
    sweep_name: str
    sweep_values: np.ndarray
    columns: dict[str, np.ndarray]
    emissions: np.ndarray
    records: dict[str, np.ndarray] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)


def _point_rng(cfg: ExperimentConfig, idx: int) -> np.random.Generator:
    return np.random.default_rng(int(cfg.seed) ^ int(idx))


def _msg_array(xi: float) -> np.ndarray:
    return Message.from_angles(xi).as_array()


def _carry_in(unit, carry, name):
    """Restore (x, regs) learning state saved under `name`, if present."""
    if carry and name in carry:
        x, regs = carry[name]
        unit.x[:] = x
        unit.regs[:] = regs
    return unit


def _carry_out(state: dict, name, unit) -> None:
    state[name] = (unit.x.copy(), unit.regs.copy())


def _stream_fixed(unit, msg, rs):
    """Stream identical messengers into port 0 of one unit; returns out_ports."""
    n = rs.shape[0]
    ports = np.zeros(n, dtype=np.uint8)
    msgs = np.ascontiguousarray(np.broadcast_to(msg, (n, 2)), dtype=np.complex128)
    out_ports, _ = kernels.unit_stream(
        unit.x, unit.regs, unit.tp, unit.ts, unit.gamma, ports, msgs, rs
    )
    return out_ports


# ---------------------------------------------------------------------------
# Per-point simulations

_POLARIZATIONS = (("s", 0.0), ("mix", math.pi / 4), ("p", math.pi / 2))


def _point_indivisibility(cfg, idx, value, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    unit = _carry_in(make_bs_unit(cfg.gamma), carry, "bs")
    rs = rng.random(n)
    out_ports = _stream_fixed(unit, _msg_array(math.pi / 4), rs)
    n1 = int(out_ports.sum())
    n0 = n - n1
    state: dict = {}
    _carry_out(state, "bs", unit)
    # One messenger, one detector: a double click cannot occur by construction.
    return {
        "reflected": n0,
        "transmitted": n1,
        "coincidences": 0,
        "emissions": n,
        "_state": state,
    }


def _point_interface(cfg, idx, theta_deg, carry=None):
    rng = _point_rng(cfg, idx)
    theta = math.radians(theta_deg)
    n = cfg.events_per_point
    out: dict = {"emissions": 3 * n}
    state: dict = {}
    for name, xi in _POLARIZATIONS:
        unit = _carry_in(make_interface_unit(theta, cfg.n1, cfg.n2, cfg.gamma), carry, name)
        rs = rng.random(n)
        out_ports = _stream_fixed(unit, _msg_array(xi), rs)
        out[f"refl_{name}"] = 1.0 - out_ports.mean()
        _carry_out(state, name, unit)
    out["_state"] = state
    return out


def _point_plate(cfg, idx, opt_thickness, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    theta = math.radians(cfg.theta_deg)
    h = opt_thickness / cfg.n2
    theta2 = snell_refract(theta, cfg.n1, cfg.n2)
    if theta2 is None:
        raise ValueError("film interior beyond critical angle; use the gap unit")
    phase = complex(np.exp(1j * TWO_PI * cfg.n2 * h * math.cos(theta2)))
    out: dict = {"emissions": 3 * n}
    state: dict = {}
    for name, xi in _POLARIZATIONS:
        ua = _carry_in(make_interface_unit(theta, cfg.n1, cfg.n2, cfg.gamma), carry, f"a_{name}")
        ub = _carry_in(make_interface_unit(theta2, cfg.n2, cfg.n3, cfg.gamma), carry, f"b_{name}")
        rs = rng.random(64 * n)
        n_refl, n_trans, _ = kernels.plate_stream(
            ua.x, ua.regs, ua.tp, ua.ts, ub.x, ub.regs, ub.tp, ub.ts,
            cfg.gamma, _msg_array(xi), phase, n, rs, 10_000,
        )
        assert n_refl + n_trans == n
        out[f"refl_{name}"] = n_refl / n
        _carry_out(state, f"a_{name}", ua)
        _carry_out(state, f"b_{name}", ub)
    out["_state"] = state
    return out


def _point_mzi(cfg, idx, fdT, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    ph0 = complex(np.exp(1j * TWO_PI * fdT))
    ph1 = 1.0 + 0.0j
    out: dict = {"emissions": 3 * n}
    state: dict = {}
    for name, xi in _POLARIZATIONS:
        bs1 = _carry_in(make_bs_unit(cfg.gamma), carry, f"bs1_{name}")
        bs2 = _carry_in(make_bs_unit(cfg.gamma), carry, f"bs2_{name}")
        rs = rng.random((n, 2))
        n0, n1 = kernels.mzi_stream(
            bs1.x, bs1.regs, bs2.x, bs2.regs, bs1.tp, bs1.ts,
            cfg.gamma, _msg_array(xi), ph0, ph1, rs,
        )
        assert n0 + n1 == n
        out[f"d0_{name}"] = n0 / n
        _carry_out(state, f"bs1_{name}", bs1)
        _carry_out(state, f"bs2_{name}", bs2)
    out["_state"] = state
    return out


def _point_wheeler(cfg, idx, fdT, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    pbs1 = _carry_in(make_pbs_unit(cfg.gamma), carry, "pbs1")
    pbs2 = _carry_in(make_pbs_unit(cfg.gamma), carry, "pbs2")
    wp = _carry_in(make_pbs_unit(cfg.gamma), carry, "wp")
    m_off = np.ascontiguousarray(waveplate_matrix("hwp", 0.0))
    m_on = np.ascontiguousarray(waveplate_matrix("hwp", cfg.theta_eom_on))
    rs = rng.random((n, 4))
    ph1 = complex(np.exp(1j * TWO_PI * fdT))
    choice, det = kernels.wheeler_stream(
        pbs1.x, pbs1.regs, pbs2.x, pbs2.regs, wp.x, wp.regs,
        pbs1.tp, pbs1.ts, cfg.gamma, _msg_array(math.pi / 4),
        1.0 + 0.0j, ph1, m_off, m_on, rs,
    )
    out: dict = {"emissions": n, "lost": int((det < 0).sum())}
    for rn in (0, 1):
        sel = (choice == rn) & (det >= 0)
        total = int(sel.sum())
        out[f"n_choice{rn}"] = int((choice == rn).sum())
        out[f"d0_choice{rn}"] = float((det[sel] == 0).sum() / total) if total else float("nan")
    out["_rec_choice"] = choice.astype(np.float64)
    out["_rec_det"] = det.astype(np.float64)
    state: dict = {}
    for name, u in (("pbs1", pbs1), ("pbs2", pbs2), ("wp", wp)):
        _carry_out(state, name, u)
    out["_state"] = state
    return out


def _point_eraser(cfg, idx, fdT, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    bs1 = _carry_in(make_bs_unit(cfg.gamma), carry, "bs1")
    bs2 = _carry_in(make_bs_unit(cfg.gamma), carry, "bs2")
    wp = _carry_in(make_pbs_unit(cfg.gamma), carry, "wp")
    m_arm0 = np.ascontiguousarray(waveplate_matrix("hwp", cfg.theta0))
    m_out = np.ascontiguousarray(
        waveplate_matrix("hwp", cfg.theta1) @ waveplate_matrix("qwp", cfg.theta2)
    )
    rs = rng.random((n, 3))
    ph1 = complex(np.exp(1j * TWO_PI * fdT))
    n0, n1, lost = kernels.eraser_stream(
        bs1.x, bs1.regs, bs2.x, bs2.regs, wp.x, wp.regs,
        bs1.tp, wp.tp, wp.ts, cfg.gamma, _msg_array(0.0), ph1, m_arm0, m_out, rs,
    )
    detected = n0 + n1
    assert detected + lost == n
    state: dict = {}
    for name, u in (("bs1", bs1), ("bs2", bs2), ("wp", wp)):
        _carry_out(state, name, u)
    return {
        "emissions": n,
        "lost": lost,
        # Per-detected-event fractions (sum to 1) and absolute per-emission
        # intensities (the second mixer's unmonitored port makes these sum
        # below 1).
        "d0": n0 / detected if detected else float("nan"),
        "d1": n1 / detected if detected else float("nan"),
        "i0": n0 / n,
        "i1": n1 / n,
        "_state": state,
    }


def _point_tunneling(cfg, idx, w, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    out: dict = {"emissions": 3 * n, "coincidences": 0}
    state: dict = {}
    for name, xi in _POLARIZATIONS:
        unit = _carry_in(make_gap_unit(w, cfg.gap_n, cfg.gap_theta, cfg.gamma), carry, name)
        rs = rng.random(n)
        out_ports = _stream_fixed(unit, _msg_array(xi), rs)
        out[f"trans_{name}"] = float(out_ports.mean())
        _carry_out(state, name, unit)
    out["_state"] = state
    return out


def _point_eprb(cfg, idx, theta, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    alpha1, alpha2 = float(theta), cfg.alpha2
    # Draw order: source angles, station-1 split draw, station-2 split draw,
    # station-1 tag draw, station-2 tag draw.
    if cfg.state == "singlet":
        xi = rng.random(n) * TWO_PI
        pol1, pol2 = xi, xi + math.pi / 2
    elif cfg.state == "product":
        pol1 = np.full(n, cfg.eta1)
        pol2 = np.full(n, cfg.eta2)
    else:
        raise ValueError("state must be 'singlet' or 'product'")
    r1 = rng.random(n)
    r2 = rng.random(n)
    rt1 = rng.random(n)
    rt2 = rng.random(n)

    outcomes = []
    tags = []
    state: dict = {}
    for station, (pol, alpha, r, rt) in enumerate(
        ((pol1, alpha1, r1, rt1), (pol2, alpha2, r2, rt2))
    ):
        ang = pol - alpha
        msgs = np.empty((n, 2), dtype=np.complex128)
        msgs[:, 0] = np.sin(ang)
        msgs[:, 1] = np.cos(ang)
        pbs = _carry_in(make_pbs_unit(cfg.gamma), carry, f"pbs{station}")
        ports, _ = kernels.unit_stream(
            pbs.x, pbs.regs, pbs.tp, pbs.ts, cfg.gamma,
            np.zeros(n, dtype=np.uint8), msgs, np.ascontiguousarray(r),
        )
        outcomes.append(1.0 - 2.0 * ports.astype(np.float64))  # port 0 -> +1
        tags.append(rt * cfg.t_eprb * np.sin(2.0 * ang) ** (2 * cfg.tag_power))
        _carry_out(state, f"pbs{station}", pbs)

    dt = np.abs(tags[0] - tags[1])
    out: dict = {"emissions": 2 * n, "_state": state}
    for label, keep in (("w", cfg.window - dt >= 0.0), ("full", np.ones(n, dtype=bool))):
        x1, x2 = outcomes[0][keep], outcomes[1][keep]
        mat = np.zeros((2, 2), dtype=np.int64)
        np.add.at(mat, ((x1 < 0).astype(int), (x2 < 0).astype(int)), 1)
        e12, rho = correlation(mat)
        e1, e2 = single_particle_averages(mat)
        out[f"e12_{label}"] = e12
        out[f"rho12_{label}"] = rho
        out[f"e1_{label}"] = e1
        out[f"e2_{label}"] = e2
        out[f"n_coinc_{label}"] = int(mat.sum())
    idx_arr = np.arange(n, dtype=np.float64)
    out["_rec_station0"] = np.stack([idx_arr, outcomes[0], tags[0], np.full(n, alpha1)])
    out["_rec_station1"] = np.stack([idx_arr, outcomes[1], tags[1], np.full(n, alpha2)])
    return out


def _point_hbt(cfg, idx, y0, carry=None):
    rng = _point_rng(cfg, idx)
    n = cfg.events_per_point
    nf = cfg.refresh_period
    # Draw order: pair phases (one pair per refresh block), routing draws,
    # click draws, delay draws.
    blocks = (n + nf - 1) // nf
    psi = np.repeat(rng.random((blocks, 2)) * TWO_PI, nf, axis=0)[:n]
    route = (rng.random((n, 2)) >= 0.5).astype(np.uint8)
    r_click = rng.random((n, 2))
    r_delay = rng.random((n, 2))

    src_y = np.array([cfg.hbt_d / 2.0, -cfg.hbt_d / 2.0])
    det_y = np.array([float(y0), 0.0])
    tof = np.ascontiguousarray(np.sqrt(cfg.hbt_x**2 + (src_y[:, None] - det_y[None, :]) ** 2))
    fdT = (tof[0, 0] - tof[1, 0]) - (tof[0, 1] - tof[1, 1])
    phases = np.ascontiguousarray(np.exp(1j * (psi[:, :, None] + TWO_PI * tof[None, :, :])))

    x = np.full((2, 2), 0.5)
    regs = np.zeros((2, 2, 2), dtype=np.complex128)
    regs[:, :, 0] = 1.0
    if carry and "det" in carry:
        x[:], regs[:] = carry["det"]
    c0, c1, coinc, coinc_w = kernels.hbt_stream(
        x, regs, cfg.gamma_hat, phases, route, tof, r_click, r_delay,
        cfg.t_max, cfg.delay_h, cfg.delay_window,
    )
    return {
        "emissions": 2 * n,
        "fdT": fdT,
        "counts0": c0,
        "counts1": c1,
        "coinc": coinc,
        "coinc_delay": coinc_w,
        "_state": {"det": (x.copy(), regs.copy())},
    }


def _run_two_beam(cfg: ExperimentConfig) -> ExperimentResult:
    rng = _point_rng(cfg, 0)
    nd = cfg.n_detectors
    n = cfg.events_per_point * nd
    # Draw order: slit choice, in-slit offset, emission angle, click draw.
    u_slit = rng.random(n)
    u_off = rng.random(n)
    u_beta = rng.random(n)
    rs = rng.random(n)

    a, d, big_x = cfg.slit_width, cfg.slit_distance, cfg.screen_radius
    y = (u_off - 0.5) * a + np.where(u_slit < 0.5, d / 2.0, -d / 2.0)
    beta = (u_beta - 0.5) * math.pi
    cb = np.cos(beta)
    sin_theta = (y * cb * cb + np.sin(beta) * np.sqrt(big_x**2 - y * y * cb * cb)) / big_x
    theta = np.arcsin(np.clip(sin_theta, -1.0, 1.0))
    tof = np.sqrt(big_x**2 - 2.0 * y * big_x * sin_theta + y * y)

    pos = (theta + math.pi / 2) / math.pi * (nd - 1)
    det_idx = np.clip(np.rint(pos).astype(np.int64), 0, nd - 1)
    frac = np.clip(pos - det_idx + 0.5, 0.0, np.nextafter(1.0, 0.0))
    port_idx = np.minimum((frac * cfg.n_ports).astype(np.int64), cfg.n_ports - 1)

    ph = np.exp(1j * TWO_PI * tof)
    msgs = np.empty((n, 2), dtype=np.complex128)
    msgs[:, 0] = math.sin(cfg.xi) * ph
    msgs[:, 1] = math.cos(cfg.xi) * ph

    x = np.full((nd, cfg.n_ports), 1.0 / cfg.n_ports)
    regs = np.zeros((nd, cfg.n_ports, 2), dtype=np.complex128)
    regs[:, :, 0] = 1.0
    clicks = kernels.two_beam_stream(x, regs, cfg.gamma_hat, det_idx, port_idx, msgs, rs)

    arrivals = np.bincount(det_idx, minlength=nd).astype(np.float64)
    click_hist = np.bincount(det_idx[clicks == 1], minlength=nd).astype(np.float64)
    sweep_name, thetas = default_sweep(cfg)
    return ExperimentResult(
        experiment=cfg.experiment,
        sweep_name=sweep_name,
        sweep_values=thetas,
        columns={"arrivals": arrivals, "clicks": click_hist},
        emissions=arrivals,
        meta={
            "total_emissions": int(n),
            "total_clicks": int(clicks.sum()),
            "click_ratio": float(clicks.sum() / n),
        },
    )


_POINT_FUNCS = {
    "indivisibility": _point_indivisibility,
    "interface": _point_interface,
    "plate": _point_plate,
    "mzi": _point_mzi,
    "wheeler": _point_wheeler,
    "eraser": _point_eraser,
    "tunneling": _point_tunneling,
    "eprb": _point_eprb,
    "hbt": _point_hbt,
}


def _point_dispatch(args):
    cfg, idx, value = args
    return _POINT_FUNCS[cfg.experiment](cfg, idx, value)


def run_experiment(cfg: ExperimentConfig, max_workers: int = 1) -> ExperimentResult:
    """Run the configured experiment over its sweep; returns assembled results."""
    if cfg.experiment == "two_beam":
        return _run_two_beam(cfg)
    sweep_name, values = default_sweep(cfg)
    tasks = [(cfg, i, v) for i, v in enumerate(values)]
    if not cfg.reset_per_point:
        if max_workers > 1:
            raise ValueError("state carry-over requires serial execution")
        points = []
        carry = None
        for cfg_i, i, v in tasks:
            p = _POINT_FUNCS[cfg.experiment](cfg_i, i, v, carry=carry)
            carry = p.get("_state")
            points.append(p)
    elif max_workers > 1:
        with ProcessPoolExecutor(max_workers=max_workers) as ex:
            points = list(ex.map(_point_dispatch, tasks))
    else:
        points = [_point_dispatch(t) for t in tasks]

    columns: dict[str, np.ndarray] = {}
    records: dict[str, np.ndarray] = {}
    for key in points[0]:
        if key.startswith("_"):
            continue
        columns[key] = np.array([p[key] for p in points], dtype=float)
    emissions = columns.pop("emissions")

    if cfg.experiment == "wheeler":
        records["events"] = _assemble_wheeler_records(values, points)
    elif cfg.experiment == "eprb":
        for s in (0, 1):
            records[f"station{s}"] = _assemble_eprb_records(values, points, s)

    return ExperimentResult(
        experiment=cfg.experiment,
        sweep_name=sweep_name,
        sweep_values=np.asarray(values, dtype=float),
        columns=columns,
        emissions=emissions,
        records=records,
        meta={"total_emissions": int(emissions.sum())},
    )


def _assemble_wheeler_records(values, points):
    chunks = []
    for value, p in zip(values, points):
        n = p["_rec_det"].shape[0]
        chunks.append(
            make_records(np.arange(n), p["_rec_det"], np.zeros(n), p["_rec_choice"], np.full(n, value))
        )
    return np.concatenate(chunks)


def _assemble_eprb_records(values, points, station):
    chunks = []
    for value, p in zip(values, points):
        idx, outcome, tag, setting = p[f"_rec_station{station}"]
        chunks.append(make_records(idx, outcome, tag, setting, np.full(idx.shape[0], value)))
    return np.concatenate(chunks)


def config_as_dict(cfg: ExperimentConfig) -> dict:
    d = asdict(cfg)
    d["sweep_values"] = list(d["sweep_values"])
    return d
