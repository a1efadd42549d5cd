"""Offline statistics on detection-event records.

Coincidence windowing, single- and two-particle averages, fringe visibility,
cosine fitting, and simulation-vs-reference comparison metrics.  All
functions are pure; record streams are numpy structured arrays with fields
(event_index, outcome, time_tag, setting, sweep_value).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .common import TWO_PI

RECORD_DTYPE = np.dtype(
    [
        ("event_index", np.int64),
        ("outcome", np.float64),
        ("time_tag", np.float64),
        ("setting", np.float64),
        ("sweep_value", np.float64),
    ]
)


def make_records(event_index, outcome, time_tag, setting, sweep_value) -> np.ndarray:
    out = np.empty(len(event_index), dtype=RECORD_DTYPE)
    out["event_index"] = event_index
    out["outcome"] = outcome
    out["time_tag"] = time_tag
    out["setting"] = setting
    out["sweep_value"] = sweep_value
    return out


@dataclass
class CoincidenceTable:
    """Per-setting-pair coincidence counts; key (setting1, setting2) -> 2x2 array.

    counts[key][i, j]: i/j = 0 for outcome +1, 1 for outcome -1.
    """

    window: float
    counts: dict = field(default_factory=dict)

    def total(self, key) -> int:
        return int(self.counts[key].sum())


def count_coincidences(records1: np.ndarray, records2: np.ndarray, window: float) -> CoincidenceTable:
    """Windowed pair counting: event n of stream 1 against event n of stream 2.

    A pair contributes when |t1 - t2| <= window (ties count, per the global
    step convention).  window must be positive; numpy.inf accepts all pairs.
    """
    if len(records1) != len(records2):
        raise ValueError("record streams must have equal length")
    if not window > 0.0:
        raise ValueError("window must be positive")
    table = CoincidenceTable(window=window)
    dt = np.abs(records1["time_tag"] - records2["time_tag"])
    ok = window - dt >= 0.0
    i_idx = (records1["outcome"] < 0).astype(np.int64)
    j_idx = (records2["outcome"] < 0).astype(np.int64)
    keys = np.stack([records1["setting"], records2["setting"]], axis=1)
    for key in {tuple(k) for k in keys}:
        sel = ok & (records1["setting"] == key[0]) & (records2["setting"] == key[1])
        mat = np.zeros((2, 2), dtype=np.int64)
        np.add.at(mat, (i_idx[sel], j_idx[sel]), 1)
        table.counts[key] = mat
    return table


def _cell_values():
    # outcome values by table index
    return np.array([1.0, -1.0])


def single_particle_averages(mat: np.ndarray) -> tuple[float, float]:
    """Coincidence-normalized single-side averages (E1, E2) from one 2x2 cell."""
    total = mat.sum()
    if total == 0:
        raise ValueError("empty coincidence table")
    v = _cell_values()
    e1 = float((v[:, None] * mat).sum() / total)
    e2 = float((v[None, :] * mat).sum() / total)
    return e1, e2


def correlation(mat: np.ndarray) -> tuple[float, float]:
    """(E12, rho12) from one 2x2 coincidence cell; rho12 = E12 - E1*E2."""
    total = mat.sum()
    if total == 0:
        raise ValueError("empty coincidence table")
    e12 = float((mat[0, 0] + mat[1, 1] - mat[0, 1] - mat[1, 0]) / total)
    e1, e2 = single_particle_averages(mat)
    return e12, e12 - e1 * e2


def visibility(curve) -> float:
    """(max - min) / (max + min) of a nonnegative fringe curve."""
    curve = np.asarray(curve, dtype=float)
    hi, lo = float(np.max(curve)), float(np.min(curve))
    if hi + lo == 0.0:
        return 0.0
    return (hi - lo) / (hi + lo)


def fit_cosine(xs, ys) -> tuple[float, float, float]:
    """Least-squares fit of a * (1 + b * cos(2*pi*x)); returns (a, b, rms)."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    basis = np.stack([np.ones_like(xs), np.cos(TWO_PI * xs)], axis=1)
    coef, *_ = np.linalg.lstsq(basis, ys, rcond=None)
    a = float(coef[0])
    b = float(coef[1] / coef[0]) if coef[0] != 0.0 else 0.0
    resid = ys - basis @ coef
    rms = float(math.sqrt(np.mean(resid**2)))
    return a, b, rms


def fit_amplitude(xs, ys, model) -> float:
    """Least-squares amplitude A minimizing ||ys - A*model(xs)||."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    m = np.asarray(model(xs), dtype=float)
    return float(np.dot(m, ys) / np.dot(m, m))


def compare_to_oracle(sim_curve, oracle_curve, n_events=None):
    """Deviation metrics: (max_abs_dev, rms, z_scores).

    z-scores use binomial standard errors sqrt(p(1-p)/n) from the per-point
    event counts when given (zero where undefined).
    """
    sim = np.asarray(sim_curve, dtype=float)
    ora = np.asarray(oracle_curve, dtype=float)
    if sim.shape != ora.shape:
        raise ValueError("curves must have equal shape")
    dev = sim - ora
    max_abs = float(np.max(np.abs(dev))) if dev.size else 0.0
    rms = float(np.sqrt(np.mean(dev**2))) if dev.size else 0.0
    if n_events is None:
        z = np.zeros_like(dev)
    else:
        n = np.asarray(n_events, dtype=float)
        sigma = np.sqrt(np.clip(ora * (1.0 - ora), 0.0, None) / np.maximum(n, 1.0))
        z = np.where(sigma > 0, dev / np.where(sigma > 0, sigma, 1.0), 0.0)
    return max_abs, rms, z
