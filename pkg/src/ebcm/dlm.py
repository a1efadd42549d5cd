"""Deterministic learning machines.

Two small adaptive estimators underlie every processing unit in the event
engine: a scalar machine that tracks a number in [0, 1] from a stream of
inputs while emitting one output bit per input, and a vector machine that
exponentially averages a stream of unit vectors.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad

from . import kernels


@dataclass
class ScalarDlm:
    """Adaptive scalar estimator emitting a bit stream whose mean tracks the input.

    In fast mode the learning parameter shrinks adaptively so the estimate
    responds to large input jumps within a few events.
    """

    x: float = 0.5
    gamma: float = 0.99
    fast_mode: bool = False

    def __post_init__(self) -> None:
        if not 0.0 <= self.x <= 1.0:
            raise ValueError("initial estimate must lie in [0, 1]")
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError("learning parameter must lie in [0, 1)")

    def step(self, y: float) -> int:
        """Process one input, update the estimate, return the output bit."""
        if not 0.0 <= y <= 1.0:
            raise ValueError("input must lie in [0, 1]")
        g = self.gamma
        if self.fast_mode:
            g = min(1.0 - abs(self.x - y), g)
        lo = g * self.x
        hi = lo + (1.0 - g)
        # Move to whichever candidate state is closest to the input.
        delta = 0 if abs(lo - y) <= abs(hi - y) else 1
        self.x = hi if delta else lo
        return delta

    def run(self, ys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Process a whole input array; returns (state trajectory, output bits)."""
        ys = np.ascontiguousarray(ys, dtype=np.float64)
        if ys.size and (ys.min() < 0.0 or ys.max() > 1.0):
            raise ValueError("inputs must lie in [0, 1]")
        xs, deltas = kernels.scalar_dlm_run(self.x, self.gamma, self.fast_mode, ys)
        if xs.size:
            self.x = float(xs[-1])
        return xs, deltas


@dataclass
class VectorDlm:
    """Exponential moving average of a stream of unit vectors.

    Fed one-hot vectors it estimates arrival frequencies per component; its
    state can never leave the unit ball when inputs are unit vectors.
    """

    x: np.ndarray
    gamma: float = 0.99

    def __post_init__(self) -> None:
        self.x = np.asarray(self.x, dtype=np.float64).copy()
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError("learning parameter must lie in [0, 1)")

    def step(self, v: np.ndarray) -> np.ndarray:
        v = np.asarray(v, dtype=np.float64)
        if v.shape != self.x.shape:
            raise ValueError("dimension mismatch")
        if abs(np.linalg.norm(v) - 1.0) > 1e-9:
            raise ValueError("input must be a unit vector")
        self.x = self.gamma * self.x + (1.0 - self.gamma) * v
        return self.x

    def run(self, vs: np.ndarray) -> np.ndarray:
        """Process a (n, d) array of unit vectors; returns the (n, d) trajectory."""
        vs = np.ascontiguousarray(vs, dtype=np.float64)
        if vs.ndim != 2 or vs.shape[1] != self.x.shape[0]:
            raise ValueError("dimension mismatch")
        norms = np.linalg.norm(vs, axis=1)
        if vs.shape[0] and np.max(np.abs(norms - 1.0)) > 1e-9:
            raise ValueError("inputs must be unit vectors")
        traj = kernels.vector_dlm_run(self.x, self.gamma, vs)
        if traj.shape[0]:
            self.x = traj[-1].copy()
        return traj


def dlm_ode_oracle(x0, v, Gamma: float, t: float) -> np.ndarray:
    """Continuous-time reference solution for the vector machine.

    Evaluates  exp(-t*Gamma)*x0 + Gamma * int_0^t exp(-u*Gamma) v(t-u) du
    by numerical quadrature.  The discrete rule with gamma = 1/(1 + tau*Gamma)
    converges to this as the step tau -> 0; used only as a test reference.
    """
    if Gamma <= 0.0:
        raise ValueError("Gamma must be positive")
    if t < 0.0:
        raise ValueError("t must be nonnegative")
    x0 = np.atleast_1d(np.asarray(x0, dtype=np.float64))
    out = np.empty_like(x0)
    decay = np.exp(-t * Gamma)
    for i in range(x0.size):
        val, _ = quad(
            lambda u, i=i: np.exp(-u * Gamma) * np.atleast_1d(v(t - u))[i],
            0.0,
            t,
            limit=400,
        )
        out[i] = decay * x0[i] + Gamma * val
    return out
