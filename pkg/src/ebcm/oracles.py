"""Closed-form wave-theory predictions used as acceptance references.

Pure functions only — no event machinery, no shared state.  Each oracle is
implemented directly from its analytic formula, independently of the event
engine, so that agreement between simulation and oracle is meaningful.
All functions accept scalars or numpy arrays in their sweep argument.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .common import TWO_PI


@dataclass
class OracleCurve:
    sweep_name: str
    sweep: np.ndarray
    values: dict[str, np.ndarray]
    meta: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# Interferometer


def mzi_oracle(phi0, phi1):
    """Two-output interferometer probabilities from the phase difference."""
    half = 0.5 * (np.asarray(phi0, dtype=float) - np.asarray(phi1, dtype=float))
    p0 = np.sin(half) ** 2
    return p0, 1.0 - p0


def mzi_matrix_oracle(phi0, phi1):
    """Same probabilities via the explicit mixer-phase-mixer matrix product."""
    a = np.array([[1.0, 1j], [1j, 1.0]]) / np.sqrt(2.0)
    phi0 = np.atleast_1d(np.asarray(phi0, dtype=float))
    phi1 = np.atleast_1d(np.asarray(phi1, dtype=float))
    phi0, phi1 = np.broadcast_arrays(phi0, phi1)
    p0 = np.empty(phi0.shape)
    for idx in np.ndindex(phi0.shape):
        b = np.diag([np.exp(1j * phi0[idx]), np.exp(1j * phi1[idx])])
        amp = a @ b @ a @ np.array([1.0, 0.0])
        p0[idx] = abs(amp[0]) ** 2
    if p0.size == 1:
        return float(p0.ravel()[0]), float(1.0 - p0.ravel()[0])
    return p0, 1.0 - p0


# ---------------------------------------------------------------------------
# Interfaces and thin films


def _cos_in(n1, theta, n):
    """Cosine of the propagation angle in a medium of index n (complex if evanescent)."""
    s = n1 * np.sin(theta) / n
    return np.sqrt((1.0 - s * s).astype(np.complex128) if hasattr(s, "astype") else complex(1.0 - s * s))


def _amp_r(n_a, cos_a, n_b, cos_b, pol):
    if pol == "s":
        return (n_a * cos_a - n_b * cos_b) / (n_a * cos_a + n_b * cos_b)
    if pol == "p":
        return (n_b * cos_a - n_a * cos_b) / (n_b * cos_a + n_a * cos_b)
    raise ValueError("pol must be 's' or 'p'")


def fresnel_oracle(theta, n1, n2, pol):
    """Energy reflectance of a bare interface; pol in {'s', 'p', 'mix'}."""
    theta = np.asarray(theta, dtype=float)
    if pol == "mix":
        return 0.5 * (fresnel_oracle(theta, n1, n2, "s") + fresnel_oracle(theta, n1, n2, "p"))
    c1 = np.cos(theta) + 0j
    c2 = _cos_in(n1, theta, n2)
    r = _amp_r(n1, c1, n2, c2, pol)
    return np.abs(r) ** 2


def plate_oracle(theta, n1, n2, n3, h, pol):
    """Reflectance of a single homogeneous film between two half-spaces.

    Derivation: the two boundary amplitude coefficients r12, r23 are combined
    with the round-trip interior phase 2*beta, beta = 2*pi*n2*h*cos(theta2)
    (units c/f), through the geometric sum of multiple interior reflections:
    r = (r12 + r23 e^{2i beta}) / (1 + r12 r23 e^{2i beta}).  Complex interior
    cosines (evanescent films) are handled by the same expression.
    """
    theta = np.asarray(theta, dtype=float)
    if pol == "mix":
        return 0.5 * (
            plate_oracle(theta, n1, n2, n3, h, "s") + plate_oracle(theta, n1, n2, n3, h, "p")
        )
    c1 = np.cos(theta) + 0j
    c2 = _cos_in(n1, theta, n2)
    c3 = _cos_in(n1, theta, n3)
    r12 = _amp_r(n1, c1, n2, c2, pol)
    r23 = _amp_r(n2, c2, n3, c3, pol)
    ph = np.exp(2j * TWO_PI * n2 * h * c2)
    r = (r12 + r23 * ph) / (1.0 + r12 * r23 * ph)
    return np.abs(r) ** 2


def ftir_oracle(w, n, theta, pol):
    """Transmittance across a vacuum gap of width w between half-spaces of index n.

    Computed via the evanescent-film route of plate_oracle (an independent
    derivation from the closed sinh form used by the gap unit factory).
    """
    return 1.0 - plate_oracle(theta, n, 1.0, n, np.asarray(w, dtype=float), pol)


# ---------------------------------------------------------------------------
# Two-beam interference


def two_beam_oracle(theta, a=1.0, d=5.0):
    """Far-field relative intensity of two uniform slits (widths a, centers d apart)."""
    s = np.sin(np.asarray(theta, dtype=float))
    return np.sinc(a * s) ** 2 * np.cos(np.pi * d * s) ** 2


# ---------------------------------------------------------------------------
# Tagged interferometer ("eraser")


def eraser_oracle(theta0, theta1, theta2, fdT):
    """Closed-form trigonometric expansion of the two-channel intensities.

    Note: the second channel of this expansion carries a constant offset
    of (cos 4*theta2 - cos 4*theta1)/16 relative to the matrix-network result
    (see eraser_network_oracle); the first channel is exact.
    """
    t0, t1, t2 = theta0, theta1, theta2
    x = TWO_PI * np.asarray(fdT, dtype=float)
    i0 = (
        4.0
        - np.cos(4.0 * (t2 - t1))
        - np.cos(4.0 * t1)
        - np.cos(4.0 * (t2 - t1 - t0))
        - np.cos(4.0 * (t1 - t0))
        + 4.0 * np.cos(x) * np.sin(2.0 * t2 - 4.0 * t1) * np.sin(2.0 * t0)
        - 2.0
        * np.sin(x)
        * (np.cos(4.0 * t2 - 4.0 * t1 - 2.0 * t0) + np.cos(4.0 * t1 - 2.0 * t0) - 2.0 * np.cos(2.0 * t0))
    ) / 16.0
    i1 = (
        4.0
        + np.cos(4.0 * (t2 - t1))
        + np.cos(4.0 * t2)
        + np.cos(4.0 * (t2 - t1 - t0))
        + np.cos(4.0 * (t1 - t0))
        - 4.0 * np.cos(x) * np.sin(2.0 * t2 - 4.0 * t1) * np.sin(2.0 * t0)
        + 2.0
        * np.sin(x)
        * (np.cos(4.0 * t2 - 4.0 * t1 - 2.0 * t0) + np.cos(4.0 * t1 - 2.0 * t0) + 2.0 * np.cos(2.0 * t0))
    ) / 16.0
    return i0, i1


def _hwp(t):
    c, s = np.cos(2.0 * t), np.sin(2.0 * t)
    return -1j * np.array([[c, s], [s, -c]])


def _qwp(t):
    c, s = np.cos(2.0 * t), np.sin(2.0 * t)
    return np.array([[1.0 - 1j * c, -1j * s], [-1j * s, 1.0 + 1j * c]]) / np.sqrt(2.0)


def eraser_network_oracle(theta0, theta1, theta2, fdT):
    """Matrix-network evaluation of the tagged interferometer.

    Returns absolute per-emission intensities (I0, I1) at the two analysis
    detectors; they do not sum to 1 because the second mixer's other output
    port is not monitored.
    """
    a = np.array([[1.0, 1j], [1j, 1.0]]) / np.sqrt(2.0)
    xs = np.atleast_1d(TWO_PI * np.asarray(fdT, dtype=float))
    i0 = np.empty(xs.shape)
    i1 = np.empty(xs.shape)
    for k, x in enumerate(xs):
        amp = np.zeros((2, 2), dtype=complex)
        amp[0, 1] = 1.0  # S-polarized input at port 0
        amp = a @ amp
        amp[1, :] *= np.exp(1j * x)
        amp[0, :] = _hwp(theta0) @ amp[0, :]
        amp = a @ amp
        out = _hwp(theta1) @ (_qwp(theta2) @ amp[1, :])
        i0[k] = abs(out[0]) ** 2
        i1[k] = abs(out[1]) ** 2
    if np.isscalar(fdT):
        return float(i0[0]), float(i1[0])
    return i0, i1


def wheeler_network_oracle(theta_mod, fdT):
    """Matrix-network intensities of the delayed-choice interferometer.

    theta_mod = 0 gives flat 1/2 in both channels; theta_mod = pi/8 gives the
    full-visibility fringe sin^2(pi fdT) in channel 0.
    """
    xs = np.atleast_1d(TWO_PI * np.asarray(fdT, dtype=float))
    i0 = np.empty(xs.shape)
    for k, x in enumerate(xs):
        amp = np.zeros((2, 2), dtype=complex)
        amp[0, 0] = amp[0, 1] = np.sqrt(0.5)  # 45-degree input at port 0
        # Polarizing split: S keeps its port, P crosses with a quarter turn.
        out = np.zeros_like(amp)
        out[0, 1], out[1, 1] = amp[0, 1], amp[1, 1]
        out[0, 0], out[1, 0] = 1j * amp[1, 0], 1j * amp[0, 0]
        amp = out
        amp[1, :] *= np.exp(1j * x)
        out = np.zeros_like(amp)
        out[0, 1], out[1, 1] = amp[0, 1], amp[1, 1]
        out[0, 0], out[1, 0] = 1j * amp[1, 0], 1j * amp[0, 0]
        res = _hwp(theta_mod) @ out[0, :]
        i0[k] = abs(res[0]) ** 2
    if np.isscalar(fdT):
        return float(i0[0]), float(1.0 - i0[0])
    return i0, 1.0 - i0


# ---------------------------------------------------------------------------
# Correlation experiments


def eprb_oracle(state, alpha1, alpha2, eta1=0.0, eta2=np.pi / 2):
    """Single-spin expectations, two-spin expectation, and correlation."""
    alpha1 = np.asarray(alpha1, dtype=float)
    alpha2 = np.asarray(alpha2, dtype=float)
    if state == "singlet":
        e12 = -np.cos(2.0 * (alpha1 - alpha2))
        zero = np.zeros_like(e12)
        return zero, zero, e12, e12
    if state == "product":
        e1 = np.cos(2.0 * (alpha1 - eta1))
        e2 = np.cos(2.0 * (alpha2 - eta2))
        return e1, e2, e1 * e2, np.zeros_like(e1 * e2)
    raise ValueError("state must be 'singlet' or 'product'")


def hbt_oracle(fdT, n_tot):
    """Mean singles, coincidence curve, and its visibility for paired sources."""
    fdT = np.asarray(fdT, dtype=float)
    singles = 0.5 * n_tot
    coinc = n_tot / 8.0 * (1.0 + 0.5 * np.cos(TWO_PI * fdT))
    cmax, cmin = np.max(coinc), np.min(coinc)
    vis = (cmax - cmin) / (cmax + cmin)
    return singles, coinc, vis
