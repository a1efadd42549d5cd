"""Processing units: adaptive interfaces, beam splitters, wave plates, detectors.

Adaptive two-port units share one structure: a two-entry frequency estimate
plus one stored message per port (the learning stage), a fixed linear
transformation applied per polarization axis (two 2x2 complex blocks: `ts`
acting on message component 2, the S axis, and `tp` on component 1, the P
axis), and a threshold output stage that routes each messenger through
exactly one port.  Wave plates are stateless 2x2 matrices.  Detectors are
adaptive threshold units that click with probability approaching 1 once
converged on a steady beam.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .common import TWO_PI
from .kernels import _pure
from .messaging import Message

SQRT_HALF = 1.0 / math.sqrt(2.0)

#: 2x2 block of a lossless 50-50 beam mixer (same for both polarization axes).
BS_BLOCK = np.array([[SQRT_HALF, 1j * SQRT_HALF], [1j * SQRT_HALF, SQRT_HALF]], dtype=np.complex128)

#: Polarizing splitter blocks: S passes straight through, P crosses with a
#: quarter-turn phase.
PBS_S_BLOCK = np.eye(2, dtype=np.complex128)
PBS_P_BLOCK = np.array([[0.0, 1j], [1j, 0.0]], dtype=np.complex128)


class TotalInternalReflection(ValueError):
    """Raised when a propagating refracted beam does not exist."""


def snell_refract(theta1: float, n1: float, n2: float) -> float | None:
    """Refraction angle for incidence theta1 going n1 -> n2; None beyond critical."""
    if not 0.0 <= theta1 < math.pi / 2:
        raise ValueError("incidence angle must lie in [0, pi/2)")
    if n1 <= 0.0 or n2 <= 0.0:
        raise ValueError("refractive indices must be positive")
    s = n1 * math.sin(theta1) / n2
    if s > 1.0:
        return None
    return math.asin(s)


@dataclass(frozen=True)
class FresnelCoefficients:
    """Energy-current amplitudes; r**2 + t**2 = 1 per polarization."""

    r_s: float
    t_s: float
    r_p: float
    t_p: float


def fresnel_energy_coefficients(theta1: float, n1: float, n2: float) -> FresnelCoefficients:
    """Energy-current reflection/transmission amplitudes at a planar interface."""
    theta2 = snell_refract(theta1, n1, n2)
    if theta2 is None:
        raise TotalInternalReflection(
            "beyond the critical angle there is no refracted beam; use make_gap_unit"
        )
    q1 = math.cos(theta1)
    q4 = math.cos(theta2)
    den_s = n1 * q1 + n2 * q4
    den_p = n1 * q4 + n2 * q1
    root = 2.0 * math.sqrt(n1 * n2 * q1 * q4)
    return FresnelCoefficients(
        r_s=(n1 * q1 - n2 * q4) / den_s,
        t_s=root / den_s,
        r_p=(n1 * q4 - n2 * q1) / den_p,
        t_p=root / den_p,
    )


def _block(r: float, t: float) -> np.ndarray:
    return np.array([[r, t], [t, -r]], dtype=np.complex128)


@dataclass
class InterfaceUnit:
    """Adaptive two-port unit (interface, beam mixer, polarizing splitter, gap)."""

    tp: np.ndarray
    ts: np.ndarray
    gamma: float = 0.99
    x: np.ndarray = field(default_factory=lambda: np.array([0.5, 0.5]))
    regs: np.ndarray = field(
        default_factory=lambda: np.array([[1.0, 0.0], [1.0, 0.0]], dtype=np.complex128)
    )
    # Geometry bookkeeping (informational).
    n1: float | None = None
    n2: float | None = None
    theta1: float | None = None

    def __post_init__(self) -> None:
        if not 0.0 <= self.gamma < 1.0:
            raise ValueError("gamma must lie in [0, 1)")
        self.tp = np.ascontiguousarray(self.tp, dtype=np.complex128)
        self.ts = np.ascontiguousarray(self.ts, dtype=np.complex128)
        self.x = np.ascontiguousarray(self.x, dtype=np.float64)
        self.regs = np.ascontiguousarray(self.regs, dtype=np.complex128)

    @property
    def t_matrix(self) -> np.ndarray:
        """Full 4x4 transformation (S slots first, then P slots)."""
        out = np.zeros((4, 4), dtype=np.complex128)
        out[:2, :2] = self.ts
        out[2:, 2:] = self.tp
        return out

    def process(self, port: int, msg: Message, r: float) -> tuple[int, Message]:
        """Route one messenger; returns (out_port, out_message)."""
        if port not in (0, 1):
            raise ValueError("port must be 0 or 1")
        if abs(msg.norm() - 1.0) > 1e-9:
            raise ValueError("message must be a unit vector")
        p, c1, c2 = _pure.unit_step(
            self.x, self.regs, self.tp, self.ts, self.gamma, port, msg.c1, msg.c2, r
        )
        return p, Message(c1, c2)


def make_interface_unit(theta1: float, n1: float, n2: float, gamma: float = 0.99) -> InterfaceUnit:
    fc = fresnel_energy_coefficients(theta1, n1, n2)
    return InterfaceUnit(
        tp=_block(fc.r_p, fc.t_p),
        ts=_block(fc.r_s, fc.t_s),
        gamma=gamma,
        n1=n1,
        n2=n2,
        theta1=theta1,
    )


def make_bs_unit(gamma: float = 0.99) -> InterfaceUnit:
    return InterfaceUnit(tp=BS_BLOCK.copy(), ts=BS_BLOCK.copy(), gamma=gamma)


def make_pbs_unit(gamma: float = 0.99) -> InterfaceUnit:
    return InterfaceUnit(tp=PBS_P_BLOCK.copy(), ts=PBS_S_BLOCK.copy(), gamma=gamma)


def ftir_transmittance(w: float, n: float, theta: float) -> tuple[float, float]:
    """Energy transmittance (S, P) for tunneling across a vacuum gap.

    Two half-spaces of index n separated by a gap of width w (units c/f), at
    internal incidence angle theta above the critical angle.  Standard
    two-boundary result with an evanescent interior; kappa_hat is the decay
    constant divided by 2*pi.
    """
    s = n * math.sin(theta)
    if s <= 1.0:
        raise ValueError("gap unit requires an angle above the critical angle")
    kap2 = s * s - 1.0
    sh = math.sinh(TWO_PI * math.sqrt(kap2) * w)
    sh2 = sh * sh
    # S axis: field admittances (n cos(theta), kappa_hat).
    u2 = n * n * math.cos(theta) ** 2
    t_s = 1.0 / (1.0 + (u2 + kap2) ** 2 / (4.0 * u2 * kap2) * sh2)
    # P axis: admittances divided by the permittivities.
    u2 = math.cos(theta) ** 2 / (n * n)
    t_p = 1.0 / (1.0 + (u2 + kap2) ** 2 / (4.0 * u2 * kap2) * sh2)
    return t_s, t_p


def make_gap_unit(w: float, n: float, theta: float, gamma: float = 0.99) -> InterfaceUnit:
    """Lumped tunneling unit: the whole prism-gap-prism sandwich as one two-port."""
    if w < 0.0:
        raise ValueError("gap width must be nonnegative")
    if w == 0.0:
        t_s = t_p = 1.0
    else:
        t_s, t_p = ftir_transmittance(w, n, theta)
    return InterfaceUnit(
        tp=_block(math.sqrt(1.0 - t_p), math.sqrt(t_p)),
        ts=_block(math.sqrt(1.0 - t_s), math.sqrt(t_s)),
        gamma=gamma,
        n1=n,
        n2=1.0,
        theta1=theta,
    )


def waveplate_matrix(kind: str, theta: float) -> np.ndarray:
    """2x2 retarder matrix; kind is 'hwp' or 'qwp', theta the optic-axis angle."""
    c = math.cos(2.0 * theta)
    s = math.sin(2.0 * theta)
    if kind == "hwp":
        return -1j * np.array([[c, s], [s, -c]], dtype=np.complex128)
    if kind == "qwp":
        return np.array(
            [[1.0 - 1j * c, -1j * s], [-1j * s, 1.0 + 1j * c]], dtype=np.complex128
        ) * SQRT_HALF
    raise ValueError("kind must be 'hwp' or 'qwp'")


def waveplate_apply(kind: str, theta: float, msg: Message) -> Message:
    m = waveplate_matrix(kind, theta)
    return Message(m[0, 0] * msg.c1 + m[0, 1] * msg.c2, m[1, 0] * msg.c1 + m[1, 1] * msg.c2)


def rotator_matrix(alpha: float) -> np.ndarray:
    """Polarization rotation by alpha: from_angles(xi) -> from_angles(xi - alpha)."""
    c = math.cos(alpha)
    s = math.sin(alpha)
    return np.array([[c, -s], [s, c]], dtype=np.float64)


def mirror_apply(msg: Message, direction: np.ndarray, normal: np.ndarray | None = None):
    """Ideal mirror: specular direction flip, second message component negated."""
    if normal is None:
        normal = np.array([1.0, 0.0])
    direction = np.asarray(direction, dtype=np.float64)
    normal = np.asarray(normal, dtype=np.float64)
    normal = normal / np.linalg.norm(normal)
    reflected = direction - 2.0 * np.dot(direction, normal) * normal
    return Message(msg.c1, -msg.c2), reflected


@dataclass
class DetectorUnit:
    """Adaptive detector with n_ports direction bins and an optional delay model."""

    n_ports: int = 1
    gamma_hat: float = 0.99
    t_max: float | None = None
    h: int = 8
    x: np.ndarray = field(init=False)
    regs: np.ndarray = field(init=False)
    count: int = 0

    def __post_init__(self) -> None:
        if self.n_ports < 1:
            raise ValueError("n_ports must be >= 1")
        if not 0.0 <= self.gamma_hat < 1.0:
            raise ValueError("gamma_hat must lie in [0, 1)")
        self.x = np.full(self.n_ports, 1.0 / self.n_ports)
        self.regs = np.zeros((self.n_ports, 2), dtype=np.complex128)
        self.regs[:, 0] = 1.0

    def process(
        self,
        port: int,
        msg: Message,
        r: float,
        arrival_tof: float = 0.0,
        r_delay: float | None = None,
    ) -> tuple[int, float | None]:
        """Absorb one messenger; returns (click, click_time or None)."""
        if not 0 <= port < self.n_ports:
            raise ValueError("port out of range")
        click, p = _pure.detector_step(
            self.x, self.regs, self.gamma_hat, port, msg.c1, msg.c2, r
        )
        self.count += click
        t = None
        if click and self.t_max is not None:
            if r_delay is None:
                raise ValueError("delay model requires an extra uniform draw")
            t = arrival_tof + r_delay * self.t_max * (1.0 - p) ** self.h
        elif click:
            t = arrival_tof
        return click, (t if click else None)


def bin_port(value: float, lo: float, hi: float, n_ports: int) -> int:
    """Uniformly bin a value over [lo, hi] into n_ports; raises outside the range."""
    if not lo <= value <= hi:
        raise ValueError("value outside the detector acceptance range")
    k = int((value - lo) / (hi - lo) * n_ports)
    return min(k, n_ports - 1)
