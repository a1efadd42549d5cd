"""Messengers, their two-component messages, phase propagation, and sources.

A messenger is the only mobile entity in a simulation: it carries a message
(two complex oscillator components encoding polarization and accumulated
phase), a planar position, and a travel direction.  Natural units are used
throughout: c = f = 1, so lengths are in units c/f, times in units 1/f, and a
propagation time dt advances the common phase by 2*pi*dt.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np

from .common import TWO_PI

NORM_TOL = 1e-9


@dataclass(frozen=True)
class Message:
    """Unit two-component complex vector: c1 rides the P axis, c2 the S axis."""

    c1: complex
    c2: complex

    @classmethod
    def from_angles(cls, xi: float, psi1: float = 0.0, psi2: float = 0.0) -> "Message":
        """Build (e^{i psi1} sin(xi), e^{i psi2} cos(xi)).

        xi = 0 is pure S polarization, xi = pi/2 pure P.
        """
        return cls(cmath.exp(1j * psi1) * math.sin(xi), cmath.exp(1j * psi2) * math.cos(xi))

    @classmethod
    def from_array(cls, a) -> "Message":
        return cls(complex(a[0]), complex(a[1]))

    def as_array(self) -> np.ndarray:
        return np.array([self.c1, self.c2], dtype=np.complex128)

    def norm(self) -> float:
        return math.sqrt(abs(self.c1) ** 2 + abs(self.c2) ** 2)

    def rotated(self, phase: float) -> "Message":
        """Common phase rotation of both components by `phase` radians."""
        ph = cmath.exp(1j * phase)
        return Message(self.c1 * ph, self.c2 * ph)


@dataclass
class Messenger:
    msg: Message
    position: np.ndarray = field(default_factory=lambda: np.zeros(2))
    direction: np.ndarray = field(default_factory=lambda: np.array([1.0, 0.0]))
    source_id: int = 0
    emit_index: int = 0

    def __post_init__(self) -> None:
        self.position = np.asarray(self.position, dtype=np.float64)
        self.direction = np.asarray(self.direction, dtype=np.float64)
        if abs(np.linalg.norm(self.direction) - 1.0) > NORM_TOL:
            raise ValueError("direction must be a unit vector")


def propagate(m: Messenger, dt: float) -> Messenger:
    """Advance a messenger by time dt: position moves, phase turns by 2*pi*dt."""
    if dt < 0.0:
        raise ValueError("dt must be nonnegative")
    return replace(
        m,
        msg=m.msg.rotated(TWO_PI * dt),
        position=m.position + dt * m.direction,
    )


class SourceKind(str, Enum):
    COHERENT = "coherent"
    RANDOM_PHASE_PAIR = "random_phase_pair"
    OPPOSITE_RANDOM_POLARIZATION = "opposite_random_polarization"
    FIXED_PRODUCT_POLARIZATION = "fixed_product_polarization"
    SLIT_PAIR = "slit_pair"


@dataclass
class SourceSpec:
    kind: SourceKind
    xi: float = 0.0
    psi1: float = 0.0
    psi2: float = 0.0
    slit_width: float = 1.0  # a, units c/f
    slit_distance: float = 5.0  # d, units c/f
    refresh_period: int = 40  # N_F, random_phase_pair only
    eta1: float = 0.0
    eta2: float = math.pi / 2

    def __post_init__(self) -> None:
        if self.kind is SourceKind.SLIT_PAIR and (self.slit_width <= 0 or self.slit_distance <= 0):
            raise ValueError("slit width and distance must be positive")
        if self.refresh_period < 1:
            raise ValueError("refresh period must be >= 1")


class Source:
    """Stateful emitter: owns its RNG stream and per-pair bookkeeping."""

    def __init__(self, spec: SourceSpec, rng: np.random.Generator):
        self.spec = spec
        self.rng = rng
        self._emitted = 0
        self._pair_phases: tuple[float, float] | None = None

    def emit(self):
        """Emit one messenger, or a simultaneous pair for two-particle sources."""
        s = self.spec
        idx = self._emitted
        self._emitted += 1
        if s.kind is SourceKind.COHERENT:
            return Messenger(Message.from_angles(s.xi, s.psi1, s.psi2), emit_index=idx)
        if s.kind is SourceKind.SLIT_PAIR:
            # Position uniform over the two slit openings, direction uniform
            # over the forward half-plane.
            half = 0.5 * s.slit_width
            y = self.rng.uniform(-half, half)
            y += 0.5 * s.slit_distance if self.rng.random() < 0.5 else -0.5 * s.slit_distance
            beta = self.rng.uniform(-math.pi / 2, math.pi / 2)
            return Messenger(
                Message.from_angles(s.xi, s.psi1, s.psi2),
                position=np.array([0.0, y]),
                direction=np.array([math.cos(beta), math.sin(beta)]),
                emit_index=idx,
            )
        if s.kind is SourceKind.RANDOM_PHASE_PAIR:
            if self._pair_phases is None or idx % s.refresh_period == 0:
                self._pair_phases = (
                    self.rng.uniform(0.0, TWO_PI),
                    self.rng.uniform(0.0, TWO_PI),
                )
            p0, p1 = self._pair_phases
            return (
                Messenger(Message.from_angles(s.xi, p0, p0), source_id=0, emit_index=idx),
                Messenger(Message.from_angles(s.xi, p1, p1), source_id=1, emit_index=idx),
            )
        if s.kind is SourceKind.OPPOSITE_RANDOM_POLARIZATION:
            xi = self.rng.uniform(0.0, TWO_PI)
            return (
                Messenger(Message.from_angles(xi), source_id=0, emit_index=idx),
                Messenger(Message.from_angles(xi + math.pi / 2), source_id=1, emit_index=idx),
            )
        if s.kind is SourceKind.FIXED_PRODUCT_POLARIZATION:
            return (
                Messenger(Message.from_angles(s.eta1), source_id=0, emit_index=idx),
                Messenger(Message.from_angles(s.eta2), source_id=1, emit_index=idx),
            )
        raise ValueError(f"unknown source kind {s.kind!r}")


def slit_hit_geometry(y: float, beta: float, X: float) -> tuple[float, float]:
    """Screen-hit angle and time-of-flight for a ray leaving (0, y) at angle beta.

    The screen is a semicircle of radius X centered on the origin.  Returns
    (theta, tof) with sin(theta) = (y cos^2(beta) + sin(beta) sqrt(X^2 -
    y^2 cos^2(beta))) / X and tof the straight-line distance to the rim
    (c = 1).
    """
    if abs(y) >= X:
        raise ValueError("emission point must lie inside the screen radius")
    cb = math.cos(beta)
    sin_theta = (y * cb * cb + math.sin(beta) * math.sqrt(X * X - y * y * cb * cb)) / X
    theta = math.asin(min(1.0, max(-1.0, sin_theta)))
    tof = math.sqrt(X * X - 2.0 * y * X * sin_theta + y * y)
    return theta, tof
