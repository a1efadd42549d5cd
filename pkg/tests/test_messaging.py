"""Tests for messages, propagation, sources, and screen-hit geometry."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ebcm.messaging import (
    Message,
    Messenger,
    Source,
    SourceKind,
    SourceSpec,
    propagate,
    slit_hit_geometry,
)


def ray_circle_oracle(y: float, beta: float, big_x: float) -> tuple[float, float]:
    """Independent reference: intersect the ray from (0, y) with the screen circle."""
    d = np.array([math.cos(beta), math.sin(beta)])
    p = np.array([0.0, y])
    # |p + t d| = X  ->  t^2 + 2 t (p.d) + |p|^2 - X^2 = 0, take the forward root.
    b = float(p @ d)
    t = -b + math.sqrt(b * b + big_x**2 - float(p @ p))
    hit = p + t * d
    return math.asin(hit[1] / big_x), t


class TestMessage:
    def test_from_angles_components(self):
        m = Message.from_angles(0.3, 0.5, -0.2)
        assert m.c1 == pytest.approx(np.exp(0.5j) * math.sin(0.3), abs=1e-15)
        assert m.c2 == pytest.approx(np.exp(-0.2j) * math.cos(0.3), abs=1e-15)
        assert m.norm() == pytest.approx(1.0, abs=1e-15)

    def test_xi_zero_is_pure_second_component(self):
        m = Message.from_angles(0.0)
        assert m.c1 == 0.0
        assert m.c2 == 1.0

    def test_direction_validation(self):
        with pytest.raises(ValueError):
            Messenger(Message.from_angles(0.0), direction=np.array([1.0, 1.0]))


class TestPropagate:
    def test_full_period_identity(self):
        m = Messenger(Message.from_angles(0.4, 0.1, 0.2))
        out = propagate(m, 1.0)
        assert abs(out.msg.c1 - m.msg.c1) < 1e-9
        assert abs(out.msg.c2 - m.msg.c2) < 1e-9

    def test_half_period_negates(self):
        m = Messenger(Message.from_angles(0.4))
        out = propagate(m, 0.5)
        assert abs(out.msg.c1 + m.msg.c1) < 1e-12
        assert abs(out.msg.c2 + m.msg.c2) < 1e-12

    def test_quarter_period_quarter_turn(self):
        m = Messenger(Message(1.0, 0.0))
        out = propagate(m, 0.25)
        assert out.msg.c1 == pytest.approx(1j, abs=1e-12)
        assert out.msg.c2 == 0.0

    def test_position_advances_along_direction(self):
        m = Messenger(Message.from_angles(0.0), direction=np.array([0.0, 1.0]))
        out = propagate(m, 2.5)
        assert np.allclose(out.position, [0.0, 2.5])

    def test_negative_dt_rejected(self):
        with pytest.raises(ValueError):
            propagate(Messenger(Message.from_angles(0.0)), -0.1)

    @given(
        xi=st.floats(0.0, math.tau),
        t1=st.floats(0.0, 10.0),
        t2=st.floats(0.0, 10.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_property_norm_and_additivity(self, xi, t1, t2):
        m = Messenger(Message.from_angles(xi, 0.3, 0.7))
        once = propagate(m, t1 + t2)
        twice = propagate(propagate(m, t1), t2)
        assert abs(once.msg.norm() - 1.0) < 1e-12
        assert abs(once.msg.c1 - twice.msg.c1) < 1e-9
        assert abs(once.msg.c2 - twice.msg.c2) < 1e-9

    def test_norm_preserved_over_1e6_rotations(self):
        msg = Message.from_angles(0.7, 0.1, 0.9)
        # 10^6 accumulated rotations stay on the unit sphere.
        for _ in range(100):
            msg = msg.rotated(2 * math.pi * 1234.56789 * 10_000 % (2 * math.pi))
        arr = msg.as_array()
        total = abs(arr[0]) ** 2 + abs(arr[1]) ** 2
        assert abs(total - 1.0) < 1e-9


class TestSources:
    def test_coherent_emissions_identical(self, rng):
        src = Source(SourceSpec(SourceKind.COHERENT, xi=0.3, psi1=0.1, psi2=0.2), rng)
        msgs = [src.emit().msg for _ in range(100)]
        assert all(m == msgs[0] for m in msgs)

    def test_opposite_polarization_pairs(self, rng):
        src = Source(SourceSpec(SourceKind.OPPOSITE_RANDOM_POLARIZATION), rng)
        for _ in range(50):
            a, b = src.emit()
            # (sin xi, cos xi) vs (sin(xi+pi/2), cos(xi+pi/2)) = (cos xi, -sin xi)
            assert abs(b.msg.c1 - a.msg.c2) < 1e-12
            assert abs(b.msg.c2 + a.msg.c1) < 1e-12

    def test_fixed_product_pairs(self, rng):
        src = Source(SourceSpec(SourceKind.FIXED_PRODUCT_POLARIZATION), rng)
        a, b = src.emit()
        assert a.msg == Message.from_angles(0.0)
        assert b.msg == Message.from_angles(math.pi / 2)

    def test_slit_pair_positions_inside_slits(self, rng):
        a, d = 1.0, 5.0
        src = Source(SourceSpec(SourceKind.SLIT_PAIR, slit_width=a, slit_distance=d), rng)
        for _ in range(500):
            m = src.emit()
            y = m.position[1]
            assert min(abs(y - d / 2), abs(y + d / 2)) <= a / 2
            assert abs(np.linalg.norm(m.direction) - 1.0) < 1e-12
            assert m.direction[0] >= 0.0  # forward half-plane

    def test_hbt_phases_held_for_refresh_period(self, rng):
        nf = 40
        src = Source(SourceSpec(SourceKind.RANDOM_PHASE_PAIR, refresh_period=nf), rng)
        pairs = [src.emit() for _ in range(3 * nf)]
        msgs0 = [p[0].msg for p in pairs]
        for block in range(3):
            first = msgs0[block * nf]
            assert all(m == first for m in msgs0[block * nf : (block + 1) * nf])
        assert msgs0[0] != msgs0[nf] or msgs0[nf] != msgs0[2 * nf]

    def test_spec_validation(self):
        with pytest.raises(ValueError):
            SourceSpec(SourceKind.SLIT_PAIR, slit_width=0.0)
        with pytest.raises(ValueError):
            SourceSpec(SourceKind.COHERENT, refresh_period=0)


class TestSlitHitGeometry:
    def test_on_axis_ray(self):
        theta, tof = slit_hit_geometry(0.0, 0.0, 100.0)
        assert theta == pytest.approx(0.0, abs=1e-15)
        assert tof == pytest.approx(100.0, abs=1e-12)

    def test_centered_tilted_ray(self):
        theta, tof = slit_hit_geometry(0.0, math.pi / 6, 100.0)
        assert theta == pytest.approx(math.pi / 6, abs=1e-12)
        assert tof == pytest.approx(100.0, abs=1e-9)

    def test_against_ray_circle_oracle(self):
        theta, tof = slit_hit_geometry(2.5, 0.1, 100.0)
        ref_theta, ref_tof = ray_circle_oracle(2.5, 0.1, 100.0)
        assert theta == pytest.approx(ref_theta, abs=1e-9)
        assert tof == pytest.approx(ref_tof, abs=1e-9)

    @given(
        y=st.floats(-3.0, 3.0),
        beta=st.floats(-math.pi / 2 + 1e-6, math.pi / 2 - 1e-6),
    )
    @settings(max_examples=300, deadline=None)
    def test_property_matches_oracle(self, y, beta):
        theta, tof = slit_hit_geometry(y, beta, 100.0)
        ref_theta, ref_tof = ray_circle_oracle(y, beta, 100.0)
        assert abs(theta - ref_theta) < 1e-9
        assert abs(tof - ref_tof) < 1e-9

    def test_domain_error(self):
        with pytest.raises(ValueError):
            slit_hit_geometry(100.0, 0.0, 100.0)
