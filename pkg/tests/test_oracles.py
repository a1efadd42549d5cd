"""Tests for the closed-form reference curves."""
import math

import numpy as np
import pytest

from ebcm import oracles
from ebcm.analysis import visibility


class TestMzi:
    def test_endpoints(self):
        assert oracles.mzi_oracle(0.3, 0.3) == (0.0, 1.0)
        p0, p1 = oracles.mzi_oracle(math.pi, 0.0)
        assert p0 == pytest.approx(1.0, abs=1e-15)

    def test_channel_sum(self, rng):
        phis = rng.uniform(-10, 10, (2, 100))
        p0, p1 = oracles.mzi_oracle(phis[0], phis[1])
        assert np.allclose(p0 + p1, 1.0, atol=1e-15)

    def test_matrix_route_agrees(self, rng):
        phi0 = rng.uniform(-10, 10, 1000)
        phi1 = rng.uniform(-10, 10, 1000)
        p0a, _ = oracles.mzi_oracle(phi0, phi1)
        p0b, p1b = oracles.mzi_matrix_oracle(phi0, phi1)
        assert np.max(np.abs(p0a - p0b)) < 1e-12
        assert np.max(np.abs(p0b + p1b - 1.0)) < 1e-12


class TestPlate:
    def test_zero_thickness_is_bare_interface(self):
        thetas = np.linspace(0.0, 1.3, 27)
        for pol in ("s", "p", "mix"):
            film = oracles.plate_oracle(thetas, 1.0, 3.0, 1.5, 0.0, pol)
            bare = oracles.fresnel_oracle(thetas, 1.0, 1.5, pol)
            assert np.max(np.abs(film - bare)) < 1e-12

    def test_quarter_wave_value(self):
        n1, n2, n3 = 1.0, 3.0, 1.5
        h = 0.25 / n2  # quarter-wave optical thickness
        r = float(oracles.plate_oracle(0.0, n1, n2, n3, h, "s"))
        expected = ((n1 * n3 - n2**2) / (n1 * n3 + n2**2)) ** 2
        assert r == pytest.approx(expected, abs=1e-12)
        assert r == pytest.approx(0.510204, abs=1e-6)

    def test_periodicity_half_wavelength(self):
        for opt in (0.1, 0.2, 0.37):
            a = float(oracles.plate_oracle(0.0, 1.0, 3.0, 1.5, opt / 3.0, "s"))
            b = float(oracles.plate_oracle(0.0, 1.0, 3.0, 1.5, (opt + 0.5) / 3.0, "s"))
            assert a == pytest.approx(b, abs=1e-12)


class TestTwoBeam:
    def test_maximum_at_center(self):
        th = np.linspace(-1.5, 1.5, 301)
        vals = oracles.two_beam_oracle(th, 1.0, 5.0)
        assert vals.max() == pytest.approx(1.0, abs=1e-12)
        assert np.argmax(vals) == 150

    def test_first_fringe_zero(self):
        # cos^2(pi d sin(theta)) vanishes first at sin(theta) = 1/(2 d).
        theta0 = math.asin(1.0 / 10.0)
        assert float(oracles.two_beam_oracle(theta0, 1.0, 5.0)) < 1e-25

    def test_even_in_theta(self, rng):
        th = rng.uniform(0, 1.5, 100)
        assert np.allclose(
            oracles.two_beam_oracle(th, 1.0, 5.0),
            oracles.two_beam_oracle(-th, 1.0, 5.0),
            atol=1e-15,
        )


class TestFtir:
    def test_limits(self):
        assert float(oracles.ftir_oracle(0.0, 1.52, 0.8, "s")) == pytest.approx(1.0, abs=1e-12)
        assert float(oracles.ftir_oracle(50.0, 1.52, 0.8, "s")) < 1e-12

    def test_asymptotic_log_slope(self):
        # log T ~ -2 kappa w at large w, kappa = 2 pi sqrt(n^2 sin^2 - 1).
        n, theta = 1.52, 0.8
        kappa = 2 * math.pi * math.sqrt((n * math.sin(theta)) ** 2 - 1.0)
        w = np.linspace(3.0, 5.0, 21)
        logt = np.log(oracles.ftir_oracle(w, n, theta, "s"))
        slope = np.polyfit(w, logt, 1)[0]
        assert slope == pytest.approx(-2.0 * kappa, rel=0.01)

    def test_monotone_decreasing(self):
        w = np.linspace(0.0, 5.0, 101)
        for pol in ("s", "p"):
            t = oracles.ftir_oracle(w, 1.52, math.pi / 4, pol)
            assert np.all(np.diff(t) < 0.0)


class TestEraser:
    def test_zero_angles_kill_cosine_term(self):
        # At zero plate angles the cos(phase) coefficient (prop. to sin 2*t0)
        # vanishes: the first channel is identically zero and the even-in-phase
        # part of the second channel is constant.  (The expanded second
        # channel keeps an odd sin(phase) term; see the constant-offset test.)
        x = np.linspace(0, 1, 11)
        i0, i1 = oracles.eraser_oracle(0.0, 0.0, 0.0, x)
        assert np.max(np.abs(i0)) < 1e-15
        i1_neg = oracles.eraser_oracle(0.0, 0.0, 0.0, -x)[1]
        even = 0.5 * (i1 + i1_neg)
        assert np.max(np.abs(even - even[0])) < 1e-15

    def test_expanded_first_channel_matches_network(self, rng):
        for _ in range(50):
            t0, t1, t2 = rng.uniform(0, math.pi, 3)
            x = rng.uniform(0, 2, 7)
            p0, _ = oracles.eraser_oracle(t0, t1, t2, x)
            n0, _ = oracles.eraser_network_oracle(t0, t1, t2, x)
            assert np.max(np.abs(p0 - n0)) < 1e-12

    def test_expanded_second_channel_constant_offset(self, rng):
        # Documented residual: the expanded second channel equals the
        # matrix-network result plus (cos 4*t2 - cos 4*t1)/16; the sum of the
        # expanded pair is therefore not 1 in general.
        for _ in range(50):
            t0, t1, t2 = rng.uniform(0, math.pi, 3)
            x = rng.uniform(0, 2, 7)
            _, p1 = oracles.eraser_oracle(t0, t1, t2, x)
            _, n1 = oracles.eraser_network_oracle(t0, t1, t2, x)
            offset = (math.cos(4 * t2) - math.cos(4 * t1)) / 16.0
            assert np.max(np.abs(p1 - n1 - offset)) < 1e-12

    def test_network_intensities_physical(self):
        x = np.linspace(0, 1, 41)
        i0, i1 = oracles.eraser_network_oracle(math.pi / 3, math.pi / 4, math.pi / 8, x)
        assert np.all(i0 >= -1e-15) and np.all(i1 >= -1e-15)
        assert np.all(i0 + i1 <= 1.0 + 1e-12)

    def test_default_angles_at_zero_phase(self):
        # Frozen regression value: independent in-test evaluation of the
        # expansion at the default plate angles and zero phase.
        i0, i1 = oracles.eraser_oracle(math.pi / 3, math.pi / 4, math.pi / 8, 0.0)
        t0, t1, t2 = math.pi / 3, math.pi / 4, math.pi / 8
        ref_i0 = (
            4 - math.cos(4 * (t2 - t1)) - math.cos(4 * t1)
            - math.cos(4 * (t2 - t1 - t0)) - math.cos(4 * (t1 - t0))
            + 4 * math.sin(2 * t2 - 4 * t1) * math.sin(2 * t0)
        ) / 16.0
        assert float(i0) == pytest.approx(ref_i0, abs=1e-12)
        # Closed form: (4.5 - sqrt(3)/2 - sqrt(6))/16.
        assert float(i0) == pytest.approx(
            (4.5 - math.sqrt(3) / 2 - math.sqrt(6)) / 16.0, abs=1e-12
        )


class TestWheeler:
    def test_zero_modulator_is_flat(self):
        x = np.linspace(0, 1, 21)
        i0, i1 = oracles.wheeler_network_oracle(0.0, x)
        assert np.allclose(i0, 0.5, atol=1e-12)
        assert np.allclose(i1, 0.5, atol=1e-12)

    def test_eighth_turn_gives_full_fringe(self):
        x = np.linspace(0, 1, 21)
        i0, _ = oracles.wheeler_network_oracle(math.pi / 8, x)
        assert np.max(np.abs(i0 - np.sin(math.pi * x) ** 2)) < 1e-12


class TestEprb:
    def test_singlet_values(self):
        _, _, e12, rho = oracles.eprb_oracle("singlet", 0.3, 0.3)
        assert float(e12) == pytest.approx(-1.0, abs=1e-12)
        _, _, e12, _ = oracles.eprb_oracle("singlet", math.pi / 4, 0.0)
        assert float(e12) == pytest.approx(0.0, abs=1e-12)

    def test_product_values(self, rng):
        a1 = rng.uniform(0, 2 * math.pi, 20)
        a2 = rng.uniform(0, 2 * math.pi, 20)
        e1, e2, e12, rho = oracles.eprb_oracle("product", a1, a2)
        assert np.allclose(e1, np.cos(2 * a1), atol=1e-12)
        assert np.allclose(e2, np.cos(2 * (a2 - math.pi / 2)), atol=1e-12)
        assert np.allclose(e12, e1 * e2, atol=1e-12)
        assert np.all(rho == 0.0)

    def test_unknown_state(self):
        with pytest.raises(ValueError):
            oracles.eprb_oracle("ghz", 0.0, 0.0)


class TestHbt:
    def test_extreme_values(self):
        n_tot = 1600
        _, c0, _ = oracles.hbt_oracle(0.0, n_tot)
        assert float(c0) == pytest.approx(3 * n_tot / 16, abs=1e-12)
        _, c1, _ = oracles.hbt_oracle(0.5, n_tot)
        assert float(c1) == pytest.approx(n_tot / 16, abs=1e-12)

    def test_visibility_is_half(self):
        singles, coinc, vis = oracles.hbt_oracle(np.linspace(0, 2, 81), 1000)
        assert singles == 500.0
        assert vis == pytest.approx(0.5, abs=1e-12)
        assert visibility(coinc) == pytest.approx(0.5, abs=1e-12)
