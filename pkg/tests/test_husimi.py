import math

import numpy as np
import pytest

from jcm_entropy import (
    BlochVector,
    DomainError,
    SphereQuadrature,
    atomic_q,
    q_normalization,
    trig_power_integral,
    wehrl_entropy_closed,
    wehrl_entropy_quadrature,
)

FOUR_PI = 4.0 * math.pi


def bloch(sx, sy, sz):
    return BlochVector(sx, sy, sz, math.sqrt(sx * sx + sy * sy + sz * sz))


def composite_trig_integral(c1, c2, k, points=4096):
    """Periodic-rule quadrature of (c1 sin x + c2 cos x)^k, the dumb way."""
    x = 2.0 * math.pi * np.arange(points) / points
    return float(np.sum((c1 * np.sin(x) + c2 * np.cos(x)) ** k)) * 2.0 * math.pi / points


class TestQuadratureConstruction:
    def test_weights_cover_solid_angle(self):
        for orders in [(2, 4), (16, 32), (64, 128)]:
            quad = SphereQuadrature(*orders)
            assert quad.total_weight == pytest.approx(FOUR_PI, abs=1e-12)

    def test_order_floors(self):
        with pytest.raises(DomainError):
            SphereQuadrature(1, 16)
        with pytest.raises(DomainError):
            SphereQuadrature(16, 3)


class TestAtomicQ:
    def test_maximally_mixed_is_flat(self):
        b = bloch(0, 0, 0)
        for theta, phi in [(0.0, 0.0), (1.0, 2.0), (math.pi, 3.0)]:
            assert atomic_q(b, theta, phi) == pytest.approx(1.0 / FOUR_PI, abs=1e-15)

    def test_pure_excited_poles(self):
        b = bloch(0, 0, 1)
        assert atomic_q(b, 0.0, 0.0) == pytest.approx(1.0 / (2.0 * math.pi), abs=1e-15)
        assert atomic_q(b, math.pi, 0.0) == pytest.approx(0.0, abs=1e-15)

    def test_matches_overlap_form(self):
        # for |e> the density is cos^2(theta/2)/(2 pi)
        b = bloch(0, 0, 1)
        for theta in np.linspace(0.0, math.pi, 9):
            expected = math.cos(theta / 2) ** 2 / (2.0 * math.pi)
            assert atomic_q(b, float(theta), 0.0) == pytest.approx(expected, abs=1e-15)

    def test_nonnegative_inside_ball(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            v = rng.normal(size=3)
            v *= rng.uniform(0, 1) / np.linalg.norm(v)
            theta, phi = rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
            assert atomic_q(bloch(*v), theta, phi) >= 0.0

    def test_angle_domain(self):
        b = bloch(0, 0, 0.5)
        with pytest.raises(DomainError):
            atomic_q(b, -0.1, 0.0)
        with pytest.raises(DomainError):
            atomic_q(b, 1.0, 7.0)


class TestNormalization:
    def test_flat_density(self):
        assert q_normalization(bloch(0, 0, 0), SphereQuadrature(8, 8)) == \
            pytest.approx(1.0, abs=1e-14)

    def test_pure_excited(self):
        assert q_normalization(bloch(0, 0, 1), SphereQuadrature(16, 16)) == \
            pytest.approx(1.0, abs=1e-12)

    def test_generic_vector(self):
        assert q_normalization(bloch(0.3, 0.4, 0.5), SphereQuadrature(32, 32)) == \
            pytest.approx(1.0, abs=1e-12)

    def test_random_vectors(self):
        quad = SphereQuadrature(32, 32)
        rng = np.random.default_rng(11)
        for _ in range(100):
            v = rng.normal(size=3)
            v *= rng.uniform(0, 1) / np.linalg.norm(v)
            assert abs(q_normalization(bloch(*v), quad) - 1.0) < 1e-12


class TestWehrlQuadrature:
    def test_maximally_mixed(self):
        got = wehrl_entropy_quadrature(bloch(0, 0, 0), SphereQuadrature(16, 16))
        assert got == pytest.approx(math.log(FOUR_PI), abs=1e-13)

    def test_pure_state_limit(self):
        got = wehrl_entropy_quadrature(bloch(0, 0, 1), SphereQuadrature(128, 256))
        assert got == pytest.approx(math.log(2 * math.pi) + 0.5, abs=1e-8)

    def test_against_closed_form(self):
        got = wehrl_entropy_quadrature(bloch(0.73, 0, 0), SphereQuadrature(128, 256))
        assert got == pytest.approx(wehrl_entropy_closed(0.73), abs=1e-8)

    def test_oracle_equivalence_grid(self):
        quad = SphereQuadrature(128, 256)
        for eta in [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99]:
            got = wehrl_entropy_quadrature(bloch(0.0, 0.6 * eta, 0.8 * eta), quad)
            assert abs(got - wehrl_entropy_closed(eta)) < 1e-8

    def test_convergence_under_doubling(self):
        coarse = SphereQuadrature(64, 128)
        fine = SphereQuadrature(128, 256)
        for eta in (0.3, 0.7, 0.99):
            b = bloch(0.0, 0.0, eta)
            assert abs(wehrl_entropy_quadrature(b, coarse)
                       - wehrl_entropy_quadrature(b, fine)) < 1e-9
        b = bloch(0.0, 0.0, 1.0)
        assert abs(wehrl_entropy_quadrature(b, coarse)
                   - wehrl_entropy_quadrature(b, fine)) < 1e-7

    def test_negative_q_reported(self):
        with pytest.raises(DomainError):
            wehrl_entropy_quadrature(BlochVector(0, 0, 1.5, 1.5),
                                     SphereQuadrature(16, 16))


class TestTrigPowerIntegral:
    def test_odd_k_vanishes(self):
        assert trig_power_integral(1.0, 1.0, 3) == 0.0

    def test_sin_squared(self):
        assert trig_power_integral(1.0, 0.0, 2) == pytest.approx(math.pi, abs=1e-14)
        assert trig_power_integral(1.0, 0.0, 2) == pytest.approx(
            composite_trig_integral(1.0, 0.0, 2), abs=1e-12)

    def test_constant(self):
        assert trig_power_integral(0.0, 0.0, 0) == pytest.approx(
            2.0 * math.pi, abs=1e-15)

    def test_rejects_negative_power(self):
        with pytest.raises(DomainError):
            trig_power_integral(1.0, 1.0, -1)

    @pytest.mark.parametrize("c1,c2", [(1.0, 1.0), (0.5, -0.3), (2.0, 2.0),
                                       (-1.7, 0.9), (0.0, 2.0)])
    def test_matches_composite_rule(self, c1, c2):
        # tolerance scaled by the integrand magnitude: at k = 20 with
        # |c| = 2 the integral is ~1e9 and doubles carry ~1e-16 relative
        for k in range(21):
            expected = composite_trig_integral(c1, c2, k)
            scale = max(1.0, (c1 * c1 + c2 * c2) ** (k / 2))
            assert abs(trig_power_integral(c1, c2, k) - expected) < 1e-10 * scale
