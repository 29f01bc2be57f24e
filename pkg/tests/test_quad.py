import cmath
import math

import pytest

from qkit import QParam, QuadratureError, Truncation, q_exp_small, qpoch_inf, qpoch_multi, ramanujan_a
from qkit.quad import (
    ContourSpec,
    LineIntegrand,
    VerticalLineSpec,
    circle_contour,
    finite_interval,
    gaussian_line,
    halfline_log,
    real_line,
    vertical_line,
)

TR = Truncation(tol=1e-12)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


class TestGaussianLine:
    def test_constant(self):
        q = QParam(0.5)
        L = q.log_inv
        val = gaussian_line(LineIntegrand(lambda y: 1.0, q), TR)
        assert rel(val, math.sqrt(2 * math.pi * L)) < 1e-11

    def test_pure_phase(self):
        q = QParam(0.5)
        L = q.log_inv
        alpha = 2.0
        val = gaussian_line(LineIntegrand(lambda y: cmath.exp(1j * alpha * y), q,
                                          oscillation_hint=alpha), TR)
        expected = math.sqrt(2 * math.pi * L) * q.power(alpha * alpha / 2)
        assert rel(val, expected) < 1e-11

    def test_symmetric_exponential_pair(self):
        # reproduces the closed product form of the weighted reciprocal pair
        q = QParam(0.5)
        L = q.log_inv
        z, alpha = 0.3, 0.7

        def f(y):
            return cmath.exp(1j * alpha * y * q.ln_q) / qpoch_inf(
                z * cmath.exp(1j * y * q.ln_q), q, TR)

        val = math.sqrt(L / (2 * math.pi)) * gaussian_line(
            LineIntegrand(f, q, oscillation_hint=(alpha + 3) * L, sigma2=1 / L), TR)
        expected = q.power(alpha * alpha / 2) * qpoch_inf(-z * q.power(alpha + 0.5), q, TR)
        assert rel(val, expected) < 1e-9

    def test_budget_guard(self):
        q = QParam(0.5)
        with pytest.raises(QuadratureError):
            gaussian_line(LineIntegrand(lambda y: cmath.exp(0.49 * y * y / q.log_inv), q),
                          Truncation(tol=1e-13))


class TestCircleContour:
    def test_cauchy(self):
        val = circle_contour(ContourSpec(1.0, lambda z: 1 / z), TR)
        assert abs(val - 1) < 1e-14

    def test_theta_kernel_moments(self):
        # the contour kernel reproduces q^(c k^2) u^k
        q2 = QParam(0.25)
        for (k, u) in ((0, 1.0), (2, 0.9)):
            def f(z):
                return qpoch_multi([0.25, -0.5 * z * u, -0.5 / (z * u)], q2, None, TR) / z ** (k + 1)

            val = circle_contour(ContourSpec(1.0, f), TR)
            assert rel(val, 0.5 ** (k * k) * u**k) < 1e-11

    def test_radius_independence(self):
        q = QParam(0.3)
        w = 0.5
        sq = math.sqrt(q.q)

        def f(z):
            return qpoch_multi([q.q, -sq * z, -sq / z, sq * w / z], q, None, TR) / z

        a = circle_contour(ContourSpec(1.0, f), TR)
        b = circle_contour(ContourSpec(1.3, f), TR)
        assert abs(a - b) < 1e-9
        assert rel(a, ramanujan_a(w, q, TR)) < 1e-10


class TestVerticalLine:
    def test_ramanujan_representation(self):
        q = QParam(0.5)
        q2 = QParam(0.25)
        x = 0.7
        s = math.log(q.q * x) / math.log(q.q**2)

        def f(z):
            return (cmath.exp(-s * cmath.log(z))
                    / (qpoch_inf(z, q2, TR) * qpoch_inf(-q.q / cmath.sqrt(z), q, TR)))

        val = vertical_line(VerticalLineSpec(0.5, f), Truncation(tol=1e-9))
        ref = ramanujan_a(x, q, TR) / qpoch_multi([q.q, -q.q, -q.q], q, None, TR)
        assert rel(val, ref) < 1e-6

    def test_rho_validation(self):
        with pytest.raises(QuadratureError):
            VerticalLineSpec(1.2, lambda z: 1.0)


class TestRealLineFamily:
    def test_halfline_log_gaussian(self):
        val = halfline_log(lambda x: math.exp(-math.log(x) ** 2), TR)
        assert rel(val, math.sqrt(math.pi) * math.exp(0.25)) < 1e-11

    def test_finite_interval_weight_normalization(self):
        # integral of the q-Hermite weight over its support
        q = QParam(0.5)

        def f(th):
            e2 = cmath.exp(2j * th)
            return (qpoch_inf(e2, q, TR) * qpoch_inf(e2.conjugate(), q, TR)).real

        val = finite_interval(f, 0.0, math.pi, TR).real / (2 * math.pi)
        assert rel(val, 1.0 / qpoch_inf(q.q, q, TR).real) < 1e-10

    def test_real_line_gaussian(self):
        val = real_line(lambda u: math.exp(-u * u), TR)
        assert rel(val, math.sqrt(math.pi)) < 1e-11


class TestParsevalRoundtrip:
    def test_forward_then_inverse_returns_integrand(self):
        # closed transform of the product side, inverted numerically, must
        # reproduce the weighted reciprocal integrand at sample points
        q = QParam(0.5)
        L = q.log_inv
        z = 0.3
        tr = Truncation(tol=1e-11)
        from qkit.series import poch_gauss

        for i in range(10):
            x0 = -1.4 + 0.3 * i

            def f(a):
                return poch_gauss(-z * q.power(0.5), a, q, tr) * cmath.exp(-1j * a * x0)

            val = math.sqrt(L / (2 * math.pi)) * gaussian_line(
                LineIntegrand(f, q, oscillation_hint=abs(x0) + 1, sigma2=-1.0), tr)
            expected = math.exp(x0 * x0 / (2 * q.ln_q)) / qpoch_inf(z * cmath.exp(1j * x0), q, tr)
            assert rel(val, expected) < 1e-7
