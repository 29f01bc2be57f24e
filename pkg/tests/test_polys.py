import cmath
import math

import pytest

from qkit import (
    DomainError,
    QParam,
    Truncation,
    WeightSpec,
    confluent_poly,
    qhermite,
    qhermite_inv,
    qhermite_inv_exp,
    qhermite_sum,
    qlaguerre,
    qpoch_finite,
    qpoch_inf,
    qpoch_multi,
    stieltjes_wigert,
    weight,
)

TR = Truncation(tol=1e-14)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def qfac(q, n):
    return qpoch_finite(q.q, q, n)


class TestQHermite:
    def test_low_degrees(self):
        q = QParam(0.5)
        assert qhermite(0, 0.3, q) == 1
        assert qhermite(1, 0.37, q) == 2 * 0.37
        assert abs(qhermite(2, 0.0, q) + 0.5) < 1e-15  # -(1-q)

    def test_recurrence_vs_sum(self):
        q = QParam(0.5)
        x = math.cos(1.1)
        assert rel(qhermite(8, x, q), qhermite_sum(8, x, q)) < 1e-12

    def test_row_sums_are_special_values(self):
        # the three quadratic binomial row sums are polynomial special values
        q = QParam(0.4)
        for n in range(0, 12):
            alt = sum((qfac(q, n) / (qfac(q, k) * qfac(q, n - k))) * (-1) ** k
                      for k in range(n + 1))
            h0 = qhermite(n, 0.0, q)
            if n % 2:
                assert abs(alt) < 1e-12 and abs(h0) < 1e-14
            else:
                assert rel(abs(alt), abs(h0)) < 1e-12
            # half-power sum is a quarter-power special value of H_n
            half = sum(q.power(k / 2.0) / (qfac(q, k) * qfac(q, n - k)) for k in range(n + 1))
            xval = (q.power(0.25) + q.power(-0.25)) / 2
            assert rel(half, q.power(n / 4.0) * qhermite(n, xval, q) / qfac(q, n)) < 1e-11
            # the shifted alternating sum is the odd-base Hermite value at zero;
            # odd rows vanish up to cancellation noise at the coefficient scale
            shifted = sum((-1) ** k * q.power(k * (k - n)) / (qfac(q, k) * qfac(q, n - k))
                          for k in range(n + 1))
            hinv0 = qhermite_inv(n, 0.0, q)
            noise = 1e-13 * abs(q.power(-n * n / 4.0))
            assert abs(shifted - hinv0 / qfac(q, n)) <= noise + 1e-11 * abs(shifted)


class TestQInvHermite:
    def test_low_degrees(self):
        q = QParam(0.5)
        assert qhermite_inv(0, 0.4, q) == 1
        xi = 0.3
        assert rel(qhermite_inv(1, math.sinh(xi), q), 2 * math.sinh(xi)) < 1e-14

    def test_exponential_form_consistency(self):
        q = QParam(0.5)
        xi = -0.42
        a = qhermite_inv(5, math.sinh(xi), q)
        b = qhermite_inv_exp(5, math.exp(xi), q)
        assert rel(a, b) < 1e-13

    def test_sinh_polynomial_single_valued(self):
        # both exponential roots of sinh give the same polynomial value
        q = QParam(0.5)
        u = 0.7
        a = qhermite_inv_exp(6, math.exp(u), q)
        b = qhermite_inv_exp(6, -math.exp(-u), q)
        assert rel(a, b) < 1e-12

    def test_relation_to_stieltjes_wigert(self):
        q = QParam(0.5)
        for n, xi in ((6, 0.4), (15, -0.3), (11, 0.1)):
            lhs = qhermite_inv(n, math.sinh(xi), q)
            rhs = (math.exp(n * xi) * qfac(q, n)
                   * stieltjes_wigert(n, math.exp(-2 * xi) * q.power(-n), q))
            assert rel(lhs, rhs) < 1e-12


class TestQLaguerre:
    def test_low_degrees(self):
        q = QParam(0.5)
        assert qlaguerre(0, 0.3, 0.9, q) == 1
        alpha, x = 0.3, 0.9
        expected = (1 - q.power(alpha + 1)) / (1 - q.q) - q.power(alpha + 1) * x / (1 - q.q)
        assert rel(qlaguerre(1, alpha, x, q), expected) < 1e-14

    def test_connection_between_orders(self):
        q = QParam(0.5)
        n, al, be, x = 5, 0.3, 0.8, 0.7
        lhs = q.power(-al * n) * qlaguerre(n, al, x, q)
        rhs = sum(
            qpoch_finite(q.power(al - be), q, n - k) / qfac(q, n - k)
            * q.power(-al * (n - k)) * q.power(-be * k) * qlaguerre(k, be, x, q)
            for k in range(n + 1))
        assert rel(lhs, rhs) < 1e-11


class TestStieltjesWigert:
    def test_low_degrees(self):
        q = QParam(0.5)
        assert stieltjes_wigert(0, 0.7, q) == 1
        assert abs(stieltjes_wigert(1, 2.0, q)) < 1e-15
        assert rel(stieltjes_wigert(1, 0.3, q), (1 - 0.5 * 0.3) / 0.5) < 1e-14

    def test_two_display_forms(self):
        q = QParam(0.5)
        x = 0.3 + 0.2j
        for n in range(0, 9):
            a = stieltjes_wigert(n, x, q)
            b = stieltjes_wigert(n, x, q, route="shifted")
            assert rel(a, b) < 1e-12

    def test_symmetry(self):
        q = QParam(0.4)
        for n, t in ((7, 0.6 + 0.2j), (20, 0.9), (13, -0.4 + 0.1j)):
            lhs = q.power(n * n) * (-t) ** n * stieltjes_wigert(n, q.power(-2 * n) / t, q)
            rhs = stieltjes_wigert(n, t, q)
            assert rel(lhs, rhs) < 1e-12


class TestConfluentFamily:
    def test_degree_zero(self):
        assert confluent_poly(0, [0.3], [0.2], 0.7, QParam(0.5)) == 1

    def test_reduces_to_stieltjes_wigert(self):
        q = QParam(0.5)
        for n in (2, 4, 6):
            a = confluent_poly(n, [], [], 0.8, q)
            b = stieltjes_wigert(n, 0.8, q)
            assert rel(a, b) < 1e-13


class TestGeneratingFunctions:
    def test_qhermite_generating_function(self):
        q = QParam(0.5)
        th, t = 1.1, 0.25
        lhs = sum(qhermite(n, math.cos(th), q) * t**n / qfac(q, n) for n in range(80))
        rhs = 1 / (qpoch_inf(t * cmath.exp(1j * th), q, TR)
                   * qpoch_inf(t * cmath.exp(-1j * th), q, TR))
        assert rel(lhs, rhs) < 1e-10

    def test_qinvhermite_generating_function(self):
        q = QParam(0.5)
        xi, t = 0.3, 0.2
        lhs = qpoch_inf(-t * math.exp(xi), q, TR) * qpoch_inf(t * math.exp(-xi), q, TR)
        rhs = sum(q.power(n * (n - 1) / 2) * t**n * qhermite_inv(n, math.sinh(xi), q)
                  / qfac(q, n) for n in range(60))
        assert rel(lhs, rhs) < 1e-10

    def test_poisson_kernel(self):
        q = QParam(0.5)
        t, xi, eta = 0.3, 0.2, -0.1
        lhs = sum(qhermite_inv(n, math.sinh(xi), q) * qhermite_inv(n, math.sinh(eta), q)
                  * q.power(n * (n - 1) / 2) / qfac(q, n) * t**n for n in range(40))
        num = qpoch_multi([-t * math.exp(xi + eta), -t * math.exp(-xi - eta),
                           t * math.exp(xi - eta), t * math.exp(eta - xi)], q, None, TR)
        rhs = num / qpoch_inf(t * t / q.q, q, TR)
        assert rel(lhs, rhs) < 1e-9


class TestWeights:
    def test_qhermite_weight(self):
        q = QParam(0.5)
        spec = WeightSpec("qhermite", q)
        val = weight(spec, 0.0, TR)
        direct = (qpoch_inf(-1.0, q, TR) ** 2).real  # e^(2 i pi/2) = -1 at x = 0
        assert rel(val, direct) < 1e-12
        with pytest.raises(DomainError):
            weight(spec, 1.2, TR)

    def test_sw_weight(self):
        q = QParam(0.5)
        spec = WeightSpec("sw_lognormal", q)
        assert abs(weight(spec, math.sqrt(q.q), TR) - 1.0) < 1e-14
        with pytest.raises(DomainError):
            weight(spec, -0.1, TR)

    def test_laguerre_weight_vanishes_at_origin(self):
        q = QParam(0.5)
        spec = WeightSpec("laguerre", q, alpha=0.7)
        assert weight(spec, 1e-9, TR) < 1e-6

    def test_w2_is_normalized_density(self):
        from qkit.quad import real_line

        q = QParam(0.5)
        spec = WeightSpec("ismail_masson_w2", q)

        def f(x):
            return weight(spec, x, TR)

        total = real_line(f, Truncation(tol=1e-11), width=2.0)
        assert abs(total.real - 1.0) < 1e-9
