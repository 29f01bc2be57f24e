import cmath
import math
import random

import pytest

from qkit import (
    DEFAULT_TRUNCATION,
    DomainError,
    PoleError,
    QParam,
    Truncation,
    partial_theta,
    qbinom,
    qgamma,
    qpoch_finite,
    qpoch_inf,
    qpoch_multi,
    theta2,
    theta3,
    theta4,
)

TR = Truncation(tol=1e-14)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


class TestQParam:
    def test_validation(self):
        for bad in (0.0, 1.0, -0.3, 1.7):
            with pytest.raises(DomainError):
                QParam(bad)

    def test_cached_fields(self):
        q = QParam(0.37)
        assert q.ln_q == math.log(0.37)
        assert q.tau.imag > 0
        # q = exp(i pi tau)
        assert abs(cmath.exp(1j * math.pi * q.tau) - 0.37) < 1e-15


class TestTruncation:
    def test_bounds(self):
        with pytest.raises(DomainError):
            Truncation(tol=1e-16)
        with pytest.raises(DomainError):
            Truncation(max_terms=4)
        with pytest.raises(DomainError):
            Truncation(strategy="guess")


class TestQPochhammer:
    def test_zero_argument(self):
        assert qpoch_finite(0, QParam(0.5), 7) == 1

    def test_two_factor_product(self):
        q = QParam(0.5)
        assert abs(qpoch_finite(0.5, q, 2) - 0.375) < 1e-15

    def test_negative_index_both_formulas(self):
        q = QParam(0.5)
        a, m = 0.3, 2
        direct = 1.0 / ((1 - 0.3 / 0.25) * (1 - 0.3 / 0.5))
        val = qpoch_finite(a, q, -m)
        alt = (-q.q / a) ** m * q.q ** (m * (m - 1) / 2) / qpoch_finite(q.q / a, q, m)
        assert rel(val, direct) < 1e-13
        assert rel(val, alt) < 1e-13

    def test_negative_index_pole(self):
        q = QParam(0.5)
        with pytest.raises(PoleError):
            qpoch_finite(q.q**2, q, -3)

    def test_infinite_vs_long_product(self):
        q = QParam(0.5)
        val = qpoch_inf(0.5, q, Truncation(tol=1e-12))
        longp = 1.0
        for k in range(200):
            longp *= 1 - 0.5 * 0.5**k
        assert rel(val, longp) < 1e-12

    def test_qq_infinite_positive(self):
        q = QParam(0.5)
        val = qpoch_inf(q.q, q, TR)
        longp = 1.0
        for k in range(1, 200):
            longp *= 1 - 0.5**k
        assert val.real > 0
        assert rel(val, longp) < 1e-12

    def test_multi(self):
        q = QParam(0.5)
        assert qpoch_multi([0, 0], q, 3) == 1
        a = 0.3 + 0.2j
        assert qpoch_multi([a], q, 5) == qpoch_finite(a, q, 5)
        two = qpoch_multi([0.2, 0.3], q, None, TR)
        assert rel(two, qpoch_inf(0.2, q, TR) * qpoch_inf(0.3, q, TR)) < 1e-14

    def test_splitting_property(self):
        # (a;q)_{m+n} = (a;q)_m (a q^m;q)_n over sampled complex a
        rng = random.Random(7)
        for _ in range(40):
            q = QParam(rng.uniform(0.2, 0.9))
            a = cmath.rect(rng.uniform(0.1, 2.0), rng.uniform(0, 2 * math.pi))
            m, n = rng.randint(-6, 8), rng.randint(-6, 8)
            try:
                whole = qpoch_finite(a, q, m + n)
                split = qpoch_finite(a, q, m) * qpoch_finite(a * q.power(m), q, n)
            except PoleError:
                continue
            assert rel(whole, split) < 1e-12

    def test_finite_infinite_splice(self):
        rng = random.Random(11)
        for _ in range(30):
            q = QParam(rng.uniform(0.2, 0.8))
            a = cmath.rect(rng.uniform(0.1, 1.5), rng.uniform(0, 2 * math.pi))
            n = rng.randint(0, 30)
            lhs = qpoch_finite(a, q, n) * qpoch_inf(a * q.power(n), q, TR)
            assert rel(lhs, qpoch_inf(a, q, TR)) < 1e-12


class TestQBinom:
    def test_edges(self):
        q = QParam(0.5)
        assert qbinom(5, 0, q) == 1
        assert qbinom(5, 7, q) == 0
        assert qbinom(5, -1, q) == 0

    def test_one_plus_q(self):
        assert abs(qbinom(2, 1, QParam(0.5)) - 1.5) < 1e-15

    def test_pascal_recurrence(self):
        q = QParam(0.3)
        for n in range(1, 10):
            for k in range(0, n + 1):
                lhs = qbinom(n, k, q)
                rhs = qbinom(n - 1, k - 1, q) + q.power(k) * qbinom(n - 1, k, q)
                assert rel(lhs, rhs) < 1e-13


class TestQGamma:
    def test_small_integers(self):
        q = QParam(0.5)
        assert rel(qgamma(1, q, TR), 1.0) < 1e-13
        assert rel(qgamma(2, q, TR), 1.0) < 1e-13
        assert rel(qgamma(3, q, TR), 1.5) < 1e-13

    def test_functional_equation(self):
        # Gamma_q(x+1) = (1-q^x)/(1-q) Gamma_q(x)
        q = QParam(0.4)
        for x in (0.7, 1.3, 2.6 + 0.4j):
            lhs = qgamma(x + 1, q, TR)
            rhs = (1 - q.power(x)) / (1 - q.q) * qgamma(x, q, TR)
            assert rel(lhs, rhs) < 1e-12

    def test_pole(self):
        with pytest.raises(PoleError):
            qgamma(0, QParam(0.5), TR)
        with pytest.raises(PoleError):
            qgamma(-2, QParam(0.5), TR)


class TestTheta:
    def test_zero_argument_rejected(self):
        with pytest.raises(DomainError):
            theta4(0, QParam(0.5), TR)

    def test_vanishing_at_z_equals_q(self):
        assert theta4(0.5, QParam(0.5), TR) == 0

    def test_triple_product_cross_route(self):
        rng = random.Random(3)
        done = 0
        while done < 50:
            q = QParam(rng.choice([0.1, 0.5, 0.9]))
            # phase margin keeps the value scale healthy for large q (the
            # function is exponentially small near its positive-axis zeros)
            phase_min = 0.1 if q.q <= 0.55 else 1.3
            phase = rng.choice([-1, 1]) * rng.uniform(phase_min, math.pi)
            z = cmath.rect(rng.uniform(0.3, 2.5), phase)
            if any(abs(z / q.q ** (2 * k + 1) - 1.0) < 0.08 for k in range(-9, 10)):
                continue
            done += 1
            s = theta4(z, q, TR, route="series")
            p = theta4(z, q, TR, route="product")
            assert rel(s, p) < 1e-11

    def test_real_bilateral_sums(self):
        q = QParam(0.5)
        direct = sum(0.5 ** (n * n) * (-1.0) ** n for n in range(-40, 41))
        assert rel(theta4(1.0, q, TR), direct) < 1e-13
        q3 = QParam(0.3)
        direct = sum(0.3 ** (n * n) for n in range(-40, 41))
        assert rel(theta4(-1.0, q3, TR), direct) < 1e-13

    def test_theta3_periodicity(self):
        q = QParam(0.5)
        v = 0.13 + 0.21j
        assert rel(theta3(v + 1, q, TR), theta3(v, q, TR)) < 1e-12

    def test_theta3_quasiperiodicity(self):
        q = QParam(0.5)
        v = 0.13 + 0.21j
        for n in (1, 2, 3):
            lhs = theta3(v + n * q.tau, q, TR)
            rhs = q.power(-n * n) * cmath.exp(-2 * n * math.pi * v * 1j) * theta3(v, q, TR)
            assert rel(lhs, rhs) < 1e-10

    def test_zeros(self):
        q = QParam(0.5)
        assert abs(theta3(0.5 + q.tau / 2, q, TR)) < 1e-14
        assert abs(theta2(0.5, q, TR)) < 1e-14

    def test_theta2_series_route(self):
        q = QParam(0.4)
        v = 0.2 + 0.1j
        assert rel(theta2(v, q, TR), theta2(v, q, TR, route="series")) < 1e-12

    def test_modular_transform(self):
        rng = random.Random(5)
        for _ in range(5):
            q = QParam(rng.uniform(0.3, 0.7))
            v = complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.2, 0.2))
            tau2 = -1 / q.tau
            q2 = QParam(abs(cmath.exp(1j * math.pi * tau2)))
            lhs = theta3(v / q.tau, q2, TR)
            rhs = cmath.sqrt(q.tau / 1j) * cmath.exp(1j * math.pi * v * v / q.tau) * theta3(v, q, TR)
            assert rel(lhs, rhs) < 1e-9


class TestPartialTheta:
    def test_values(self):
        q = QParam(0.5)
        assert partial_theta(0, q, TR) == 1
        for v in (1.0, -1.0):
            direct = sum(0.5 ** (n * n) * v**n for n in range(60))
            assert rel(partial_theta(v, q, TR), direct) < 1e-13
