import cmath
import math
import random

import pytest

from qkit import (
    ConvergenceError,
    DomainError,
    MFunctionSpec,
    PhiSpec,
    PoleError,
    PsiSpec,
    QParam,
    Truncation,
    cal_e,
    jackson_bessel,
    m_weighted,
    modified_bessel_i,
    phi,
    psi_bilateral,
    q_exp_big,
    q_exp_small,
    qpoch_finite,
    qpoch_inf,
    qpoch_multi,
    ramanujan_a,
)
from qkit.series import bessel2_normalized, bessel2_normalized_native, poch_gauss, ramanujan_a_shifted

TR = Truncation(tol=1e-14)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


class TestPhi:
    def test_chu_vandermonde(self):
        q = QParam(0.5)
        n, a, c = 4, 0.3 + 0.1j, 0.7
        lhs = phi(PhiSpec([q.power(-n), a], [c], q, q.q), TR)
        rhs = qpoch_finite(c / a, q, n) * a**n / qpoch_finite(c, q, n)
        assert rel(lhs, rhs) < 1e-11

    def test_empty_at_zero(self):
        assert phi(PhiSpec([], [], QParam(0.5), 0.0), TR) == 1

    def test_divergence_guard(self):
        with pytest.raises(ConvergenceError):
            phi(PhiSpec([0.3, 0.4], [0.5], QParam(0.5), 1.2), TR)
        with pytest.raises(DomainError):
            phi(PhiSpec([0.3, 0.4, 0.5], [0.6], QParam(0.5), 0.2), TR)

    def test_lower_pole_detected(self):
        q = QParam(0.5)
        with pytest.raises(PoleError):
            phi(PhiSpec([0.3], [q.power(-2)], q, 0.2), TR)

    def test_heine_chain(self):
        rng = random.Random(19)
        hits = 0
        while hits < 30:
            q = QParam(rng.uniform(0.3, 0.7))
            a = cmath.rect(rng.uniform(0.1, 0.6), rng.uniform(0, 2 * math.pi))
            b = cmath.rect(rng.uniform(0.1, 0.6), rng.uniform(0, 2 * math.pi))
            c = cmath.rect(rng.uniform(0.2, 0.8), rng.uniform(0, 2 * math.pi))
            z = cmath.rect(rng.uniform(0.1, 0.5), rng.uniform(0, 2 * math.pi))
            if not (abs(b) < 0.9 and abs(c / b) < 0.9 and abs(a * b * z / c) < 0.9
                    and abs(a * z) < 0.9 and abs(b * z) < 0.9):
                continue
            hits += 1
            base = phi(PhiSpec([a, b], [c], q, z), TR)
            h1 = (qpoch_multi([b, a * z], q, None, TR) / qpoch_multi([c, z], q, None, TR)
                  * phi(PhiSpec([c / b, z], [a * z], q, b), TR))
            h2 = (qpoch_multi([c / b, b * z], q, None, TR) / qpoch_multi([c, z], q, None, TR)
                  * phi(PhiSpec([a * b * z / c, b], [b * z], q, c / b), TR))
            h3 = (qpoch_inf(a * b * z / c, q, TR) / qpoch_inf(z, q, TR)
                  * phi(PhiSpec([c / a, c / b], [c], q, a * b * z / c), TR))
            t4 = (qpoch_inf(a * z, q, TR) / qpoch_inf(z, q, TR)
                  * phi(PhiSpec([a, c / b], [c, a * z], q, b * z), TR))
            for other in (h1, h2, h3, t4):
                assert rel(base, other) < 1e-10


class TestPsi:
    def test_ramanujan_sum_sampled(self):
        rng = random.Random(23)
        hits = 0
        while hits < 30:
            q = QParam(rng.uniform(0.2, 0.7))
            a = rng.uniform(1.5, 4.0)
            b = cmath.rect(rng.uniform(0.05, 0.4), rng.uniform(0, 2 * math.pi))
            z = cmath.rect(rng.uniform(0.3, 0.85), rng.uniform(0, 2 * math.pi))
            if not abs(b / a) < abs(z) < 1:
                continue
            if any(abs(a * z - q.q ** (-k)) < 0.05 for k in range(4)):
                continue
            hits += 1
            lhs = psi_bilateral(PsiSpec([a], [b], q, z), TR)
            rhs = (qpoch_multi([q.q, b / a, a * z, q.q / (a * z)], q, None, TR)
                   / qpoch_multi([b, q.q / a, z, b / (a * z)], q, None, TR))
            assert rel(lhs, rhs) < 1e-10

    def test_ramanujan_spec_point_is_zero(self):
        # a z = 1 makes both sides vanish
        q = QParam(0.4)
        lhs = psi_bilateral(PsiSpec([2.0], [0.3], q, 0.5), TR)
        rhs = (qpoch_multi([q.q, 0.15, 1.0, q.q], q, None, TR)
               / qpoch_multi([0.3, 0.2, 0.5, 0.3], q, None, TR))
        assert abs(lhs - rhs) < 1e-12

    def test_reduces_to_unilateral_at_b_equals_q(self):
        q = QParam(0.4)
        lhs = psi_bilateral(PsiSpec([2.5], [q.q], q, 0.5), TR)
        rhs = phi(PhiSpec([2.5], [], q, 0.5), TR)
        assert rel(lhs, rhs) < 1e-13

    def test_annulus_enforced(self):
        q = QParam(0.4)
        with pytest.raises(ConvergenceError):
            psi_bilateral(PsiSpec([2.0], [0.3], q, 0.05), TR)
        with pytest.raises(ConvergenceError):
            psi_bilateral(PsiSpec([2.0], [0.3], q, 1.1), TR)


class TestWeightedSeries:
    def test_zero_argument(self):
        spec = MFunctionSpec([0.3], [0.2], QParam(0.5), 0.7, 0.0)
        assert m_weighted(spec, TR) == 1

    def test_reduces_to_ramanujan(self):
        q = QParam(0.5)
        z = 0.37 + 0.2j
        spec = MFunctionSpec([], [], q, 1.0, z)
        assert rel(m_weighted(spec, TR), ramanujan_a(z, q, TR)) < 1e-12

    def test_weight_positivity_enforced(self):
        with pytest.raises(DomainError):
            MFunctionSpec([], [], QParam(0.5), 0.0, 0.2)


class TestQExponentials:
    def test_values_at_zero(self):
        q = QParam(0.5)
        assert q_exp_small(0, q, TR) == 1
        assert q_exp_big(0, q, TR) == 1
        assert ramanujan_a(0, q, TR) == 1

    def test_reciprocal_pair(self):
        q = QParam(0.5)
        z = 0.4 + 0.1j
        assert abs(q_exp_big(z, q, TR) * q_exp_small(-z, q, TR) - 1) < 1e-14

    def test_eq_pole(self):
        q = QParam(0.5)
        with pytest.raises(PoleError):
            q_exp_small(q.power(-2), q, TR)

    def test_ramanujan_at_minus_one(self):
        q = QParam(0.2)
        direct = sum(0.2 ** (n * n) / qpoch_finite(0.2, q, n).real for n in range(80))
        assert rel(ramanujan_a(-1, q, TR), direct) < 1e-13

    def test_shifted_helper_matches_naive(self):
        q = QParam(0.5)
        for shift in (-3.0, 0.0, 2.5):
            z = 0.4 + 0.2j
            stable = ramanujan_a_shifted(z, shift, q, TR)
            naive = q.power(shift * shift) * ramanujan_a(q.power(2 * shift) * z, q, TR)
            assert rel(stable, naive) < 1e-12

    def test_poch_gauss_matches_naive(self):
        q = QParam(0.55)
        for w, b in ((0.3 + 0.2j, -4.0), (-0.4, 3.0), (0.7, -20.0)):
            stable = poch_gauss(w, b, q, TR)
            naive = q.power(b * b / 2.0) * qpoch_inf(w * q.power(b), q, TR)
            assert rel(stable, naive) < 1e-12


class TestCalE:
    def test_unit_at_t_zero(self):
        assert cal_e(0.3, 0.0, QParam(0.5), TR) == 1

    def test_cross_route_grid(self):
        q = QParam(0.5)
        for theta in (0.4, 1.1, 2.2):
            for t in (0.15, 0.3 + 0.2j, -0.4):
                x = math.cos(theta)
                a = cal_e(x, t, q, TR, route="hermite")
                b = cal_e(x, t, q, TR, route="shifted")
                assert rel(a, b) < 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            cal_e(0.3, 1.2, QParam(0.5), TR)


class TestBessel:
    def test_value_at_zero(self):
        q = QParam(0.5)
        for kind in (1, 2, 3):
            assert jackson_bessel(kind, 0.7, 0, q, TR) == 0
            assert jackson_bessel(kind, 0, 0, q, TR) == 1

    def test_kind1_kind2_relation(self):
        q = QParam(0.5)
        nu, z = 0.7, 0.9
        lhs = jackson_bessel(1, nu, z, q, TR) * qpoch_inf(-z * z / 4, q, TR)
        rhs = jackson_bessel(2, nu, z, q, TR)
        assert rel(lhs, rhs) < 1e-11

    def test_kind1_continuation_beyond_disk(self):
        q = QParam(0.5)
        nu, z = 0.7, 2.5
        lhs = jackson_bessel(1, nu, z, q, TR)
        rhs = jackson_bessel(2, nu, z, q, TR) / qpoch_inf(-z * z / 4, q, TR)
        assert rel(lhs, rhs) < 1e-12

    def test_kind2_cross_route(self):
        q = QParam(0.4)
        a = jackson_bessel(2, 1.2, 1.1, q, TR)
        b = jackson_bessel(2, 1.2, 1.1, q, TR, route="alternative")
        assert rel(a, b) < 1e-11

    def test_normalized_helpers_consistent(self):
        q = QParam(0.5)
        nu, z = 0.8, 1.1
        u = z * z / 4
        a = bessel2_normalized(nu, u, q, TR)
        b = bessel2_normalized_native(nu, u, q, TR)
        assert rel(a, b) < 1e-12

    def test_modified_definition(self):
        q = QParam(0.5)
        lhs = modified_bessel_i(2, 0.5, 0.8, q, TR)
        rhs = cmath.exp(-1j * math.pi * 0.25) * jackson_bessel(2, 0.5, 0.8j, q, TR)
        assert lhs == rhs

    def test_modified_zero(self):
        assert modified_bessel_i(2, 0.5, 0, QParam(0.5), TR) == 0

    def test_modified_phi_representation(self):
        q = QParam(0.5)
        z, nu = 0.6, 0.5
        lhs = modified_bessel_i(2, nu, 2 * z, q, TR)
        rhs = z**nu / qpoch_inf(q.q, q, TR) * phi(PhiSpec([z * z], [0], q, q.power(nu + 1)), TR)
        assert rel(lhs, rhs) < 1e-10
