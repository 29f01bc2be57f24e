import pytest

from qkit import DomainError, QParam, Truncation, q_exp_big, q_exp_small
from qkit.asymptotics import FAMILIES, asymp_error, asymp_rate


class TestAsympError:
    def test_errors_decrease(self):
        params = {"q": 0.4, "z": 0.7}
        e3 = asymp_error("AqScaled", 3, params)
        e4 = asymp_error("AqScaled", 4, params)
        assert e4 < e3

    def test_sw_fixed_bound(self):
        e10 = asymp_error("SwFixed", 10, {"q": 0.5, "x": 0.3})
        assert e10 <= 10 * 0.5**10

    def test_laguerre_fixed_bound(self):
        e8 = asymp_error("QLaguerreFixed", 8, {"q": 0.5, "alpha": 0.5, "x": 0.4})
        assert e8 <= 10 * 0.5**8

    def test_rejects_bad_degree(self):
        with pytest.raises(DomainError):
            asymp_error("AqScaled", 0, {"q": 0.4, "z": 0.7})

    def test_unknown_family(self):
        from qkit.errors import QKitError

        with pytest.raises(QKitError):
            asymp_error("NoSuchFamily", 3, {})


class TestAsympRate:
    def test_canonical_point_of_every_family(self):
        for fid in FAMILIES:
            rep = asymp_rate(fid)
            assert rep.passed, f"{fid}: rate {rep.fitted_rate} outside {rep.band}"

    def test_eventually_monotone(self):
        for fid, fam in FAMILIES.items():
            rep = asymp_rate(fid)
            errs = [e for e in rep.errors if e > 1e-12]
            tail = errs[1:]
            assert all(b < a for a, b in zip(tail, tail[1:])), fid

    def test_band_definition(self):
        rep = asymp_rate("AqScaled", {"q": 0.4, "z": 0.7}, (4, 10))
        assert rep.band == (0.8 * 0.4, 1.25 * 0.4)
        assert 0.32 <= rep.fitted_rate <= 0.5

    def test_window_too_short(self):
        with pytest.raises(DomainError):
            asymp_rate("AqScaled", {"q": 0.4, "z": 0.7}, (4, 6))

    def test_noise_floor_inconclusive(self):
        # at tiny q the error sequence dives under the noise floor immediately
        rep = asymp_rate("SwFixed", {"q": 0.05, "x": 0.2}, (12, 18))
        assert rep.status == "inconclusive"


class TestSmallQBound:
    def test_reciprocal_product_inequality(self):
        # |1/(z;q)_inf - 1| <= 2|z|/(1-q) on |z| < (1-q)/2
        import cmath
        import math
        import random

        tr = Truncation(tol=1e-13)
        rng = random.Random(31)
        for _ in range(1000):
            q = QParam(rng.uniform(0.1, 0.9))
            radius = (1 - q.q) / 2 * rng.random()
            z = cmath.rect(radius, rng.uniform(0, 2 * math.pi))
            val = abs(q_exp_small(z, q, tr) - 1)
            assert val <= 2 * abs(z) / (1 - q.q) + 1e-12
