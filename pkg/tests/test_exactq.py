import random
from fractions import Fraction

import pytest

from qkit import DomainError, QParam, Truncation, UnsupportedIdentityError
from qkit.exactq import FPS, exact_identity_ids, qpoch_series, verify_exact
from qkit.identities import evaluate_identity, get_identity


class TestFPS:
    def test_geometric_reciprocal(self):
        one_minus_z = FPS([1, -1, 0, 0, 0])
        inv = one_minus_z.reciprocal()
        assert inv.coeffs == [Fraction(1)] * 5

    def test_difference_of_squares(self):
        a = FPS([1, -1, 0])
        b = FPS([1, 1, 0])
        assert (a * b).coeffs == [Fraction(1), Fraction(0), Fraction(-1)]

    def test_mul_commutes_and_associates(self):
        rng = random.Random(13)
        for _ in range(20):
            def rand_fps():
                return FPS([Fraction(rng.randint(-5, 5), rng.randint(1, 7)) for _ in range(9)])

            a, b, c = rand_fps(), rand_fps(), rand_fps()
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)

    def test_reciprocal_needs_unit(self):
        with pytest.raises(DomainError):
            FPS([0, 1, 2]).reciprocal()

    def test_mismatched_orders_truncate(self):
        a = FPS([1, 2, 3, 4])
        b = FPS([1, 1])
        assert (a + b).order == 1
        assert (a * b).order == 1


class TestQPochSeries:
    def test_infinite_product_coefficients(self):
        # (z;q)_inf has coefficients (-1)^n q^(n(n-1)/2)/(q;q)_n
        q = Fraction(1, 2)
        got = qpoch_series(1, 1, q, None, 6)
        for n in range(7):
            qfac = Fraction(1)
            for k in range(1, n + 1):
                qfac *= 1 - q**k
            expected = Fraction(-1) ** n * q ** (n * (n - 1) // 2) / qfac
            assert got.coeffs[n] == expected

    def test_finite_matches_product(self):
        q = Fraction(1, 3)
        a = Fraction(2, 5)
        fin = qpoch_series(a, 1, q, 3, 5)
        direct = FPS.const(1, 5)
        for k in range(3):
            direct = direct * (FPS.const(1, 5) - FPS.monomial(a * q**k, 1, 5))
        assert fin == direct


class TestVerifyExact:
    def test_alternating_binomial_row(self):
        r = verify_exact("qbinom1", 40, Fraction(1, 3))
        assert r["equal"] and r["first_mismatch"] is None

    def test_all_supported_at_two_bases(self):
        for qrat in (Fraction(1, 3), Fraction(1, 2)):
            for ident in exact_identity_ids():
                r = verify_exact(ident, 20, qrat)
                assert r["equal"], (ident, qrat, r)

    def test_unsupported(self):
        with pytest.raises(UnsupportedIdentityError):
            verify_exact("nonexistent", 10, Fraction(1, 3))

    def test_domain(self):
        with pytest.raises(DomainError):
            verify_exact("qbinom1", 10, Fraction(3, 2))
        with pytest.raises(DomainError):
            verify_exact("qbinom1", 0, Fraction(1, 2))


class TestFloatAgreement:
    def test_float_registry_matches_exact_verdict(self):
        # identities proved exactly must also pass in floating point
        shared = [i for i in exact_identity_ids()
                  if i not in ("qbinom_alternating", "qbinom_qinvhermite_zero",
                               "qbinom_half_base")]
        for ident_id in shared:
            try:
                rec = get_identity(ident_id)
            except Exception:
                continue
            rng = random.Random(f"xcheck:{ident_id}")
            rep = evaluate_identity(ident_id, rec.sampler(rng))
            assert rep.passed, (ident_id, rep.rel_err)
