"""SERIES group: expansion formulas, connection relations, multiplication formulas.

Both sides of every entry are series/finite-sum evaluations; the two
routes are kept structurally independent (direct summation vs expansion
over a different function family).
"""

from __future__ import annotations

import cmath
import math

from ..core import QParam
from ..polys import qhermite_inv_exp, qlaguerre, stieltjes_wigert
from ..series import (
    PhiSpec,
    bessel2_normalized,
    bessel2_normalized_native,
    bessel3_normalized_native,
    cal_e,
    modified_bessel_i,
    phi,
    q_exp_small,
    ramanujan_a,
)
from ._common import cring, exp_i, ident, qdraw, qfac, qp, qpm, qpn, resample, rint, runif


def _sum(terms, tr, start=0, guard=6):
    """Sum terms(k) until two consecutive terms fall below tolerance."""
    total = 0.0j
    quiet = 0
    for k in range(start, 100000):
        t = terms(k)
        total += t
        if abs(t) < tr.tol * max(abs(total), 1.0):
            quiet += 1
            if quiet >= 2 and k - start > guard:
                return total
        else:
            quiet = 0
    return total


# --- the two-variable q-exponential as a theta-type series ---------------------

def _se1_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "theta": runif(rng, 0.3, 2.8), "t": runif(rng, 0.1, 0.6)}


def _se1_lhs(p, tr):
    return cal_e(math.cos(p["theta"]), p["t"], QParam(p["q"]), tr)


def _se1_rhs(p, tr):
    q = QParam(p["q"])
    q2 = QParam(q.q * q.q)
    t, th = p["t"], p["theta"]
    e2 = exp_i(2 * th)

    def term(k):
        return (q.power(k * k / 4.0) * qp(-t * t * e2 * q.power(k + 1), q2, tr)
                * qpn(-e2, q, k) * (t * exp_i(-th)) ** k / qfac(q, k))

    return _sum(term, tr) / qp(t * t * q.q, q2, tr)


ident("series_cal_e_theta", "SERIES",
      "two-variable q-exponential as a quarter-power series with product tails",
      _se1_lhs, _se1_rhs, _se1_sample, "series-hermite", "series-theta")


# --- Ramanujan function expansions ---------------------------------------------

def _sa1_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "a": cring(rng, 0.2, 1.0), "b": cring(rng, 0.2, 1.0)}


def _sa1_rhs(p, tr):
    q = QParam(p["q"])
    a, b = p["a"], p["b"]

    def term(k):
        return (qpn(b, q, k) / qfac(q, k) * q.power(k * (k + 1) / 2.0) * a ** k
                * ramanujan_a(a * q.power(k), q, tr))

    return _sum(term, tr)


ident("airy_mult", "SERIES",
      "multiplication formula for the Ramanujan function",
      lambda p, tr: ramanujan_a(p["a"] * p["b"], QParam(p["q"]), tr),
      _sa1_rhs, _sa1_sample, "series-direct", "series-expansion")


def _sa2_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "a": cring(rng, 0.2, 1.2)}


def _sa2_rhs(p, tr):
    q = QParam(p["q"])
    a = p["a"]

    def term(k):
        return q.power(k * (k + 1) / 2.0) / qfac(q, k) * a ** k * ramanujan_a(a * q.power(k), q, tr)

    return _sum(term, tr)


ident("airy_unit_expansion", "SERIES",
      "unit value of the alternating Ramanujan-function expansion",
      lambda p, tr: 1.0 + 0.0j,
      _sa2_rhs, _sa2_sample, "closed-form", "series-expansion")


def _sa3_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng, 0.3, 0.7), "z": cring(rng, 0.2, 0.9), "w": cring(rng, 0.1, 0.9)}

    def ok(p):
        return abs(p["z"]) < 0.95 and abs(p["z"] * p["w"]) < 0.95

    return resample(rng, draw, ok)


def _sa3_rhs(p, tr):
    q = QParam(p["q"])
    z, w = p["z"], p["w"]

    def term(k):
        return (q.power(k * k) / qfac(q, k) * (-z) ** k * qpn(w, q, k)
                * ramanujan_a(w * z * q.power(2 * k), q, tr))

    return _sum(term, tr)


ident("airy_two_param", "SERIES",
      "two-parameter expansion of the Ramanujan function over itself",
      lambda p, tr: ramanujan_a(p["z"], QParam(p["q"]), tr),
      _sa3_rhs, _sa3_sample, "series-direct", "series-expansion")


def _sa4_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng, 0.3, 0.7), "z": cring(rng, 0.2, 1.5)}

    def ok(p):
        # poles of both sides at z = q^(-2k-2); stay away from the real ray
        return abs(p["z"].imag) > 0.05 or abs(p["z"]) < 1.0 / p["q"] - 0.3

    return resample(rng, draw, ok)


def _sa4_lhs(p, tr):
    q = QParam(p["q"])
    q2 = QParam(q.q * q.q)
    return ramanujan_a(p["z"], q, tr) / qp(p["z"] * q2.q, q2, tr)


def _sa4_rhs(p, tr):
    q = QParam(p["q"])
    q2 = QParam(q.q * q.q)
    z = p["z"]

    def term(k):
        return q.power(k * k) * (-z) ** k / (qpn(q2.q, q2, k) * qpn(z * q2.q, q2, k))

    return _sum(term, tr)


ident("airy_base_shift", "SERIES",
      "normalized Ramanujan function as a doubled-base inverse-product series",
      _sa4_lhs, _sa4_rhs, _sa4_sample, "series-direct", "series-shifted")


# --- Stieltjes-Wigert expansions -------------------------------------------------

def _ssw_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "x": cring(rng, 0.2, 1.2), "n": rint(rng, 0, 8)}


def _ssw1_lhs(p, tr):
    q = QParam(p["q"])
    n, x = p["n"], p["x"]
    return stieltjes_wigert(n, x, q) * qfac(q, n) / qp(-x * q.power(n + 1), q, tr)


def _ssw1_rhs(p, tr):
    q = QParam(p["q"])
    n, x = p["n"], p["x"]
    w = -x * q.power(n + 1)

    def term(k):
        return q.power(k * k) * (-x) ** k / (qfac(q, k) * qpn(w, q, k))

    return _sum(term, tr)


ident("sw_aq_ratio", "SERIES",
      "Stieltjes-Wigert polynomial over a product tail as an inverse-product series",
      _ssw1_lhs, _ssw1_rhs, _ssw_sample, "finite-sum", "series-expansion")


def _ssw3_rhs(p, tr):
    q = QParam(p["q"])
    n, x = p["n"], p["x"]

    def term(k):
        return ((x * q.power(n)) ** k / qfac(q, k) * q.power(k * (k + 1) / 2.0)
                * ramanujan_a(q.power(k) * x, q, tr))

    return _sum(term, tr) / qfac(q, n)


ident("sw_from_aq", "SERIES",
      "Stieltjes-Wigert polynomial expanded over scaled Ramanujan functions",
      lambda p, tr: stieltjes_wigert(p["n"], p["x"], QParam(p["q"])),
      _ssw3_rhs, _ssw_sample, "finite-sum", "series-expansion")


def _ssw4_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "x": cring(rng, 0.2, 1.2), "w": cring(rng, 0.05, 0.6)}


def _ssw4_lhs(p, tr):
    q = QParam(p["q"])
    x, w = p["x"], p["w"]

    def term(n):
        return stieltjes_wigert(n, x, q) * w ** n

    return _sum(term, tr, guard=10)


def _ssw4_rhs(p, tr):
    q = QParam(p["q"])
    return ramanujan_a(p["x"] * p["w"], q, tr) / qp(p["w"], q, tr)


ident("sw_genfun", "SERIES",
      "Stieltjes-Wigert generating function in Ramanujan-function form",
      _ssw4_lhs, _ssw4_rhs, _ssw4_sample, "series-polynomials", "series-closed")


# --- q-Laguerre connection and expansion relations -------------------------------

def _lc_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "alpha": runif(rng, 0.1, 1.2), "beta": runif(rng, 0.1, 1.2),
            "x": cring(rng, 0.2, 1.0), "n": rint(rng, 0, 7)}


def _lc_lhs(p, tr):
    q = QParam(p["q"])
    return q.power(-p["alpha"] * p["n"]) * qlaguerre(p["n"], p["alpha"], p["x"], q)


def _lc_rhs(p, tr):
    q = QParam(p["q"])
    n, al, be, x = p["n"], p["alpha"], p["beta"], p["x"]
    total = 0.0j
    for k in range(n + 1):
        total += (qpn(q.power(al - be), q, n - k) / qfac(q, n - k)
                  * q.power(-al * (n - k)) * q.power(-be * k) * qlaguerre(k, be, x, q))
    return total


ident("laguerre_conn_alpha_beta", "SERIES",
      "connection between q-Laguerre families of different orders "
      "(with the q^(-alpha(n-k)) factor the generating function forces)",
      _lc_lhs, _lc_rhs, _lc_sample, "finite-sum", "finite-connection", corrected=True)


def _sl1_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "alpha": runif(rng, 0.1, 1.2),
            "x": cring(rng, 0.2, 1.0), "n": rint(rng, 0, 6)}


def _sl1_lhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]
    return (qp(q.power(al + n + 1), q, tr) * qfac(q, n) * qlaguerre(n, al, x, q)
            / qp(-x * q.power(al + n + 1), q, tr))


def _sl1_rhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]
    w = -x * q.power(al + n + 1)

    def term(k):
        return (q.power(k * (k - 1) / 2.0 + k * (al + 1)) / qfac(q, k) * (-1.0) ** k
                * qpn(-x, q, k) / qpn(w, q, k))

    return _sum(term, tr)


ident("laguerre_ratio_series", "SERIES",
      "normalized q-Laguerre polynomial as a ratio-of-products series",
      _sl1_lhs, _sl1_rhs, _sl1_sample, "finite-sum", "series-expansion")


def _sl2_lhs(p, tr):
    q = QParam(p["q"])
    return qpn(q.power(p["alpha"] + 1), q, p["n"]) / qfac(q, p["n"])


def _sl2_rhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]

    def term(k):
        return (qpn(q.power(n), q, k) * q.power(k * (k - 1) / 2.0) * (x * q.power(al + 1)) ** k
                / (qfac(q, k) * qpn(q.power(al + n + 1), q, k))
                * qlaguerre(n, al + k, x, q))

    return _sum(term, tr)


ident("laguerre_unit_series", "SERIES",
      "argument-free product ratio as an order-shifted q-Laguerre series",
      _sl2_lhs, _sl2_rhs, _sl1_sample, "finite-product", "series-expansion")


def _sl3_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "alpha": runif(rng, 0.1, 1.2), "beta": runif(rng, 0.1, 1.2),
            "x": cring(rng, 0.2, 1.0), "n": rint(rng, 0, 5)}


def _sl3_lhs(p, tr):
    q = QParam(p["q"])
    n, al, be, x = p["n"], p["alpha"], p["beta"], p["x"]
    return qp(q.power(al + n + 1), q, tr) / qp(q.power(be + n + 1), q, tr) * qlaguerre(n, al, x, q)


def _sl3_rhs(p, tr):
    q = QParam(p["q"])
    n, al, be, x = p["n"], p["alpha"], p["beta"], p["x"]

    def term(k):
        return (qpn(q.power(be - al), q, k) * q.power(k * (k - 1) / 2.0)
                * (-q.power(al + 1)) ** k / (qfac(q, k) * qpn(q.power(be + n + 1), q, k))
                * qlaguerre(n, be + k, x * q.power(al - be), q))

    return _sum(term, tr)


ident("laguerre_shift_series", "SERIES",
      "q-Laguerre polynomial re-expanded over a shifted order family "
      "(prefactor exponents carry the degree, as the derivation requires)",
      _sl3_lhs, _sl3_rhs, _sl3_sample, "finite-sum", "series-expansion", corrected=True)


def _sl4_rhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]

    def term(k):
        return (q.power(k * (k - 1) / 2.0) / qfac(q, k) * (-q.power(al + 1)) ** k
                * stieltjes_wigert(n, x * q.power(k + al), q))

    return _sum(term, tr) / qp(q.power(al + n + 1), q, tr)


ident("laguerre_from_sw", "SERIES",
      "q-Laguerre polynomial expanded over scaled Stieltjes-Wigert polynomials",
      lambda p, tr: qlaguerre(p["n"], p["alpha"], p["x"], QParam(p["q"])),
      _sl4_rhs, _sl1_sample, "finite-sum", "series-expansion")


def _sl5_lhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]
    return stieltjes_wigert(n, x * q.power(al), q) / qp(q.power(al + n + 1), q, tr)


def _sl5_rhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]

    def term(k):
        return (q.power(k * k + k * al) / (qfac(q, k) * qpn(q.power(al + n + 1), q, k))
                * qlaguerre(n, al + k, x, q))

    return _sum(term, tr)


ident("sw_from_laguerre", "SERIES",
      "scaled Stieltjes-Wigert polynomial expanded over order-shifted q-Laguerre",
      _sl5_lhs, _sl5_rhs, _sl1_sample, "finite-sum", "series-expansion")


# --- modified kind-2 function as a basic confluent series -------------------------

def _mb_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.5), "z": runif(rng, 0.2, 1.2)}


def _mb_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]
    return (z ** nu / qp(q.q, q, tr)
            * phi(PhiSpec([z * z], [0.0], q, q.power(nu + 1)), tr))


ident("modified_bessel_phi11", "SERIES",
      "modified kind-2 q-Bessel at doubled argument as a basic confluent value",
      lambda p, tr: modified_bessel_i(2, p["nu"], 2 * p["z"], QParam(p["q"]), tr),
      _mb_rhs, _mb_sample, "series-bessel", "series-phi", default_tol=1e-10)


# --- kind-2 q-Bessel expansions -----------------------------------------------------

def _sb1_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": rint(rng, 1, 4), "alpha": runif(rng, 0.2, 1.2),
            "z": runif(rng, 0.4, 1.4)}


def _sb1_lhs(p, tr):
    q = QParam(p["q"])
    nu, al, z = p["nu"], p["alpha"], p["z"]
    return ((z / 2.0) ** (nu + al) * bessel2_normalized_native(nu + al, z * z / 4.0, q, tr)
            * q.power(al * nu / 2.0))


def _sb1_rhs(p, tr):
    q = QParam(p["q"])
    nu, al, z = p["nu"], p["alpha"], p["z"]
    total = 0.0j
    for k in range(nu + 1):  # (q^-nu;q)_k terminates
        u = z * z * q.power(nu).real / 4.0
        total += (qpn(q.power(-nu), q, k) / qfac(q, k) * q.power(k * (k + 1) / 2.0)
                  * (-2.0 * q.power((nu + 2 * al) / 2.0) / z) ** k
                  * (z * q.power(nu / 2.0).real / 2.0) ** (al + k)
                  * bessel2_normalized_native(al + k, u, q, tr))
    return (z / 2.0) ** nu * total


ident("bessel_order_shift", "SERIES",
      "order-shifted kind-2 q-Bessel as a terminating sum over shifted orders",
      _sb1_lhs, _sb1_rhs, _sb1_sample, "series-direct", "series-expansion")


def _sb2_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.3), "w": runif(rng, 0.4, 1.4),
            "z": runif(rng, 0.3, 1.3)}


def _sb2_lhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]
    return (w * z / 2.0) ** nu * bessel2_normalized_native(nu, w * w * z * z / 4.0, q, tr)


def _sb2_rhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]

    def term(k):
        return (qpn(z * z, q, k) / qfac(q, k) * q.power(k * (k + 1) / 2.0)
                * (q.power(nu) * w / 2.0) ** k
                * (w / 2.0) ** (nu + k) * bessel2_normalized_native(nu + k, w * w / 4.0, q, tr))

    return z ** nu * _sum(term, tr)


ident("bessel_mult", "SERIES",
      "multiplication formula for the kind-2 q-Bessel function",
      _sb2_lhs, _sb2_rhs, _sb2_sample, "series-direct", "series-expansion")


def _sb3a_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.3), "w": runif(rng, 0.1, 0.8),
            "z": runif(rng, 0.3, 1.2)}


def _sb3a_lhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]
    return bessel2_normalized_native(nu, w * w * z * z, q, tr)


def _sb3a_rhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]

    def term(n):
        return qlaguerre(n, nu, z * z, q) * w ** (2 * n) / qpn(q.power(nu + 1), q, n)

    body = _sum(term, tr, guard=10)
    return qp(w * w, q, tr) * qp(q.power(nu + 1), q, tr) / qp(q.q, q, tr) * body


ident("bessel_laguerre_genfun", "SERIES",
      "normalized kind-2 q-Bessel as the q-Laguerre generating function "
      "(single base factorial in the denominator)",
      _sb3a_lhs, _sb3a_rhs, _sb3a_sample, "series-direct", "series-expansion",
      corrected=True)


def _sb3b_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "alpha": runif(rng, 0.2, 1.3), "z": runif(rng, 0.3, 1.3),
            "n": rint(rng, 0, 5)}


def _sb3b_lhs(p, tr):
    q = QParam(p["q"])
    n, al, z = p["n"], p["alpha"], p["z"]
    return qlaguerre(n, al, z * z / 4.0, q) * (z / 2.0) ** al


def _sb3b_rhs(p, tr):
    q = QParam(p["q"])
    n, al, z = p["n"], p["alpha"], p["z"]

    def term(k):
        return (q.power(k * (k + 1) / 2.0) / qfac(q, k) * (z * q.power(al + n) / 2.0) ** k
                * (z / 2.0) ** (k + al) * bessel2_normalized_native(k + al, z * z / 4.0, q, tr))

    return qp(q.power(n + 1), q, tr) / qp(q.power(al + n + 1), q, tr) * _sum(term, tr)


ident("bessel_laguerre_inverse", "SERIES",
      "q-Laguerre polynomial as a series over order-shifted kind-2 functions",
      _sb3b_lhs, _sb3b_rhs, _sb3b_sample, "finite-sum", "series-expansion")


def _sb4a_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.4), "z": runif(rng, 0.3, 1.4)}


def _sb4a_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(k):
        return (qpn(-z * z / 4.0, q, k) / qfac(q, k) * q.power(k * (k + 1) / 2.0)
                * (-q.power(nu)) ** k)

    return (z / 2.0) ** nu / qp(q.q, q, tr) * _sum(term, tr)


ident("bessel_poch_series", "SERIES",
      "kind-2 q-Bessel from the alternating shifted-factorial expansion",
      lambda p, tr: (p["z"] / 2.0) ** p["nu"] * bessel2_normalized_native(
          p["nu"], p["z"] ** 2 / 4.0, QParam(p["q"]), tr),
      _sb4a_rhs, _sb4a_sample, "series-direct", "series-expansion")


def _sb4b_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(k):
        return (q.power(k * (k + 1) / 2.0) / qfac(q, k) * (q.power(nu) * z / 2.0) ** k
                * (z / 2.0) ** (k + nu) * bessel2_normalized_native(k + nu, z * z / 4.0, q, tr))

    return _sum(term, tr)


ident("bessel_unit_series", "SERIES",
      "product ratio as a weighted series of order-shifted kind-2 functions",
      lambda p, tr: (qp(QParam(p["q"]).power(p["nu"] + 1), QParam(p["q"]), tr)
                     * (p["z"] / 2.0) ** p["nu"] / qp(p["q"], QParam(p["q"]), tr)),
      _sb4b_rhs, _sb4a_sample, "product", "series-expansion")


def _sb5a_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(k):
        return ((-q.power(nu)) ** k / qfac(q, k) * q.power(k * (k + 1) / 2.0)
                * ramanujan_a(q.power(nu + k) * z * z, q, tr))

    return z ** nu / qp(q.q, q, tr) * _sum(term, tr)


ident("bessel_airy_pair_a", "SERIES",
      "kind-2 q-Bessel at doubled argument from scaled Ramanujan functions",
      lambda p, tr: p["z"] ** p["nu"] * bessel2_normalized_native(
          p["nu"], p["z"] ** 2, QParam(p["q"]), tr),
      _sb5a_rhs, _sb4a_sample, "series-direct", "series-expansion")


def _sb5b_lhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]
    return z ** nu * ramanujan_a(q.power(nu) * z * z, q, tr) / qp(q.q, q, tr)


def _sb5b_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(k):
        return (q.power(k * k) / qfac(q, k) * (q.power(nu) / z) ** k
                * z ** (k + nu) * bessel2_normalized_native(k + nu, z * z, q, tr))

    return _sum(term, tr)


ident("bessel_airy_pair_b", "SERIES",
      "scaled Ramanujan function from order-shifted kind-2 functions (inverse pair)",
      _sb5b_lhs, _sb5b_rhs, _sb4a_sample, "series-direct", "series-expansion")


# --- kind-3 q-Bessel expansions ------------------------------------------------------

def _sb313_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "mu": runif(rng, 0.3, 1.5),
            "z": runif(rng, 0.3, 1.2)}


def _sb313_lhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]
    return z ** (p["mu"] - nu) * z ** nu * bessel3_normalized_native(nu, z * z, q, tr)


def _sb313_rhs(p, tr):
    q = QParam(p["q"])
    nu, mu, z = p["nu"], p["mu"], p["z"]

    def term(n):
        zz = q.power(n / 2.0).real * z
        return (qpn(q.power(mu - nu), q, n) / qfac(q, n) * (-q.power(nu + 0.5) / z) ** n
                * q.power(-n * mu / 2.0)
                * zz ** (mu + n) * bessel3_normalized_native(mu + n, zz * zz, q, tr))

    return _sum(term, tr)


ident("bessel3_order_conn", "SERIES",
      "kind-3 q-Bessel connected to a family of shifted orders and arguments "
      "(terms carry the q^(-n mu/2) normalization of the shifted pair)",
      _sb313_lhs, _sb313_rhs, _sb313_sample, "series-direct", "series-expansion",
      corrected=True)


def _sb314_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "w": runif(rng, 0.9, 1.6),
            "z": runif(rng, 0.3, 1.0)}


def _sb314_lhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]
    u = z / w
    return u ** nu * bessel3_normalized_native(nu, u * u, q, tr)


def _sb314_rhs(p, tr):
    q = QParam(p["q"])
    nu, w, z = p["nu"], p["w"], p["z"]

    def term(n):
        zz = q.power(n / 2.0).real * z
        return (qpn(w * w, q, n) / qfac(q, n) * (-q.power((1 - nu) / 2.0) * z / (w * w)) ** n
                * zz ** (nu + n) * bessel3_normalized_native(nu + n, zz * zz, q, tr))

    return w ** (-nu) * _sum(term, tr)


ident("bessel3_arg_conn", "SERIES",
      "kind-3 q-Bessel at a scaled argument as a shifted-order expansion",
      _sb314_lhs, _sb314_rhs, _sb314_sample, "series-direct", "series-expansion")


def _sb315_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "z": runif(rng, 0.3, 1.2)}


def _sb315_lhs(p, tr):
    q = QParam(p["q"])
    return qp(p["z"] ** 2 * q.q, q, tr) / qp(q.q, q, tr)


def _sb315_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(n):
        zz = q.power(n / 2.0).real * z
        return (q.power(n * (n + nu) / 2.0) / qfac(q, n) * z ** (-nu - n)
                * zz ** (nu + n) * bessel3_normalized_native(nu + n, zz * zz, q, tr))

    return _sum(term, tr)


ident("bessel3_product_series", "SERIES",
      "shifted product as an order-sum of kind-3 q-Bessel values",
      _sb315_lhs, _sb315_rhs, _sb315_sample, "product", "series-expansion")


def _sb318_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "z": runif(rng, 0.3, 1.0),
            "n": rint(rng, 0, 5)}


def _sb318_lhs(p, tr):
    q = QParam(p["q"])
    return qlaguerre(p["n"], p["nu"], -p["z"] ** 2 * q.power(-p["nu"]), q)


def _sb318_rhs(p, tr):
    q = QParam(p["q"])
    nu, z, n = p["nu"], p["z"], p["n"]

    def term(k):
        zz = z * q.power((n + k) / 2.0).real
        return (q.power(k * (k - nu - n) / 2.0) / qfac(q, k) * z ** k
                * (zz ** (k + nu) / (z * q.power(n / 2.0).real) ** nu)
                * bessel3_normalized_native(k + nu, zz * zz, q, tr))

    return qp(q.power(n + 1), q, tr) / qp(q.power(nu + n + 1), q, tr) * _sum(term, tr)


ident("bessel3_laguerre_a", "SERIES",
      "q-Laguerre value at a negative scaled argument from kind-3 functions "
      "(argument scale matches the integrand, not the printed half power)",
      _sb318_lhs, _sb318_rhs, _sb318_sample, "finite-sum", "series-expansion",
      corrected=True)


def _sb319_lhs(p, tr):
    q = QParam(p["q"])
    nu, z, n = p["nu"], p["z"], p["n"]
    zz = z * q.power(n / 2.0).real
    return bessel3_normalized_native(nu, zz * zz, q, tr)


def _sb319_rhs(p, tr):
    q = QParam(p["q"])
    nu, z, n = p["nu"], p["z"], p["n"]

    def term(k):
        return (q.power(k * (k + 1) / 2.0) * (-z * z) ** k
                / (qfac(q, k) * qpn(q.power(nu + n + 1), q, k))
                * qlaguerre(n, nu + k, -z * z * q.power(-nu), q))

    return qp(q.power(nu + n + 1), q, tr) / qp(q.power(n + 1), q, tr) * _sum(term, tr)


ident("bessel3_laguerre_b", "SERIES",
      "kind-3 q-Bessel from order-shifted q-Laguerre values (inverse pair, "
      "normalized by the full scaled argument power)",
      _sb319_lhs, _sb319_rhs, _sb318_sample, "series-direct", "series-expansion",
      corrected=True)


# --- basic confluent expansions -------------------------------------------------------

def _sc2_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "a": runif(rng, 0.2, 1.0),
            "z": runif(rng, 0.2, 0.9)}


def _sc2_lhs(p, tr):
    q = QParam(p["q"])
    nu, a, z = p["nu"], p["a"], p["z"]
    return phi(PhiSpec([-a * q.power(nu + 1)], [q.power(nu + 1)], q, z), tr)


def _sc2_rhs(p, tr):
    q = QParam(p["q"])
    nu, a, z = p["nu"], p["a"], p["z"]

    def term(k):
        return (q.power(k * (k - 1) / 2.0) * (-z) ** k / qfac(q, k)
                * bessel2_normalized_native(nu + k, a * z, q, tr))

    return qp(q.q, q, tr) / qp(q.power(nu + 1), q, tr) * _sum(term, tr)


ident("confluent_bessel_series", "SERIES",
      "basic confluent series expanded over normalized kind-2 functions",
      _sc2_lhs, _sc2_rhs, _sc2_sample, "series-phi", "series-expansion")


def _sc4_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "a": runif(rng, 0.2, 1.0), "z": cring(rng, 0.1, 0.7)}


def _sc4_lhs(p, tr):
    q = QParam(p["q"])
    a, z = p["a"], p["z"]
    return qp(z, q, tr) * phi(PhiSpec([a], [z], q, -z), tr)


def _sc4_rhs(p, tr):
    q = QParam(p["q"])
    a, z = p["a"], p["z"]

    def term(k):
        return (z ** (2 * k) * q.power(2 * k * k - k) / qpn(q.q * q.q, QParam(q.q * q.q), k)
                * ramanujan_a(q.power(2 * k - 1) * a * z, q, tr))

    return _sum(term, tr)


ident("confluent_airy_series", "SERIES",
      "product-weighted confluent value as an even series of Ramanujan functions",
      _sc4_lhs, _sc4_rhs, _sc4_sample, "series-phi", "series-expansion")


def _sc5_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng, 0.35, 0.7), "a": runif(rng, 0.3, 1.2), "b": cring(rng, 0.05, 0.5),
                "z": cring(rng, 0.1, 0.8)}

    def ok(p):
        return abs(p["b"] / (p["a"] * p["z"])) < 3.0

    return resample(rng, draw, ok)


def _sc5_lhs(p, tr):
    q = QParam(p["q"])
    return qp(p["z"], q, tr) / qp(p["b"], q, tr)


def _sc5_rhs(p, tr):
    q = QParam(p["q"])
    a, b, z = p["a"], p["b"], p["z"]

    def term(k):
        return (qpn(b / (a * z), q, k) * (-a * z) ** k * q.power(k * (k - 1) / 2.0)
                / (qfac(q, k) * qpn(b, q, k))
                * phi(PhiSpec([a], [b * q.power(k)], q, z * q.power(k)), tr))

    return _sum(term, tr)


ident("confluent_ratio_series", "SERIES",
      "product ratio as a parameter-shifted basic confluent expansion",
      _sc5_lhs, _sc5_rhs, _sc5_sample, "product", "series-expansion")


def _sc6_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "nu": runif(rng, 0.2, 1.2), "z": runif(rng, 0.2, 1.2)}


def _sc6_lhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]
    u = z * math.sqrt(q.q)
    return bessel2_normalized_native(nu, u * u / 4.0, q, tr)


def _sc6_rhs(p, tr):
    q = QParam(p["q"])
    nu, z = p["nu"], p["z"]

    def term(k):
        return (z ** k * q.power(k * k) / (qfac(q, k) * qpn(q.power(nu + 1), q, k))
                * phi(PhiSpec([-q.power(nu + 1) * z / 4.0], [q.power(nu + k + 1)], q,
                              z * q.power(k + 1)), tr))

    return qp(q.power(nu + 1), q, tr) / qp(q.q, q, tr) * _sum(term, tr)


ident("confluent_bessel_sqrt", "SERIES",
      "kind-2 q-Bessel at a half-shifted argument from confluent values",
      _sc6_lhs, _sc6_rhs, _sc6_sample, "series-direct", "series-expansion")


def _sc9_sample(rng):
    q = qdraw(rng, 0.35, 0.7)
    return {"q": q, "a": runif(rng, 0.2, 1.0), "b": runif(rng, 0.05, 0.6),
            "d": runif(rng, 0.1, 0.9), "z": cring(rng, 0.1, 0.8)}


def _sc9_lhs(p, tr):
    q = QParam(p["q"])
    return phi(PhiSpec([p["a"]], [p["b"]], q, p["z"]), tr)


def _sc9_rhs(p, tr):
    q = QParam(p["q"])
    a, b, d, z = p["a"], p["b"], p["d"], p["z"]

    def term(k):
        return (qpn(d, q, k) * (-b) ** k * q.power(k * (k - 1) / 2.0)
                / (qfac(q, k) * qpn(b * d, q, k))
                * phi(PhiSpec([a], [b * d * q.power(k)], q, z * q.power(k)), tr))

    return qp(b * d, q, tr) / qp(b, q, tr) * _sum(term, tr)


ident("confluent_param_shift", "SERIES",
      "basic confluent series re-expanded with a stretched lower parameter",
      _sc9_lhs, _sc9_rhs, _sc9_sample, "series-phi", "series-expansion")


def _sc10_sample(rng):
    q = qdraw(rng, 0.35, 0.7)
    return {"q": q, "a": runif(rng, 0.2, 1.0), "b": runif(rng, 0.05, 0.6),
            "w": runif(rng, 0.1, 0.9), "z": cring(rng, 0.1, 0.8)}


def _sc10_lhs(p, tr):
    q = QParam(p["q"])
    return phi(PhiSpec([p["a"] * p["w"]], [p["b"]], q, p["z"]), tr)


def _sc10_rhs(p, tr):
    q = QParam(p["q"])
    a, b, w, z = p["a"], p["b"], p["w"], p["z"]

    def term(k):
        return (qpn(w, q, k) * (-z) ** k * q.power(k * (k - 1) / 2.0)
                / (qfac(q, k) * qpn(b, q, k))
                * phi(PhiSpec([a], [b * q.power(k)], q, w * z * q.power(k)), tr))

    return _sum(term, tr)


ident("confluent_arg_shift", "SERIES",
      "basic confluent series with a split upper parameter and argument",
      _sc10_lhs, _sc10_rhs, _sc10_sample, "series-phi", "series-expansion")


def _sc7_sample(rng):
    return {"q": qdraw(rng, 0.35, 0.7), "alpha": runif(rng, 0.2, 1.0), "x": runif(rng, 0.2, 1.0),
            "n": rint(rng, 0, 5)}


def _sc7_lhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]
    return qfac(q, n) * qlaguerre(n, al, x, q) / qpn(q.power(al + 1), q, n)


def _sc7_rhs(p, tr):
    q = QParam(p["q"])
    n, al, x = p["n"], p["alpha"], p["x"]

    def term(k):
        return (qpn(-q.power(-al - n - 0.5), q, k) * x ** k
                * q.power((k + 2 * al + 2 * n + 1) * k / 2.0)
                / (qfac(q, k) * qpn(q.power(al + 1), q, k))
                * phi(PhiSpec([-q.power(al + 0.5)], [q.power(al + k + 1)], q,
                              x * q.power(k + 0.5)), tr))

    return _sum(term, tr)


ident("laguerre_phi11_series", "SERIES",
      "normalized q-Laguerre polynomial as a confluent-value expansion",
      _sc7_lhs, _sc7_rhs, _sc7_sample, "finite-sum", "series-expansion")
