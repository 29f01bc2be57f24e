"""PRELIM group: summation theorems, transformations, orthogonality, kernels."""

from __future__ import annotations

import cmath
import math

from ..core import QParam, theta4
from ..polys import qhermite, qhermite_inv, qhermite_inv_weighted, qlaguerre, stieltjes_wigert
from ..quad import ContourSpec, circle_contour, finite_interval, halfline_log
from ..series import PhiSpec, PsiSpec, cal_e, jackson_bessel, phi, psi_bilateral
from ._common import TWO_PI, cring, exp_i, gline, ident, qdraw, qfac, qp, qpm, qpn, resample, rint, runif


# --- Chu-Vandermonde sum -------------------------------------------------

def _cv_sample(rng):
    # terminating sums lose ~q^(-n^2/2) ulps to cancellation; keep that small
    return {
        "q": qdraw(rng, 0.45, 0.8),
        "n": rint(rng, 1, 5),
        "a": cring(rng, 0.2, 0.9),
        "c": cring(rng, 0.3, 0.9),
    }


def _cv_lhs(p, tr):
    q = QParam(p["q"])
    return phi(PhiSpec([q.power(-p["n"]), p["a"]], [p["c"]], q, q.q), tr)


def _cv_rhs(p, tr):
    q = QParam(p["q"])
    return qpn(p["c"] / p["a"], q, p["n"]) * p["a"] ** p["n"] / qpn(p["c"], q, p["n"])


ident("chu_vandermonde", "PRELIM",
      "terminating 2phi1(q^-n, a; c; q, q) equals (c/a;q)_n a^n/(c;q)_n",
      _cv_lhs, _cv_rhs, _cv_sample, "series", "finite-product")


# --- bilateral 1psi1 summation -------------------------------------------

def _r1_sample(rng):
    def draw(rng):
        q = qdraw(rng, 0.2, 0.7)
        a = runif(rng, 1.5, 4.0)
        b = cring(rng, 0.05, 0.4)
        z = cring(rng, 0.3, 0.85)
        return {"q": q, "a": a, "b": b, "z": z}

    def ok(p):
        if not abs(p["b"] / p["a"]) < abs(p["z"]) < 1.0:
            return False
        az = p["a"] * p["z"]
        # the value vanishes when az hits any integer power of q (zeros of
        # the numerator products); relative checks need a safety margin
        return all(abs(az / p["q"] ** m - 1.0) > 0.25 for m in range(-4, 5))

    return resample(rng, draw, ok)


def _r1_lhs(p, tr):
    q = QParam(p["q"])
    return psi_bilateral(PsiSpec([p["a"]], [p["b"]], q, p["z"]), tr)


def _r1_rhs(p, tr):
    q = QParam(p["q"])
    a, b, z = p["a"], p["b"], p["z"]
    return qpm([q.q, b / a, a * z, q.q / (a * z)], q, tr) / qpm([b, q.q / a, z, b / (a * z)], q, tr)


ident("ramanujan_1psi1", "PRELIM",
      "bilateral 1psi1 sum equals a ratio of four infinite products",
      _r1_lhs, _r1_rhs, _r1_sample, "series", "product")


# --- triple product -------------------------------------------------------

def _tp_sample(rng):
    # near the positive real axis the function is exponentially small for
    # large q (the zero lattice z = q^(2k+1) lives there), which makes a
    # relative comparison meaningless in binary64; keep a phase margin
    # that grows with q, plus an explicit lattice-distance guard
    def draw(rng):
        q = qdraw(rng, 0.1, 0.9)
        phase_min = 0.1 if q <= 0.55 else 1.3
        phase = rng.choice([-1, 1]) * runif(rng, phase_min, math.pi)
        r = runif(rng, 0.3, 2.5)
        return {"q": q, "z": r * cmath.exp(1j * phase)}

    def ok(p):
        return all(abs(p["z"] / p["q"] ** (2 * k + 1) - 1.0) > 0.08 for k in range(-9, 10))

    return resample(rng, draw, ok)


ident("triple_product", "PRELIM",
      "bilateral theta sum equals the (q^2, qz, q/z; q^2) infinite product",
      lambda p, tr: theta4(p["z"], QParam(p["q"]), tr, route="series"),
      lambda p, tr: theta4(p["z"], QParam(p["q"]), tr, route="product"),
      _tp_sample, "series", "product", default_tol=1e-11)


# --- first/second q-Bessel relation ---------------------------------------

def _j12_sample(rng):
    return {"q": qdraw(rng), "nu": runif(rng, 0.2, 1.5), "z": cring(rng, 0.3, 1.6)}


def _j12_lhs(p, tr):
    q = QParam(p["q"])
    return jackson_bessel(1, p["nu"], p["z"], q, tr) * qp(-p["z"] ** 2 / 4.0, q, tr)


ident("bessel1_bessel2_relation", "PRELIM",
      "kind-1 q-Bessel times (-z^2/4;q)_inf equals the kind-2 function",
      _j12_lhs,
      lambda p, tr: jackson_bessel(2, p["nu"], p["z"], QParam(p["q"]), tr),
      _j12_sample, "series-kind1", "series-kind2", default_tol=1e-11)


# --- q-Hermite generating function ----------------------------------------

def _hgen_sample(rng):
    return {"q": qdraw(rng), "theta": runif(rng, 0.2, 2.9), "t": cring(rng, 0.05, 0.5)}


def _hgen_lhs(p, tr):
    q = QParam(p["q"])
    x = math.cos(p["theta"])
    total = 0.0j
    term_scale = 1.0 + 0.0j
    n = 0
    t = p["t"]
    while n < 400:
        term = qhermite(n, x, q) * t**n / qfac(q, n)
        total += term
        if n > 8 and abs(term) < tr.tol * max(abs(total), 1.0):
            break
        n += 1
    return total


def _hgen_rhs(p, tr):
    q = QParam(p["q"])
    t = p["t"]
    return 1.0 / (qp(t * exp_i(p["theta"]), q, tr) * qp(t * exp_i(-p["theta"]), q, tr))


ident("qhermite_genfun", "PRELIM",
      "continuous q-Hermite generating function equals a product reciprocal",
      _hgen_lhs, _hgen_rhs, _hgen_sample, "series", "product")


# --- two routes to the two-variable q-exponential ---------------------------

def _cal2_sample(rng):
    return {"q": qdraw(rng), "theta": runif(rng, 0.3, 2.8), "t": cring(rng, 0.1, 0.6)}


ident("cal_e_two_routes", "PRELIM",
      "q-Hermite series route and shifted-product route for cal-E agree",
      lambda p, tr: cal_e(math.cos(p["theta"]), p["t"], QParam(p["q"]), tr, route="hermite"),
      lambda p, tr: cal_e(math.cos(p["theta"]), p["t"], QParam(p["q"]), tr, route="shifted"),
      _cal2_sample, "series-hermite", "series-shifted", default_tol=1e-10)


# --- q-Hermite orthogonality (Gram entries, shifted by 1) -------------------

def _qh_gram(p, tr):
    q = QParam(p["q"])
    m, n = p["m"], p["n"]

    def f(th):
        e2 = exp_i(2 * th)
        w = (qp(e2, q, tr) * qp(e2.conjugate(), q, tr)).real
        return qhermite(m, math.cos(th), q).real * qhermite(n, math.cos(th), q).real * w

    inner = finite_interval(f, 0.0, math.pi, tr).real / TWO_PI
    norm = (qfac(q, n) / qp(q.q, q, tr)).real
    return 1.0 + inner / norm


def _qh_sample(rng):
    m = rint(rng, 0, 6)
    n = rint(rng, 0, 6)
    return {"q": qdraw(rng, 0.3, 0.7), "m": m, "n": n}


ident("qhermite_orthogonality", "PRELIM",
      "q-Hermite Gram entry over (-1,1) with the product weight, normalized",
      _qh_gram,
      lambda p, tr: 2.0 if p["m"] == p["n"] else 1.0,
      _qh_sample, "quadrature", "closed-form", default_tol=1e-8)


# --- cal-E inner products ---------------------------------------------------

def _cal_ip(p, tr, v):
    q = QParam(p["q"])
    u = p["u"]

    def f(th):
        e2 = exp_i(2 * th)
        w = (qp(e2, q, tr) * qp(e2.conjugate(), q, tr)).real
        x = math.cos(th)
        return cal_e(x, u, q, tr) * cal_e(x, v, q, tr) * w

    return finite_interval(f, 0.0, math.pi, tr) / TWO_PI


def _cal14_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "u": runif(rng, 0.1, 0.55), "v": runif(rng, 0.1, 0.55)}


def _cal14_rhs(p, tr):
    q = QParam(p["q"])
    q2 = QParam(q.q * q.q)
    u, v = p["u"], p["v"]
    return qp(-u * v * math.sqrt(q.q), q, tr) / (
        qp(q.q, q, tr) * qp(q.q * u * u, q2, tr) * qp(q.q * v * v, q2, tr)
    )


ident("cal_e_inner_product", "PRELIM",
      "weighted inner product of two cal-E factors in closed product form",
      lambda p, tr: _cal_ip(p, tr, p["v"]), _cal14_rhs,
      _cal14_sample, "quadrature", "product", default_tol=1e-7)


def _cal16_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "u": runif(rng, 0.1, 0.55)}


def _cal16_rhs(p, tr):
    q = QParam(p["q"])
    u = p["u"]
    return qp(-u * u * q.q, q, tr) / (qp(q.q, q, tr) * qp(u * u * q.q, q, tr))


ident("cal_e_inner_product_half", "PRELIM",
      "cal-E inner product at v = u sqrt(q) in single-base product form",
      lambda p, tr: _cal_ip(p, tr, p["u"] * math.sqrt(p["q"])), _cal16_rhs,
      _cal16_sample, "quadrature", "product", default_tol=1e-7)


# --- inverse-base Hermite generating function -------------------------------

def _hinv_gen_sample(rng):
    return {"q": qdraw(rng), "xi": runif(rng, -0.8, 0.8), "t": cring(rng, 0.05, 0.45)}


def _hinv_gen_lhs(p, tr):
    q = QParam(p["q"])
    t, xi = p["t"], p["xi"]
    return qp(-t * math.exp(xi), q, tr) * qp(t * math.exp(-xi), q, tr)


def _hinv_gen_rhs(p, tr):
    q = QParam(p["q"])
    t, xi = p["t"], p["xi"]
    total = 0.0j
    for n in range(200):
        term = q.power(n * (n - 1) / 2.0) * t**n * qhermite_inv(n, math.sinh(xi), q) / qfac(q, n)
        total += term
        if n > 8 and abs(term) < tr.tol * max(abs(total), 1.0):
            return total
    return total


ident("qinvhermite_genfun", "PRELIM",
      "generating function of the inverse-base Hermite polynomials",
      _hinv_gen_lhs, _hinv_gen_rhs, _hinv_gen_sample, "product", "series")


# --- Poisson kernel ---------------------------------------------------------

def _pk_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng, 0.3, 0.7), "t": runif(rng, 0.1, 0.45),
                "xi": runif(rng, -0.6, 0.6), "eta": runif(rng, -0.6, 0.6)}

    def ok(p):
        # h_n(sinh xi) has near-zeros when e^(2 xi) approaches q^(2k+1);
        # evaluation there loses digits to cancellation
        for u in (p["xi"], p["eta"]):
            e2 = math.exp(2 * u)
            if any(abs(e2 / p["q"] ** (2 * k + 1) - 1.0) < 0.12 for k in range(-2, 3)):
                return False
        return True

    return resample(rng, draw, ok)


def _pk_lhs(p, tr):
    q = QParam(p["q"])
    t, xi, eta = p["t"], p["xi"], p["eta"]
    total = 0.0j
    quiet = 0
    for n in range(400):
        # the binomial half-weight is folded into each factor so the bare
        # polynomial peak q^(-n^2/4) never materializes
        hw1 = qhermite_inv_weighted(n, math.exp(xi), q, n * (n - 1) / 4.0)
        hw2 = qhermite_inv_weighted(n, math.exp(eta), q, n * (n - 1) / 4.0)
        term = hw1 * hw2 / qfac(q, n) * t**n
        total += term
        if abs(term) < tr.tol * max(abs(total), 1.0):
            quiet += 1
            if quiet >= 2 and n > 8:
                break
        else:
            quiet = 0
    return total


def _pk_rhs(p, tr):
    q = QParam(p["q"])
    t, xi, eta = p["t"], p["xi"], p["eta"]
    num = qpm([-t * math.exp(xi + eta), -t * math.exp(-xi - eta),
               t * math.exp(xi - eta), t * math.exp(eta - xi)], q, tr)
    return num / qp(t * t / q.q, q, tr)


ident("poisson_kernel_qinvhermite", "PRELIM",
      "Poisson kernel for the inverse-base Hermite family "
      "(third and fourth product arguments read t e^(xi-eta), t e^(eta-xi))",
      _pk_lhs, _pk_rhs, _pk_sample, "series", "product", corrected=True)


# --- h_n vs Stieltjes-Wigert ------------------------------------------------

def _hsw_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng), "n": rint(rng, 0, 12), "xi": runif(rng, -0.8, 0.8)}

    def ok(p):
        # both sides develop near-zeros when e^(2 xi) approaches the
        # q^(2k+1) lattice; evaluation there loses digits to cancellation
        e2 = math.exp(2 * p["xi"])
        return all(abs(e2 / p["q"] ** (2 * k + 1) - 1.0) > 0.1 for k in range(-2, 3))

    return resample(rng, draw, ok)


def _hsw_lhs(p, tr):
    q = QParam(p["q"])
    return qhermite_inv(p["n"], math.sinh(p["xi"]), q)


def _hsw_rhs(p, tr):
    q = QParam(p["q"])
    n, xi = p["n"], p["xi"]
    return math.exp(n * xi) * qfac(q, n) * stieltjes_wigert(n, math.exp(-2 * xi) * q.power(-n), q)


ident("qinvhermite_sw_relation", "PRELIM",
      "inverse-base Hermite equals a rescaled Stieltjes-Wigert polynomial",
      _hsw_lhs, _hsw_rhs, _hsw_sample, "finite-sum-h", "finite-sum-sw", default_tol=1e-12)


# --- Stieltjes-Wigert symmetry ----------------------------------------------

def _sws_sample(rng):
    return {"q": qdraw(rng), "n": rint(rng, 0, 15), "t": cring(rng, 0.3, 1.2)}


def _sws_lhs(p, tr):
    q = QParam(p["q"])
    n, t = p["n"], p["t"]
    return q.power(n * n) * (-t) ** n * stieltjes_wigert(n, q.power(-2 * n) / t, q)


ident("sw_symmetry", "PRELIM",
      "argument-inversion symmetry of the Stieltjes-Wigert polynomials",
      _sws_lhs,
      lambda p, tr: stieltjes_wigert(p["n"], p["t"], QParam(p["q"])),
      _sws_sample, "finite-sum-reflected", "finite-sum", default_tol=1e-12)


# --- Heine transformations and the 2phi1 -> 2phi2 transformation -------------

def _phi21(p, tr):
    q = QParam(p["q"])
    return phi(PhiSpec([p["a"], p["b"]], [p["c"]], q, p["z"]), tr)


def _heine_sample(which):
    def sample(rng):
        def draw(rng):
            return {"q": qdraw(rng), "a": cring(rng, 0.1, 0.6), "b": cring(rng, 0.1, 0.6),
                    "c": cring(rng, 0.1, 0.8), "z": cring(rng, 0.1, 0.6)}

        def ok(p):
            a, b, c, z = p["a"], p["b"], p["c"], p["z"]
            if which == 1:
                return abs(b) < 1 and abs(a * z) < 0.9
            if which == 2:
                return abs(c / b) < 0.9 and abs(b * z) < 0.9
            if which == 3:
                return abs(a * b * z / c) < 0.9
            return abs(b * z) < 0.9 and abs(a * z) < 0.9

        return resample(rng, draw, ok)

    return sample


def _heine1_rhs(p, tr):
    q = QParam(p["q"])
    a, b, c, z = p["a"], p["b"], p["c"], p["z"]
    pref = qpm([b, a * z], q, tr) / qpm([c, z], q, tr)
    return pref * phi(PhiSpec([c / b, z], [a * z], q, b), tr)


def _heine2_rhs(p, tr):
    q = QParam(p["q"])
    a, b, c, z = p["a"], p["b"], p["c"], p["z"]
    pref = qpm([c / b, b * z], q, tr) / qpm([c, z], q, tr)
    return pref * phi(PhiSpec([a * b * z / c, b], [b * z], q, c / b), tr)


def _heine3_rhs(p, tr):
    q = QParam(p["q"])
    a, b, c, z = p["a"], p["b"], p["c"], p["z"]
    pref = qp(a * b * z / c, q, tr) / qp(z, q, tr)
    return pref * phi(PhiSpec([c / a, c / b], [c], q, a * b * z / c), tr)


def _phi22_rhs(p, tr):
    q = QParam(p["q"])
    a, b, c, z = p["a"], p["b"], p["c"], p["z"]
    pref = qp(a * z, q, tr) / qp(z, q, tr)
    return pref * phi(PhiSpec([a, c / b], [c, a * z], q, b * z), tr)


ident("heine1", "PRELIM", "first Heine transformation of 2phi1",
      _phi21, _heine1_rhs, _heine_sample(1), "series-direct", "series-transformed")
ident("heine2", "PRELIM", "second Heine transformation of 2phi1",
      _phi21, _heine2_rhs, _heine_sample(2), "series-direct", "series-transformed")
ident("heine3", "PRELIM", "third (q-Euler) Heine transformation of 2phi1",
      _phi21, _heine3_rhs, _heine_sample(3), "series-direct", "series-transformed")
ident("phi21_phi22_transform", "PRELIM", "2phi1 as a prefactored 2phi2",
      _phi21, _phi22_rhs, _heine_sample(4), "series-direct", "series-transformed")


# --- three quadratic binomial-type evaluations -------------------------------

def _qb1_sample(rng):
    return {"q": qdraw(rng), "n": rint(rng, 0, 24)}


def _qb1_pair(p, tr):
    q = QParam(p["q"])
    n = p["n"]
    total = sum((qfac(q, n) / (qfac(q, k) * qfac(q, n - k))) * (-1.0) ** k for k in range(n + 1))
    if n % 2 == 0:
        closed = qfac(q, n) / qpn(q.q * q.q, QParam(q.q * q.q), n // 2)
    else:
        closed = 0.0j
    # the scale strictly dominates the value so the shifted ratio stays
    # far from -1 and the +1 normalization never cancels
    scale = 4.0 * abs(qfac(q, n) / qpn(q.q * q.q, QParam(q.q * q.q), max(n // 2, 1))) + 1.0
    return 1.0 + total / scale, 1.0 + closed / scale


ident("qbinom_alternating", "PRELIM",
      "alternating Gaussian-binomial row sum: zero for odd n, closed form for even n",
      lambda p, tr: _qb1_pair(p, tr)[0],
      lambda p, tr: _qb1_pair(p, tr)[1],
      _qb1_sample, "finite-sum", "closed-form")


def _qb2_pair(p, tr):
    q = QParam(p["q"])
    s = p["n"]
    total = sum((-1.0) ** n * q.power(n * (n - s)) / (qfac(q, n) * qfac(q, s - n)).real
                for n in range(s + 1))
    q2 = QParam(q.q * q.q)
    if s % 2 == 0:
        closed = (-1.0) ** (s // 2) * q.power(-s * s / 4.0).real / qpn(q2.q, q2, s // 2).real
    else:
        closed = 0.0
    scale = 4.0 * abs(q.power(-s * s / 4.0)) / abs(qpn(q2.q, q2, max(s // 2, 1))) + 1.0
    return 1.0 + total / scale, 1.0 + closed / scale


ident("qbinom_qinvhermite_zero", "PRELIM",
      "alternating q^(n(n-s)) sum: vanishes for odd s (parity read on the "
      "summation variable's total count s)",
      lambda p, tr: _qb2_pair(p, tr)[0],
      lambda p, tr: _qb2_pair(p, tr)[1],
      _qb1_sample, "finite-sum", "closed-form", corrected=True)


def _qb3_lhs(p, tr):
    q = QParam(p["q"])
    n = p["n"]
    return sum(q.power(k / 2.0) / (qfac(q, k) * qfac(q, n - k)) for k in range(n + 1))


def _qb3_rhs(p, tr):
    q = QParam(p["q"])
    sq = QParam(math.sqrt(q.q))
    return 1.0 / qpn(sq.q, sq, p["n"])


ident("qbinom_half_base", "PRELIM",
      "q^(k/2)-weighted binomial row sum collapses to a half-base factorial",
      _qb3_lhs, _qb3_rhs, _qb1_sample, "finite-sum", "closed-form")


# --- q-Laguerre orthogonality ------------------------------------------------

def _ql_gram(p, tr):
    q = QParam(p["q"])
    m, n, al = p["m"], p["n"], p["alpha"]

    def f(x):
        return (qlaguerre(m, al, x, q) * qlaguerre(n, al, x, q)).real * x**al / qp(-x, q, tr).real

    inner = halfline_log(f, tr).real
    pref = -math.pi / math.sin(math.pi * al) * (qp(q.power(-al), q, tr) / qp(q.q, q, tr)).real
    norm = pref * (qpn(q.power(al + 1), q, n) / (q.power(n) * qfac(q, n))).real
    return 1.0 + inner / norm


def _ql_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "alpha": 0.5, "m": rint(rng, 0, 4), "n": rint(rng, 0, 4)}


ident("qlaguerre_orthogonality", "PRELIM",
      "q-Laguerre Gram entry against x^alpha/(-x;q)_inf on the half line",
      _ql_gram,
      lambda p, tr: 2.0 if p["m"] == p["n"] else 1.0,
      _ql_sample, "quadrature", "closed-form", default_tol=1e-5)


# --- Stieltjes-Wigert orthogonality -------------------------------------------

def _sw_gram(p, tr):
    q = QParam(p["q"])
    m, n = p["m"], p["n"]
    c2 = -1.0 / (2.0 * q.ln_q)
    c = math.sqrt(c2)

    def f(x):
        u = math.log(x) - 0.5 * q.ln_q
        return (stieltjes_wigert(m, x, q) * stieltjes_wigert(n, x, q)).real * math.exp(-c2 * u * u)

    inner = halfline_log(f, tr).real
    norm = math.sqrt(math.pi) * q.power(-n).real / (c * qfac(q, n).real)
    return 1.0 + inner / norm


def _sw_sample(rng):
    return {"q": qdraw(rng, 0.3, 0.7), "m": rint(rng, 0, 5), "n": rint(rng, 0, 5)}


ident("sw_orthogonality", "PRELIM",
      "Stieltjes-Wigert Gram entry against the lognormal weight "
      "(validated norm sqrt(pi) q^(-n)/(c (q;q)_n))",
      _sw_gram,
      lambda p, tr: 2.0 if p["m"] == p["n"] else 1.0,
      _sw_sample, "quadrature", "closed-form", default_tol=1e-6, corrected=True)


# --- q-Laguerre generating function -------------------------------------------

def _lgen_sample(rng):
    def draw(rng):
        return {"q": qdraw(rng, 0.3, 0.7), "alpha": runif(rng, 0.1, 1.2),
                "t": cring(rng, 0.05, 0.3), "x": cring(rng, 0.2, 1.0)}

    def ok(p):
        # series sum over n needs |t q^-alpha| < 1 with margin
        return abs(p["t"]) * p["q"] ** (-p["alpha"]) < 0.55

    return resample(rng, draw, ok)


def _lgen_lhs(p, tr):
    q = QParam(p["q"])
    t, al, x = p["t"], p["alpha"], p["x"]
    total = 0.0j
    for n in range(400):
        term = qlaguerre(n, al, x, q) * t**n * q.power(-al * n)
        total += term
        if n > 8 and abs(term) < tr.tol * max(abs(total), 1.0):
            return total
    return total


def _lgen_rhs(p, tr):
    q = QParam(p["q"])
    t, al, x = p["t"], p["alpha"], p["x"]
    return phi(PhiSpec([-x], [0.0], q, q.q * t), tr) / qp(t * q.power(-al), q, tr)


ident("qlaguerre_genfun", "PRELIM",
      "q-Laguerre generating function via a lower-parameter-free 1phi1",
      _lgen_lhs, _lgen_rhs, _lgen_sample, "series-polynomials", "series-phi")


# --- the two master representations of q^(k^2) ---------------------------------

def _qck_sample(rng):
    return {"q": qdraw(rng), "c": runif(rng, 0.5, 1.5), "u": cring(rng, 0.4, 1.3),
            "k": rint(rng, -2, 3), "r": runif(rng, 0.7, 1.3)}


def _qck_lhs(p, tr):
    q = QParam(p["q"])
    return q.power(p["c"] * p["k"] ** 2) * p["u"] ** p["k"]


def _qck_rhs(p, tr):
    q = QParam(p["q"])
    c, u, k = p["c"], p["u"], p["k"]
    q2c = QParam(q.power(2 * c).real)
    qc = q.power(c)

    def f(z):
        return qpm([q2c.q, -qc * z * u, -qc / (z * u)], q2c, tr) / z ** (k + 1)

    return circle_contour(ContourSpec(p["r"], f), tr)


ident("qsquare_contour_rep", "PRELIM",
      "q^(c k^2) u^k as a circle contour integral of a theta product",
      _qck_lhs, _qck_rhs, _qck_sample, "closed-form", "quadrature-contour", default_tol=1e-10)


def _qal_sample(rng):
    return {"q": qdraw(rng), "alpha": runif(rng, -2.0, 2.0)}


def _qal_rhs(p, tr):
    q = QParam(p["q"])
    al = p["alpha"]
    L = q.log_inv

    def f(y):
        return exp_i(al * y)

    val = gline(f, q, tr, hint=abs(al), sigma2=L)
    return val / math.sqrt(math.pi * 2.0 * L)


ident("qsquare_gaussian_rep", "PRELIM",
      "q^(alpha^2/2) as a normalized Gaussian integral of e^(i alpha y)",
      lambda p, tr: QParam(p["q"]).power(p["alpha"] ** 2 / 2.0),
      _qal_rhs, _qal_sample, "closed-form", "quadrature-line", default_tol=1e-10)
