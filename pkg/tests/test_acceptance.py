"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import cmath
import math
import random
import time
from fractions import Fraction

import pytest

from qkit import (
    QParam,
    Truncation,
    jackson_bessel,
    qhermite,
    qhermite_inv,
    qlaguerre,
    qpoch_finite,
    qpoch_inf,
    stieltjes_wigert,
    theta4,
)
from qkit.asymptotics import FAMILIES, asymp_rate
from qkit.cli import main as cli_main
from qkit.exactq import exact_identity_ids, verify_exact
from qkit.identities import all_identities, run_suite
from qkit.quad import finite_interval, halfline_log
from qkit.series import bessel2_normalized, bessel2_normalized_native

TR = Truncation(tol=1e-14)


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


def report(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] criterion {number}: {label}" + (f" ({detail})" if detail else ""))
    assert ok, f"criterion {number} failed: {label} {detail}"


def test_criterion_1_triple_product():
    start = time.monotonic()
    rng = random.Random(2024)
    worst = 0.0
    done = 0
    while done < 50:
        q = QParam(rng.choice([0.1, 0.5, 0.9]))
        phase_min = 0.1 if q.q <= 0.55 else 1.3
        phase = rng.choice([-1, 1]) * rng.uniform(phase_min, math.pi)
        z = cmath.rect(rng.uniform(0.3, 2.5), phase)
        if any(abs(z / q.q ** (2 * k + 1) - 1.0) < 0.08 for k in range(-9, 10)):
            continue
        done += 1
        s = theta4(z, q, TR, route="series")
        p = theta4(z, q, TR, route="product")
        worst = max(worst, rel(s, p))
    elapsed = time.monotonic() - start
    report(1, "triple product series vs product on 50 draws",
           worst <= 1e-11 and elapsed < 5.0,
           f"worst rel err {worst:.2e}, {elapsed:.2f}s")


def test_criterion_2_contour_suite():
    start = time.monotonic()
    ids = ["contour_airy", "contour_qinvhermite", "contour_sw",
           "contour_poch_ratio", "contour_bessel2_alt"]
    from qkit.identities import evaluate_identity, sample_params

    worst = 0.0
    for ident in ids:
        for k in range(3):
            rep = evaluate_identity(ident, sample_params(ident, 777, k))
            assert rep.status == "pass", (ident, rep.status, rep.rel_err)
            worst = max(worst, rep.rel_err)
    elapsed = time.monotonic() - start
    report(2, "contour representations at 3 points each",
           worst <= 1e-8 and elapsed < 30.0,
           f"worst rel err {worst:.2e}, {elapsed:.1f}s")


def test_criterion_3_mellin_suite():
    start = time.monotonic()
    reports = run_suite("MELLIN", samples_per_identity=1, seed=101)
    worst = max(r.rel_err for r in reports)
    ok = all(r.status == "pass" and r.rel_err <= 1e-5 for r in reports)
    elapsed = time.monotonic() - start
    report(3, "vertical-line representations at one point each",
           ok and elapsed < 60.0, f"worst rel err {worst:.2e}, {elapsed:.1f}s")


def test_criterion_4_fourier_suite():
    start = time.monotonic()
    reports = run_suite("FOURIER", samples_per_identity=1, seed=55)
    n = len(reports)
    worst = max(r.rel_err for r in reports)
    ok = n >= 60 and all(r.status == "pass" for r in reports)
    elapsed = time.monotonic() - start
    report(4, f"Fourier-pair suite ({n} entries) at one point each",
           ok and elapsed < 300.0, f"worst rel err {worst:.2e}, {elapsed:.1f}s")


def test_criterion_5_series_suite():
    start = time.monotonic()
    reports = run_suite("SERIES", samples_per_identity=3, seed=99)
    worst = max(r.rel_err for r in reports)
    ok = all(r.status == "pass" and r.rel_err <= 1e-10 for r in reports)
    elapsed = time.monotonic() - start
    report(5, "series-identity suite at 3 points each",
           ok and elapsed < 30.0, f"worst rel err {worst:.2e}, {elapsed:.1f}s")


def test_criterion_6_exact_oracle():
    start = time.monotonic()
    ok = True
    for qrat in (Fraction(1, 3), Fraction(1, 2)):
        for ident in ("qbinom1", "qbinom2", "qbinom3"):
            ok &= verify_exact(ident, 40, qrat)["equal"]
    others = [i for i in exact_identity_ids()
              if i not in ("qbinom_alternating", "qbinom_qinvhermite_zero",
                           "qbinom_half_base")]
    assert len(others) >= 15
    for qrat in (Fraction(1, 3), Fraction(1, 2)):
        for ident in others:
            ok &= verify_exact(ident, 20, qrat)["equal"]
    elapsed = time.monotonic() - start
    report(6, f"exact oracle: 3 row sums to order 40 and {len(others)} further "
              "identities to order 20 at q = 1/3 and 1/2",
           ok and elapsed < 60.0, f"{elapsed:.1f}s")


def test_criterion_7_asymptotic_rates():
    start = time.monotonic()
    bad = [fid for fid in FAMILIES if not asymp_rate(fid).passed]
    elapsed = time.monotonic() - start
    report(7, "all 15 asymptotic families inside the rate band [0.8q, 1.25q]",
           not bad and elapsed < 60.0, f"failures: {bad or 'none'}, {elapsed:.1f}s")


def test_criterion_8_orthogonality():
    start = time.monotonic()
    q = QParam(0.5)
    tr = Truncation(tol=1e-12)

    def qh_inner(m, n):
        def f(th):
            e2 = cmath.exp(2j * th)
            w = (qpoch_inf(e2, q, tr) * qpoch_inf(e2.conjugate(), q, tr)).real
            return qhermite(m, math.cos(th), q).real * qhermite(n, math.cos(th), q).real * w

        return finite_interval(f, 0.0, math.pi, tr).real / (2 * math.pi)

    ok = True
    detail = []
    qq_inf = qpoch_inf(q.q, q, tr).real
    for m in range(7):
        for n in range(m, 7):
            val = qh_inner(m, n)
            if m == n:
                norm = qpoch_finite(q.q, q, n).real / qq_inf
                if rel(val, norm) > 1e-8:
                    ok = False
                    detail.append(f"H diag {n}")
            elif abs(val) > 1e-9:
                ok = False
                detail.append(f"H offdiag ({m},{n})")

    c2 = -1.0 / (2.0 * q.ln_q)
    c = math.sqrt(c2)

    def sw_inner(m, n):
        def f(x):
            u = math.log(x) - 0.5 * q.ln_q
            return (stieltjes_wigert(m, x, q) * stieltjes_wigert(n, x, q)).real * math.exp(
                -c2 * u * u)

        return halfline_log(f, tr).real

    for n in range(6):
        norm = math.sqrt(math.pi) * q.power(-n).real / (c * qpoch_finite(q.q, q, n).real)
        if rel(sw_inner(n, n), norm) > 1e-6:
            ok = False
            detail.append(f"SW norm {n}")
    if abs(sw_inner(0, 1)) > 1e-6 * sw_inner(1, 1):
        ok = False
        detail.append("SW offdiag")

    al = 0.5

    def lag_inner(m, n):
        def f(x):
            return (qlaguerre(m, al, x, q) * qlaguerre(n, al, x, q)).real * x**al / qpoch_inf(
                -x, q, tr).real

        return halfline_log(f, tr).real

    pref = (-math.pi / math.sin(math.pi * al)
            * (qpoch_inf(q.power(-al), q, tr) / qpoch_inf(q.q, q, tr)).real)
    for n in range(5):
        norm = pref * (qpoch_finite(q.power(al + 1), q, n)
                       / (q.power(n) * qpoch_finite(q.q, q, n))).real
        if rel(lag_inner(n, n), norm) > 1e-5:
            ok = False
            detail.append(f"L norm {n}")
    if abs(lag_inner(0, 2)) > 1e-5 * lag_inner(2, 2):
        ok = False
        detail.append("L offdiag")

    elapsed = time.monotonic() - start
    report(8, "orthogonality: q-Hermite Gram (m,n<=6), Stieltjes-Wigert norms (n<=5), "
              "q-Laguerre norms (n<=4)",
           ok and elapsed < 120.0, f"{'; '.join(detail) or 'all good'}, {elapsed:.1f}s")


def test_criterion_9_symmetry_structure():
    start = time.monotonic()
    q = QParam(0.4)
    ok = True
    detail = []
    for n in range(21):
        t = 0.6 + 0.2j
        lhs = q.power(n * n) * (-t) ** n * stieltjes_wigert(n, q.power(-2 * n) / t, q)
        if rel(lhs, stieltjes_wigert(n, t, q)) > 1e-12:
            ok = False
            detail.append(f"sw sym {n}")
    q5 = QParam(0.5)
    for n in range(16):
        xi = 0.4
        lhs = qhermite_inv(n, math.sinh(xi), q5)
        rhs = (math.exp(n * xi) * qpoch_finite(q5.q, q5, n)
               * stieltjes_wigert(n, math.exp(-2 * xi) * q5.power(-n), q5))
        if rel(lhs, rhs) > 1e-12:
            ok = False
            detail.append(f"h-sw {n}")
    nu, z = 0.7, 0.9
    lhs = jackson_bessel(1, nu, z, q5, TR) * qpoch_inf(-z * z / 4, q5, TR)
    if rel(lhs, jackson_bessel(2, nu, z, q5, TR)) > 1e-11:
        ok = False
        detail.append("kind-1/kind-2")
    q4 = QParam(0.4)
    u = 1.1 * 1.1 / 4
    if rel(bessel2_normalized(1.2, u, q4, TR),
           bessel2_normalized_native(1.2, u, q4, TR)) > 1e-11:
        ok = False
        detail.append("kind-2 routes")
    elapsed = time.monotonic() - start
    report(9, "symmetry and cross-route structure checks",
           ok and elapsed < 30.0, f"{'; '.join(detail) or 'all good'}, {elapsed:.1f}s")


def test_criterion_10_determinism(capsys):
    start = time.monotonic()
    args = ["verify", "--group", "PRELIM", "--samples", "2", "--seed", "42",
            "--format", "json", "--threads", "1"]
    code1 = cli_main(list(args))
    out1 = capsys.readouterr().out
    code2 = cli_main(list(args))
    out2 = capsys.readouterr().out
    elapsed = time.monotonic() - start
    report(10, "fixed-seed verify reproduces byte-identical JSON",
           code1 == 0 and code2 == 0 and out1 == out2, f"{elapsed:.1f}s")
