"""Quadrature engines for the integral representations.

Four engines: Gaussian-weighted line integrals over R (trapezoid with
step halving, exponentially convergent for strip-analytic integrands),
circle-contour integrals (N-point trapezoid in the angle, doubling N),
vertical-line Bromwich-type integrals (geometric panels with adaptive
Simpson), and log-substituted half-line / plain finite-interval
integrals.  All engines are pure given their integrand closures.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .core import DEFAULT_TRUNCATION, QParam, Truncation, ensure_finite
from .errors import QuadratureError

__all__ = [
    "LineIntegrand",
    "ContourSpec",
    "VerticalLineSpec",
    "gaussian_line",
    "circle_contour",
    "vertical_line",
    "halfline_log",
    "finite_interval",
    "real_line",
]

# Hard cap on integrand evaluations per engine call.
_EVAL_BUDGET = 1 << 20


@dataclass(frozen=True)
class LineIntegrand:
    """Analytic factor of a Gaussian-weighted line integral.

    The engine computes integral of  f(y) * exp(-y^2/(2*sigma2))  over R.
    With sigma2 = ln(1/q) the weight equals exp(y^2/log(q^2)), the form
    the lognormal-moment representation uses.  oscillation_hint is the
    largest |frequency| (radians per unit y) among the e^(i a y)-type
    factors of f, used only to pick the initial step.
    """

    f: object
    q: QParam
    oscillation_hint: float = 0.0
    sigma2: float = 0.0  # 0 means "use ln(1/q)"; negative means f carries its own decay

    def variance(self) -> float:
        if self.sigma2 < 0.0:
            return self.q.log_inv
        return self.sigma2 if self.sigma2 > 0.0 else self.q.log_inv

    def self_weighted(self) -> bool:
        return self.sigma2 < 0.0


def gaussian_line(gi: LineIntegrand, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Integrate f(y) exp(-y^2/(2 sigma^2)) over the real line.

    The domain is truncated where the integrand is certifiably below
    tolerance (with automatic extension while the boundary values are
    not), then a composite trapezoid rule is refined by halving the step
    until two successive estimates agree to tolerance.
    """
    f = gi.f
    sigma2 = gi.variance()
    sigma = math.sqrt(sigma2)
    L_inv = 1.0 / max(abs(gi.q.ln_q), 1e-12)

    if gi.self_weighted():
        def integrand(y: float) -> complex:
            try:
                return complex(f(y))
            except OverflowError:
                raise QuadratureError(f"integrand overflow at y = {y:.4g}") from None
    else:
        def integrand(y: float) -> complex:
            try:
                return complex(f(y)) * math.exp(-y * y / (2.0 * sigma2))
            except OverflowError:
                raise QuadratureError(f"integrand overflow at y = {y:.4g}") from None

    scale0 = max(1.0, abs(complex(f(0.0))))
    ymax = sigma * math.sqrt(2.0 * max(math.log(scale0 / tr.tol), 1.0))
    h0 = min(sigma / 8.0, math.pi / (4.0 * (gi.oscillation_hint + L_inv)))

    lo, hi = -ymax, ymax
    evals = 0

    # Probe-extend the window cheaply before any refinement: integrands whose
    # analytic factor grows against the weight decay only exponentially, so
    # the Gaussian-based initial window can be far too narrow.
    def edge_mag(y: float) -> float:
        worst = 0.0
        for yy in (y, y - 0.23 * sigma, y + 0.26 * sigma):
            v = integrand(yy)
            m = abs(v.real) + abs(v.imag)
            if not math.isfinite(m):
                raise QuadratureError(f"integrand not finite near y = {yy:.3g}")
            worst = max(worst, m)
        return worst

    threshold = 0.02 * tr.tol * scale0
    step = max(sigma, (hi - lo) / 8.0)
    for _ in range(400):
        if edge_mag(lo) <= threshold:
            break
        lo -= step
        evals += 3
    for _ in range(400):
        if edge_mag(hi) <= threshold:
            break
        hi += step
        evals += 3

    for _ in range(200):  # domain extension loop
        n = max(8, int(math.ceil((hi - lo) / h0)))
        h = (hi - lo) / n
        ys = [lo + i * h for i in range(n + 1)]
        vals = [integrand(y) for y in ys]
        evals += len(vals)
        total = (sum(vals) - 0.5 * (vals[0] + vals[-1])) * h
        prev = total
        # refine by halving until stable (never trusting the first levels)
        converged = False
        for level in range(24):
            mids = [lo + (i + 0.5) * h for i in range(n)]
            mvals = [integrand(y) for y in mids]
            evals += len(mvals)
            if evals > _EVAL_BUDGET:
                raise QuadratureError(
                    "gaussian_line exceeded evaluation budget", estimates=(prev, total)
                )
            total_new = 0.5 * total + h * 0.5 * sum(mvals)
            h *= 0.5
            n *= 2
            prev, total = total, total_new
            fmax = max((abs(v.real) + abs(v.imag)) for v in mvals)
            floor = 2e-16 * fmax * (hi - lo)
            if level >= 2 and abs(total - prev) <= max(tr.tol * abs(total), floor, 1e-300):
                converged = True
                break
        if not converged:
            raise QuadratureError(
                "gaussian_line trapezoid did not stabilize", estimates=(prev, total)
            )
        # certify the boundary: integrand must be negligible at both ends
        scale = max(abs(total), 1e-300)
        edge = max(abs(integrand(lo)), abs(integrand(hi)))
        evals += 2
        if edge * (hi - lo) <= 10.0 * tr.tol * scale:
            return ensure_finite(total, "gaussian_line")
        lo *= 1.3
        hi *= 1.3
    raise QuadratureError("gaussian_line domain extension did not terminate")


@dataclass(frozen=True)
class ContourSpec:
    """A positively oriented circle |z| = r and an analytic integrand."""

    r: float
    f: object

    def __post_init__(self):
        if not self.r > 0:
            raise QuadratureError(f"contour radius must be positive, got {self.r}")


def circle_contour(cs: ContourSpec, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(1/(2 pi i)) closed contour integral of f over the circle |z| = r.

    Equals the mean of f(z) z over equispaced angles; the N-point
    trapezoid rule is exact for trigonometric polynomials and converges
    exponentially for analytic f, so N is doubled from 64 until two
    successive values agree.
    """
    f = cs.f
    r = cs.r

    fmax = [0.0]

    def mean(n: int) -> complex:
        acc = 0.0 + 0.0j
        for k in range(n):
            z = r * cmath.exp(2j * math.pi * k / n)
            val = complex(f(z)) * z
            fmax[0] = max(fmax[0], abs(val.real) + abs(val.imag))
            acc += val
        return acc / n

    n = 64
    prev = mean(n)
    while n <= (1 << 16):
        n *= 2
        cur = mean(n)
        # converged when the change is below tolerance or below the
        # roundoff floor of the coefficient extraction
        if abs(cur - prev) <= max(tr.tol * abs(cur), 5e-16 * fmax[0]):
            return ensure_finite(cur, "circle_contour")
        prev = cur
    raise QuadratureError(
        "circle_contour did not converge by N = 2^16", estimates=(prev, cur)
    )


def _adaptive_simpson(f, a: float, b: float, tol: float, budget: list, depth: int = 0) -> complex:
    fa, fm, fb = complex(f(a)), complex(f((a + b) / 2.0)), complex(f(b))
    budget[0] += 3
    whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    return _simpson_refine(f, a, b, fa, fm, fb, whole, tol, budget, depth)


def _simpson_refine(f, a, b, fa, fm, fb, whole, tol, budget, depth) -> complex:
    if budget[0] > _EVAL_BUDGET:
        raise QuadratureError("adaptive Simpson exceeded evaluation budget")
    m = (a + b) / 2.0
    lm, rm = (a + m) / 2.0, (m + b) / 2.0
    flm, frm = complex(f(lm)), complex(f(rm))
    budget[0] += 2
    left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
    right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
    delta = left + right - whole
    if depth > 48:
        return left + right
    if abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return _simpson_refine(
        f, a, m, fa, flm, fm, left, tol / 2.0, budget, depth + 1
    ) + _simpson_refine(f, m, b, fm, frm, fb, right, tol / 2.0, budget, depth + 1)


@dataclass(frozen=True)
class VerticalLineSpec:
    """Bromwich-type line Re(z) = rho, 0 < rho < 1, with integrand f.

    decay_order_hint bounds how slowly f decays along the line; panels
    stop once consecutive contributions certify the tail below tolerance.
    """

    rho: float
    f: object
    decay_order_hint: int = 2

    def __post_init__(self):
        if not 0.0 < self.rho < 1.0:
            raise QuadratureError(f"vertical line needs 0 < rho < 1, got {self.rho}")


def vertical_line(vs: VerticalLineSpec, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(1/(2 pi i)) integral of f over the vertical line rho - i*inf .. rho + i*inf.

    The line is split into geometric panels [y, 2y] integrated by
    adaptive Simpson; each wing stops when two consecutive panels
    contribute below tolerance relative to the accumulated value.
    """
    f = vs.f
    rho = vs.rho
    budget = [0]

    def g(y: float) -> complex:
        return complex(f(complex(rho, y)))

    # central panel and symmetric geometric expansion
    panel_tol = tr.tol
    total = _adaptive_simpson(g, -1.0, 1.0, panel_tol, budget)
    y = 1.0
    quiet = 0
    while quiet < 2:
        upper = _adaptive_simpson(g, y, 2.0 * y, panel_tol, budget)
        lower = _adaptive_simpson(g, -2.0 * y, -y, panel_tol, budget)
        total += upper + lower
        scale = max(abs(total), 1e-300)
        if abs(upper) + abs(lower) <= tr.tol * scale:
            quiet += 1
        else:
            quiet = 0
        y *= 2.0
        if y > 2.0**48:
            raise QuadratureError(
                "vertical_line tail not certified within panel budget",
                estimates=(abs(upper) + abs(lower), scale),
            )
    # the contour runs upward: dz = i dy, and the 1/(2 pi i) brings 1/(2 pi)
    return ensure_finite(total / (2.0 * math.pi), "vertical_line")


def real_line(f, tr: Truncation = DEFAULT_TRUNCATION, center: float = 0.0, width: float = 1.0) -> complex:
    """Integral of f over R by expanding unit panels around a center.

    Suitable for integrands with (at least) exponential two-sided decay,
    e.g. lognormal weights after the x = e^u substitution.
    """
    budget = [0]
    total = _adaptive_simpson(f, center - width, center + width, tr.tol, budget)
    # expand right
    for sign in (+1.0, -1.0):
        edge = width
        quiet = 0
        while quiet < 3:
            a = center + sign * edge
            b = center + sign * (edge + width)
            part = _adaptive_simpson(f, min(a, b), max(a, b), tr.tol, budget)
            total += part
            if abs(part) <= tr.tol * max(abs(total), 1e-300):
                quiet += 1
            else:
                quiet = 0
            edge += width
            if edge > 1e6:
                raise QuadratureError("real_line expansion did not terminate")
    return ensure_finite(total, "real_line")


def halfline_log(f, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Integral of f over (0, inf) via the substitution x = e^u."""

    def g(u: float) -> complex:
        x = math.exp(u)
        return complex(f(x)) * x

    return real_line(g, tr, center=0.0, width=2.0)


def finite_interval(f, a: float, b: float, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Adaptive-Simpson integral of f over the finite interval [a, b].

    Integrands with an inverse-square-root edge factor on (-1, 1) should
    be evaluated through the x = cos(theta) substitution by the caller;
    the orthogonality helpers in the identity registry do exactly that.
    """
    budget = [0]
    return ensure_finite(_adaptive_simpson(f, a, b, tr.tol, budget), "finite_interval")
