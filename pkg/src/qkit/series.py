"""Hypergeometric engines and named q-transcendental functions.

Implements the unilateral r_phi_s series (with the standard extra
(-1)^k q^(k choose 2) powers when the lower parameter list is longer),
the bilateral m_psi_m series, the q^(l k^2)-weighted series, the three
q-exponentials e_q, E_q and the two-variable cal-E, the Ramanujan
function A_q, Jackson's three q-Bessel functions and the modified I^(k).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .core import DEFAULT_TRUNCATION, QParam, Truncation, ensure_finite, qpoch_finite, qpoch_inf
from .errors import ConvergenceError, DomainError, PoleError, TruncationError

__all__ = [
    "PhiSpec",
    "PsiSpec",
    "MFunctionSpec",
    "phi",
    "psi_bilateral",
    "m_weighted",
    "q_exp_small",
    "q_exp_big",
    "ramanujan_a",
    "cal_e",
    "jackson_bessel",
    "modified_bessel_i",
]


def _as_exact_negative_qpower(a, q: QParam, limit: int = 500):
    """If a is (numerically) q^(-m) for an integer m >= 0, return m, else None."""
    if a == 0:
        return None
    mag = abs(a)
    if mag < 1.0 - 1e-12:
        return None
    m = round(math.log(mag) / q.log_inv)
    if m < 0 or m > limit:
        return None
    if abs(a * q.power(m) - 1.0) < 1e-9:
        return m
    return None


@dataclass(frozen=True)
class PhiSpec:
    """Parameters of a unilateral basic hypergeometric series.

    upper = (a_1..a_r), lower = (b_1..b_s), base q, argument z.  A lower
    parameter of the form q^(-m) is a pole of the term unless an upper
    parameter terminates the series first; this is checked at evaluation.
    """

    upper: tuple
    lower: tuple
    q: QParam
    z: complex

    def __init__(self, upper, lower, q, z):
        object.__setattr__(self, "upper", tuple(complex(a) for a in upper))
        object.__setattr__(self, "lower", tuple(complex(b) for b in lower))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "z", complex(z))


@dataclass(frozen=True)
class PsiSpec:
    """Parameters of a bilateral series with equally many upper/lower entries."""

    upper: tuple
    lower: tuple
    q: QParam
    z: complex

    def __init__(self, upper, lower, q, z):
        upper = tuple(complex(a) for a in upper)
        lower = tuple(complex(b) for b in lower)
        if len(upper) != len(lower):
            raise DomainError("bilateral series needs equally long parameter lists")
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "z", complex(z))

    def annulus(self):
        """(inner, outer) radii of the convergence annulus."""
        num = 1.0
        for b in self.lower:
            num *= abs(b)
        den = 1.0
        for a in self.upper:
            den *= abs(a)
        if den == 0.0:
            return math.inf, 1.0
        return num / den, 1.0


@dataclass(frozen=True)
class MFunctionSpec:
    """Parameters of the q^(l k^2)-weighted series with weight l > 0."""

    alphas: tuple
    betas: tuple
    q: QParam
    ell: float
    z: complex

    def __init__(self, alphas, betas, q, ell, z):
        if not ell > 0:
            raise DomainError(f"weight ell must be positive, got {ell}")
        object.__setattr__(self, "alphas", tuple(complex(a) for a in alphas))
        object.__setattr__(self, "betas", tuple(complex(b) for b in betas))
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "ell", float(ell))
        object.__setattr__(self, "z", complex(z))


def phi(spec: PhiSpec, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Evaluate the unilateral series r_phi_s.

    Term k is  prod(a_i;q)_k / [(q;q)_k prod(b_j;q)_k] *
    ((-1)^k q^(k(k-1)/2))^(1+s-r) * z^k.  Terminating series (an upper
    parameter equal to q^(-m)) stop exactly at k = m.
    """
    q = spec.q
    r, s = len(spec.upper), len(spec.lower)
    excess = 1 + s - r

    stop = None
    for a in spec.upper:
        m = _as_exact_negative_qpower(a, q)
        if m is not None:
            stop = m if stop is None else min(stop, m)
    if stop is None:
        if excess < 0:
            raise DomainError(
                "divergent series: more upper than lower parameters and no termination"
            )
        if excess == 0 and abs(spec.z) >= 1.0:
            raise ConvergenceError(f"series needs |z| < 1, got |z| = {abs(spec.z)}")
        for b in spec.lower:
            m = _as_exact_negative_qpower(b, q)
            if m is not None:
                raise PoleError(f"lower parameter equals q^(-{m}): term pole")

    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    qq = q.q
    qk = 1.0  # q^k
    for k in range(tr.max_terms):
        if stop is not None and k >= stop:
            break
        ratio = spec.z
        for a in spec.upper:
            ratio *= 1.0 - a * qk
        den = 1.0 - qq * qk
        for b in spec.lower:
            den *= 1.0 - b * qk
        if abs(den) < 1e-290:
            raise PoleError(f"zero denominator factor at term {k + 1} (lower parameter pole)")
        ratio /= den
        if excess:
            ratio *= (-qk) ** excess if excess > 0 else 1.0 / ((-qk) ** (-excess))
        term *= ratio
        total += term
        qk *= qq
        if stop is None and abs(term) < tr.tol * max(abs(total), 1.0) and k > 3:
            return ensure_finite(total, "phi")
    if stop is not None:
        return ensure_finite(total, "phi")
    raise TruncationError("phi series did not converge within max_terms")


def psi_bilateral(spec: PsiSpec, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Evaluate the bilateral series m_psi_m wing by wing.

    z must lie strictly inside the convergence annulus
    |b_1...b_m/(a_1...a_m)| < |z| < 1.
    """
    q = spec.q
    inner, outer = spec.annulus()
    az = abs(spec.z)
    if not (inner < az < outer):
        raise ConvergenceError(
            f"|z| = {az:.6g} outside convergence annulus ({inner:.6g}, {outer:.6g})"
        )
    qq = q.q

    total = 1.0 + 0.0j
    # Nonnegative wing: ratio of consecutive terms at index n -> n+1.
    term = 1.0 + 0.0j
    qn = 1.0
    converged_pos = False
    for n in range(tr.max_terms):
        ratio = spec.z
        for a in spec.upper:
            ratio *= 1.0 - a * qn
        for b in spec.lower:
            den = 1.0 - b * qn
            if abs(den) < 1e-290:
                raise PoleError("lower parameter pole in bilateral term")
            ratio /= den
        term *= ratio
        total += term
        qn *= qq
        if abs(term) < tr.tol * max(abs(total), 1.0) and n > 3:
            converged_pos = True
            break
    if not converged_pos:
        raise TruncationError("bilateral series positive wing did not converge")

    # Negative wing: term(-m-1)/term(-m) = prod(1 - b q^{-m-1})/prod(1 - a q^{-m-1}) / z.
    term = 1.0 + 0.0j
    for m in range(tr.max_terms):
        qneg = q.power(-(m + 1))
        ratio = 1.0 / spec.z
        for b in spec.lower:
            ratio *= 1.0 - b * qneg
        for a in spec.upper:
            den = 1.0 - a * qneg
            if abs(den) < 1e-290:
                raise PoleError("upper parameter pole in bilateral term (negative wing)")
            ratio /= den
        term *= ratio
        total += term
        if abs(term) < tr.tol * max(abs(total), 1.0) and m > 3:
            return ensure_finite(total, "psi_bilateral")
    raise TruncationError("bilateral series negative wing did not converge")


def m_weighted(spec: MFunctionSpec, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Evaluate sum_k prod(alpha;q)_k q^(l k^2) (-z)^k / [(q;q)_k prod(beta;q)_k]."""
    q = spec.q
    qq = q.q
    w = q.power(spec.ell)  # q^l; weight ratio q^{l(2k+1)}
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    qk = 1.0
    wpow = w  # q^{l(2k+1)} at current k
    w2 = w * w
    for k in range(tr.max_terms):
        ratio = -spec.z * wpow
        for a in spec.alphas:
            ratio *= 1.0 - a * qk
        den = 1.0 - qq * qk
        for b in spec.betas:
            den *= 1.0 - b * qk
        if abs(den) < 1e-290:
            raise PoleError("lower parameter pole in weighted series")
        term *= ratio / den
        total += term
        qk *= qq
        wpow *= w2
        if abs(term) < tr.tol * max(abs(total), 1.0) and k > 3:
            return ensure_finite(total, "m_weighted")
    raise TruncationError("weighted series did not converge within max_terms")


def q_exp_small(z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """e_q(z) = 1/(z;q)_inf, meromorphic with poles at z = q^(-m).

    Computed as the reciprocal infinite product, which stays valid well
    beyond |z| < 1 (where the defining power series converges).
    """
    den = qpoch_inf(z, q, tr)
    if abs(den) < 1e-280:
        raise PoleError(f"e_q pole: (z;q)_inf vanished at z = {z}")
    return 1.0 / den


def q_exp_big(z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """E_q(z) = (-z;q)_inf, entire in z."""
    return qpoch_inf(-complex(z), q, tr)


def ramanujan_a(z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Ramanujan function A_q(z) = sum_n q^(n^2) (-z)^n / (q;q)_n (entire)."""
    z = complex(z)
    qq = q.q
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    peak = 1.0
    for n in range(1, tr.max_terms):
        term *= qq ** (2 * n - 1) * (-z) / (1.0 - qq**n)
        total += term
        mag = abs(term)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300) and qq ** (2 * n + 1) * abs(z) < 1:
            return ensure_finite(total, "ramanujan_a")
    raise TruncationError("Ramanujan function series did not converge")


def cal_e(x, t, q: QParam, tr: Truncation = DEFAULT_TRUNCATION, route: str = "hermite") -> complex:
    """Two-variable q-exponential cal-E(x;t) for |t| < 1.

    route='hermite' sums q^(n^2/4) t^n H_n(x|q)/(q;q)_n and divides by
    (q t^2;q^2)_inf.  route='shifted' uses the equivalent form with the
    (t^2;q^2)_inf/(q t^2;q^2)_inf prefactor and shifted finite products;
    the two must agree and are cross-checked by the identity registry.
    """
    from .polys import qhermite  # local import to avoid a cycle

    x = complex(x)
    t = complex(t)
    if abs(t) >= 1.0:
        raise DomainError(f"cal_e needs |t| < 1, got |t| = {abs(t)}")
    q2 = QParam(q.q * q.q)
    if route == "hermite":
        total = 0.0 + 0.0j
        hprev = 1.0 + 0.0j  # H_0
        hcur = 2.0 * x  # H_1
        tn = 1.0 + 0.0j
        qfac = 1.0 + 0.0j  # (q;q)_n
        for n in range(tr.max_terms):
            if n == 1:
                hval = hcur
            elif n == 0:
                hval = hprev
            else:
                hnext = 2.0 * x * hcur - (1.0 - q.power(n - 1)) * hprev
                hprev, hcur = hcur, hnext
                hval = hcur
            if n > 0:
                tn *= t
                qfac *= 1.0 - q.power(n)
            term = q.power(n * n / 4.0) * tn * hval / qfac
            total += term
            # |H_n(cos theta)| <= (n+1) * growth; terms die like q^{n^2/4} t^n
            if n > 6 and abs(term) < tr.tol * max(abs(total), 1.0):
                break
        else:
            raise TruncationError("cal_e hermite series did not converge")
        return ensure_finite(total / qpoch_inf(q.q * t * t, q2, tr), "cal_e")
    if route != "shifted":
        raise DomainError(f"unknown cal_e route {route!r}")
    # arccos with principal branch: x = cos(theta)
    theta = cmath.acos(x)
    eip = cmath.exp(1j * theta)
    eim = cmath.exp(-1j * theta)
    total = 0.0 + 0.0j
    qfac = 1.0 + 0.0j
    log_t = None
    for n in range(tr.max_terms):
        if n > 0:
            qfac *= 1.0 - q.power(n)
        # the shifted products peak near q^(-n^2/4) against the q^(n^2/4)
        # weight; accumulate the whole term logarithmically so large
        # degrees stay representable
        log_acc = complex(n * n / 4.0 * q.ln_q)
        if n > 0:
            if log_t is None:
                log_t = cmath.log(-1j * t) if t != 0 else None
            if log_t is None:
                break  # t = 0: only the n = 0 term contributes
            log_acc += n * log_t
        for sign_e in (eip, eim):
            base = -1j * sign_e * q.power((1.0 - n) / 2.0)
            for j in range(n):
                factor = 1.0 - base * q.power(j)
                if factor == 0:
                    log_acc = None
                    break
                log_acc += cmath.log(factor)
            if log_acc is None:
                break
        if log_acc is None:
            term = 0.0 + 0.0j
        else:
            term = cmath.exp(log_acc) / qfac
        total += term
        if n > 6 and abs(term) < tr.tol * max(abs(total), 1.0):
            break
    else:
        raise TruncationError("cal_e shifted series did not converge")
    pref = qpoch_inf(t * t, q2, tr) / qpoch_inf(q.q * t * t, q2, tr)
    return ensure_finite(pref * total, "cal_e")


def _principal_pow(base, expo) -> complex:
    """base**expo on the principal branch, |arg| < pi; 0**e = 0 for Re e > 0."""
    base = complex(base)
    expo = complex(expo)
    if base == 0:
        if expo.real > 0:
            return 0.0 + 0.0j
        if expo == 0:
            return 1.0 + 0.0j
        raise DomainError("0 raised to a power with nonpositive real part")
    return cmath.exp(expo * cmath.log(base))


def jackson_bessel(kind: int, nu, z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION,
                   route: str = "native") -> complex:
    """Jackson q-Bessel function of the given kind (1, 2 or 3).

    Kind 1 uses its native series for |z| < 2 and the analytic
    continuation J2(z)/(-z^2/4;q)_inf otherwise; kinds 2 and 3 are
    entire.  Principal branch for (z/2)^nu.  For kind 2,
    route='alternative' evaluates the equivalent expansion in powers of
    q^(n(n+1)/2 + nu n), used as a cross-check route.
    """
    nu = complex(nu)
    z = complex(z)
    if kind not in (1, 2, 3):
        raise DomainError(f"kind must be 1, 2 or 3, got {kind}")
    if z == 0:
        if nu == 0:
            return 1.0 + 0.0j
        if nu.real > 0:
            return 0.0 + 0.0j
        raise DomainError("q-Bessel at z = 0 needs Re nu >= 0")
    qq = q.q
    qnu = q.power(nu)

    if kind == 2 and route == "alternative":
        # (2/z)^nu J2 = (1/(q;q)_inf) sum (-z^2/4;q)_n (-1)^n q^(n(n+1)/2 + nu n)/(q;q)_n
        w = -z * z / 4.0
        total = 0.0 + 0.0j
        term = 1.0 + 0.0j
        for n in range(tr.max_terms):
            if n > 0:
                term *= -(1.0 - w * q.power(n - 1)) * q.power(n) * qnu / (1.0 - q.power(n))
                # ratio: (-z^2/4;q)_n/(...)_{n-1} = (1 - w q^{n-1}); q^{binom(n+1,2)} ratio q^n
            total += term
            if n > 4 and abs(term) < tr.tol * max(abs(total), 1.0):
                break
        else:
            raise TruncationError("alternative q-Bessel series did not converge")
        return ensure_finite(
            _principal_pow(z / 2.0, nu) * total / qpoch_inf(qq, q, tr), "jackson_bessel"
        )
    if route != "native":
        raise DomainError(f"unknown q-Bessel route {route!r}")

    if kind == 1 and abs(z) >= 2.0:
        den = qpoch_inf(-z * z / 4.0, q, tr)
        if abs(den) < 1e-280:
            raise PoleError("kind-1 q-Bessel pole: (-z^2/4;q)_inf vanished")
        return jackson_bessel(2, nu, z, q, tr) / den

    u = z * z / 4.0
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(1, tr.max_terms):
        qn = q.power(n)
        ratio = -u / ((1.0 - qn) * (1.0 - qnu * qn))
        if kind == 2:
            ratio *= q.power(2 * n - 1) * qnu
        elif kind == 3:
            ratio *= q.power(n)
        term *= ratio
        total += term
        if n > 4 and abs(term) < tr.tol * max(abs(total), 1.0):
            break
    else:
        raise TruncationError("q-Bessel series did not converge")
    pref = _principal_pow(z / 2.0, nu) * qpoch_inf(qq * qnu, q, tr) / qpoch_inf(qq, q, tr)
    return ensure_finite(pref * total, "jackson_bessel")


def modified_bessel_i(kind: int, nu, z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Modified q-Bessel I^(k)(z;q) = exp(-i pi nu/2) J^(k)(iz;q), k = 1 or 2."""
    if kind not in (1, 2):
        raise DomainError(f"modified kind must be 1 or 2, got {kind}")
    nu = complex(nu)
    return cmath.exp(-1j * math.pi * nu / 2.0) * jackson_bessel(kind, nu, 1j * complex(z), q, tr)


def ramanujan_a_shifted(z, shift, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Gaussian-damped Ramanujan function q^(shift^2) A_q(q^(2 shift) z).

    Computed as sum_n q^((n+shift)^2) (-z)^n/(q;q)_n, whose terms stay
    bounded by |z|^n for any real shift; the naive route overflows once
    the scaled argument q^(2 shift) z leaves the double range.
    """
    z = complex(z)
    shift = float(shift)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (-z)^n / (q;q)_n
    peak = 1.0
    quiet = 0
    for n in range(tr.max_terms):
        if n:
            term *= -z / (1.0 - q.power(n))
        piece = term * q.power((n + shift) ** 2)
        total += piece
        mag = abs(piece)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and n > 5 and n > -shift:
                return ensure_finite(total, "ramanujan_a_shifted")
        else:
            quiet = 0
    raise TruncationError("shifted Ramanujan series did not converge")


def poch_gauss(w, beta, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Gaussian-damped infinite product q^(beta^2/2) (w q^beta;q)_inf.

    The leading factors are accumulated as complex logarithms together
    with the Gaussian exponent, so the value stays representable (and
    free of cancellation) even where the bare product overflows.
    """
    w = complex(w)
    beta = float(beta)
    log_acc = complex(beta * beta / 2.0 * q.ln_q)
    k = 0
    wq = w * q.power(beta)
    while abs(wq) > 0.125 and k < tr.max_terms:
        factor = 1.0 - wq
        if abs(factor) < 1e-290:
            return 0.0 + 0.0j
        log_acc += cmath.log(factor)
        wq *= q.q
        k += 1
    if k >= tr.max_terms:
        raise TruncationError("poch_gauss leading product did not shrink")
    tail = qpoch_inf(wq, q, tr)
    if log_acc.real < -745.0:
        return 0.0 + 0.0j
    return ensure_finite(cmath.exp(log_acc) * tail, "poch_gauss")


def confluent_phi_weighted(a, b0, z0, beta, q: QParam,
                           tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """q^(beta^2/2) (b0 q^beta;q)_inf 1phi1(a; b0 q^beta; q, z0 q^(beta+1/2)).

    Distributing the infinite product over the series gives
    sum_k (a;q)_k (-z0)^k poch_gauss(b0, beta+k)/(q;q)_k, which stays
    bounded for any real beta and crosses the lower parameter's poles
    smoothly (the product zero cancels them).
    """
    a = complex(a)
    z0 = complex(z0)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (a;q)_k (-z0)^k/(q;q)_k
    peak = 1.0
    quiet = 0
    for k in range(tr.max_terms):
        if k:
            term *= (1.0 - a * q.power(k - 1)) * (-z0) / (1.0 - q.power(k))
        piece = term * poch_gauss(b0, beta + k, q, tr)
        total += piece
        mag = abs(piece)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and k > 5 and k > -beta:
                return ensure_finite(total, "confluent_phi_weighted")
        else:
            quiet = 0
    raise TruncationError("weighted confluent series did not converge")


def cal_e_raw_shifted(x, t, shift, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Gaussian-damped bare q-Hermite sum q^(shift^2/4) * raw(x, t q^(shift/2)).

    Equals sum_n q^((n+shift)^2/4) t^n H_n(x|q)/(q;q)_n with bounded terms.
    """
    from .polys import qhermite

    x = complex(x)
    t = complex(t)
    shift = float(shift)
    total = 0.0 + 0.0j
    hprev = 1.0 + 0.0j
    hcur = 2.0 * x
    tn = 1.0 + 0.0j
    qfac = 1.0 + 0.0j
    peak = 1.0
    quiet = 0
    for n in range(tr.max_terms):
        if n == 0:
            hval = hprev
        elif n == 1:
            hval = hcur
        else:
            hprev, hcur = hcur, 2.0 * x * hcur - (1.0 - q.power(n - 1)) * hprev
            hval = hcur
        if n > 0:
            tn *= t
            qfac *= 1.0 - q.power(n)
        term = q.power((n + shift) ** 2 / 4.0) * tn * hval / qfac
        total += term
        mag = abs(term)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and n > 6 and n > -shift:
                return ensure_finite(total, "cal_e_raw_shifted")
        else:
            quiet = 0
    raise TruncationError("cal_e_raw_shifted series did not converge")


def cal_e_raw(x, t, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Unnormalized two-variable q-exponential: the bare q-Hermite sum.

    Equals (q t^2;q^2)_inf * cal_e(x;t) and is entire in t, which makes it
    the right object inside transform integrands where t sweeps past the
    normalization's zeros.
    """
    from .polys import qhermite

    x = complex(x)
    t = complex(t)
    total = 0.0 + 0.0j
    hprev = 1.0 + 0.0j
    hcur = 2.0 * x
    tn = 1.0 + 0.0j
    qfac = 1.0 + 0.0j
    peak = 1.0
    for n in range(tr.max_terms):
        if n == 0:
            hval = hprev
        elif n == 1:
            hval = hcur
        else:
            hprev, hcur = hcur, 2.0 * x * hcur - (1.0 - q.power(n - 1)) * hprev
            hval = hcur
        if n > 0:
            tn *= t
            qfac *= 1.0 - q.power(n)
        term = q.power(n * n / 4.0) * tn * hval / qfac
        total += term
        peak = max(peak, abs(term))
        if n > 6 and abs(term) < tr.tol * max(abs(total), peak * 1e-16, 1e-300) \
                and q.power((2 * n + 1) / 4.0).real * abs(t) < 1:
            return ensure_finite(total, "cal_e_raw")
    raise TruncationError("cal_e_raw series did not converge")


def _entire_sum(ratio, tr: Truncation, context: str) -> complex:
    """Sum 1 + t_1 + t_2 + ... with t_k/t_{k-1} given by ratio(k-1)."""
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    peak = 1.0
    for k in range(tr.max_terms):
        term *= ratio(k)
        total += term
        mag = abs(term)
        peak = max(peak, mag)
        if k > 5 and mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300) and abs(ratio(k + 1)) < 0.7:
            return ensure_finite(total, context)
    raise TruncationError(f"{context} series did not converge")


def bessel1_normalized(nu, u, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(2/z)^nu J1_nu(z;q) as a function of u = (z/2)^2, single-valued in u."""
    nu = complex(nu)
    u = complex(u)
    qnu = q.power(nu)

    def ratio(k):
        return -u / ((1.0 - q.power(k + 1)) * (1.0 - qnu * q.power(k + 1)))

    body = _entire_sum(ratio, tr, "bessel1_normalized")
    return qpoch_inf(q.q * qnu, q, tr) / qpoch_inf(q.q, q, tr) * body


def bessel2_normalized(nu, u, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(2/z)^nu J2_nu(z;q) as a function of u = (z/2)^2, entire in the order.

    Uses the expansion in q^(n(n+1)/2 + nu n), which has no
    (q^(nu+1);q)_inf prefactor and therefore stays meaningful when the
    order sweeps through negative integers (as it does inside transform
    integrands with complex-shifted orders).
    """
    nu = complex(nu)
    u = complex(u)
    qnu = q.power(nu)

    def ratio(k):
        return -(1.0 - (-u) * q.power(k)) * q.power(k + 1) * qnu / (1.0 - q.power(k + 1))

    body = _entire_sum(ratio, tr, "bessel2_normalized")
    return body / qpoch_inf(q.q, q, tr)


def bessel2_normalized_native(nu, u, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(2/z)^nu J2_nu(z;q) from the defining series, for orders away from poles."""
    nu = complex(nu)
    u = complex(u)
    qnu = q.power(nu)

    def ratio(k):
        return -u * q.power(2 * k + 1) * qnu / ((1.0 - q.power(k + 1)) * (1.0 - qnu * q.power(k + 1)))

    body = _entire_sum(ratio, tr, "bessel2_normalized_native")
    return qpoch_inf(q.q * qnu, q, tr) / qpoch_inf(q.q, q, tr) * body


def bessel2_normalized_gauss(nu, u, alpha, q: QParam,
                             tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Gaussian-damped normalized kind-2 function q^(alpha^2/2) N2(alpha+nu, u).

    Expanded with the weight absorbed into q^((alpha+n)^2/2) so terms stay
    bounded for any real alpha.
    """
    nu = complex(nu)
    u = complex(u)
    alpha = float(alpha)
    qnu = q.power(nu)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (-u;q)_n (-1)^n q^(n/2 + nu n) / (q;q)_n
    peak = 1.0
    quiet = 0
    for n in range(tr.max_terms):
        if n:
            term *= -(1.0 - (-u) * q.power(n - 1)) * q.power(0.5) * qnu / (1.0 - q.power(n))
        piece = term * q.power((alpha + n) ** 2 / 2.0)
        total += piece
        mag = abs(piece)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and n > 5 and n > -alpha:
                return total / qpoch_inf(q.q, q, tr)
        else:
            quiet = 0
    raise TruncationError("weighted kind-2 expansion did not converge")


def bessel3_normalized_gauss(nu, z2, alpha, q: QParam,
                             tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Gaussian-damped kind-3 value q^(alpha^2/2) N3(alpha+nu, z2 q^alpha).

    Both the order and the argument carry the sweep variable; absorbing
    the weight term by term gives
    sum_n (-z2 q^(1/2))^n poch_gauss(q^(nu+1), alpha+n)/(q;q)_n, with
    bounded terms whenever |z2| sqrt(q) < 1.
    """
    nu = complex(nu)
    z2 = complex(z2)
    alpha = float(alpha)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # (-z2 q^(1/2))^n / (q;q)_n
    peak = 1.0
    quiet = 0
    for n in range(tr.max_terms):
        if n:
            term *= -z2 * q.power(0.5) / (1.0 - q.power(n))
        piece = term * poch_gauss(q.power(nu + 1), alpha + n, q, tr)
        total += piece
        mag = abs(piece)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and n > 5 and n > -alpha:
                return total / qpoch_inf(q.q, q, tr)
        else:
            quiet = 0
    raise TruncationError("weighted kind-3 expansion did not converge")


def bessel3_normalized(mu, u, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(2/z)^mu J3_mu(z;q) as a function of u = (z/2)^2, entire in the order."""
    mu = complex(mu)
    u = complex(u)
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j  # q^(binom(n+1,2)) (-u)^n / (q;q)_n, before the tail product
    peak = 1.0
    quiet = 0
    for n in range(tr.max_terms):
        if n > 0:
            term *= -u * q.power(n) / (1.0 - q.power(n))
        piece = term * qpoch_inf(q.power(mu + n + 1), q, tr)
        total += piece
        mag = abs(piece)
        peak = max(peak, mag)
        if mag < tr.tol * max(abs(total), peak * 1e-16, 1e-300):
            quiet += 1
            if quiet >= 2 and n > 5:
                return total / qpoch_inf(q.q, q, tr)
        else:
            quiet = 0
    raise TruncationError("bessel3_normalized series did not converge")


def bessel3_normalized_native(nu, u, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """(2/z)^nu J3_nu(z;q) from the defining series, for orders away from poles."""
    nu = complex(nu)
    u = complex(u)
    qnu = q.power(nu)

    def ratio(k):
        return -u * q.power(k + 1) / ((1.0 - q.power(k + 1)) * (1.0 - qnu * q.power(k + 1)))

    body = _entire_sum(ratio, tr, "bessel3_normalized_native")
    return qpoch_inf(q.q * qnu, q, tr) / qpoch_inf(q.q, q, tr) * body
