"""q-orthogonal polynomial families and their weight functions.

Continuous q-Hermite H_n, q^(-1)-Hermite h_n, q-Laguerre L_n^(alpha),
Stieltjes-Wigert S_n, the general confluent family p_n, and the
pointwise densities for the orthogonality relations in scope.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core import DEFAULT_TRUNCATION, QParam, Truncation, ensure_finite, qpoch_finite, qpoch_inf
from .errors import DomainError

__all__ = [
    "qhermite",
    "qhermite_sum",
    "qhermite_inv",
    "qhermite_inv_exp",
    "qlaguerre",
    "stieltjes_wigert",
    "confluent_poly",
    "WeightSpec",
    "weight",
]


def qhermite(n: int, x, q: QParam) -> complex:
    """Continuous q-Hermite polynomial H_n(x|q) by the three-term recurrence.

    H_0 = 1, H_1 = 2x, H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    x = complex(x)
    if n == 0:
        return 1.0 + 0.0j
    hprev = 1.0 + 0.0j
    hcur = 2.0 * x
    for k in range(1, n):
        hprev, hcur = hcur, 2.0 * x * hcur - (1.0 - q.power(k)) * hprev
    return ensure_finite(hcur, "qhermite")


def qhermite_sum(n: int, x, q: QParam) -> complex:
    """H_n(cos(theta)|q) by its explicit sum over e^(i(n-2k)theta) terms.

    Independent of the recurrence route; used as a cross-check.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    theta = cmath.acos(complex(x))
    eip = cmath.exp(1j * theta)
    total = 0.0 + 0.0j
    for k in range(n + 1):
        coeff = qpoch_finite(q.q, q, n) / (qpoch_finite(q.q, q, k) * qpoch_finite(q.q, q, n - k))
        total += coeff * eip ** (n - 2 * k)
    return ensure_finite(total, "qhermite_sum")


def qhermite_inv_exp(n: int, e_xi, q: QParam) -> complex:
    """q^(-1)-Hermite polynomial h_n(sinh(xi)|q) given e^(xi) directly.

    h_n(sinh xi|q) = sum_k [n k]_q (-1)^k q^(k(k-n)) e^((n-2k) xi).
    Taking the exponential parameter avoids branch ambiguity for the
    complex arguments that arise in modulus-transformation identities.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    e_xi = complex(e_xi)
    if e_xi == 0:
        raise DomainError("e^(xi) must be nonzero")
    total = 0.0 + 0.0j
    for k in range(n + 1):
        coeff = qpoch_finite(q.q, q, n) / (qpoch_finite(q.q, q, k) * qpoch_finite(q.q, q, n - k))
        total += coeff * (-1.0) ** k * q.power(k * (k - n)) * e_xi ** (n - 2 * k)
    return ensure_finite(total, "qhermite_inv_exp")


def qhermite_inv_weighted(n: int, e_xi, q: QParam, wexp: float) -> complex:
    """q^(wexp) h_n(sinh(xi)|q) with the damping folded into every term.

    The bare polynomial peaks near q^(-n^2/4), which overflows long before
    weighted sums like the Poisson kernel stop needing terms; folding the
    weight keeps each term representable.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    e_xi = complex(e_xi)
    if e_xi == 0:
        raise DomainError("e^(xi) must be nonzero")
    total = 0.0 + 0.0j
    for k in range(n + 1):
        coeff = qpoch_finite(q.q, q, n) / (qpoch_finite(q.q, q, k) * qpoch_finite(q.q, q, n - k))
        total += coeff * (-1.0) ** k * q.power(k * (k - n) + wexp) * e_xi ** (n - 2 * k)
    return ensure_finite(total, "qhermite_inv_weighted")


def qhermite_inv(n: int, x, q: QParam) -> complex:
    """q^(-1)-Hermite polynomial h_n(x|q) with xi = arcsinh(x) (principal)."""
    x = complex(x)
    xi = cmath.asinh(x)
    return qhermite_inv_exp(n, cmath.exp(xi), q)


def qlaguerre(n: int, alpha, x, q: QParam) -> complex:
    """q-Laguerre polynomial L_n^(alpha)(x;q).

    (q^(alpha+1);q)_n sum_k q^(alpha k + k^2) (-x)^k /
    [(q;q)_k (q;q)_{n-k} (q^(alpha+1);q)_k].  Terms are accumulated
    incrementally so scaled arguments near the double-range edge stay
    representable.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    alpha = complex(alpha)
    x = complex(x)
    qa = q.power(alpha)
    pref = qpoch_finite(q.q * qa, q, n)
    # term_k = q^(alpha k + k^2) (-x)^k / [(q;q)_k (q^(alpha+1);q)_k]; the
    # 1/(q;q)_{n-k} factor is restored via the ratio (q;q)_n/(q;q)_{n-k}
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    ratio_fac = 1.0 + 0.0j  # (q;q)_n / (q;q)_{n-k}
    for k in range(n + 1):
        if k:
            term *= qa * q.power(2 * k - 1) * (-x) / (
                (1.0 - q.power(k)) * (1.0 - qa * q.power(k)))
            ratio_fac *= 1.0 - q.power(n - k + 1)
        total += term * ratio_fac
    total /= qpoch_finite(q.q, q, n)
    return ensure_finite(pref * total, "qlaguerre")


def stieltjes_wigert(n: int, x, q: QParam, route: str = "qbinom") -> complex:
    """Stieltjes-Wigert polynomial S_n(x;q).

    route='qbinom' uses (1/(q;q)_n) sum_k [n k]_q q^(k^2) (-x)^k; the
    equivalent route='shifted' uses the (q^(-n);q)_k form.  Both routes
    must agree and are cross-checked in the tests.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    x = complex(x)
    qfac_n = qpoch_finite(q.q, q, n)
    total = 0.0 + 0.0j
    if route == "qbinom":
        # incremental terms keep scaled arguments inside the double range
        term = 1.0 + 0.0j  # q^(k^2) (-x)^k / (q;q)_k
        ratio_fac = 1.0 + 0.0j  # (q;q)_n / (q;q)_{n-k}
        for k in range(n + 1):
            if k:
                term *= q.power(2 * k - 1) * (-x) / (1.0 - q.power(k))
                ratio_fac *= 1.0 - q.power(n - k + 1)
            total += term * ratio_fac
        return ensure_finite(total / qfac_n, "stieltjes_wigert")
    if route != "shifted":
        raise DomainError(f"unknown stieltjes_wigert route {route!r}")
    qminus_n = q.power(-n)
    term = 1.0 + 0.0j
    for k in range(n + 1):
        if k:
            term *= ((1.0 - qminus_n * q.power(k - 1)) * q.power(k)
                     * (x * q.power(n)) / (1.0 - q.power(k)))
        total += term
    return ensure_finite(total / qfac_n, "stieltjes_wigert")


def confluent_poly(n: int, alphas, betas, x, q: QParam) -> complex:
    """General confluent polynomial family p_n.

    p_n = sum_{k=0}^n prod(alpha;q)_k q^(k^2) (-x)^k /
    [(q;q)_k prod(beta;q)_k (q;q)_{n-k}].  With empty parameter lists
    this reduces exactly to the Stieltjes-Wigert polynomial.
    """
    if n < 0:
        raise DomainError("polynomial degree must be >= 0")
    alphas = [complex(a) for a in alphas]
    betas = [complex(b) for b in betas]
    x = complex(x)
    total = 0.0 + 0.0j
    for k in range(n + 1):
        num = q.power(k * k) * (-x) ** k
        for a in alphas:
            num *= qpoch_finite(a, q, k)
        den = qpoch_finite(q.q, q, k) * qpoch_finite(q.q, q, n - k)
        for b in betas:
            den *= qpoch_finite(b, q, k)
        total += num / den
    return ensure_finite(total, "confluent_poly")


@dataclass(frozen=True)
class WeightSpec:
    """Pointwise orthogonality weight selector.

    kind is one of 'qhermite', 'sw_lognormal', 'laguerre',
    'ismail_masson_w2'.  alpha is used by the laguerre kind only.  The
    lognormal constant follows c^2 = -1/(2 ln q) for the Stieltjes-Wigert
    weight and c^2 = -(ln q)/2 for the w2 weight; both are derived fields.
    """

    kind: str
    q: QParam
    alpha: float = 0.0

    def __post_init__(self):
        if self.kind not in ("qhermite", "sw_lognormal", "laguerre", "ismail_masson_w2"):
            raise DomainError(f"unknown weight kind {self.kind!r}")

    @property
    def c(self) -> float:
        if self.kind == "sw_lognormal":
            return math.sqrt(-1.0 / (2.0 * self.q.ln_q))
        if self.kind == "ismail_masson_w2":
            return math.sqrt(-self.q.ln_q / 2.0)
        raise DomainError(f"weight kind {self.kind!r} has no lognormal constant")


def weight(spec: WeightSpec, x: float, tr: Truncation = DEFAULT_TRUNCATION) -> float:
    """Evaluate the selected orthogonality density at a point of its support."""
    q = spec.q
    if spec.kind == "qhermite":
        if not -1.0 < x < 1.0:
            raise DomainError(f"q-Hermite weight needs |x| < 1, got {x}")
        theta = math.acos(x)
        e2 = cmath.exp(2j * theta)
        val = qpoch_inf(e2, q, tr) * qpoch_inf(e2.conjugate(), q, tr)
        return val.real / math.sqrt(1.0 - x * x)
    if spec.kind == "sw_lognormal":
        if not x > 0.0:
            raise DomainError(f"Stieltjes-Wigert weight needs x > 0, got {x}")
        c2 = -1.0 / (2.0 * q.ln_q)
        u = math.log(x) - 0.5 * q.ln_q
        return math.exp(-c2 * u * u)
    if spec.kind == "laguerre":
        if not x > 0.0:
            raise DomainError(f"q-Laguerre weight needs x > 0, got {x}")
        return x**spec.alpha / qpoch_inf(-x, q, tr).real
    # ismail_masson_w2
    c2 = -0.5 * q.ln_q
    c = math.sqrt(c2)
    xi = math.asinh(x)
    return math.exp(-c2 / 4.0) / (c * math.sqrt(math.pi)) * math.exp(2.0 * xi * xi / q.ln_q)
