"""Foundational q-arithmetic.

q-shifted factorials (finite, infinite, negative index, multi-argument),
q-binomial coefficients, the q-gamma function, the four Jacobi theta
functions and the partial theta function.

All functions take the base through a :class:`QParam` and control every
infinite sum/product through a :class:`Truncation`.  Complex values are
plain Python ``complex``; any non-finite result raises
:class:`~qkit.errors.NumericOverflowError` instead of propagating NaN.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .errors import (
    DomainError,
    NumericOverflowError,
    PoleError,
    TruncationError,
)

__all__ = [
    "QParam",
    "Truncation",
    "DEFAULT_TRUNCATION",
    "ensure_finite",
    "qpoch_finite",
    "qpoch_inf",
    "qpoch_multi",
    "qbinom",
    "qgamma",
    "theta4",
    "theta3",
    "theta2",
    "partial_theta",
]

# Factors this close to zero are treated as exact poles/zeros.
_POLE_EPS = 1e-290


@dataclass(frozen=True)
class QParam:
    """Validated base q in (0,1) with cached log and theta modulus.

    The theta modulus tau is defined through q = exp(i*pi*tau); for real
    q in (0,1) it is purely imaginary with positive imaginary part.
    """

    q: float
    ln_q: float = field(init=False)
    tau: complex = field(init=False)

    def __post_init__(self):
        q = self.q
        if not (isinstance(q, (int, float)) and 0.0 < q < 1.0):
            raise DomainError(f"q must be a real number strictly inside (0,1), got {q!r}")
        object.__setattr__(self, "q", float(q))
        object.__setattr__(self, "ln_q", math.log(q))
        object.__setattr__(self, "tau", complex(0.0, -math.log(q) / math.pi))

    @property
    def log_inv(self) -> float:
        """ln(1/q) > 0, the natural decay scale of q-series."""
        return -self.ln_q

    def power(self, e) -> complex:
        """q**e for arbitrary complex exponent, via exp(e*ln q)."""
        if isinstance(e, (int, float)):
            return complex(math.exp(e * self.ln_q))
        return cmath.exp(e * self.ln_q)


@dataclass(frozen=True)
class Truncation:
    """Tolerance and budget for every truncated sum/product.

    strategy 'tail-bound' certifies the discarded tail of infinite
    products with the bound (|z|/(1-q))*exp(|z|/(1-q)); 'term-ratio'
    stops once terms fall below tol relative to the accumulated value.
    """

    tol: float = 1e-13
    max_terms: int = 10000
    strategy: str = "tail-bound"

    def __post_init__(self):
        if self.tol < 1e-15:
            raise DomainError(f"tol must be >= 1e-15, got {self.tol}")
        if self.max_terms < 8:
            raise DomainError(f"max_terms must be >= 8, got {self.max_terms}")
        if self.strategy not in ("tail-bound", "term-ratio"):
            raise DomainError(f"unknown truncation strategy {self.strategy!r}")


DEFAULT_TRUNCATION = Truncation()


def ensure_finite(value: complex, context: str = "") -> complex:
    """Return value unchanged, raising NumericOverflowError if non-finite."""
    if isinstance(value, complex):
        if math.isfinite(value.real) and math.isfinite(value.imag):
            return value
    elif isinstance(value, float):
        if math.isfinite(value):
            return value
    else:
        return value
    raise NumericOverflowError(f"non-finite value {value!r}" + (f" in {context}" if context else ""))


def _product_tail_bound(a_mag: float, q: float) -> float:
    """Bound for |prod_{k>=0}(1 - a q^k) - 1| with |a| = a_mag.

    Exponential form t*exp(t) with t = a_mag/(1-q); valid for all a.
    """
    t = a_mag / (1.0 - q)
    if t > 700.0:
        return math.inf
    return t * math.exp(t)


def qpoch_finite(a, q: QParam, n: int) -> complex:
    """q-shifted factorial (a;q)_n for any integer n.

    For n >= 0 this is the product prod_{k=0}^{n-1} (1 - a q^k); for
    n = -m it is 1/(a q^{-m};q)_m, i.e. prod_{j=1}^{m} 1/(1 - a q^{-j}).
    """
    if n == 0:
        return 1.0 + 0.0j
    a = complex(a)
    qq = q.q
    if n > 0:
        prod = 1.0 + 0.0j
        aq = a
        for _ in range(n):
            prod *= 1.0 - aq
            aq *= qq
        return ensure_finite(prod, "qpoch_finite")
    m = -n
    prod = 1.0 + 0.0j
    aq = a
    for j in range(1, m + 1):
        aq = a * q.power(-j)
        factor = 1.0 - aq
        if abs(factor) < _POLE_EPS:
            raise PoleError(
                f"(a;q)_{n} has a zero factor 1 - a*q^(-{j}) (a = q^{j}); division by zero"
            )
        prod /= factor
    return ensure_finite(prod, "qpoch_finite")


def qpoch_inf(a, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Infinite q-shifted factorial (a;q)_inf = prod_{k>=0}(1 - a q^k).

    The partial product is extended until the discarded tail is
    certified below tr.tol by the exponential product bound.
    """
    a = complex(a)
    if a == 0:
        return 1.0 + 0.0j
    qq = q.q
    prod = 1.0 + 0.0j
    aq = a
    for _ in range(tr.max_terms):
        if _product_tail_bound(abs(aq), qq) < tr.tol:
            return ensure_finite(prod, "qpoch_inf")
        prod *= 1.0 - aq
        aq *= qq
    bound = _product_tail_bound(abs(aq), qq)
    raise TruncationError(
        f"(a;q)_inf tail bound {bound:.3e} still above tol {tr.tol:.3e} "
        f"after {tr.max_terms} factors",
        achieved_bound=bound,
    )


def qpoch_multi(avals, q: QParam, n=None, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """Multi-argument Pochhammer (a_1,...,a_m;q)_n; n=None means infinity."""
    prod = 1.0 + 0.0j
    for a in avals:
        if n is None:
            prod *= qpoch_inf(a, q, tr)
        else:
            prod *= qpoch_finite(a, q, n)
    return ensure_finite(prod, "qpoch_multi")


def qbinom(n: int, k: int, q: QParam) -> complex:
    """Gaussian binomial coefficient [n choose k]_q; zero outside 0<=k<=n."""
    if n < 0:
        raise DomainError(f"qbinom requires n >= 0, got n = {n}")
    if k < 0 or k > n:
        return 0.0 + 0.0j
    num = qpoch_finite(q.q, q, n)
    den = qpoch_finite(q.q, q, k) * qpoch_finite(q.q, q, n - k)
    return num / den


def qgamma(x, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """q-gamma function (1-q)^(1-x) (q;q)_inf / (q^x;q)_inf.

    Poles at x = 0, -1, -2, ... where (q^x;q)_inf vanishes.
    """
    x = complex(x)
    qx = q.power(x)
    # (q^x;q)_inf vanishes iff q^x = q^{-m}: check the nearest candidate.
    if abs(qx) >= 1.0 - 1e-12:
        m = round(-x.real)
        if m >= 0 and abs(qx * q.power(m) - 1.0) < 1e-12:
            raise PoleError(f"q-gamma pole at x = {-m}")
    den = qpoch_inf(qx, q, tr)
    if abs(den) < 1e-280:
        raise PoleError(f"q-gamma pole: (q^x;q)_inf vanished at x = {x}")
    one_minus_q = 1.0 - q.q
    prefactor = cmath.exp((1.0 - x) * math.log(one_minus_q))
    return ensure_finite(prefactor * qpoch_inf(q.q, q, tr) / den, "qgamma")


def theta4(z, q: QParam, tr: Truncation = DEFAULT_TRUNCATION, route: str = "product") -> complex:
    """Theta function sum_{n in Z} q^(n^2) (-z)^n = (q^2, qz, q/z; q^2)_inf.

    route='series' sums the bilateral series symmetrically; the default
    'product' route uses the triple-product form.  z must be nonzero.
    """
    z = complex(z)
    if z == 0:
        raise DomainError("theta4 needs z != 0 (Laurent series in z)")
    if route == "product":
        q2 = QParam(q.q * q.q)
        return qpoch_multi([q.q * q.q, q.q * z, q.q / z], q2, None, tr)
    if route != "series":
        raise DomainError(f"unknown theta4 route {route!r}")
    qq = q.q
    total = 1.0 + 0.0j
    zq = -z
    term_pos = 1.0 + 0.0j  # q^{n^2} (-z)^n, built incrementally
    term_neg = 1.0 + 0.0j
    qpow = 1.0  # q^{2n-1} factor chain: q^{n^2} = q^{(n-1)^2} q^{2n-1}
    for n in range(1, tr.max_terms):
        qpow = qq ** (2 * n - 1)
        term_pos *= qpow * zq
        term_neg *= qpow / zq
        pair = term_pos + term_neg
        total += pair
        if abs(term_pos) + abs(term_neg) < tr.tol * max(abs(total), 1.0) and n > 2:
            return ensure_finite(total, "theta4")
    raise TruncationError("theta4 series did not converge within max_terms")


def theta3(v, q: QParam, tr: Truncation = DEFAULT_TRUNCATION, route: str = "product") -> complex:
    """Theta_3(v|tau) = sum q^(k^2) e^(2k pi i v) with q = exp(i pi tau).

    Product form (q^2, -q e^(2 pi i v), -q e^(-2 pi i v); q^2)_inf.
    """
    w = cmath.exp(2j * math.pi * complex(v))
    if route == "product":
        q2 = QParam(q.q * q.q)
        return qpoch_multi([q.q * q.q, -q.q * w, -q.q / w], q2, None, tr)
    return theta4(-w, q, tr, route="series")


def theta2(v, q: QParam, tr: Truncation = DEFAULT_TRUNCATION, route: str = "product") -> complex:
    """Theta_2(v|tau) = sum q^((k+1/2)^2) e^((2k+1) pi i v).

    Product form 2 q^(1/4) cos(pi v) (q^2, -q^2 e^(2 pi i v), -q^2 e^(-2 pi i v); q^2)_inf.
    """
    v = complex(v)
    w = cmath.exp(2j * math.pi * v)
    if route == "product":
        q2 = QParam(q.q * q.q)
        pref = 2.0 * q.power(0.25) * cmath.cos(math.pi * v)
        return pref * qpoch_multi([q.q * q.q, -q.q * q.q * w, -q.q * q.q / w], q2, None, tr)
    # Bilateral series, paired k and -k-1 terms.
    qq = q.q
    total = 0.0 + 0.0j
    sqw = cmath.sqrt(w) if abs(w) > 0 else 0.0
    # q^{(k+1/2)^2} e^{(2k+1) pi i v}: evaluate directly, |k| up to budget
    for k in range(0, tr.max_terms):
        t1 = q.power((k + 0.5) ** 2) * cmath.exp((2 * k + 1) * 1j * math.pi * v)
        t2 = q.power((k + 0.5) ** 2) * cmath.exp(-(2 * k + 1) * 1j * math.pi * v)
        total += t1 + t2
        if abs(t1) + abs(t2) < tr.tol * max(abs(total), 1.0) and k > 2:
            return ensure_finite(total, "theta2")
    raise TruncationError("theta2 series did not converge within max_terms")


def partial_theta(v, q: QParam, tr: Truncation = DEFAULT_TRUNCATION) -> complex:
    """One-sided theta sum omega(v;q) = sum_{n>=0} q^(n^2) v^n (entire)."""
    v = complex(v)
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    qq = q.q
    for n in range(1, tr.max_terms):
        term *= qq ** (2 * n - 1) * v
        total += term
        if abs(term) < tr.tol * max(abs(total), 1.0) and n > 2:
            return ensure_finite(total, "partial_theta")
    raise TruncationError("partial theta series did not converge within max_terms")
