"""Jacobi polynomials with arbitrary (including negative integer) parameters.

Evaluated from the explicit finite sum

    P_m^{(a,b)}(x) = sum_k C(m+a, m-k) C(m+b, k) ((x-1)/2)^k ((x+1)/2)^(m-k)

with generalized binomial coefficients, which is a polynomial identity in
``a`` and ``b`` and therefore stays valid where the hypergeometric form has
poles.  Terms are accumulated in log-magnitude/sign form and summed with
``math.fsum``; badly conditioned sums are redone in exact rational
arithmetic (every float is a dyadic rational, so this is exact for the
given inputs).
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "JacobiOverflowError",
    "CONDITION_LIMIT",
    "log_binomial",
    "binomial_exact",
    "jacobi_terms_log",
    "jacobi_poly",
    "jacobi_poly_log",
    "jacobi_poly_exact",
]

# above this sum(|t|)/|sum(t)| the float sum is not trusted
CONDITION_LIMIT = 1e6


class JacobiOverflowError(OverflowError):
    """Result does not fit in a float; carries sign and natural-log magnitude."""

    def __init__(self, sign: int, log_magnitude: float):
        self.sign = sign
        self.log_magnitude = log_magnitude
        super().__init__(f"Jacobi value overflows float: sign={sign}, log|P|={log_magnitude:.6g}")


def _is_int(r) -> bool:
    return float(r).is_integer()


def log_binomial(r: float, j: int) -> tuple[int, float]:
    """Sign and log|C(r, j)| for real ``r`` and integer ``j >= 0``.

    Returns ``(0, -inf)`` for an exact zero.
    """
    if j < 0:
        return 0, -math.inf
    if j == 0:
        return 1, 0.0
    if _is_int(r):
        r = int(r)
        if r >= 0:
            if j > r:
                return 0, -math.inf
            return 1, math.lgamma(r + 1) - math.lgamma(j + 1) - math.lgamma(r - j + 1)
        # C(r, j) = (-1)^j C(j - r - 1, j) for negative integer r
        top = j - r - 1
        sign = -1 if j % 2 else 1
        return sign, math.lgamma(top + 1) - math.lgamma(j + 1) - math.lgamma(top - j + 1)
    sign = 1
    logmag = -math.lgamma(j + 1)
    for i in range(j):
        factor = r - i
        if factor < 0:
            sign = -sign
        logmag += math.log(abs(factor))
    return sign, logmag


def binomial_exact(r, j: int) -> Fraction:
    """C(r, j) as an exact Fraction for rational ``r``."""
    if j < 0:
        return Fraction(0)
    r = Fraction(r)
    if r.denominator == 1 and r >= 0:
        return Fraction(math.comb(int(r), j))
    num = Fraction(1)
    for i in range(j):
        num *= r - i
    return num / math.factorial(j)


def _log_power(base: float, k: int) -> tuple[int, float]:
    if k == 0:
        return 1, 0.0
    if base == 0.0:
        return 0, -math.inf
    sign = -1 if (base < 0 and k % 2) else 1
    return sign, k * math.log(abs(base))


def jacobi_terms_log(m: int, a: float, b: float, x: float) -> list[tuple[int, float]]:
    """Sign and log-magnitude of every term of the explicit sum."""
    if m < 0 or int(m) != m:
        raise ValueError(f"degree must be a nonnegative integer, got {m!r}")
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x!r}")
    lo = (x - 1.0) / 2.0
    hi = (x + 1.0) / 2.0
    terms = []
    for k in range(m + 1):
        s1, l1 = log_binomial(m + a, m - k)
        s2, l2 = log_binomial(m + b, k)
        s3, l3 = _log_power(lo, k)
        s4, l4 = _log_power(hi, m - k)
        sign = s1 * s2 * s3 * s4
        terms.append((sign, l1 + l2 + l3 + l4 if sign else -math.inf))
    return terms


def _fsum_log(terms: list[tuple[int, float]]) -> tuple[int, float, float]:
    """Scaled compensated sum -> (sign, log|sum|, condition estimate)."""
    live = [(s, l) for s, l in terms if s]
    if not live:
        return 0, -math.inf, 1.0
    scale = max(l for _, l in live)
    parts = [s * math.exp(l - scale) for s, l in live]
    total = math.fsum(parts)
    absum = math.fsum(abs(p) for p in parts)
    if total == 0.0:
        return 0, -math.inf, math.inf
    sign = 1 if total > 0 else -1
    return sign, scale + math.log(abs(total)), absum / abs(total)


def _log_fraction(value: Fraction) -> tuple[int, float]:
    if value == 0:
        return 0, -math.inf
    sign = 1 if value > 0 else -1
    return sign, math.log(abs(value.numerator)) - math.log(value.denominator)


def jacobi_poly_exact(m: int, a, b, x) -> Fraction:
    """Exact rational value of the explicit sum for rational a, b, x."""
    x = Fraction(x)
    lo = (x - 1) / 2
    hi = (x + 1) / 2
    m_a = Fraction(a) + m
    m_b = Fraction(b) + m
    return sum(
        (binomial_exact(m_a, m - k) * binomial_exact(m_b, k) * lo**k * hi ** (m - k)
         for k in range(m + 1)),
        Fraction(0),
    )


def jacobi_poly_log(m: int, a: float, b: float, x: float) -> tuple[int, float]:
    """Sign and natural log of |P_m^{(a,b)}(x)|, never overflowing."""
    sign, logmag, cond = _fsum_log(jacobi_terms_log(m, a, b, x))
    if cond > CONDITION_LIMIT:
        sign, logmag = _log_fraction(jacobi_poly_exact(m, a, b, x))
    return sign, logmag


def jacobi_poly(m: int, a: float, b: float, x: float) -> float:
    """P_m^{(a,b)}(x).

    Raises ``JacobiOverflowError`` (with sign and log-magnitude attached) when
    the value exceeds the float range.
    """
    sign, logmag = jacobi_poly_log(m, a, b, x)
    if sign == 0:
        return 0.0
    if logmag > 709.0:
        raise JacobiOverflowError(sign, logmag)
    return sign * math.exp(logmag)
