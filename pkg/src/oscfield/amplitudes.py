"""Transition amplitudes between product Fock states and the coupled eigenbasis.

For an initial state |s1>|s2> only eigenstates with n + m = s1 + s2 = N
contribute.  The amplitude onto (n, N - n) is

    A = i^(s1-n) (-1)^(s2+m) alpha^(s2+m) sqrt(n! m! / (s1! s2!))
        / (1 + alpha^2)^(N/2) * P_m^{(-(1+N), n-s2)}(-(2 + alpha^2)/alpha^2)

with m = N - n.  The Jacobi argument grows like alpha^-2 and the explicit
sum cancels catastrophically for small alpha.  Substituting the argument,
the sum becomes (-1)^m alpha^(-2m) sum_k c_k (1 + alpha^2)^k with integer
c_k; re-expanding in powers of alpha^2 gives integer coefficients d_j and

    A = i^(s1-n) (-1)^s2 sqrt(n! m! / (s1! s2!)) (1 + alpha^2)^(-N/2)
        * sum_j d_j alpha^(s2 - m + 2j),

where the low-order d_j vanish identically.  The d_j are exact Python
integers; only the final power sum is done in floating point, with an
exact rational fallback when it is ill-conditioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .special import CONDITION_LIMIT, _fsum_log, _log_fraction

__all__ = [
    "AmplitudeOverflowError",
    "ExcitationManifold",
    "AmplitudeMatrix",
    "MAX_TOTAL_EXCITATION",
    "jacobi_power_coefficients",
    "amplitude_row",
    "amplitude_matrix",
]

MAX_TOTAL_EXCITATION = 10_000


class AmplitudeOverflowError(OverflowError):
    pass


@dataclass(frozen=True)
class ExcitationManifold:
    """Two-mode Fock states |n, total - n> for n = 0..total."""

    total: int

    def __post_init__(self):
        if self.total < 0 or int(self.total) != self.total:
            raise ValueError(f"total excitation must be a nonnegative integer, got {self.total!r}")

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return [(n, self.total - n) for n in range(self.total + 1)]

    def __len__(self) -> int:
        return self.total + 1

    def __contains__(self, pair) -> bool:
        n, m = pair
        return 0 <= n <= self.total and n + m == self.total


@dataclass(frozen=True)
class AmplitudeMatrix:
    """One row of the manifold unitary: amplitudes from ``source`` onto (n, N-n)."""

    source: tuple[int, int]
    alpha: float
    values: np.ndarray

    @property
    def manifold(self) -> ExcitationManifold:
        return ExcitationManifold(sum(self.source))

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.values) ** 2


def jacobi_power_coefficients(s1: int, s2: int, n: int) -> list[int]:
    """Integer d_j of sum_j d_j alpha^(2j) for the (s1, s2) -> (n, N - n) entry.

    c_k = (-1)^(m-k) C(N-k, m-k) C(s1, k) are the coefficients of the Jacobi
    sum in powers of (1 + alpha^2); d_j = sum_k c_k C(k, j).
    """
    total = s1 + s2
    m = total - n
    kmax = min(m, s1)
    c = [
        (-1) ** (m - k) * math.comb(total - k, m - k) * math.comb(s1, k)
        for k in range(kmax + 1)
    ]
    return [sum(c[k] * math.comb(k, j) for k in range(j, kmax + 1)) for j in range(kmax + 1)]


def _power_sum_direct(coeffs: list[int], alpha: float, offset: int):
    """Plain float terms when they neither overflow nor underflow.

    Each term then carries about one ulp of error instead of the
    ~|log term| ulps of the log-space path.  Returns None to defer.
    """
    top = offset + 2 * (len(coeffs) - 1)
    if max(abs(d) for d in coeffs) > 1e300 or abs(alpha) ** max(top, 0) < 1e-280:
        return None
    terms = [float(d) * alpha ** (offset + 2 * j) for j, d in enumerate(coeffs) if d]
    if not terms:
        return 0, -math.inf
    total = math.fsum(terms)
    if total == 0.0 or math.fsum(abs(t) for t in terms) > CONDITION_LIMIT * abs(total):
        return None
    return (1 if total > 0 else -1), math.log(abs(total))


def _power_sum_log(coeffs: list[int], alpha: float, offset: int) -> tuple[int, float]:
    """Sign and log|.| of sum_j d_j alpha^(offset + 2j) for alpha != 0."""
    direct = _power_sum_direct(coeffs, alpha, offset)
    if direct is not None:
        return direct
    log_a = math.log(abs(alpha))
    odd_sign = -1 if (alpha < 0 and offset % 2) else 1
    terms = []
    for j, d in enumerate(coeffs):
        if d == 0:
            continue
        sign = (1 if d > 0 else -1) * odd_sign
        terms.append((sign, math.log(abs(d)) + (offset + 2 * j) * log_a))
    sign, logmag, cond = _fsum_log(terms)
    if cond > CONDITION_LIMIT:
        a = Fraction(alpha)
        exact = sum((d * a ** (offset + 2 * j) for j, d in enumerate(coeffs) if d), Fraction(0))
        sign, logmag = _log_fraction(exact)
    return sign, logmag


_PHASES = (1.0 + 0j, 1j, -1.0 + 0j, -1j)


def _entry(s1: int, s2: int, n: int, alpha: float) -> complex:
    total = s1 + s2
    m = total - n
    coeffs = jacobi_power_coefficients(s1, s2, n)
    offset = s2 - m
    # d_j with offset + 2j < 0 must vanish for the amplitude to stay finite
    sign, logsum = _power_sum_log(coeffs, alpha, offset)
    if sign == 0:
        return 0j
    logpref = 0.5 * (
        math.lgamma(n + 1) + math.lgamma(m + 1) - math.lgamma(s1 + 1) - math.lgamma(s2 + 1)
    ) - 0.5 * total * math.log1p(alpha * alpha)
    modulus = math.exp(logpref + logsum)
    phase = _PHASES[(s1 - n) % 4] * (-1 if s2 % 2 else 1) * sign
    return phase * modulus


def _check_source(s1: int, s2: int) -> None:
    if s1 < 0 or s2 < 0 or int(s1) != s1 or int(s2) != s2:
        raise ValueError(f"Fock numbers must be nonnegative integers, got ({s1}, {s2})")
    if s1 + s2 > MAX_TOTAL_EXCITATION:
        raise AmplitudeOverflowError(
            f"total excitation {s1 + s2} exceeds cap {MAX_TOTAL_EXCITATION}"
        )


def amplitude_row(s1: int, s2: int, alpha: float) -> AmplitudeMatrix:
    """Amplitudes A^{s1,s2}_{n,N-n} for n = 0..N.

    ``|alpha| <= 1``.  At ``alpha == 0`` the decoupled limit row (a single 1
    at n = s1) is returned instead of evaluating the singular formula.
    Only the moduli are convention independent.
    """
    _check_source(s1, s2)
    alpha = float(alpha)
    if not (abs(alpha) <= 1.0):
        raise ValueError(f"|alpha| must be <= 1, got {alpha!r}")
    total = s1 + s2
    values = np.zeros(total + 1, dtype=complex)
    if alpha == 0.0:
        values[s1] = 1.0
    else:
        for n in range(total + 1):
            values[n] = _entry(s1, s2, n, alpha)
    values.flags.writeable = False
    return AmplitudeMatrix(source=(int(s1), int(s2)), alpha=alpha, values=values)


@lru_cache(maxsize=256)
def _cached_matrix(total: int, alpha: float) -> np.ndarray:
    mat = np.vstack([amplitude_row(s1, total - s1, alpha).values for s1 in range(total + 1)])
    mat.flags.writeable = False
    return mat


def amplitude_matrix(total: int, alpha: float) -> np.ndarray:
    """(N+1) x (N+1) matrix U[s1, n] = A^{s1,N-s1}_{n,N-n}; unitary.

    Cached per (N, alpha) and returned read-only.
    """
    ExcitationManifold(total)
    _check_source(total, 0)
    return _cached_matrix(int(total), float(alpha))
