"""Reference values: Gamma at positive integers, zeta at integers, Euler's gamma.

Positive arguments are evaluated numerically (direct sum plus an
Euler-Maclaurin tail), nonpositive ones exactly from Bernoulli numbers.
Nothing here depends on the Borel machinery, so these values can serve as
independent references for it.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from .bernoulli import bernoulli
from .exact import sign

__all__ = [
    "ZetaRef",
    "gamma_int",
    "zeta_pos_ref",
    "zeta_minus_one",
    "zeta_even_exact",
    "zeta_nonpos_exact",
    "euler_mascheroni",
    "check_eq_2_5",
    "check_eq_2_2",
]

FLOAT_DIGITS = 15


def gamma_int(n: int) -> int:
    """Gamma(n) = (n-1)!."""
    if n < 1:
        raise ValueError("gamma_int(n) needs n >= 1")
    return factorial(n - 1)


def _em_params(digits: int) -> tuple[int, int]:
    # (base terms M, number of Bernoulli corrections)
    if digits <= FLOAT_DIGITS:
        return 20, 4
    return max(20, digits), max(4, digits // 2)


def _out(x, digits: int):
    return float(x) if digits <= FLOAT_DIGITS else x


@lru_cache(maxsize=None)
def _zeta_tail_sum(s: int, digits: int, start: int) -> mpmath.mpf:
    """sum_{j >= start} j^{-s}, direct terms up to M-1 then Euler-Maclaurin."""
    M, p = _em_params(digits)
    M = max(M, start)
    with mpmath.workdps(digits + 15):
        total = mpmath.fsum(mpmath.mpf(j) ** -s for j in range(start, M))
        Mf = mpmath.mpf(M)
        total += Mf ** (1 - s) / (s - 1) + Mf ** -s / 2
        rising = mpmath.mpf(s)  # s (s+1) ... (s+2k-2)
        for k in range(1, p + 1):
            b = bernoulli(2 * k)
            term = mpmath.mpf(b.numerator) / b.denominator / factorial(2 * k)
            total += term * rising * Mf ** (-s - 2 * k + 1)
            rising *= (s + 2 * k - 1) * (s + 2 * k)
        return +total


def zeta_pos_ref(n: int, digits: int = FLOAT_DIGITS):
    """zeta(n) for integer n >= 2.

    Returns a float for digits <= 15, otherwise an mpmath number carrying
    the requested precision.
    """
    if n < 2:
        raise ValueError("zeta_pos_ref needs n >= 2")
    with mpmath.workdps(digits + 15):
        return _out(1 + _zeta_tail_sum(n, digits, 2), digits)


def zeta_minus_one(n: int, digits: int = FLOAT_DIGITS):
    """zeta(n) - 1 computed without the cancellation of subtracting 1."""
    if n < 2:
        raise ValueError("zeta_minus_one needs n >= 2")
    return _out(_zeta_tail_sum(n, digits, 2), digits)


def zeta_even_exact(n: int) -> tuple[Fraction, int]:
    """(q, n) with zeta(n) = q * pi**n, for even n >= 2 (Euler's formula)."""
    if n < 2 or n % 2:
        raise ValueError("zeta_even_exact needs an even n >= 2")
    h = n // 2
    q = sign(h - 1) * Fraction(2) ** (n - 1) * bernoulli(n) / factorial(n)
    return q, n


def zeta_nonpos_exact(n: int) -> Fraction:
    """zeta(-n) for n >= 0.

    For n >= 1 this is -B_{n+1}/(n+1).  zeta(0) is returned as -1/2: the same
    formula with B_1 = -1/2 would give +1/2.
    """
    if n < 0:
        raise ValueError("zeta_nonpos_exact needs n >= 0")
    if n == 0:
        return Fraction(-1, 2)
    return -bernoulli(n + 1) / (n + 1)


def euler_mascheroni(digits: int = FLOAT_DIGITS):
    """gamma = int_0^oo (1/(e^t - 1) - e^{-t}/t) dt.

    On [0, 1] the two poles cancel; the integrand is expanded as
    sum_{k>=1} B_k t^(k-1)/k! + sum_{k>=0} (-t)^k/(k+1)! and integrated
    termwise.  The rest goes to mpmath's quadrature.
    """
    dps = max(digits, FLOAT_DIGITS) + 15
    with mpmath.workdps(dps):
        # |B_k/k!| ~ 2 (2 pi)^-k, so this many terms clears 10^-dps at t = 1
        K = int(dps / 0.79) + 10
        head = mpmath.mpf(0)
        for k in range(1, K + 1):
            b = bernoulli(k)
            if b:
                head += mpmath.mpf(b.numerator) / (b.denominator * k * factorial(k))
        for k in range(0, K + 1):
            head += mpmath.mpf(sign(k)) / ((k + 1) * factorial(k + 1))
        f = lambda t: 1 / mpmath.expm1(t) - mpmath.exp(-t) / t
        rest = mpmath.quad(f, [1, 4, 16, 64, mpmath.inf])
        return _out(head + rest, digits)


def check_eq_2_5(s: int, R: int) -> float:
    """|LHS - RHS| of
        (s-1)(zeta(s)-1) - 1 = -sum_{r=1}^{R} (s-1)s...(s+r-1)/(r+1)! (zeta(s+r)-1).

    (s-1)s...(s+r-1)/(r+1)! is C(s+r-1, r+1) for integer s.
    """
    if s < 2:
        raise ValueError("check_eq_2_5 needs s >= 2")
    lhs = (s - 1) * zeta_minus_one(s) - 1
    rhs = -mpmath.fsum(comb(s + r - 1, r + 1) * zeta_minus_one(s + r)
                       for r in range(1, R + 1))
    return float(abs(lhs - rhs))


def check_eq_2_2(m: int) -> tuple[Fraction, Fraction, bool]:
    """Both sides of
        [m == 0] - (-1)^m/(m+1) = sum_{i=0}^{m} (1 - [m == 0]) (-1)^i C(m, i) zeta(i - m)

    evaluated exactly with B_1 = -1/2 and zeta(0) = -1/2.  Reported as is;
    the two sides are not assumed to agree.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    lhs = Fraction(int(m == 0)) - Fraction(sign(m), m + 1)
    if m == 0:
        rhs = Fraction(0)
    else:
        rhs = sum((sign(i) * comb(m, i) * zeta_nonpos_exact(m - i)
                   for i in range(m + 1)), Fraction(0))
    return lhs, rhs, lhs == rhs


class ZetaRef:
    """Grow-only cache of reference zeta values at a fixed precision."""

    def __init__(self, digits: int = FLOAT_DIGITS) -> None:
        self.precision = digits
        self._cache: dict[int, object] = {}
        self._lock = threading.Lock()

    def __call__(self, n: int):
        try:
            return self._cache[n]
        except KeyError:
            pass
        if n == 1:
            raise ValueError("zeta has a pole at 1")
        v = zeta_pos_ref(n, self.precision) if n >= 2 else zeta_nonpos_exact(-n)
        with self._lock:
            return self._cache.setdefault(n, v)
