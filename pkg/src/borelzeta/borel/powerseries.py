"""Exact truncated power series (lists of Fractions, index = power of t).

Used to expand each closed-form Borel transform around t = 0 directly from
its formula, independently of how the matching coefficient stream is built.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

Series = list


def exp_series(K: int, c: Fraction | int = 1) -> Series:
    """e^{c t} up to t^K."""
    c = Fraction(c)
    return [c ** k / factorial(k) for k in range(K + 1)]


def add(a: Series, b: Series, alpha=1, beta=1) -> Series:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [alpha * x + beta * y for x, y in zip(a, b)]


def scale(a: Series, c) -> Series:
    return [c * x for x in a]


def mul(a: Series, b: Series, K: int | None = None) -> Series:
    K = min(len(a), len(b)) - 1 if K is None else K
    return [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0))
            for n in range(K + 1)]


def inverse(a: Series) -> Series:
    """1/a, a[0] != 0, to the same length."""
    if a[0] == 0:
        raise ZeroDivisionError("series inverse needs a nonzero constant term")
    inv = [1 / Fraction(a[0])]
    for n in range(1, len(a)):
        s = sum((a[i] * inv[n - i] for i in range(1, n + 1)), Fraction(0))
        inv.append(-s * inv[0])
    return inv


def shift(a: Series, m: int, K: int) -> Series:
    """t^m * a, truncated to t^K (m may be negative to drop leading terms)."""
    if m >= 0:
        out = [Fraction(0)] * m + list(a)
    else:
        out = list(a[-m:])
    out = out[: K + 1]
    return out + [Fraction(0)] * (K + 1 - len(out))


def t_deriv(a: Series) -> Series:
    """t * d/dt a."""
    return [k * x for k, x in enumerate(a)]


def deriv(a: Series) -> Series:
    return [k * a[k] for k in range(1, len(a))] + [Fraction(0)]


def bernoulli_gf(K: int) -> Series:
    """t/(e^t - 1), as the inverse of (e^t - 1)/t = sum t^k/(k+1)!."""
    return inverse([Fraction(1, factorial(k + 1)) for k in range(K + 1)])


def bernoulli_plus_gf(K: int) -> Series:
    """t/(1 - e^{-t}), as the inverse of sum (-t)^k/(k+1)!."""
    return inverse([Fraction((-1) ** k, factorial(k + 1)) for k in range(K + 1)])
