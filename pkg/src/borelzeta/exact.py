"""Exact integer/rational primitives shared by every other module.

Rationals are plain :class:`fractions.Fraction` values, which are immutable
and always stored in lowest terms with a positive denominator.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

__all__ = [
    "BigRational",
    "binomial",
    "gen_binom",
    "falling_factorial",
    "harmonic",
    "sign",
    "format_rational",
    "parse_rational",
]

BigRational = Fraction


def sign(k: int) -> int:
    """(-1)**k for any integer k, without drifting into floats for k < 0."""
    return -1 if k & 1 else 1


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return 0
    return comb(n, k)


def gen_binom(p: int, q: int) -> Fraction:
    """Generalized binomial <p, q> for p, q >= 0.

    Equals C(p, q) when p >= q, otherwise (-1)**(p-q) / ((p-q) * C(q, p)).
    """
    if p < 0 or q < 0:
        raise ValueError(f"gen_binom needs p, q >= 0, got ({p}, {q})")
    if p >= q:
        return Fraction(comb(p, q))
    d = p - q
    return Fraction(sign(d), d * comb(q, p))


def falling_factorial(x: int, m: int) -> int:
    """x (x-1) ... (x-m+1); the empty product 1 when m == 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    out = 1
    for i in range(m):
        out *= x - i
    return out


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n."""
    if n < 1:
        raise ValueError("harmonic(n) needs n >= 1")
    # common denominator n! keeps the loop in integers
    d = factorial(n)
    return Fraction(sum(d // j for j in range(1, n + 1)), d)


def format_rational(q: Fraction | int) -> str:
    """Canonical text form: "num/den", or just "n" for integers."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Inverse of :func:`format_rational`; also accepts "n/1" and "-3 / 4"."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        n, d = int(num), int(den)
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(n, d)
    return Fraction(int(s))
