"""Exact Bernoulli-number identities, each returning (n, lhs, rhs) triples."""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..bernoulli import bernoulli, bernoulli_second
from ..exact import harmonic

B = bernoulli
Bp = bernoulli_second


def _beta(k: int) -> Fraction:
    return bernoulli(k) / k


def akiyama_tanigawa(n: int) -> list[Fraction]:
    """B_0..B_n by the Akiyama-Tanigawa triangle (gives B_1 = +1/2)."""
    out = []
    a = []
    for m in range(n + 1):
        a.append(Fraction(1, m + 1))
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        out.append(a[0])
    return out


def gessel(n: int):
    lhs = sum((comb(n, k) * B(k) * B(n - k) for k in range(2, n - 1)), Fraction(0))
    return lhs, -(n + 1) * B(n)


def gessel_restated(n: int):
    lhs = sum((comb(n, k) * B(k) * B(n - k) for k in range(n + 1)), Fraction(0))
    return lhs, -(n - 1) * B(n) - n * B(n - 1)


def matiyasevich(n: int):
    s1 = sum((B(k) * B(n - k) for k in range(2, n - 1)), Fraction(0))
    s2 = sum((comb(n + 2, k) * B(k) * B(n - k) for k in range(2, n - 1)), Fraction(0))
    return (n + 2) * s1 - 2 * s2, n * (n + 1) * B(n)


def matiyasevich_restated(n: int):
    s1 = sum((Bp(k) * Bp(n - k) for k in range(n + 1)), Fraction(0))
    s2 = sum((comb(n + 2, k) * Bp(k) * Bp(n - k) for k in range(n + 1)), Fraction(0))
    return (n + 2) * s1 + comb(n + 2, 3) * Bp(n - 1), 2 * s2


def miki(n: int):
    s1 = sum((_beta(k) * _beta(n - k) for k in range(2, n - 1)), Fraction(0))
    s2 = sum((comb(n, k) * _beta(k) * _beta(n - k) for k in range(2, n - 1)), Fraction(0))
    return s1 - s2, 2 * harmonic(n) * _beta(n)


def second_kind_restated(n: int):
    lhs = sum((comb(n, k) * Bp(k) * Bp(n - k) for k in range(n + 1)), Fraction(0))
    return lhs, -(n - 1) * Bp(n) + n * Bp(n - 1)


def check_range(identity, ns):
    return [(n, *identity(n)) for n in ns]
