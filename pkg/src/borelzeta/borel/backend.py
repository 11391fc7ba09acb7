"""Number backends and Gauss-Legendre rules for the Borel integrals.

``FLOAT`` runs on hardware doubles.  ``MPBackend(digits)`` runs on mpmath
numbers; callers enter ``be.context()`` so every mpmath operation uses the
working precision.
"""
from __future__ import annotations

import contextlib
import math
import threading
from fractions import Fraction

import mpmath


class FloatBackend:
    name = "float"
    digits = 15
    eps = 2.220446049250313e-16
    gl_order = 20
    series_terms = 26

    exp = staticmethod(math.exp)
    expm1 = staticmethod(math.expm1)
    cos = staticmethod(math.cos)
    log = staticmethod(math.log)
    pi = math.pi

    @property
    def key(self):
        return ("float",)

    def num(self, x) -> float:
        return float(x)

    def context(self):
        return contextlib.nullcontext()

    def out(self, x):
        return float(x)


class MPBackend:
    name = "mp"

    def __init__(self, digits: int) -> None:
        self.digits = digits
        self.dps = digits + 10
        self.gl_order = 30
        # t/(e^t-1)-type expansions converge like (|t|/2pi)^k; |t| <= 1/4
        self.series_terms = int(self.dps / 1.3) + 12

    exp = staticmethod(mpmath.exp)
    expm1 = staticmethod(mpmath.expm1)
    cos = staticmethod(mpmath.cos)
    log = staticmethod(mpmath.log)

    @property
    def pi(self):
        return +mpmath.pi

    @property
    def eps(self):
        return mpmath.mpf(10) ** (-self.dps)

    @property
    def key(self):
        return ("mp", self.dps)

    def num(self, x):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)

    def context(self):
        return mpmath.workdps(self.dps)

    def out(self, x):
        return x


FLOAT = FloatBackend()


def backend_for(digits: int):
    """Hardware floats up to 15 significant digits, mpmath beyond."""
    return FLOAT if digits <= 15 else MPBackend(digits)


_GL_CACHE: dict = {}
_GL_LOCK = threading.Lock()


def gauss_legendre(n: int, be=FLOAT):
    """Nodes and weights of the n-point rule on [-1, 1].

    Roots of P_n by Newton's method from the usual cosine guesses, in the
    backend's own arithmetic.
    """
    key = (n, be.key)
    hit = _GL_CACHE.get(key)
    if hit is not None:
        return hit
    with be.context():
        nodes, weights = [], []
        one = be.num(1)
        for i in range((n + 1) // 2):
            x = be.cos(be.pi * (i + one * 3 / 4) / (n + one / 2))
            for _ in range(100):
                p0, p1 = one, x
                for k in range(2, n + 1):
                    p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
                dp = n * (x * p1 - p0) / (x * x - 1)
                dx = p1 / dp
                x -= dx
                if abs(dx) <= be.eps * 4:
                    break
            # recompute derivative at the converged root
            p0, p1 = one, x
            for k in range(2, n + 1):
                p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
            dp = n * (x * p1 - p0) / (x * x - 1)
            w = 2 / ((1 - x * x) * dp * dp)
            nodes.append(x)
            weights.append(w)
        full_nodes, full_weights = [], []
        for x, w in zip(nodes, weights):
            full_nodes.append(-x)
            full_weights.append(w)
        for x, w in zip(reversed(nodes), reversed(weights)):
            if n % 2 == 1 and x is nodes[-1] and abs(x) < be.eps * 10:
                continue
            full_nodes.append(x)
            full_weights.append(w)
        rule = (tuple(full_nodes), tuple(full_weights))
    with _GL_LOCK:
        _GL_CACHE.setdefault(key, rule)
    return _GL_CACHE[key]
