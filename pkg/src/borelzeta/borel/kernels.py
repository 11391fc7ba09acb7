"""Borel transforms BA(t) = sum a_n t^n / n! as evaluable objects.

Every kernel knows three things about itself:

* its Taylor coefficients at t = 0 (exact Fractions), used for |t| <= 1/4
  where closed forms like t/(e^t - 1) lose digits or have removable poles;
* how to produce the Laplace integrand phi with
  Borel sum at z = int_0^oo e^{-t} phi(t) dt;
* optionally its growth: |phi(t)| <= C (1+t)^p e^{rate t}.  A kernel with
  known growth is summable at z exactly when rate < 1.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from math import comb
from typing import Callable, Optional, Sequence

from .backend import FLOAT, gauss_legendre

SWITCH = 0.25
PANEL = 4

Growth = tuple  # (p, rate)


class BorelKernel:
    kernel_id: str = "?"
    params: dict

    def __init__(self) -> None:
        self._series: list[Fraction] = []
        self._series_lock = threading.Lock()
        self._num_cache: dict = {}

    # -- Taylor side -------------------------------------------------------
    def _compute_series(self, K: int) -> list[Fraction]:
        raise NotImplementedError

    def series_at_zero(self, K: int) -> list[Fraction]:
        """[c_0, ..., c_K] with BA(t) = sum c_k t^k near 0."""
        if len(self._series) <= K:
            with self._series_lock:
                if len(self._series) <= K:
                    # grow geometrically so repeated small extensions stay cheap
                    self._series = self._compute_series(max(K, 2 * len(self._series)))
        return self._series[: K + 1]

    def _numeric_series(self, be):
        c = self._num_cache.get(be.key)
        if c is None:
            with be.context():
                c = [be.num(x) for x in self.series_at_zero(be.series_terms)]
            self._num_cache[be.key] = c
        return c

    def series_value(self, t, be=FLOAT):
        acc = 0
        for c in reversed(self._numeric_series(be)):
            acc = acc * t + c
        return acc

    # -- evaluation --------------------------------------------------------
    def closed(self, t, be=FLOAT):
        raise NotImplementedError

    def eval(self, t, be=FLOAT):
        if abs(t) <= SWITCH:
            return self.series_value(t, be)
        return self.closed(t, be)

    def laplace_integrand(self, z, be=FLOAT) -> Callable:
        zz = be.num(z)
        return lambda t: self.eval(zz * t, be)

    def growth(self, z) -> Optional[Growth]:
        return None

    def summable_at(self, z) -> Optional[bool]:
        g = self.growth(z)
        if g is None:
            return None
        return g[1] < 1

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.kernel_id}>"


class ClosedFormKernel(BorelKernel):
    """A registry kernel: formula + exact expansion + growth law."""

    def __init__(self, kernel_id: str, closed: Callable, series: Callable[[int], list],
                 growth: Optional[Callable] = None,
                 summable: Optional[Callable] = None, params: dict | None = None,
                 description: str = "") -> None:
        super().__init__()
        self.kernel_id = kernel_id
        self._closed = closed
        self._series_fn = series
        self._growth = growth
        self._summable = summable
        self.params = dict(params or {})
        self.description = description

    def _compute_series(self, K: int) -> list[Fraction]:
        return [Fraction(x) for x in self._series_fn(K)]

    def closed(self, t, be=FLOAT):
        return self._closed(t, be)

    def growth(self, z):
        return None if self._growth is None else self._growth(z)

    def summable_at(self, z):
        if self._summable is not None:
            return self._summable(z)
        return super().summable_at(z)


class LinearKernel(BorelKernel):
    """sum_i c_i K_i; the Borel transform is linear in the coefficients."""

    def __init__(self, parts: Sequence[tuple[Fraction, BorelKernel]]) -> None:
        super().__init__()
        self.parts = tuple((Fraction(c), k) for c, k in parts)
        self.kernel_id = "+".join(f"{_fmt(c)}*{k.kernel_id}" for c, k in self.parts)
        self.params = {}

    def _compute_series(self, K: int) -> list[Fraction]:
        out = [Fraction(0)] * (K + 1)
        for c, k in self.parts:
            for i, x in enumerate(k.series_at_zero(K)):
                out[i] += c * x
        return out

    def closed(self, t, be=FLOAT):
        return sum(be.num(c) * k.eval(t, be) for c, k in self.parts if c)

    def eval(self, t, be=FLOAT):
        return sum(be.num(c) * k.eval(t, be) for c, k in self.parts if c)

    def laplace_integrand(self, z, be=FLOAT):
        fs = [(be.num(c), k.laplace_integrand(z, be)) for c, k in self.parts if c]
        return lambda t: sum(c * f(t) for c, f in fs)

    def growth(self, z):
        gs = [k.growth(z) for c, k in self.parts if c]
        if any(g is None for g in gs):
            return None
        if not gs:
            return (0, 0)
        return (max(g[0] for g in gs), max(g[1] for g in gs))

    def summable_at(self, z):
        vs = [k.summable_at(z) for c, k in self.parts if c]
        if any(v is None for v in vs):
            return None
        return all(vs)


class ProductKernel(BorelKernel):
    """Pointwise product of transforms: the transform of the binomial
    convolution c_n = sum_k C(n, k) w_k v_{n-k}."""

    def __init__(self, w: BorelKernel, v: BorelKernel) -> None:
        super().__init__()
        self.w, self.v = w, v
        self.kernel_id = f"({w.kernel_id})x({v.kernel_id})"
        self.params = {}

    def _compute_series(self, K: int) -> list[Fraction]:
        a, b = self.w.series_at_zero(K), self.v.series_at_zero(K)
        return [sum((a[i] * b[n - i] for i in range(n + 1)), Fraction(0))
                for n in range(K + 1)]

    def closed(self, t, be=FLOAT):
        return self.w.eval(t, be) * self.v.eval(t, be)

    def eval(self, t, be=FLOAT):
        return self.w.eval(t, be) * self.v.eval(t, be)

    def growth(self, z):
        a, b = self.w.growth(z), self.v.growth(z)
        if a is None or b is None:
            return None
        return (a[0] + b[0], a[1] + b[1])


class ConvolutionKernel(BorelKernel):
    """Transform of the Cauchy product c_n = sum_k w_k v_{n-k}.

    BC = d/dt (Bw * Bv), the derivative of the ordinary convolution.  The
    Laplace integrand avoids the derivative: integrating by parts,

        int_0^oo e^{-t} BC(zt) dt = int_0^oo e^{-t} phi(t) dt,
        phi(t) = int_0^t Bw(zs) Bv(z(t-s)) ds,

    and phi is computed with composite Gauss-Legendre on panels of width
    at most 4.  The registry transforms are analytic at distance >= 2 pi
    from the real axis, so that width keeps the rule at full precision.
    """

    def __init__(self, w: BorelKernel, v: BorelKernel) -> None:
        super().__init__()
        self.w, self.v = w, v
        self.kernel_id = f"({w.kernel_id})*({v.kernel_id})"
        self.params = {}

    def _compute_series(self, K: int) -> list[Fraction]:
        a, b = self.w.series_at_zero(K), self.v.series_at_zero(K)
        # c_n/n! with w_k = k! a_k:  sum_k a_k b_{n-k} / C(n, k)
        return [sum((a[i] * b[n - i] / comb(n, i) for i in range(n + 1)), Fraction(0))
                for n in range(K + 1)]

    def _conv(self, z, t, be):
        """int_0^t Bw(zs) Bv(z(t-s)) ds."""
        nodes, weights = gauss_legendre(be.gl_order, be)
        panels = max(1, int(math.ceil(float(abs(z * t)) / PANEL)))
        h = t / panels
        total = 0
        for p in range(panels):
            a = p * h
            mid = a + h / 2
            acc = 0
            for x, w in zip(nodes, weights):
                s = mid + h / 2 * x
                acc += w * self.w.eval(z * s, be) * self.v.eval(z * (t - s), be)
            total += acc * h / 2
        return total

    def closed(self, t, be=FLOAT):
        # BC(t) = d/dt conv(t); five-point stencil, accurate to ~1e-10 in doubles
        one = be.num(1)
        h = be.num(Fraction(1, 1000)) if be.name == "float" else be.eps ** (one / 5)
        g = lambda x: self._conv(one, x, be)
        return (-g(t + 2 * h) + 8 * g(t + h) - 8 * g(t - h) + g(t - 2 * h)) / (12 * h)

    def laplace_integrand(self, z, be=FLOAT):
        zz = be.num(z)
        return lambda t: self._conv(zz, t, be)

    def growth(self, z):
        a, b = self.w.growth(z), self.v.growth(z)
        if a is None or b is None:
            return None
        return (a[0] + b[0] + 1, max(a[1], b[1]))

    def summable_at(self, z):
        g = self.growth(z)
        return None if g is None else g[1] < 1


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
