"""Formal power series as coefficient streams, optionally tied to a kernel.

Operations on series carry the Borel transform along when it is known:
linear combinations combine kernels linearly, the Cauchy product uses a
tabulated closed form or falls back to the convolution of transforms, and
the binomial convolution multiplies transforms pointwise.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Optional

from .kernels import BorelKernel, ConvolutionKernel, LinearKernel, ProductKernel

__all__ = [
    "FormalSeries",
    "id_series",
    "borel_transform_coeffs",
    "check_transform_consistency",
    "cauchy_product",
    "binomial_convolution",
    "linear_combine_series",
    "borel_shift",
    "solve_convolution",
]


class FormalSeries:
    """k -> a_k for k >= 0.  Values are memoized; ``coeff`` must be pure."""

    def __init__(self, coeff: Callable[[int], object], name: str = "",
                 kernel: Optional[BorelKernel] = None) -> None:
        self._coeff = coeff
        self.name = name
        self.kernel = kernel
        self._memo: dict[int, object] = {}
        self._lock = threading.Lock()

    @property
    def kernel_id(self) -> Optional[str]:
        return None if self.kernel is None else self.kernel.kernel_id

    def coeff(self, k: int):
        if k < 0:
            raise IndexError("series coefficients start at k = 0")
        try:
            return self._memo[k]
        except KeyError:
            v = self._coeff(k)
            with self._lock:
                return self._memo.setdefault(k, v)

    __call__ = coeff

    def take(self, n: int) -> list:
        return [self.coeff(k) for k in range(n)]

    def __repr__(self) -> str:
        return f"FormalSeries({self.name!r}, kernel={self.kernel_id!r})"


def id_series() -> FormalSeries:
    """(1, 0, 0, ...), the unit of the Cauchy product."""
    from .registry import get_kernel
    return FormalSeries(lambda k: Fraction(int(k == 0)), "id", get_kernel("monomial:0"))


def borel_transform_coeffs(s: FormalSeries, K: int) -> list:
    """[a_0/0!, ..., a_K/K!]."""
    out = []
    for k in range(K + 1):
        a = s(k)
        out.append(a / factorial(k) if isinstance(a, float) else Fraction(a) / factorial(k))
    return out


def check_transform_consistency(kernel: BorelKernel, s: FormalSeries, K: int,
                                tol: float = 0.0) -> bool:
    """Kernel's Taylor coefficients against the stream's Borel coefficients.

    Exact comparison on rational streams; ``tol`` applies to float entries.
    """
    expected = borel_transform_coeffs(s, K)
    got = kernel.series_at_zero(K)
    for e, g in zip(expected, got):
        if isinstance(e, float):
            if abs(e - float(g)) > tol:
                return False
        elif e != g:
            return False
    return len(got) == len(expected)


def cauchy_product(w: FormalSeries, v: FormalSeries) -> FormalSeries:
    """c_n = sum_k w_k v_{n-k}."""
    from .registry import closed_cauchy_rule, get_kernel

    def c(n: int):
        return sum((w(k) * v(n - k) for k in range(n + 1)), Fraction(0))

    kernel = None
    if w.kernel is not None and v.kernel is not None:
        rule = closed_cauchy_rule(w.kernel_id, v.kernel_id)
        kernel = get_kernel(rule) if rule else ConvolutionKernel(w.kernel, v.kernel)
    return FormalSeries(c, f"({w.name})*({v.name})", kernel)


def binomial_convolution(w: FormalSeries, v: FormalSeries) -> FormalSeries:
    """c_n = sum_k C(n, k) w_k v_{n-k}; transforms multiply pointwise."""

    def c(n: int):
        return sum((comb(n, k) * w(k) * v(n - k) for k in range(n + 1)), Fraction(0))

    kernel = None
    if w.kernel is not None and v.kernel is not None:
        kernel = ProductKernel(w.kernel, v.kernel)
    return FormalSeries(c, f"({w.name})x({v.name})", kernel)


def linear_combine_series(alpha, w: FormalSeries, beta, v: FormalSeries) -> FormalSeries:
    """alpha w_k + beta v_k."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    kernel = None
    if w.kernel is not None and v.kernel is not None:
        kernel = LinearKernel([(alpha, w.kernel), (beta, v.kernel)])
    return FormalSeries(lambda k: alpha * w(k) + beta * v(k),
                        f"{alpha}*({w.name})+{beta}*({v.name})", kernel)


def borel_shift(s: FormalSeries, m: int, c) -> FormalSeries:
    """Add c to a_m.  The transform gains c t^m/m!, whose Laplace integral
    is exactly c, so a Borel sum moves by c."""
    from .registry import get_kernel

    if m < 0:
        raise ValueError("m must be >= 0")
    c = Fraction(c)
    if c == 0:
        return s
    kernel = None
    if s.kernel is not None:
        kernel = LinearKernel([(1, s.kernel), (c, get_kernel(f"monomial:{m}"))])
    return FormalSeries(lambda k: s(k) + c if k == m else s(k),
                        f"shift({s.name}, {m}, {c})", kernel)


def solve_convolution(f: FormalSeries, h: FormalSeries, N: int) -> list[Fraction]:
    """g_0..g_N with sum_{k<=n} f_k g_{n-k} = h_n, by forward substitution."""
    f0 = Fraction(f(0))
    if f0 == 0:
        raise ZeroDivisionError("solve_convolution needs f_0 != 0")
    g: list[Fraction] = []
    for n in range(N + 1):
        acc = Fraction(h(n)) - sum((Fraction(f(k)) * g[n - k] for k in range(1, n + 1)),
                                   Fraction(0))
        g.append(acc / f0)
    return g
