"""Borel sums  int_0^oo e^{-t} BA(zt) dt  with certified-ish error bars.

The half line is cut into panels 0, 1/4, 1/2, 1, 2, 4, ... up to a cutoff
T.  Each panel is integrated with Gauss-Legendre and bisected until the
difference between the one-panel and two-half-panel estimates is below its
share of tol/2.  The tail beyond T is bounded from the kernel's growth law
|phi(t)| <= C (1+t)^p e^{rate t}, with C fitted from samples near T, and the
cutoff is grown until that bound is below tol/4.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..exact import parse_rational
from . import powerseries as ps
from .backend import FLOAT, backend_for, gauss_legendre
from .kernels import BorelKernel

__all__ = [
    "Status",
    "BorelSumResult",
    "borel_sum",
    "borel_sum_dn",
    "inner_double_integral",
    "nested_integral_3_53",
]

PROBE_T_MAX = 200
MAX_DEPTH = 30


class Status(enum.Enum):
    SUMMABLE = "summable"
    NOT_SUMMABLE = "not-summable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BorelSumResult:
    status: Status
    value: Optional[object] = None
    err: Optional[float] = None
    nodes_used: int = 0
    cutoff_T: float = 0.0
    reason: str = ""

    @property
    def summable(self) -> bool:
        return self.status is Status.SUMMABLE

    def __str__(self) -> str:
        if self.summable:
            return f"Summable(value={self.value}, err={self.err:.3g})"
        return f"{self.status.name}({self.reason})"


def _as_z(z):
    if isinstance(z, str):
        return parse_rational(z) if "/" in z else Fraction(z)
    if isinstance(z, float):
        return Fraction(z)
    return Fraction(z)


class _Counter:
    def __init__(self, f):
        self.f = f
        self.n = 0

    def __call__(self, t):
        self.n += 1
        return self.f(t)


def _gl(f, a, b, nodes, weights):
    half = (b - a) / 2
    mid = (a + b) / 2
    return half * sum(w * f(mid + half * x) for x, w in zip(nodes, weights))


def _adaptive(f, a, b, budget_per_unit, nodes, weights):
    """Integral over [a, b] and the summed local error estimates."""
    total, err = 0, 0.0
    stack = [(a, b, _gl(f, a, b, nodes, weights), 0)]
    while stack:
        lo, hi, whole, depth = stack.pop()
        mid = (lo + hi) / 2
        left = _gl(f, lo, mid, nodes, weights)
        right = _gl(f, mid, hi, nodes, weights)
        diff = float(abs(left + right - whole))
        if diff <= budget_per_unit * float(hi - lo) or depth >= MAX_DEPTH:
            total += left + right
            err += diff
        else:
            stack.append((mid, hi, right, depth + 1))
            stack.append((lo, mid, left, depth + 1))
    return total, err


def _tail_bound(f, T, p, lam, be):
    """Bound on int_T^oo |e^{-t} phi(t)| dt given the growth law."""
    if lam * (1 + T) <= p:
        return math.inf
    C = 0.0
    for s in (1, Fraction(9, 8), Fraction(5, 4), Fraction(3, 2), 2):
        t = T * s
        v = abs(float(f(be.num(t))))
        env = (1 + t) ** p * math.exp(-lam * t)
        if env == 0:
            return math.inf
        C = max(C, v / env)
    return C * (1 + T) ** p * math.exp(-lam * T) / (lam - p / (1 + T))


def _probe(f, tol, be):
    """Numeric summability verdict on [T_max/2, T_max] when growth is unknown."""
    ts = [PROBE_T_MAX / 2 + PROBE_T_MAX / 2 * i / 20 for i in range(21)]
    vals = [abs(float(f(be.num(t)))) for t in ts]
    small = [v < tol for v in vals]
    if all(small):
        return True
    if not any(small):
        return False
    return None


def borel_sum(kernel: BorelKernel, z, tol: float, digits: int = 15,
              backend=None) -> BorelSumResult:
    """int_0^oo e^{-t} phi(t) dt for the kernel's Laplace integrand at z.

    Summable results satisfy err <= tol.  A divergent integral is reported
    as NOT_SUMMABLE; when neither the growth law nor the probe decides, or
    the error budget cannot be met, the result is INCONCLUSIVE.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    z = _as_z(z)
    be = backend or backend_for(digits)
    verdict = kernel.summable_at(z)
    if verdict is False:
        return BorelSumResult(Status.NOT_SUMMABLE, reason="growth law: e^{-t} BA(zt) does not decay")
    growth = kernel.growth(z)
    with be.context():
        phi = kernel.laplace_integrand(z, be)
        f = _Counter(lambda t: be.exp(-t) * phi(t))
        try:
            return _integrate(f, growth, tol, be)
        except OverflowError:
            return BorelSumResult(Status.INCONCLUSIVE, nodes_used=f.n,
                                  reason="overflow while evaluating the integrand")


def _integrate(f, growth, tol, be) -> BorelSumResult:
    t_cap = 600 if be is FLOAT else 100000
    heuristic = growth is None
    if heuristic:
        v = _probe(f, tol, be)
        if v is False:
            return BorelSumResult(Status.NOT_SUMMABLE, nodes_used=f.n,
                                  reason=f"probe: e^-t |BA(zt)| >= tol on [{PROBE_T_MAX // 2}, {PROBE_T_MAX}]")
        if v is None:
            return BorelSumResult(Status.INCONCLUSIVE, nodes_used=f.n,
                                  reason="probe: integrand oscillates without decaying")
        # decay seen but rate unknown: assume at least e^{-t/2}
        p, lam = 0, 0.5
    else:
        p, rate = growth
        lam = 1 - float(rate)

    T = 8
    tail = _tail_bound(f, T, p, lam, be)
    while tail > tol / 4 and T < t_cap:
        T *= 2
        tail = _tail_bound(f, T, p, lam, be)
    if tail > tol / 4:
        return BorelSumResult(Status.INCONCLUSIVE, nodes_used=f.n, cutoff_T=float(T),
                              reason="tail bound not reached below the cutoff cap")

    breaks = [Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1)]
    while breaks[-1] < T:
        breaks.append(breaks[-1] * 2)
    nodes, weights = gauss_legendre(be.gl_order, be)
    budget = (tol / 2) / float(T)
    total, err = 0, 0.0
    for a, b in zip(breaks, breaks[1:]):
        v, e = _adaptive(f, be.num(a), be.num(b), budget, nodes, weights)
        total += v
        err += e
    err += tail
    # floating rounding of the panel sums
    err = float(err + 4 * float(be.eps) * float(abs(total)) * len(breaks))
    if err > tol:
        return BorelSumResult(Status.INCONCLUSIVE, value=be.out(total), err=err,
                              nodes_used=f.n, cutoff_T=float(T),
                              reason="error estimate exceeds tolerance")
    return BorelSumResult(Status.SUMMABLE, be.out(total), err, f.n, float(T),
                          "heuristic tail" if heuristic else "")


def borel_sum_dn(n: int, z, tol: float, kind: str = "first", digits: int = 15):
    """Borel sum of the zero-padded D_n series of the given Bernoulli kind.

    ``tol`` is relative to Gamma(n), the natural scale of these integrals.
    At z = 1 (first kind) this is Gamma(n) zeta(n) - Gamma(n); at z = -1 it
    is (-1)^n Gamma(n) zeta(n).  The second kind gives Gamma(n) zeta(n) at
    z = 1.
    """
    from .registry import get_kernel

    if n < 2:
        raise ValueError("n must be >= 2")
    if kind not in ("first", "second"):
        raise ValueError("kind must be 'first' or 'second'")
    zz = _as_z(z)
    if zz not in (1, -1):
        raise ValueError("z must be 1 or -1")
    r = borel_sum(get_kernel(f"dn:{kind}:{n}"), zz, tol * math.factorial(n - 1), digits)
    if not r.summable:
        raise ArithmeticError(f"D_{n} at z={zz}: {r}")
    return r.value


# -- the nested integral --------------------------------------------------

def _zeta23(digits):
    from ..zeta import zeta_pos_ref
    return zeta_pos_ref(2, digits), zeta_pos_ref(3, digits)


def _double_integral_series(K):
    """Taylor coefficients of int_0^t int_0^x m/(1-e^{-m}) dm dx."""
    g = ps.bernoulli_plus_gf(K)
    return ps.shift([g[k] / ((k + 1) * (k + 2)) for k in range(K + 1)], 2, K)


def _series_terms_to_one(be):
    # coefficients decay like (2 pi)^-k; this clears eps at t = 1
    return int(be.dps / 0.79) + 12 if be is not FLOAT else 36


class _NestedIntegrand(BorelKernel):
    """t/(1-e^{-t}) times the double integral; its Laplace integral at z = 1
    is the quantity of interest."""

    kernel_id = "nested-3.53"

    def __init__(self, k_terms: int, digits: int) -> None:
        super().__init__()
        self.k_terms = k_terms
        self.digits = digits
        self.params = {"k_terms": k_terms}
        self._inner_num: dict = {}

    def _compute_series(self, K):
        return ps.mul(ps.bernoulli_plus_gf(K), _double_integral_series(K), K)

    def inner(self, t, be):
        if t == 0:
            return be.num(0)
        if t <= 1:
            c = self._inner_num.get(be.key)
            if c is None:
                c = [be.num(x) for x in _double_integral_series(_series_terms_to_one(be))]
                self._inner_num[be.key] = c
            acc = 0
            for x in reversed(c):
                acc = acc * t + x
            return acc
        z2, z3 = _zeta23(self.digits)
        z2, z3 = be.num(z2), be.num(z3)
        s = 0
        for k in range(self.k_terms, 0, -1):
            e = be.exp(-k * t)
            s += t * e / (k * k) + 2 * e / (k ** 3)
        return t ** 3 / 6 + z2 * t + s - 2 * z3

    def eval(self, t, be=FLOAT):
        from .registry import get_kernel
        return get_kernel("bernoulli-second").eval(t, be) * self.inner(t, be)

    def growth(self, z):
        return (4, 0) if z == 1 else None


def inner_double_integral(t, digits: int = 15, k_terms: int = 200):
    """int_0^t int_0^x m/(1-e^{-m}) dm dx for t >= 0."""
    be = backend_for(digits)
    with be.context():
        return be.out(_NestedIntegrand(k_terms, digits).inner(be.num(t), be))


def nested_integral_3_53(tol: float = 1e-8, k_terms: int = 200, digits: int = 15):
    """int_0^oo e^{-t} t/(1-e^{-t}) (int_0^t int_0^x m/(1-e^{-m}) dm dx) dt.

    The inner integral uses its Taylor series on [0, 1] and, beyond, the
    closed form with the k-sum cut at ``k_terms`` and zeta(2), zeta(3) from
    the reference evaluator.
    """
    # truncated k-sum tail at t >= 1: sum_{k>K} (t + 2) e^{-kt}/k^2, times the outer weight
    if 3 * math.exp(-(k_terms + 1)) / (1 - math.exp(-1)) >= tol:
        raise ValueError("k_terms too small for the requested tolerance")
    r = borel_sum(_NestedIntegrand(k_terms, digits), 1, tol, digits)
    if not r.summable:
        raise ArithmeticError(f"nested integral: {r}")
    return r.value
