"""Closed-form Borel transforms addressable by string id.

Each entry pairs a formula (evaluated stably in the chosen backend), its
Taylor expansion at 0 derived from the formula via exact power series, and
a growth law.  The matching coefficient streams in ``registry_series`` are
built from the Bernoulli tables instead, so comparing the two sides is a
real check (see ``check_transform_consistency``).

Ids:  geometric, grandi, bernoulli, bernoulli-second, k-bernoulli,
k-bernoulli-second, a3, a4, bplus-k1, n-zn, geometric-square,
grandi-square, conv-square, conv-square-second, beta-plus,
dn:first:N, dn:second:N, dn-unpadded:N, rising:N, monomial:M.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from ..bernoulli import bernoulli, bernoulli_second, beta_plus
from ..exact import falling_factorial, sign
from . import powerseries as ps
from .kernels import BorelKernel, ClosedFormKernel, LinearKernel
from .series import FormalSeries

__all__ = ["get_kernel", "registry_series", "kernel_ids", "closed_cauchy_rule"]


# -- stable building blocks --------------------------------------------------

def _b(u, be):
    """u/(e^u - 1) without overflow for either sign of u."""
    if u > 1:
        e = be.exp(-u)
        return u * e / (1 - e)
    if u < -1:
        return u / (be.exp(u) - 1)
    if u < 0:
        return u / be.expm1(u)
    return u * be.exp(-u) / -be.expm1(-u)


def _t_pow(u, m):
    return u ** m if m else 1


# -- growth laws: |phi(t)| <= C (1+t)^p e^{rate t} for phi(t) = BA(zt) -------

def _g_first(q):
    # t^q/(e^t - 1)
    return lambda z: (q, -z) if z > 0 else (q, 0)


def _g_second(q):
    # t^q/(1 - e^{-t})
    return lambda z: (q, min(z, 0))


def _g_exp(p, c=1):
    # t^p e^{c t}
    return lambda z: (p, c * z)


# -- series at zero from the formulas ---------------------------------------

def _s_first(m):
    """t^m * b(t)."""
    return lambda K: ps.shift(ps.bernoulli_gf(K), m, K)


def _s_second(m):
    """t^m * (b(t) + t)."""
    return lambda K: ps.shift(ps.bernoulli_plus_gf(K), m, K)


def _s_exp(m, c=1):
    return lambda K: ps.shift(ps.exp_series(K, c), m, K)


def _s_k_first(K):
    return ps.t_deriv(ps.bernoulli_gf(K))


def _s_k_second(K):
    return ps.t_deriv(ps.bernoulli_plus_gf(K))


def _s_bplus_k1(K):
    g = ps.bernoulli_plus_gf(K)
    return ps.add(g, ps.t_deriv(g))


def _s_conv_square(K):
    b = ps.bernoulli_gf(K)
    out = ps.mul(b, b, K)
    out[0] -= 1
    return out


def _s_conv_square_second(K):
    g = ps.bernoulli_plus_gf(K)
    return ps.mul(g, g, K)


def _s_beta_plus(K):
    g = ps.bernoulli_plus_gf(K + 1)
    return g[1:]


# -- closed forms ---------------------------------------------------------

def _c_first(m):
    return lambda u, be: _t_pow(u, m) * _b(u, be)


def _c_second(m):
    return lambda u, be: _t_pow(u, m) * (_b(u, be) + u)


def _c_exp(m, c=1):
    return lambda u, be: _t_pow(u, m) * be.exp(c * u)


def _c_k_first(u, be):
    b = _b(u, be)
    return b - u * b - b * b


def _c_k_second(u, be):
    b = _b(u, be)
    return b - u * b - b * b + u


def _c_bplus_k1(u, be):
    b = _b(u, be)
    return 2 * b + 2 * u - u * b - b * b


def _c_conv_square(u, be):
    b = _b(u, be)
    return b * b - 1


def _c_conv_square_second(u, be):
    g = _b(u, be) + u
    return g * g


def _c_beta_plus(u, be):
    # 1/(1 - e^{-u}) - 1/u = (b(u) + u - 1)/u
    return (_b(u, be) + u - 1) / u


def _c_geometric_square(u, be):
    return (1 + u) * be.exp(u)


def _c_grandi_square(u, be):
    return (1 - u) * be.exp(-u)


def _q_derivative_polys(m: int) -> list[list[int]]:
    """P_j with (d/dt)^j q = P_j(q) for q = 1/(e^t - 1), since q' = -q - q^2."""
    polys = [[0, 1]]
    for _ in range(m):
        p = polys[-1]
        dp = [i * c for i, c in enumerate(p)][1:]
        nxt = [0] * (len(dp) + 2)
        for i, c in enumerate(dp):
            nxt[i + 1] -= c
            nxt[i + 2] -= c
        polys.append(nxt)
    return polys


def _c_unpadded(n):
    """(d/dt)^(n-2) [t^(n-1)/(e^t - 1)] by Leibniz on t^(n-1) and q."""
    m = n - 2
    polys = _q_derivative_polys(m)

    def closed(u, be):
        q = 1 / be.expm1(u)
        total = 0
        for i in range(m + 1):
            mono = falling_factorial(n - 1, i) * u ** (n - 1 - i)
            pq = 0
            for c in reversed(polys[m - i]):
                pq = pq * q + c
            total += comb(m, i) * mono * pq
        return total

    return closed


def _s_unpadded(n):
    def series(K):
        a = ps.shift(ps.bernoulli_gf(K + n), n - 2, K + n)
        for _ in range(n - 2):
            a = ps.deriv(a)
        return a[: K + 1]
    return series


# -- coefficient streams from the number tables ----------------------------

def _a_first(m):
    return lambda k: Fraction(0) if k < m else falling_factorial(k, m) * bernoulli(k - m)


def _a_second(m):
    return lambda k: (Fraction(0) if k < m
                      else falling_factorial(k, m) * bernoulli_second(k - m))


def _a_rising(m):
    return lambda k: Fraction(falling_factorial(k, m))


def _a_monomial(m):
    return lambda k: Fraction(int(k == m))


def _binom_coeff(w, v):
    return lambda n: sum((comb(n, k) * w(k) * v(n - k) for k in range(n + 1)), Fraction(0))


_FIXED = {
    # id: (closed form, series, growth, coefficient stream, description)
    "geometric": (_c_exp(0), _s_exp(0), _g_exp(0),
                  lambda k: Fraction(1), "e^t"),
    "grandi": (_c_exp(0, -1), _s_exp(0, -1), _g_exp(0, -1),
               lambda k: Fraction(sign(k)), "e^{-t}"),
    "n-zn": (_c_exp(1), _s_exp(1), _g_exp(1),
             lambda k: Fraction(k), "t e^t"),
    "geometric-square": (_c_geometric_square,
                         lambda K: ps.mul([Fraction(1), Fraction(1)] + [Fraction(0)] * K,
                                          ps.exp_series(K), K),
                         _g_exp(1), lambda k: Fraction(k + 1), "(1+t) e^t"),
    "grandi-square": (_c_grandi_square,
                      lambda K: ps.mul([Fraction(1), Fraction(-1)] + [Fraction(0)] * K,
                                       ps.exp_series(K, -1), K),
                      lambda z: (1, -z if z > 0 else 0),
                      lambda k: Fraction(sign(k) * (k + 1)), "(1-t) e^{-t}"),
    "bernoulli": (_c_first(0), _s_first(0), _g_first(1),
                  bernoulli, "t/(e^t-1)"),
    "bernoulli-second": (_c_second(0), _s_second(0), _g_second(1),
                         bernoulli_second, "t/(1-e^{-t})"),
    "k-bernoulli": (_c_k_first, _s_k_first, _g_first(2),
                    lambda k: k * bernoulli(k), "t d/dt [t/(e^t-1)]"),
    "k-bernoulli-second": (_c_k_second, _s_k_second, _g_second(2),
                           lambda k: k * bernoulli_second(k), "t d/dt [t/(1-e^{-t})]"),
    "bplus-k1": (_c_bplus_k1, _s_bplus_k1, _g_second(2),
                 lambda k: (k + 1) * bernoulli_second(k), "d/dt [t^2/(1-e^{-t})]"),
    "conv-square": (_c_conv_square, _s_conv_square, lambda z: (2, 0),
                    lambda n: _binom_coeff(bernoulli, bernoulli)(n) - int(n == 0),
                    "(t/(e^t-1))^2 - 1"),
    "conv-square-second": (_c_conv_square_second, _s_conv_square_second,
                           lambda z: (2, min(2 * z, 0)),
                           _binom_coeff(bernoulli_second, bernoulli_second),
                           "(t/(1-e^{-t}))^2"),
    "beta-plus": (_c_beta_plus, _s_beta_plus, lambda z: (0, 0),
                  lambda k: beta_plus(k + 1), "1/(1-e^{-t}) - 1/t"),
}

_cache: dict[str, BorelKernel] = {}
_lock = threading.Lock()


def kernel_ids() -> list[str]:
    """Fixed ids plus one example of each parametric family."""
    return sorted(_FIXED) + ["a3", "a4", "dn:first:N", "dn:second:N", "dn-unpadded:N", "rising:N", "monomial:M"]


def _parse_param(kid: str, prefix: str, least: int) -> int:
    try:
        n = int(kid[len(prefix):])
    except ValueError:
        raise KeyError(f"bad kernel id {kid!r}") from None
    if n < least:
        raise KeyError(f"kernel id {kid!r} needs a parameter >= {least}")
    return n


def _build(kid: str) -> tuple[BorelKernel, object]:
    if kid in _FIXED:
        closed, series, growth, coeff, desc = _FIXED[kid]
        return ClosedFormKernel(kid, closed, series, growth, description=desc), coeff
    if kid == "a3":
        k, coeff = _build("dn:first:3")
        k.kernel_id = "a3"
        return k, coeff
    if kid == "a4":
        k = LinearKernel([(1, get_kernel("bernoulli")), (1, get_kernel("k-bernoulli"))])
        k.kernel_id = "a4"
        return k, lambda n: (n + 1) * bernoulli(n)
    if kid.startswith("dn:first:"):
        n = _parse_param(kid, "dn:first:", 2)
        return (ClosedFormKernel(kid, _c_first(n - 2), _s_first(n - 2), _g_first(n - 1),
                                 params={"n": n}, description=f"t^{n-1}/(e^t-1)"),
                _a_first(n - 2))
    if kid.startswith("dn:second:"):
        n = _parse_param(kid, "dn:second:", 2)
        return (ClosedFormKernel(kid, _c_second(n - 2), _s_second(n - 2), _g_second(n - 1),
                                 params={"n": n}, description=f"t^{n-1}/(1-e^{{-t}})"),
                _a_second(n - 2))
    if kid.startswith("dn-unpadded:"):
        n = _parse_param(kid, "dn-unpadded:", 2)
        return (ClosedFormKernel(kid, _c_unpadded(n), _s_unpadded(n), _g_first(n - 1),
                                 params={"n": n},
                                 description=f"(d/dt)^{n-2} [t^{n-1}/(e^t-1)]"),
                lambda k, n=n: falling_factorial(n - 2 + k, n - 2) * bernoulli(k))
    if kid.startswith("rising:"):
        n = _parse_param(kid, "rising:", 2)
        return (ClosedFormKernel(kid, _c_exp(n - 2), _s_exp(n - 2), _g_exp(n - 2),
                                 params={"n": n}, description=f"t^{n-2} e^t"),
                _a_rising(n - 2))
    if kid.startswith("monomial:"):
        m = _parse_param(kid, "monomial:", 0)
        closed = lambda u, be, m=m: _t_pow(u, m) / factorial(m)
        series = lambda K, m=m: [Fraction(int(k == m), factorial(m)) for k in range(K + 1)]
        return (ClosedFormKernel(kid, closed, series, lambda z, m=m: (m, 0),
                                 params={"m": m}, description=f"t^{m}/{m}!"),
                _a_monomial(m))
    raise KeyError(f"unknown kernel id {kid!r}")


_coeffs: dict[str, object] = {}


def get_kernel(kid: str) -> BorelKernel:
    """The shared kernel instance for ``kid``; raises KeyError if unknown."""
    k = _cache.get(kid)
    if k is None:
        kernel, coeff = _build(kid)
        with _lock:
            k = _cache.setdefault(kid, kernel)
            _coeffs.setdefault(kid, coeff)
    return k


def registry_series(kid: str) -> FormalSeries:
    """The coefficient stream whose Borel transform is kernel ``kid``."""
    kernel = get_kernel(kid)
    return FormalSeries(_coeffs[kid], kid, kernel)


_CAUCHY_RULES = {
    ("geometric", "geometric"): "geometric-square",
    ("grandi", "grandi"): "grandi-square",
}


def closed_cauchy_rule(w_id: str | None, v_id: str | None) -> str | None:
    """Registry id of the Cauchy product's transform when one is tabulated."""
    return _CAUCHY_RULES.get((w_id, v_id))
