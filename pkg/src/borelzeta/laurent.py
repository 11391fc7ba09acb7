"""Laurent coefficient vectors in the basis

    {(-1)^(n-1) (n-1)! / z^n,  1,  z^n / n!}

A function f(z) = sum_{n>=1} a_{-n} (-1)^(n-1)(n-1)!/z^n + sum_{n>=0} a_n z^n/n!
is stored as the window (a_lo, ..., a_{-1} | a_0, ..., a_hi).  The product of
two such vectors (the function product written in this basis) is computed
component by component with the generalized binomial ``<p, q>``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .bernoulli import bernoulli
from .exact import format_rational, gen_binom, parse_rational, sign

__all__ = [
    "Tail",
    "LaurentVec",
    "NumericLaurentVec",
    "CoeffStream",
    "linear_combine",
    "laurent_mul",
    "pointwise_mul",
    "named_element",
    "neg_component_stream",
    "zeta_prime_vec",
    "check_eq_2_9",
    "to_raw_laurent",
    "from_raw_laurent",
    "format_vec",
    "parse_vec",
]


class Tail(enum.Enum):
    ZERO_BEYOND_WINDOW = "zero"
    TRUNCATED_UNKNOWN = "truncated"


@dataclass(frozen=True)
class LaurentVec:
    lo: int
    coeffs: tuple
    tail: Tail = Tail.ZERO_BEYOND_WINDOW

    def __post_init__(self) -> None:
        if self.lo > 0:
            raise ValueError("lo must be <= 0")
        if self.lo + len(self.coeffs) - 1 < 0:
            raise ValueError("window must reach index 0")

    @classmethod
    def from_parts(cls, neg: Sequence = (), pos: Sequence = (),
                   tail: Tail = Tail.ZERO_BEYOND_WINDOW) -> "LaurentVec":
        """Build from (a_lo..a_{-1}) and (a_0..a_hi) in display order."""
        pos = list(pos) or [Fraction(0)]
        return cls(-len(neg), tuple(list(neg) + pos), tail)

    @classmethod
    def from_dict(cls, d: dict[int, Fraction],
                  tail: Tail = Tail.ZERO_BEYOND_WINDOW) -> "LaurentVec":
        lo = min(min(d, default=0), 0)
        hi = max(max(d, default=0), 0)
        return cls(lo, tuple(d.get(n, Fraction(0)) for n in range(lo, hi + 1)), tail)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    @property
    def finite(self) -> bool:
        return self.tail is Tail.ZERO_BEYOND_WINDOW

    def __getitem__(self, n: int):
        if self.lo <= n <= self.hi:
            return self.coeffs[n - self.lo]
        if self.finite:
            return Fraction(0)
        raise IndexError(f"component {n} lies outside a truncated window")

    def items(self):
        return ((self.lo + i, c) for i, c in enumerate(self.coeffs))

    def truncated(self, lo: int | None = None, hi: int | None = None) -> "LaurentVec":
        """Declare everything outside [lo, hi] to be zero.

        This is a deliberate change of the function: it is how a caller
        opts an infinite series into the finite-support product.
        """
        lo = self.lo if lo is None else lo
        hi = self.hi if hi is None else hi
        if lo < self.lo or hi > self.hi:
            raise ValueError("cannot widen a window while truncating")
        return LaurentVec(lo, tuple(self[n] for n in range(lo, hi + 1)),
                          Tail.ZERO_BEYOND_WINDOW)

    def trimmed(self) -> "LaurentVec":
        """Drop explicit zeros at both ends (finite vectors only)."""
        d = {n: c for n, c in self.items() if c != 0}
        return LaurentVec.from_dict(d, self.tail)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentVec):
            return NotImplemented
        if self.tail is not other.tail:
            return False
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        if not (self.finite and other.finite):
            if (self.lo, self.hi) != (other.lo, other.hi):
                return False
        return all(self[n] == other[n] for n in range(lo, hi + 1))

    def __hash__(self) -> int:
        t = self.trimmed() if self.finite else self
        return hash((t.lo, t.coeffs, t.tail))

    def __str__(self) -> str:
        return format_vec(self)


class NumericLaurentVec(LaurentVec):
    """Same layout, floating-point coefficients (e.g. built from zeta values)."""


@dataclass(frozen=True)
class CoeffStream:
    generator: Callable[[int], object]
    description: str = ""

    def __call__(self, k: int):
        return self.generator(k)

    def take(self, n: int) -> list:
        return [self.generator(k) for k in range(n)]


def linear_combine(alpha, f: LaurentVec, beta, g: LaurentVec) -> LaurentVec:
    lo = min(f.lo, g.lo)
    hi = max(f.hi, g.hi)
    tail = (Tail.ZERO_BEYOND_WINDOW if f.finite and g.finite
            else Tail.TRUNCATED_UNKNOWN)

    def comp(v: LaurentVec, n: int):
        # a truncated operand only contributes inside its own window
        if v.lo <= n <= v.hi:
            return v.coeffs[n - v.lo]
        return Fraction(0)

    coeffs = tuple(alpha * comp(f, n) + beta * comp(g, n) for n in range(lo, hi + 1))
    cls = NumericLaurentVec if isinstance(f, NumericLaurentVec) or isinstance(g, NumericLaurentVec) else LaurentVec
    return cls(lo, coeffs, tail)


def _product_component(a: Callable[[int], object], b: Callable[[int], object],
                       n: int, lo: int, hi: int):
    """One component of the product; lo/hi bound the support of both factors."""
    total = Fraction(0)
    if n >= 0:
        for k in range(lo, 0):
            bk = b(n - k)
            if bk:
                total += gen_binom(n, n - k) * a(k) * bk
        for k in range(0, n + 1):
            total += comb(n, k) * a(k) * b(n - k)
        for k in range(n + 1, hi + 1):
            bk = b(n - k)
            if bk:
                total += gen_binom(n, k) * a(k) * bk
        return total
    m = -n
    for k in range(lo, -m + 1):
        bk = b(-m - k)
        if bk:
            total += sign(m + k) * comb(-k - 1, m - 1) * a(k) * bk
    for k in range(-m + 1, 0):
        bk = b(-m - k)
        if bk:
            total += Fraction(1, k * comb(m - 1, -k)) * a(k) * bk
    for k in range(0, hi + 1):
        bk = b(-m - k)
        if bk:
            total += sign(k) * comb(m + k - 1, m - 1) * a(k) * bk
    return total


def laurent_mul(f: LaurentVec, g: LaurentVec) -> LaurentVec:
    """Product of two finite-support vectors.

    Components outside [lo_f + lo_g, hi_f + hi_g] vanish identically (pole
    orders and Taylor degrees add), so that window is exact.
    """
    if not (f.finite and g.finite):
        raise ValueError(
            "laurent_mul needs finite-support operands; truncate explicitly "
            "or use neg_component_stream for infinite tails"
        )
    lo, hi = f.lo + g.lo, f.hi + g.hi
    slo, shi = min(f.lo, g.lo), max(f.hi, g.hi)
    coeffs = tuple(_product_component(f.__getitem__, g.__getitem__, n, slo, shi)
                   for n in range(lo, hi + 1))
    return LaurentVec(lo, coeffs, Tail.ZERO_BEYOND_WINDOW)


def pointwise_mul(f: LaurentVec, g: LaurentVec) -> LaurentVec:
    """Componentwise a_n * b_n on the intersection of the two windows.

    The result is known to vanish outside that window when both inputs have
    finite support, or when a finite operand's window sits inside a
    truncated operand's window.
    """
    lo, hi = max(f.lo, g.lo), min(f.hi, g.hi)

    def covers(outer: LaurentVec, inner: LaurentVec) -> bool:
        return inner.finite and outer.lo <= inner.lo and inner.hi <= outer.hi

    if (f.finite and g.finite) or covers(g, f) or covers(f, g):
        tail = Tail.ZERO_BEYOND_WINDOW
    else:
        tail = Tail.TRUNCATED_UNKNOWN
    coeffs = tuple(f[n] * g[n] for n in range(lo, hi + 1))
    return LaurentVec(lo, coeffs, tail)


_NAMED = ("id", "j", "minus1", "B", "H", "minus1H", "minus1B")


def named_element(name: str, K: int, c: Fraction | int | None = None) -> LaurentVec:
    """Materialize a Taylor-only named vector on [0, K].

    ``id`` is exact on any window; the others are infinite series, so they
    come back flagged TRUNCATED_UNKNOWN.  ``j`` needs the nonzero base ``c``
    (the vector of e^{cz}); ``minus1`` is j with c = -1.
    """
    if K < 0:
        raise ValueError("K must be >= 0")
    if name == "id":
        return LaurentVec(0, tuple(Fraction(int(k == 0)) for k in range(K + 1)))
    if name == "j":
        if c is None or c == 0:
            raise ValueError("the j element needs a nonzero base")
        c = Fraction(c)
        vals = [c ** k for k in range(K + 1)]
    elif name == "minus1":
        vals = [Fraction(sign(k)) for k in range(K + 1)]
    elif name == "B":
        vals = [bernoulli(k) for k in range(K + 1)]
    elif name == "minus1B":
        vals = [sign(k) * bernoulli(k) for k in range(K + 1)]
    elif name == "H":
        vals = [Fraction(1, k + 1) for k in range(K + 1)]
    elif name == "minus1H":
        vals = [Fraction(sign(k), k + 1) for k in range(K + 1)]
    else:
        raise ValueError(f"unknown named element {name!r}; expected one of {_NAMED}")
    return LaurentVec(0, tuple(vals), Tail.TRUNCATED_UNKNOWN)


def named_stream(name: str, c: Fraction | int | None = None) -> CoeffStream:
    """Coefficient stream a_k (k >= 0) of a Taylor-only named element."""
    if name == "ones":
        return CoeffStream(lambda k: Fraction(1), "ones")
    if name == "id":
        return CoeffStream(lambda k: Fraction(int(k == 0)), "id")
    if name == "minus1B":
        return CoeffStream(lambda k: sign(k) * bernoulli(k), "minus1B")
    if name == "B":
        return CoeffStream(bernoulli, "B")
    if name == "minus1H":
        return CoeffStream(lambda k: Fraction(sign(k), k + 1), "minus1H")
    if name == "H":
        return CoeffStream(lambda k: Fraction(1, k + 1), "H")
    if name == "j":
        if c is None or c == 0:
            raise ValueError("the j element needs a nonzero base")
        cc = Fraction(c)
        return CoeffStream(lambda k: cc ** k, f"j({cc})")
    raise ValueError(f"unknown stream {name!r}")


def neg_component_stream(f: CoeffStream, g_negtail: CoeffStream, n: int) -> CoeffStream:
    """Terms of component -n of (Taylor-only f) . g, using only g's negative tail.

    ``g_negtail(m)`` is b_{-m} for m >= 1.  The terms are returned unsummed;
    for the interesting inputs the series diverges.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def term(k: int):
        return sign(k) * comb(n + k - 1, n - 1) * f(k) * g_negtail(n + k)

    return CoeffStream(term, f"neg[{n}]({f.description}, {g_negtail.description})")


def _zeta_minus_one(zeta_oracle) -> Callable[[int], float]:
    if zeta_oracle is None:
        from .zeta import zeta_minus_one
        return zeta_minus_one
    return lambda n: zeta_oracle(n) - 1


def zeta_prime_vec(depth: int, zeta_oracle=None) -> NumericLaurentVec:
    """(..., 2(zeta(3)-1), zeta(2)-1 | 0, 0, ...) cut at component -depth.

    ``zeta_oracle(n)`` returns zeta(n); by default the reference evaluator
    supplies zeta(n) - 1 directly, avoiding the cancellation.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    zm1 = _zeta_minus_one(zeta_oracle)
    neg = [m * zm1(m + 1) for m in range(depth, 0, -1)]
    return NumericLaurentVec(-depth, tuple(neg) + (0.0,), Tail.TRUNCATED_UNKNOWN)


def check_eq_2_9(n: int, terms: int, zeta_oracle=None) -> float:
    """|partial sum - 1| for component -n of (-1H) . zeta'(n+1).

    The component is the convergent series
        sum_r C(s+r-2, r) (s+r-1) (zeta(s+r) - 1) (-1)^r/(r+1) (-1)^r = 1,
    with s = n + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    zm1 = _zeta_minus_one(zeta_oracle)
    tail = CoeffStream(lambda m: m * zm1(m + 1), "zeta'")
    stream = neg_component_stream(named_stream("minus1H"), tail, n)
    total = 0.0
    for k in range(terms):
        total += float(stream(k))
    return abs(total - 1.0)


def to_raw_laurent(v: LaurentVec) -> dict[int, object]:
    """Ordinary Laurent coefficients c_n of the same function."""
    out = {}
    for n, a in v.items():
        if n >= 0:
            out[n] = a / factorial(n)
        else:
            out[n] = a * sign(-n - 1) * factorial(-n - 1)
    return out


def from_raw_laurent(c: dict[int, object]) -> LaurentVec:
    d = {}
    for n, x in c.items():
        if n >= 0:
            d[n] = x * factorial(n)
        else:
            # exact division when x is rational
            scale = sign(-n - 1) * factorial(-n - 1)
            d[n] = x / scale if isinstance(x, float) else Fraction(x) / scale
    return LaurentVec.from_dict(d)


def _fmt(c) -> str:
    if isinstance(c, Fraction) or isinstance(c, int):
        return format_rational(c)
    return repr(c)


def format_vec(v: LaurentVec) -> str:
    neg = ", ".join(_fmt(v[n]) for n in range(v.lo, 0))
    pos = ", ".join(_fmt(v[n]) for n in range(0, v.hi + 1))
    left = f"{neg} " if neg else ""
    return f"({left}| {pos})"


_VEC_RE = re.compile(r"^\s*\((?P<neg>[^|]*)\|(?P<pos>[^)]*)\)\s*$")


def parse_vec(text: str) -> LaurentVec:
    """Parse "(a_lo, ..., a_-1 | a_0, ..., a_hi)"; the result has finite support."""
    m = _VEC_RE.match(text)
    if not m:
        raise ValueError(f"not a vector literal: {text!r}")

    def items(s: str) -> list[Fraction]:
        s = s.strip()
        return [parse_rational(x) for x in s.split(",")] if s else []

    return LaurentVec.from_parts(items(m.group("neg")), items(m.group("pos")))
