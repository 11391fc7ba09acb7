"""Every checked identity as a named, independently runnable case."""
from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .. import laurent as L
from ..bernoulli import bernoulli, bernoulli_second
from ..borel import (binomial_convolution, borel_shift, borel_sum, borel_sum_dn, cauchy_product,
                     get_kernel, linear_combine_series, nested_integral_3_53, registry_series,
                     solve_convolution)
from ..borel.series import FormalSeries
from ..zeta import (ZetaRef, check_eq_2_2, check_eq_2_5, euler_mascheroni, zeta_nonpos_exact)
from ..laurent import check_eq_2_9
from . import identities as ids


class Kind(enum.Enum):
    EXACT = "exact"
    QUADRATURE = "quadrature"
    DIAGNOSTIC = "diagnostic"


@dataclass(frozen=True)
class Outcome:
    lhs: object
    rhs: object
    abs_error: object
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class Context:
    digits: int = 15
    quad_tol: float = 1e-10
    series_terms: int = 200

    def tol(self, case_tol: float) -> float:
        return min(self.quad_tol, case_tol / 10)

    def zeta(self, n: int):
        return _zeta_ref(self.digits)(n)

    def precision(self):
        """Ambient mpmath precision for a case: derived references and error
        arithmetic must not round back to the default 15 digits."""
        import contextlib
        if self.digits <= 15:
            return contextlib.nullcontext()
        import mpmath
        return mpmath.workdps(self.digits + 10)

    def num(self, x):
        """Lift an exact or float reference into the working precision."""
        if self.digits <= 15:
            return float(x)
        import mpmath
        with mpmath.workdps(self.digits + 10):
            if isinstance(x, Fraction):
                return mpmath.mpf(x.numerator) / x.denominator
            return mpmath.mpf(x)


_ZREFS: dict[int, ZetaRef] = {}


def _zeta_ref(digits: int) -> ZetaRef:
    return _ZREFS.setdefault(digits, ZetaRef(digits))


@dataclass(frozen=True)
class VerificationCase:
    id: str
    kind: Kind
    anchor: str
    check: Callable[[Context], Outcome] = field(repr=False, compare=False)
    tolerance: Optional[float] = None
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind is Kind.EXACT and self.tolerance is not None:
            raise ValueError(f"{self.id}: exact cases carry no tolerance")
        if self.kind is Kind.QUADRATURE and self.tolerance is None:
            raise ValueError(f"{self.id}: quadrature cases need a tolerance")


# -- helpers ------------------------------------------------------------------

def _exact(pairs) -> Outcome:
    """pairs: iterable of (label, lhs, rhs).  Reports the first mismatch, or the
    last pair when all agree."""
    last = None
    for label, lhs, rhs in pairs:
        last = (label, lhs, rhs)
        if lhs != rhs:
            return Outcome(lhs, rhs, abs(Fraction(lhs) - Fraction(rhs)), False, f"mismatch at {label}")
    label, lhs, rhs = last
    return Outcome(lhs, rhs, Fraction(0), True, f"all agree; shown: {label}")


def _close(value, ref, tol, note="", relative=False) -> Outcome:
    err = abs(value - ref)
    bound = tol * abs(ref) if relative else tol
    return Outcome(value, ref, err, bool(err <= bound), note)


def _worst(outcomes: list[tuple[str, Outcome]]) -> Outcome:
    bad = [(l, o) for l, o in outcomes if not o.passed]
    label, o = bad[0] if bad else max(outcomes, key=lambda lo: lo[1].abs_error)
    tag = "fails at" if bad else "worst"
    return Outcome(o.lhs, o.rhs, o.abs_error, not bad, f"{tag} {label}")


def _sum(ctx: Context, kernel, z, case_tol):
    r = borel_sum(kernel, z, ctx.tol(case_tol), ctx.digits)
    if not r.summable:
        raise ArithmeticError(f"{kernel.kernel_id} at z={z}: {r}")
    return r.value


# -- exact cases ----------------------------------------------------------

N_EXACT = 50


def _vec(name, c=None):
    return L.named_element(name, N_EXACT, c).truncated()


def _bh(ctx):
    prod = L.laurent_mul(_vec("B"), _vec("H"))
    return _exact((f"n={n}", prod[n], Fraction(int(n == 0))) for n in range(N_EXACT + 1))


def _minus1B(ctx):
    lhs = L.pointwise_mul(_vec("minus1"), _vec("B"))
    rhs = L.laurent_mul(_vec("B"), _vec("j", 1))
    return _exact((f"n={n}", lhs[n], rhs[n]) for n in range(N_EXACT + 1))


def _minus1H(ctx):
    lhs = L.pointwise_mul(_vec("minus1"), _vec("H"))
    rhs = L.laurent_mul(_vec("H"), _vec("j", -1))
    return _exact((f"n={n}", lhs[n], rhs[n]) for n in range(N_EXACT + 1))


def _inverse_pair(ctx):
    prod = L.laurent_mul(_vec("minus1B"), _vec("minus1H"))
    return _exact((f"n={n}", prod[n], Fraction(int(n == 0))) for n in range(N_EXACT + 1))


def _random_vec(rng: random.Random) -> L.LaurentVec:
    lo, hi = rng.randint(-4, 0), rng.randint(0, 6)
    return L.LaurentVec(lo, tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 6))
                                  for _ in range(hi - lo + 1)))


def _product_laws(ctx):
    rng = random.Random(20240613)

    def pairs():
        for i in range(60):
            f, g, h = _random_vec(rng), _random_vec(rng), _random_vec(rng)
            a, b = Fraction(rng.randint(-5, 5), rng.randint(1, 4)), Fraction(rng.randint(-5, 5))
            mul = L.laurent_mul
            yield f"commutative #{i}", mul(f, g).trimmed(), mul(g, f).trimmed()
            yield f"associative #{i}", mul(mul(f, g), h).trimmed(), mul(f, mul(g, h)).trimmed()
            yield (f"distributive #{i}", mul(f, L.linear_combine(a, g, b, h)).trimmed(),
                   L.linear_combine(a, mul(f, g), b, mul(f, h)).trimmed())

    out = None
    for label, lhs, rhs in pairs():
        if lhs != rhs:
            return Outcome(str(lhs), str(rhs), None, False, f"mismatch at {label}")
        out = (label, lhs, rhs)
    return Outcome(str(out[1]), str(out[2]), Fraction(0), True, "180 random laws agree")


def _zeta_nonpos(ctx):
    at = ids.akiyama_tanigawa(21)

    def pairs():
        for n in range(1, 21):
            # the triangle yields B+; B_{n+1} = B+_{n+1} for n >= 1
            yield f"n={n}", zeta_nonpos_exact(n), -at[n + 1] / (n + 1)
        for k in range(1, 11):
            yield f"trivial zero -{2 * k}", zeta_nonpos_exact(2 * k), Fraction(0)

    return _exact(pairs())


def _identity_case(fn, ns):
    return lambda ctx: _exact((f"n={n}", *fn(n)) for n in ns)


def _deconvolution(ctx):
    N = 30
    bp = FormalSeries(bernoulli_second, "B+")
    h1 = FormalSeries(lambda n: (n + 1) * bernoulli_second(n), "(n+1)B+")
    six_bp = FormalSeries(lambda n: 6 * bernoulli_second(n), "6B+")
    h2 = FormalSeries(lambda n: 15 * (n + 2) * (n + 1) * bernoulli_second(n), "15(n+2)(n+1)B+")

    def pairs():
        for tag, f, h, anchors in (("b", bp, h1, (1, Fraction(1, 2))),
                                   ("a", six_bp, h2, (5, 5))):
            g = solve_convolution(f, h, N)
            yield f"{tag}_0", g[0], Fraction(anchors[0])
            yield f"{tag}_1", g[1], Fraction(anchors[1])
            back = cauchy_product(f, FormalSeries(lambda k, g=g: g[k], tag))
            for n in range(N + 1):
                yield f"{tag} round trip n={n}", back(n), h(n)

    return _exact(pairs())


# -- quadrature cases -----------------------------------------------------

def _grandi(ctx):
    return _close(_sum(ctx, get_kernel("geometric"), -1, 1e-12), ctx.num(Fraction(1, 2)), 1e-12)


def _geometric_points(ctx):
    pts = [(-2, Fraction(1, 3)), (Fraction(1, 2), Fraction(2)), (Fraction(-1, 2), Fraction(2, 3))]
    return _worst([(f"z={z}", _close(_sum(ctx, get_kernel("geometric"), z, 1e-12), ctx.num(v), 1e-12))
                   for z, v in pts])


def _regularity(ctx):
    pts = [Fraction(-1, 2), Fraction(3, 10), Fraction(-9, 10)]
    return _worst([(f"z={z}", _close(_sum(ctx, get_kernel("geometric"), z, 1e-11),
                                     ctx.num(1 / (1 - z)), 1e-11)) for z in pts])


def _bernoulli_zeta2(ctx):
    return _close(_sum(ctx, get_kernel("bernoulli"), 1, 1e-10), ctx.zeta(2) - 1, 1e-10)


def _a3(ctx):
    return _close(_sum(ctx, get_kernel("a3"), 1, 1e-9), 2 * ctx.zeta(3) - 2, 1e-9)


def _a4(ctx):
    v3 = _sum(ctx, get_kernel("a3"), 1, 1e-9)
    # route through the split sum(B_k) + sum(k B_k), where the 2 zeta(2) terms cancel
    s_b = _sum(ctx, get_kernel("bernoulli"), 1, 1e-9)
    s_kb = _sum(ctx, get_kernel("k-bernoulli"), 1, 1e-9)
    v4 = s_b + s_kb
    ref = 2 * ctx.zeta(3) - 2
    o = _close(v4, ref, 1e-9)
    agree = abs(v4 - v3) <= 1e-9
    return Outcome(v4, ref, o.abs_error, o.passed and agree, f"|A4 - A3| = {float(abs(v4 - v3)):.3e}")


def _dn_first(n):
    def run(ctx):
        g = math.factorial(n - 1)
        v = borel_sum_dn(n, 1, ctx.tol(1e-9), "first", ctx.digits)
        return _close(v, g * ctx.zeta(n) - g, 1e-9, relative=True)
    return run


def _dn_alternating(n):
    def run(ctx):
        g = math.factorial(n - 1)
        v = (-1) ** n * borel_sum_dn(n, -1, ctx.tol(1e-9), "first", ctx.digits)
        return _close(v, g * ctx.zeta(n), 1e-9, relative=True)
    return run


def _shift_rules(ctx):
    b = registry_series("bernoulli")
    z2 = ctx.zeta(2)
    out = [("m=0 c=1", _close(_sum(ctx, borel_shift(b, 0, 1).kernel, 1, 1e-10), z2, 1e-10)),
           ("m=1 c=1", _close(_sum(ctx, borel_shift(b, 1, 1).kernel, 1, 1e-10), z2, 1e-10))]
    # unpadded D_n series with (n-1)! moved onto its k = 1 term
    for n in range(2, 7):
        g = math.factorial(n - 1)
        s = borel_shift(registry_series(f"dn-unpadded:{n}"), 1, g)
        v = _sum(ctx, s.kernel, 1, 1e-10 * g)
        out.append((f"D_{n} unpadded", _close(v, g * ctx.zeta(n), 1e-10, relative=True)))
    base = _sum(ctx, b.kernel, 1, 1e-10)
    rng = random.Random(31)
    for i in range(50):
        m, c = rng.randint(0, 10), Fraction(rng.randint(-100, 100), 10)
        v = _sum(ctx, borel_shift(b, m, c).kernel, 1, 1e-10)
        out.append((f"random m={m} c={c}", _close(v - base, ctx.num(c), 2e-10)))
    return _worst(out)


def _grandi_square(ctx):
    g = registry_series("grandi")
    sq = cauchy_product(g, g)
    return _close(_sum(ctx, sq.kernel, 1, 1e-12), ctx.num(Fraction(1, 4)), 1e-12)


def _conv_square(ctx):
    b = registry_series("bernoulli")
    s = linear_combine_series(1, binomial_convolution(b, b), -1, registry_series("monomial:0"))
    ref = -4 * ctx.zeta(3) + 2 * ctx.zeta(2) + 1
    v = _sum(ctx, s.kernel, 1, 1e-8)
    v_reg = _sum(ctx, get_kernel("conv-square"), 1, 1e-8)
    o = _close(v, ref, 1e-8)
    return Outcome(v, ref, o.abs_error, o.passed and abs(v - v_reg) <= 1e-8,
                   "product kernel vs registry closed form")


def _conv_square_second(ctx):
    b = registry_series("bernoulli-second")
    s = binomial_convolution(b, b)
    return _close(_sum(ctx, s.kernel, 1, 1e-8), 2 * ctx.zeta(2), 1e-8)


def _bp_pair():
    return registry_series("bernoulli-second"), registry_series("bplus-k1")


def _product_z2z3(ctx):
    bp, kbp = _bp_pair()
    p = cauchy_product(bp, kbp)
    return _close(_sum(ctx, p.kernel, 1, 1e-8), 2 * ctx.zeta(2) * ctx.zeta(3), 1e-8)


def _weighted_square(ctx):
    bp, kbp = _bp_pair()
    s = linear_combine_series(1, cauchy_product(bp, kbp), 1, cauchy_product(kbp, bp))
    return _close(_sum(ctx, s.kernel, 1, 1e-8), 4 * ctx.zeta(2) * ctx.zeta(3), 1e-8)


def _nested_value(ctx):
    ref = 2 * ctx.zeta(2) * ctx.zeta(3) + 2 * ctx.zeta(5)
    nested = nested_integral_3_53(ctx.tol(1e-6), max(ctx.series_terms, 200), ctx.digits)
    # sequence route: half of (the (n+2)-weighted square) + (padded C(k+2,3) B+_{k-1})
    bp, kbp = _bp_pair()
    weighted = _sum(ctx, linear_combine_series(1, cauchy_product(bp, kbp), 1,
                                               cauchy_product(kbp, bp)).kernel, 1, 1e-7)
    padded = _sum(ctx, get_kernel("dn:second:5"), 1, 1e-7) / 6
    seq = (weighted + padded) / 2
    o = _close(nested, ref, 1e-6)
    agree = abs(seq - ref) <= 1e-6
    return Outcome(nested, ref, o.abs_error, o.passed and agree,
                   f"sequence route off by {float(abs(seq - ref)):.3e}")


def _gamma(ctx):
    return _close(_sum(ctx, get_kernel("beta-plus"), 1, 1e-8),
                  ctx.num(euler_mascheroni(ctx.digits)), 1e-8)


def _weights_table(ctx):
    out = []
    for n in range(2, 7):
        v = (-1) ** n * _sum(ctx, get_kernel(f"rising:{n}"), -1, 1e-10)
        out.append((f"n={n}", _close(v, ctx.num(Fraction(math.factorial(n - 2), 2 ** (n - 1))), 1e-10)))
    return _worst(out)


def _bplus_weight_sums(ctx):
    import mpmath
    pi = ctx.num(mpmath.pi) if ctx.digits > 15 else math.pi
    rows = [("6 B+_k", 6, 2, pi ** 2), ("(k+1) B+_k", 1, 3, 2 * ctx.zeta(3)),
            ("15 (k+2)(k+1) B+_k", 15, 4, pi ** 4)]
    out = []
    for label, c, n, ref in rows:
        v = c * _sum(ctx, get_kernel(f"dn:second:{n}"), 1, 1e-9 * float(abs(ref)))
        out.append((label, _close(v, ref, 1e-9, relative=True)))
    return _worst(out)


def _not_summable(ctx):
    geo = borel_sum(get_kernel("geometric"), 1, ctx.tol(1e-12), ctx.digits)
    nzn = borel_sum(get_kernel("n-zn"), 1, ctx.tol(1e-12), ctx.digits)
    v = _sum(ctx, get_kernel("n-zn"), -1, 1e-12)
    o = _close(v, ctx.num(Fraction(-1, 4)), 1e-12)
    statuses = f"geometric z=1: {geo.status.name}; n z^n z=1: {nzn.status.name}"
    ok = o.passed and not geo.summable and not nzn.summable and geo.status.name == "NOT_SUMMABLE" \
        and nzn.status.name == "NOT_SUMMABLE"
    return Outcome(v, o.rhs, o.abs_error, ok, statuses)


def _zeta_recursion(ctx):
    out = []
    for s in range(2, 7):
        r = check_eq_2_5(s, 60)
        out.append((f"s={s}", Outcome(r, 0.0, r, r < 1e-12)))
    return _worst(out)


def _zeta_prime_component(ctx):
    terms = ctx.series_terms
    out = []
    for n in range(1, 6):
        r = check_eq_2_9(n, terms)
        out.append((f"n={n}", Outcome(1.0 + r, 1.0, r, r < 1e-10)))
    return _worst(out)


def _alternating_zeta_diag(m):
    def run(ctx):
        lhs, rhs, eq = check_eq_2_2(m)
        return Outcome(lhs, rhs, abs(lhs - rhs), eq, "sides agree" if eq else "sides differ")
    return run


# -- the catalogue ------------------------------------------------------------

def _build() -> list[VerificationCase]:
    E, Q, D = Kind.EXACT, Kind.QUADRATURE, Kind.DIAGNOSTIC
    ev, al = range(4, 41, 2), range(1, 41)
    cases = [
        VerificationCase("exact/bh-identity", E, "B * H = id, n <= 50", _bh),
        VerificationCase("exact/minus1B", E, "-1 (.) B = B * 1, n <= 50", _minus1B),
        VerificationCase("exact/minus1H", E, "-1 (.) H = H * j(-1), n <= 50", _minus1H),
        VerificationCase("exact/eq1.10", E, "(-1B) * (-1H) = id, n <= 50", _inverse_pair),
        VerificationCase("exact/lemma1.3", E, "product laws on random finite vectors", _product_laws),
        VerificationCase("exact/zeta-nonpos", E, "zeta(-n) = -B_{n+1}/(n+1), n = 1..20", _zeta_nonpos),
        VerificationCase("exact/gessel", E, "sum C(n,k) B_k B_{n-k} = -(n+1) B_n, even n = 4..40",
                         _identity_case(ids.gessel, ev)),
        VerificationCase("exact/gessel-restated", E, "full-range binomial square, n = 1..40",
                         _identity_case(ids.gessel_restated, al)),
        VerificationCase("exact/matiyasevich", E, "Matiyasevich identity, even n = 4..40",
                         _identity_case(ids.matiyasevich, ev)),
        VerificationCase("exact/matiyasevich-restated", E, "second-kind Matiyasevich form, n = 1..40",
                         _identity_case(ids.matiyasevich_restated, al)),
        VerificationCase("exact/miki", E, "Miki identity with H_n, even n = 4..40",
                         _identity_case(ids.miki, ev)),
        VerificationCase("exact/second-kind-restated", E, "binomial square of B+, n = 1..40",
                         _identity_case(ids.second_kind_restated, al)),
        VerificationCase("exact/deconvolution-roundtrip", E, "triangular solves re-multiplied, N = 30",
                         _deconvolution),
        VerificationCase("borel/grandi", Q, "1 - 1 + 1 - ... = 1/2", _grandi, 1e-12),
        VerificationCase("borel/geometric-points", Q, "geometric at z = -2, 1/2, -1/2",
                         _geometric_points, 1e-12),
        VerificationCase("borel/regularity", Q, "geometric at z = -1/2, 3/10, -9/10 equals 1/(1-z)",
                         _regularity, 1e-11),
        VerificationCase("borel/bernoulli-zeta2", Q, "sum B_k = zeta(2) - 1", _bernoulli_zeta2, 1e-10),
        VerificationCase("borel/a3-zeta3", Q, "sum k B_{k-1} = 2 zeta(3) - 2", _a3, 1e-9),
        VerificationCase("borel/a4-zeta3", Q, "sum (k+1) B_k = 2 zeta(3) - 2", _a4, 1e-9),
    ]
    for n in range(2, 13):
        cases.append(VerificationCase(f"borel/thm2.1/n={n}", Q,
                                      "int e^-t t^(n-1)/(e^t-1) = Gamma(n) zeta(n) - Gamma(n)",
                                      _dn_first(n), 1e-9, {"n": n, "relative": True}))
    for n in range(2, 13):
        cases.append(VerificationCase(f"borel/thm3.5/n={n}", Q,
                                      "z = -1 integral = Gamma(n) zeta(n)",
                                      _dn_alternating(n), 1e-9, {"n": n, "relative": True}))
    cases += [
        VerificationCase("borel/shift-rules", Q, "moving constants across a Borel sum",
                         _shift_rules, 1e-10, {"random_shifts": 50}),
        VerificationCase("borel/grandi-square", Q, "1 - 2 + 3 - 4 + ... = 1/4", _grandi_square, 1e-12),
        VerificationCase("borel/conv-square", Q, "binomial square of B minus 1 = -4 zeta(3) + 2 zeta(2) + 1",
                         _conv_square, 1e-8),
        VerificationCase("borel/conv-square-second", Q, "binomial square of B+ = 2 zeta(2)",
                         _conv_square_second, 1e-8),
        VerificationCase("borel/product-zeta2zeta3", Q, "Cauchy product of B+ and (k+1) B+ = 2 zeta(2) zeta(3)",
                         _product_z2z3, 1e-8),
        VerificationCase("borel/eq3.48", Q, "(n+2)-weighted square of B+ = 4 zeta(2) zeta(3)",
                         _weighted_square, 1e-8),
        VerificationCase("borel/eq3.49", Q, "nested integral = 2 zeta(2) zeta(3) + 2 zeta(5)",
                         _nested_value, 1e-6),
        VerificationCase("borel/gamma", Q, "sum beta+_{k+1} = Euler's gamma", _gamma, 1e-8),
        VerificationCase("borel/weights-table", Q, "alternating rising rows = Gamma(n-1)/2^(n-1), n = 2..6",
                         _weights_table, 1e-10),
        VerificationCase("borel/eq4.2-4.4", Q, "pi^2, 2 zeta(3), pi^4 from B+ series",
                         _bplus_weight_sums, 1e-9, {"relative": True}),
        VerificationCase("borel/not-summable", Q, "1 + 1 + ... and 1 + 2 + 3 + ... diverge; 1 - 2 + 3 - ... = -1/4",
                         _not_summable, 1e-12),
        VerificationCase("convergent/eq2.5", Q, "zeta recursion residual, s = 2..6, R = 60", _zeta_recursion, 1e-12),
        VerificationCase("convergent/eq2.7", Q, "component of (-1H) * zeta' sums to 1, n = 1..5",
                         _zeta_prime_component, 1e-10),
    ]
    for m in range(11):
        cases.append(VerificationCase(f"diag/eq2.2/m={m}", D,
                                      "delta - (-1)^m/(m+1) vs alternating zeta(i-m) sum",
                                      _alternating_zeta_diag(m), params={"m": m}))
    seen = set()
    for c in cases:
        if c.id in seen:
            raise RuntimeError(f"duplicate case id {c.id}")
        seen.add(c.id)
    return cases


CATALOGUE: list[VerificationCase] = _build()
