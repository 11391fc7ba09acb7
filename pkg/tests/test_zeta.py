from fractions import Fraction
from math import pi

import mpmath
import pytest

from borelzeta.zeta import (ZetaRef, check_eq_2_2, check_eq_2_5, euler_mascheroni, gamma_int,
                            zeta_even_exact, zeta_minus_one, zeta_nonpos_exact, zeta_pos_ref)


def eta_oracle(s, n=60, dps=40):
    """zeta(s) from the alternating eta series, Cohen-Villegas-Zagier acceleration."""
    with mpmath.workdps(dps):
        d = (3 + mpmath.sqrt(8)) ** n
        d = (d + 1 / d) / 2
        b, c, total = mpmath.mpf(-1), -d, mpmath.mpf(0)
        for k in range(n):
            c = b - c
            total += c / mpmath.mpf(k + 1) ** s
            b = b * 2 * (k + n) * (k - n) / ((2 * k + 1) * (k + 1))
        eta = total / d
        return eta / (1 - mpmath.mpf(2) ** (1 - s))


def gamma_oracle(dps=40, M=10 ** 4):
    """Euler's constant from H_M - ln M with the asymptotic correction terms."""
    with mpmath.workdps(dps):
        H = mpmath.fsum(mpmath.mpf(1) / k for k in range(1, M + 1))
        m = mpmath.mpf(M)
        return H - mpmath.log(m) - 1 / (2 * m) + 1 / (12 * m ** 2) - 1 / (120 * m ** 4)


def test_gamma_int():
    assert [gamma_int(n) for n in (1, 3, 6)] == [1, 2, 120]
    with pytest.raises(ValueError):
        gamma_int(0)


@pytest.mark.parametrize("n", range(2, 21))
def test_positive_zeta_against_eta(n):
    assert zeta_pos_ref(n) == pytest.approx(float(eta_oracle(n)), rel=2e-15)


def test_positive_zeta_high_precision():
    for n in (2, 3, 5, 7, 12):
        with mpmath.workdps(60):
            assert abs(zeta_pos_ref(n, 50) - eta_oracle(n, n=90, dps=70)) < mpmath.mpf(10) ** -50


def test_zeta_values():
    assert abs(zeta_pos_ref(2) - pi ** 2 / 6) < 1e-13
    assert abs(zeta_pos_ref(3) - 1.2020569032) < 1e-10
    q, p = zeta_even_exact(10)
    assert abs(zeta_pos_ref(10) - float(q) * pi ** p) < 1e-13
    assert zeta_minus_one(30) == pytest.approx(2.0 ** -30 + 3.0 ** -30, rel=1e-12)
    with pytest.raises(ValueError):
        zeta_pos_ref(1)


def test_euler_formula():
    assert zeta_even_exact(2) == (Fraction(1, 6), 2)
    assert zeta_even_exact(4) == (Fraction(1, 90), 4)
    assert zeta_even_exact(6) == (Fraction(1, 945), 6)
    with pytest.raises(ValueError):
        zeta_even_exact(3)


def test_nonpositive_zeta():
    assert zeta_nonpos_exact(0) == Fraction(-1, 2)
    assert zeta_nonpos_exact(1) == Fraction(-1, 12)
    assert zeta_nonpos_exact(2) == 0
    assert zeta_nonpos_exact(3) == Fraction(1, 120)
    for n in range(0, 12):
        assert float(zeta_nonpos_exact(n)) == pytest.approx(float(mpmath.zeta(-n)), abs=1e-15)


def test_euler_mascheroni():
    assert abs(euler_mascheroni(10) - 0.5772156649) < 1e-10
    assert abs(euler_mascheroni() - float(gamma_oracle())) < 1e-15
    with mpmath.workdps(60):
        assert abs(euler_mascheroni(50) - gamma_oracle(70, 10 ** 5)) < mpmath.mpf(10) ** -28


def test_zeta_recursion_residual():
    for s in range(2, 7):
        assert check_eq_2_5(s, 60) < 1e-12
    assert check_eq_2_5(2, 0) == pytest.approx(abs(zeta_pos_ref(2) - 2), abs=1e-14)
    with pytest.raises(ValueError):
        check_eq_2_5(1, 10)


def test_alternating_zeta_diagnostic():
    assert check_eq_2_2(0) == (0, 0, True)
    lhs, rhs, equal = check_eq_2_2(1)
    assert (lhs, rhs, equal) == (Fraction(1, 2), Fraction(5, 12), False)
    for m in range(11):
        lhs, rhs, equal = check_eq_2_2(m)
        assert isinstance(lhs, Fraction) and isinstance(rhs, Fraction)
        assert equal == (lhs == rhs)


def test_reference_cache():
    ref = ZetaRef()
    assert ref(4) == zeta_pos_ref(4)
    assert ref(-1) == Fraction(-1, 12)
