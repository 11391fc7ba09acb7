from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from borelzeta.laurent import (LaurentVec, Tail, check_eq_2_9, format_vec, laurent_mul,
                               linear_combine, named_element, named_stream, neg_component_stream,
                               parse_vec, pointwise_mul, zeta_prime_vec)
from borelzeta.zeta import zeta_pos_ref


def vec(text):
    return parse_vec(text)


# -- independent oracle: ordinary Laurent polynomial arithmetic ----------------

def _basis_scale(n):
    """Ordinary coefficient of z^n carried by the n-th basis element."""
    if n >= 0:
        return Fraction(1, factorial(n))
    m = -n
    return Fraction((-1) ** (m - 1) * factorial(m - 1))


def _to_poly(v):
    return {n: a * _basis_scale(n) for n, a in v.items() if a}


def _from_poly(p):
    return LaurentVec.from_dict({n: c / _basis_scale(n) for n, c in p.items()})


def _poly_mul(p, q):
    out = {}
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return out


small = st.fractions(min_value=-5, max_value=5, max_denominator=7)
finite_vecs = st.builds(lambda neg, pos: LaurentVec.from_parts(neg, pos),
                        st.lists(small, max_size=4), st.lists(small, min_size=1, max_size=5))


@settings(max_examples=150, deadline=None)
@given(finite_vecs, finite_vecs)
def test_product_is_function_product(f, g):
    assert laurent_mul(f, g).trimmed() == _from_poly(_poly_mul(_to_poly(f), _to_poly(g))).trimmed()


@settings(max_examples=60, deadline=None)
@given(finite_vecs, finite_vecs, finite_vecs, small, small)
def test_product_laws(f, g, h, a, b):
    assert laurent_mul(f, g) == laurent_mul(g, f)
    assert laurent_mul(laurent_mul(f, g), h) == laurent_mul(f, laurent_mul(g, h))
    assert (laurent_mul(f, linear_combine(a, g, b, h))
            == linear_combine(a, laurent_mul(f, g), b, laurent_mul(f, h)))


def test_linear_combine_examples():
    one = vec("(| 1)")
    assert linear_combine(1, one, 1, one) == vec("(| 2, 0, 0)")
    # e^z + e^(1/z), both cut at three terms
    ez = _from_poly({k: Fraction(1, factorial(k)) for k in range(3)})
    einv = _from_poly({-k: Fraction(1, factorial(k)) for k in range(3)})
    s = linear_combine(1, ez, 1, einv)
    assert (s[-2], s[-1], s[0], s[1]) == (Fraction(-1, 2), 1, 2, 1)


def test_exp_inverse():
    K = 50
    e = named_element("j", K, 1).truncated()
    einv = named_element("j", K, -1).truncated()
    p = laurent_mul(e, einv)
    assert all(p[n] == (1 if n == 0 else 0) for n in range(K + 1))


def test_bh_identity():
    K = 50
    p = laurent_mul(named_element("B", K).truncated(), named_element("H", K).truncated())
    assert all(p[n] == (1 if n == 0 else 0) for n in range(K + 1))


def test_identity_element():
    g = vec("(3, -1/2 | 4, 0, 7)")
    assert laurent_mul(vec("(| 1)"), g) == g


def test_truncated_operand_refused():
    with pytest.raises(ValueError):
        laurent_mul(named_element("B", 5), vec("(| 1)"))


def test_pointwise():
    K = 6
    minus1 = named_element("minus1", K)
    assert pointwise_mul(minus1, named_element("j", K, 1)) == named_element("j", K, -1)
    f = vec("(5 | 2, 3, 4)")
    assert pointwise_mul(vec("(| 1)"), f) == vec("(| 2)")


def test_named_elements():
    assert named_element("H", 3).coeffs == (1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    assert named_element("j", 3, -1).coeffs == (1, -1, 1, -1)
    assert named_element("B", 3).tail is Tail.TRUNCATED_UNKNOWN
    with pytest.raises(ValueError):
        named_element("j", 3, 0)
    with pytest.raises(ValueError):
        named_element("nope", 3)


def test_neg_component_streams():
    ones = named_stream("ones")
    assert neg_component_stream(ones, ones, 1).take(6) == [1, -1, 1, -1, 1, -1]
    g = lambda m: Fraction(10 * m)  # b_{-m}
    from borelzeta.laurent import CoeffStream
    s = neg_component_stream(named_stream("id"), CoeffStream(g, "g"), 2)
    assert s.take(3) == [20, 0, 0]


def test_zeta_prime_vec():
    v = zeta_prime_vec(2)
    assert v[-1] == pytest.approx(zeta_pos_ref(2) - 1, abs=1e-14)
    assert v[-2] == pytest.approx(2 * (zeta_pos_ref(3) - 1), abs=1e-14)
    with pytest.raises(ValueError):
        zeta_prime_vec(0)


def test_zeta_prime_component_sums_to_one():
    for n in range(1, 6):
        assert check_eq_2_9(n, 200) < 1e-10
    # one term is deliberately unconverged
    assert check_eq_2_9(1, 1) == pytest.approx(abs(zeta_pos_ref(2) - 2), abs=1e-14)


def test_custom_oracle_is_used():
    import mpmath
    assert check_eq_2_9(2, 200, lambda n: float(mpmath.zeta(n))) < 1e-10


def test_text_roundtrip():
    v = vec("(-1/2, 1 | 2, 1, 1)")
    assert parse_vec(format_vec(v)) == v
    with pytest.raises(ValueError):
        parse_vec("1, 2")
