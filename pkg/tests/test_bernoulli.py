from fractions import Fraction

import pytest

from borelzeta.bernoulli import (BernoulliTable, bernoulli, bernoulli_second, beta_plus,
                                 load_cache, save_cache)
from borelzeta.exact import binomial
from borelzeta.verify.identities import akiyama_tanigawa


def test_spec_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli_second(1) == Fraction(1, 2)
    assert bernoulli_second(2) == Fraction(1, 6)
    assert bernoulli_second(7) == 0
    assert beta_plus(1) == Fraction(1, 2)
    assert beta_plus(2) == Fraction(1, 12)
    assert beta_plus(3) == 0
    with pytest.raises(ValueError):
        beta_plus(0)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_against_akiyama_tanigawa():
    # independent algorithm; it yields the B+ convention
    oracle = akiyama_tanigawa(60)
    assert [bernoulli_second(k) for k in range(61)] == oracle
    assert [bernoulli(k) for k in range(61)] == [-b if k == 1 else b for k, b in enumerate(oracle)]


def test_defining_recurrence():
    for n in range(1, 60):
        assert sum(binomial(n + 1, k) * bernoulli(k) for k in range(n + 1)) == 0


def test_odd_vanish_and_even_signs():
    for k in range(3, 80, 2):
        assert bernoulli(k) == 0
    for k in range(2, 80, 2):
        assert (bernoulli(k) > 0) == (k % 4 == 2)


def test_fresh_table_extends_lazily():
    t = BernoulliTable()
    assert t[30] == bernoulli(30)
    assert len(t) >= 31


def test_cache_roundtrip(tmp_path):
    path = tmp_path / "b.txt"
    bernoulli(40)
    save_cache(path)
    values = load_cache(path)
    assert values[:41] == [bernoulli(k) for k in range(41)]
    t = BernoulliTable()
    t.seed(values)
    assert t[40] == bernoulli(40)


def test_corrupt_cache_rejected(tmp_path):
    values = [bernoulli(k) for k in range(10)]
    values[4] += 1
    t = BernoulliTable()
    with pytest.raises(ValueError):
        t.seed(values)
