from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from tanglecalc.exceptions import NotCoprimeError, UndefinedValueError
from tanglecalc.rational import INF, ZERO, ExtendedRational, as_extended, cf_evaluate, cf_expand, mod_inverse, normalize


@pytest.mark.parametrize(
    "num, den, expected",
    [((6), 4, (3, 2)), (-2, -4, (1, 2)), (5, 0, (1, 0)), (-5, 0, (1, 0)), (0, 7, (0, 1)), (3, -6, (-1, 2))],
)
def test_normalize_examples(num, den, expected):
    assert normalize(num, den) == ExtendedRational(*expected)


def test_normalize_rejects_zero_over_zero():
    with pytest.raises(UndefinedValueError):
        normalize(0, 0)


def test_constructor_rejects_non_canonical():
    for bad in [(2, 4), (1, -2), (3, 0)]:
        with pytest.raises(ValueError):
            ExtendedRational(*bad)


@given(st.integers(-200, 200), st.integers(-200, 200), st.integers(-20, 20).filter(bool))
def test_normalize_idempotent_and_scale_invariant(p, q, k):
    if p == 0 and q == 0:
        return
    x = normalize(p, q)
    assert normalize(x.num, x.den) == x
    assert normalize(k * p, k * q) == x


@pytest.mark.parametrize("coeffs, expected", [([2, 3], (7, 3)), ([3], (3, 1)), ([], (1, 0)), ([1, 0, 2], (3, 1))])
def test_cf_evaluate_examples(coeffs, expected):
    assert cf_evaluate(coeffs) == normalize(*expected)


def test_cf_expand_examples():
    assert cf_expand(normalize(7, 3)) == [2, 3]
    assert cf_evaluate(cf_expand(normalize(-1, 2))) == normalize(-1, 2)
    assert cf_expand(INF) == []
    assert cf_expand(ZERO) == [0]


def test_cf_round_trip_grid():
    for p, q in product(range(-50, 51), range(0, 51)):
        if p == 0 and q == 0:
            continue
        x = normalize(p, q)
        assert cf_evaluate(cf_expand(x)) == x


def test_cf_expand_signs_uniform():
    for p, q in product(range(-30, 31), range(1, 31)):
        coeffs = cf_expand(normalize(p, q))
        tail = coeffs[1:]
        assert all(c > 0 for c in tail) or all(c < 0 for c in tail)


def _fr(x):
    return None if x.is_infinite else Fraction(x.num, x.den)


def test_arithmetic_matches_fraction_grid():
    values = [(p, q) for p in range(-12, 13) for q in range(1, 9)]
    cases = 0
    for (a, b), (c, d) in product(values[::2], values[::2]):
        x, y = normalize(a, b), normalize(c, d)
        fx, fy = Fraction(a, b), Fraction(c, d)
        assert _fr(x + y) == fx + fy
        assert _fr(-x) == -fx
        assert _fr(x - y) == fx - fy
        assert _fr(x * y) == fx * fy
        if fx:
            assert _fr(x.reciprocal()) == 1 / fx
        else:
            assert x.reciprocal() == INF
        cases += 1
    assert cases >= 10_000


def test_infinity_rules():
    assert INF + 3 == INF
    assert INF.reciprocal() == ZERO
    assert ZERO.reciprocal() == INF
    assert -INF == INF
    with pytest.raises(UndefinedValueError):
        INF + INF
    with pytest.raises(UndefinedValueError):
        INF * ZERO


def test_as_extended_inputs():
    assert as_extended(Fraction(6, 4)) == normalize(3, 2)
    assert as_extended((1, 0)) == INF
    with pytest.raises(TypeError):
        as_extended(True)
    with pytest.raises(TypeError):
        as_extended("1/2")


def test_str_forms():
    assert [str(normalize(*x)) for x in [(3, 2), (4, 1), (1, 0), (-1, 2)]] == ["3/2", "4", "inf", "-1/2"]


@pytest.mark.parametrize("a, p, expected", [(3, 11, 4), (1, 7, 1), (5, 7, 3)])
def test_mod_inverse_examples(a, p, expected):
    assert mod_inverse(a, p) == expected


def test_mod_inverse_exhaustive_small():
    for p in range(2, 40):
        for a in range(-p, 2 * p):
            if Fraction(a, p).denominator == p:
                inv = mod_inverse(a, p)
                assert 0 < inv < p and (a * inv) % p == 1


def test_mod_inverse_errors():
    with pytest.raises(NotCoprimeError):
        mod_inverse(4, 6)
    with pytest.raises(ValueError):
        mod_inverse(1, 1)
