from math import gcd

import pytest
from hypothesis import given, strategies as st

from tanglecalc.exceptions import NotIntegralError, TangleError, UndefinedValueError
from tanglecalc.rational import INF, cf_evaluate, normalize
from tanglecalc.tangles import (
    MontesinosTangle,
    RationalTangle,
    T,
    TwistWord,
    add,
    distance,
    mirror,
    repeated_add,
    tangle_to_word,
    word_to_tangle,
)

fractions = st.tuples(st.integers(-30, 30), st.integers(0, 30)).filter(lambda x: gcd(*x) == 1)


def test_word_to_tangle_examples():
    assert word_to_tangle(TwistWord((("h", 2), "r", ("h", 3), "r"))) == T(7, 3)
    assert word_to_tangle(TwistWord(())) == T(INF)
    assert word_to_tangle(TwistWord((("h", 0), "r"))) == T(0)


def test_single_moves():
    assert word_to_tangle(TwistWord((("h", 3),))) == T(INF)
    assert word_to_tangle(TwistWord((("h", 3), "r"))) == T(3)
    # v^k on T(0) is still T(0); on T(1) it is 1/(1 + k)
    assert word_to_tangle(TwistWord((("v", 2), ("h", 1), "r"))) == T(1, 3)


@given(st.lists(st.integers(-6, 6), max_size=6))
def test_conway_word_property(coeffs):
    assert word_to_tangle(TwistWord.conway(coeffs)) == RationalTangle(cf_evaluate(coeffs))


def test_conway_completeness_grid():
    for p in range(-30, 31):
        for q in range(0, 31):
            if gcd(p, q) != 1:
                continue
            t = T(p, q)
            assert word_to_tangle(tangle_to_word(t)) == t


def test_tangle_to_word_examples():
    assert str(tangle_to_word(T(7, 3))) == "h^2 r h^3 r"
    assert tangle_to_word(T(INF)).moves == ()


def test_add_examples():
    assert add(T(-1, 2), T(2)) == T(3, 2)
    assert add(T(5, 7), T(0)) == T(5, 7)
    m = add(T(1, 3), T(2, 5))
    assert isinstance(m, MontesinosTangle) and str(m) == "M(1/3, 2/5)"


def test_add_absorbs_integral_into_montesinos():
    m = add(add(T(1, 3), T(2, 5)), T(1))
    assert m == MontesinosTangle((T(1, 3), T(7, 5)))


def test_add_infinity():
    with pytest.raises(UndefinedValueError):
        add(T(INF), T(INF))
    assert add(T(INF), T(3)) == T(INF)
    m = add(T(1, 3), T(INF))
    assert isinstance(m, MontesinosTangle)


def test_montesinos_rejects_integral_summand():
    with pytest.raises(TangleError):
        MontesinosTangle((T(1, 2), T(3)))
    with pytest.raises(TangleError):
        MontesinosTangle((T(1, 2),))


def test_repeated_add_examples():
    assert repeated_add(T(-1, 2), T(2), 2) == T(7, 2)
    assert repeated_add(T(-1, 2), T(2), 3) == T(11, 2)
    assert repeated_add(T(3, 5), T(4), 1) == add(T(3, 5), T(4))


def test_repeated_add_errors():
    with pytest.raises(NotIntegralError):
        repeated_add(T(1, 2), T(1, 2), 2)
    with pytest.raises(ValueError):
        repeated_add(T(1, 2), T(1), 0)


@given(fractions, st.integers(-5, 5), st.integers(2, 6))
def test_repeated_add_is_iterated_add(f, k, m):
    t = T(*f)
    assert repeated_add(t, T(k), m) == add(repeated_add(t, T(k), m - 1), T(k))


@given(fractions, st.integers(-8, 8))
def test_mirror_distributes(f, m):
    t = T(*f)
    assert mirror(add(t, T(m))) == add(mirror(t), T(-m))


def test_mirror_examples():
    assert mirror(T(2)) == T(-2)
    assert mirror(T(0)) == T(0)
    assert mirror(T(INF)) == T(INF)
    assert mirror(mirror(T(3, 7))) == T(3, 7)


def test_distance_examples():
    assert distance(T(0), T(2)) == 2
    assert distance(T(3, 4), T(3, 4)) == 0
    assert distance(T(0), T(INF)) == 1


@given(fractions, fractions)
def test_distance_properties(f, g):
    P, R = T(*f), T(*g)
    assert distance(P, R) == distance(R, P)
    assert (distance(P, R) == 0) == (P == R)
    assert distance(mirror(P), mirror(R)) == distance(P, R)


def test_arcs_parity():
    assert T(0).arcs() == (("NW", "NE"), ("SW", "SE"))
    assert T(INF).arcs() == (("NW", "SW"), ("NE", "SE"))
    assert T(1).arcs() == (("NW", "SE"), ("NE", "SW"))


def test_twist_word_validation():
    with pytest.raises(TangleError):
        TwistWord((("x", 1),))
    with pytest.raises(TangleError):
        TwistWord((("r", 2),))
    assert TwistWord.conway([2, 3]).crossing_count() == 5
