from itertools import product
from math import gcd

import pytest

from tanglecalc.exceptions import NotCoprimeError, TangleError
from tanglecalc.fourplat import (
    CHIRAL,
    MIRROR_AGNOSTIC,
    CompositeKnot,
    b,
    closure,
    closure_rational,
    closure_sum,
    crossing_number,
    determinant,
    equivalent,
    infinity_closure_montesinos,
    knot_name,
    schubert_normalize,
    signed_class,
)
from tanglecalc.rational import INF
from tanglecalc.tangles import MontesinosTangle, T, add

MODES = [CHIRAL, MIRROR_AGNOSTIC]


def _pairs(max_p):
    return [(p, q) for p in range(0, max_p + 1) for q in range(-p - 1, 2 * p + 2) if gcd(p, q) == 1]


def test_schubert_examples():
    # 2 is the least q in the mirror-agnostic orbit {2, 5, 6, 9} of b(11,6)
    assert schubert_normalize(11, 6, MIRROR_AGNOSTIC) == b(11, 2)
    assert equivalent(schubert_normalize(11, 6, MIRROR_AGNOSTIC), b(11, 5), MIRROR_AGNOSTIC)
    for mode in MODES:
        assert schubert_normalize(7, 8, mode) == b(7, 1)
    assert equivalent(schubert_normalize(11, 3, MIRROR_AGNOSTIC), b(11, 4), MIRROR_AGNOSTIC)


def test_schubert_rejects_non_coprime():
    with pytest.raises(NotCoprimeError):
        schubert_normalize(6, 4)
    with pytest.raises(NotCoprimeError):
        b(4, 2)


def test_degenerate_values():
    assert b(1, 5) == b(1, 1) and b(1, 1).is_unknot
    assert b(0, 1).is_degenerate and b(0, -1) == b(0, 1)
    assert b(-7, 3) == b(7, -3)
    with pytest.raises(TangleError):
        CompositeKnot((b(1, 1), b(3, 1)))
    with pytest.raises(TangleError):
        CompositeKnot((b(3, 1),))


@pytest.mark.parametrize("mode", MODES, ids=["chiral", "agnostic"])
def test_equivalence_axioms(mode):
    pairs = _pairs(30)
    links = [b(p, q) for p, q in pairs]
    for k in links:
        c = k.canonical(mode)
        assert c.canonical(mode) == c
        assert equivalent(k, k, mode)
    by_p: dict = {}
    for k in links:
        by_p.setdefault(k.p, []).append(k)
    for group in by_p.values():
        for x, y in product(group, group):
            assert equivalent(x, y, mode) == equivalent(y, x, mode)
            if equivalent(x, y, mode):
                for z in group:
                    assert equivalent(y, z, mode) == equivalent(x, z, mode)


def test_classification_rule_matches_orbits():
    for p in range(2, 31):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            inv = pow(q, -1, p)
            for q2 in range(1, p):
                if gcd(p, q2) != 1:
                    continue
                chiral = q2 in {q, inv}
                agnostic = q2 in {q, inv, p - q, p - inv}
                assert equivalent(b(p, q), b(p, q2), CHIRAL) == chiral
                assert equivalent(b(p, q), b(p, q2), MIRROR_AGNOSTIC) == agnostic


def test_equivalent_examples():
    assert equivalent(b(3, 1), b(3, -1), MIRROR_AGNOSTIC)
    assert not equivalent(b(3, 1), b(3, -1), CHIRAL)
    for mode in MODES:
        assert not equivalent(b(7, 3), b(7, 1), mode)


def test_closure_rational_examples():
    assert equivalent(closure_rational(T(3, 2)), b(3, 1), MIRROR_AGNOSTIC)
    assert closure_rational(T(1)) == b(1, 1)
    assert equivalent(closure_rational(T(7, 2)), b(7, 3), MIRROR_AGNOSTIC)
    assert closure_rational(T(0)) == b(0, 1)
    assert closure_rational(T(INF)).is_unknot


def test_hin_chain_chirality_sensitive():
    assert [closure_rational(T(x, 2), CHIRAL) for x in (3, 7, 11)] == [b(3, 1), b(7, 3), b(11, 5)]


def test_closure_sum_examples():
    assert equivalent(closure_sum(T(-1, 2), T(2)), b(3, 1), MIRROR_AGNOSTIC)
    assert closure_sum(T(5, 3), T(0)) == closure_rational(T(5, 3))
    k = closure_sum(T(1, -4), T(3))
    assert equivalent(k, b(11, 3), MIRROR_AGNOSTIC) and equivalent(k, b(11, 4), MIRROR_AGNOSTIC)


def test_closure_sum_agrees_with_rational_closure():
    for u in range(-8, 9):
        for v in range(0, 9):
            if gcd(u, v) != 1:
                continue
            for m in range(-6, 7):
                t = T(u, v)
                for mode in MODES:
                    assert closure_sum(t, T(m), mode) == closure_rational(add(t, T(m)), mode)


def test_closure_sum_is_symmetric():
    fr = [(1, 2), (-1, 3), (2, 5), (3, 1), (-4, 7), (1, 0), (0, 1)]
    for x, y in product(fr, fr):
        if x == y == (1, 0):
            continue
        assert closure_sum(T(*x), T(*y), CHIRAL) == closure_sum(T(*y), T(*x), CHIRAL)


def test_closure_sum_rejects_double_infinity():
    with pytest.raises(TangleError):
        closure_sum(T(INF), T(INF))


def test_infinity_closure_examples():
    k = infinity_closure_montesinos(MontesinosTangle((T(1, 3), T(1, 3), T(INF))))
    assert k.equivalent(CompositeKnot((b(3, 1), b(3, 1))), MIRROR_AGNOSTIC)
    hopf = infinity_closure_montesinos(MontesinosTangle((T(1, 2), T(1, 2), T(INF))))
    assert hopf.equivalent(CompositeKnot((b(2, 1), b(2, 1))), MIRROR_AGNOSTIC)
    k = closure(add(MontesinosTangle((T(2, 5), T(1, 3))), T(INF)))
    assert k.equivalent(CompositeKnot((b(5, 2), b(3, 1))), MIRROR_AGNOSTIC)


def test_closure_dispatch():
    assert closure(add(T(1, 3), T(2, 5))) == closure_sum(T(1, 3), T(2, 5))
    with pytest.raises(TangleError):
        closure(MontesinosTangle((T(1, 3), T(2, 5), T(1, 2))))


def test_determinant_examples():
    assert determinant(b(3, 1)) == 3
    assert determinant(b(1, 1)) == 1
    assert determinant(CompositeKnot((b(3, 1), b(3, 1)))) == 9


def test_determinant_of_rational_closure_is_numerator():
    for p in range(-20, 21):
        for q in range(1, 15):
            if gcd(p, q) == 1:
                assert determinant(closure_rational(T(p, q))) == abs(p)


def test_crossing_numbers():
    table = {(3, 1): 3, (5, 2): 4, (7, 3): 5, (11, 3): 6, (11, 5): 7, (7, 1): 7, (9, 2): 6, (1, 1): 0}
    for (p, q), c in table.items():
        assert crossing_number(b(p, q)) == c
    assert crossing_number(CompositeKnot((b(3, 1), b(5, 2)))) == 7


def test_crossing_number_is_mirror_invariant():
    for p, q in _pairs(40):
        if p > 1:
            assert crossing_number(b(p, q)) == crossing_number(b(p, -q))


def test_names():
    assert knot_name(b(3, 1)) == "left-handed trefoil (3_1)"
    assert knot_name(b(3, 2)) == "right-handed trefoil (3_1)"
    assert knot_name(b(7, 3)) == "5_2"
    assert knot_name(b(11, 4)) == "6_2"
    assert knot_name(b(11, 5)).startswith("7_2")
    assert knot_name(b(9, 2)) == "Stevedore (6_1)"
    assert knot_name(b(1, 1)) == "unknot"
    assert knot_name(b(101, 3)) is None


def test_signed_class():
    assert signed_class(b(3, 2), "left") == b(3, 1)
    assert signed_class(b(3, 1), "right") == b(3, 2)
    with pytest.raises(TangleError):
        signed_class(b(7, 3), "left")
