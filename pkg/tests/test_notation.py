import pytest
from hypothesis import given
from hypothesis import strategies as st

from tanglecalc.exceptions import NotationError
from tanglecalc.fourplat import CompositeKnot, b
from tanglecalc.notation import (
    Closure,
    ConnectedSum,
    CrossingLit,
    Equation,
    KnotName,
    MontesinosLit,
    Scaled,
    Sum,
    TangleLit,
    TwoBridgeLit,
    Var,
    WordLit,
    evaluate_knot,
    evaluate_tangle,
    parse,
    parse_knot_list,
    print_ast,
)
from tanglecalc.rational import INF, normalize
from tanglecalc.tangles import T, TwistWord, add
from tanglecalc.utils.validation import CrossingConstraint

small = st.integers(-40, 40)
fractions = st.one_of(
    st.just(INF),
    st.tuples(small, st.integers(1, 40)).map(lambda pq: normalize(*pq)),
)
literals = st.one_of(
    fractions.map(TangleLit),
    st.lists(fractions, min_size=2, max_size=4).map(lambda fs: MontesinosLit(tuple(fs))),
    st.sampled_from(["O", "P", "Q", "R", "Rx"]).map(Var),
)


def _extend(children):
    scaled = st.tuples(st.integers(1, 9), children.filter(lambda c: not isinstance(c, Scaled))).map(
        lambda t: Scaled(*t)
    )
    sums = st.lists(st.one_of(children, scaled), min_size=2, max_size=4).map(lambda ts: Sum(tuple(ts)))
    return st.one_of(sums, scaled)


tangle_exprs = st.recursive(literals, _extend, max_leaves=8)
knot_atoms = st.one_of(
    st.tuples(st.integers(1, 60), st.integers(-60, 60)).filter(lambda pq: __import__("math").gcd(*pq) == 1).map(
        lambda pq: TwoBridgeLit(*pq)
    ),
    st.sampled_from(["unknot", "trefoil", "5_2", "4_1", "figure-eight"]).map(KnotName),
    st.integers(0, 20).map(CrossingLit),
)
knot_exprs = st.one_of(knot_atoms, st.lists(knot_atoms, min_size=2, max_size=3).map(lambda fs: ConnectedSum(tuple(fs))))
moves = st.one_of(
    st.just(("r", None)),
    st.tuples(st.sampled_from("hv"), st.integers(-9, 9)),
)
words = st.lists(moves, min_size=1, max_size=6).map(lambda ms: WordLit(TwistWord(tuple(ms))))


@given(tangle_exprs)
def test_tangle_round_trip(node):
    assert parse(print_ast(node)) == node


@given(knot_exprs)
def test_knot_round_trip(node):
    assert parse(print_ast(node)) == node


@given(tangle_exprs, knot_exprs)
def test_equation_round_trip(lhs, rhs):
    node = Equation(Closure(lhs), rhs)
    assert parse(print_ast(node)) == node


@given(words)
def test_word_round_trip(node):
    assert parse(print_ast(node)) == node


@pytest.mark.parametrize(
    "text",
    ["N(T(1/2)+2R)", "b(3,1)#b(3,2)", "M(1/3, -2/3)", "h^2 r v^-1", "N(O+R+R)=b(7,3)", "7-crossing", "T(inf)"],
)
def test_canonical_examples_are_fixed_points(text):
    assert print_ast(parse(text)) == text


def test_whitespace_is_ignored():
    assert parse(" N ( O + 3 R ) = b( 11 , 5 ) ") == parse("N(O+3R)=b(11,5)")


def test_evaluation():
    env = {"O": T(-1, 2), "R": T(2)}
    assert evaluate_tangle(parse("O+3R"), env) == T(11, 2)
    assert evaluate_tangle(parse("M(1/3,1/3)")) == add(T(1, 3), T(1, 3))
    assert evaluate_tangle(parse("h^1 r h^2 r")) == T(3, 2)
    assert evaluate_knot(parse("b(3,1)#b(3,1)")) == CompositeKnot((b(3, 1), b(3, 1)))
    assert evaluate_knot(parse("b(1,1)#b(7,3)")) == b(7, 3)
    assert evaluate_knot(parse("7-crossing")) == CrossingConstraint(7)
    assert evaluate_knot(parse("5_2")) == b(7, 3)
    assert parse_knot_list("b(1,1),b(3,1),b(7,3),7-crossing") == [
        TwoBridgeLit(1, 1), TwoBridgeLit(3, 1), TwoBridgeLit(7, 3), CrossingLit(7)
    ]


@pytest.mark.parametrize(
    "text, position",
    [("T(1/2", 5), ("N(T(1/2)+)", 9), ("b(6,4)", 0), ("T(1/0)+", 7), ("M(1/2)", 5)],
)
def test_error_positions(text, position):
    with pytest.raises(NotationError) as info:
        parse(text)
    assert info.value.position == position
    assert "^" in str(info.value)


def test_semantic_errors():
    with pytest.raises(NotationError):
        evaluate_tangle(parse("O+R"), {})
    with pytest.raises(NotationError):
        parse("")
