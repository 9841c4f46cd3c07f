"""Load processive or distributive equation systems from text.

One statement per line; ``#`` after whitespace starts a comment::

    P = T(0)
    N(O+P) = b(1,1)
    N(O+R) = b(3,1)
    N(O+R+R) = b(7,3)
    N(O+3R) = 7-crossing

A system mentioning ``O`` is processive (round index = number of ``R``
summands); one mentioning ``Q`` is distributive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exceptions import NotationError
from .fourplat import CompositeKnot, TwoBridgeLink
from .notation import Closure, Equation, Scaled, Sum, Var, evaluate_knot, evaluate_tangle, is_tangle_expr, parse
from .tangles import RationalTangle, T


@dataclass
class ProcessiveInput:
    products: list


@dataclass
class DistributiveInput:
    K1: TwoBridgeLink
    product: CompositeKnot
    P: RationalTangle
    R: RationalTangle


def _strip_comment(line: str) -> str:
    """Drop a comment: a ``#`` at line start or after whitespace.

    A ``#`` glued to a knot (``b(3,1)#b(3,1)``) is a connected sum.
    """
    for i, ch in enumerate(line):
        if ch == "#" and (i == 0 or line[i - 1].isspace()):
            return line[:i]
    return line


def _terms(body) -> list:
    terms = body.terms if isinstance(body, Sum) else (body,)
    out = []
    for t in terms:
        if isinstance(t, Scaled):
            out += [t.term] * t.count
        else:
            out.append(t)
    return out


def load_system(text: str):
    """Parse an equation document into a solver input.

    Raises:
        NotationError: on syntax errors (with line number) or an
            inconsistent system.
    """
    env: dict[str, RationalTangle] = {}
    equations: list[tuple[int, list, object]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        try:
            node = parse(line)
        except NotationError as exc:
            raise NotationError(f"line {lineno}: {exc}") from None
        if not isinstance(node, Equation):
            raise NotationError(f"line {lineno}: expected an equation, got {line!r}")
        if isinstance(node.lhs, Var) and is_tangle_expr(node.rhs):
            env[node.lhs.name] = evaluate_tangle(node.rhs, env)
        elif isinstance(node.lhs, Closure):
            equations.append((lineno, _terms(node.lhs.body), evaluate_knot(node.rhs)))
        else:
            raise NotationError(f"line {lineno}: left side must be N(...) or a tangle variable")

    names = {t.name for _, terms, _ in equations for t in terms if isinstance(t, Var)}
    if "O" in names:
        return _processive(equations, env)
    if "Q" in names:
        return _distributive(equations, env)
    raise NotationError("no equation mentions O (processive) or Q (distributive)")


def _processive(equations, env) -> ProcessiveInput:
    P = env.get("P", T(0))
    if P != T(0):
        raise NotationError(f"processive systems are solved with P = T(0), got P = {P}")
    by_round = {}
    for lineno, terms, knot in equations:
        if not terms or terms[0] != Var("O"):
            raise NotationError(f"line {lineno}: processive equations start with O")
        rest = terms[1:]
        if any(t not in (Var("R"), Var("P")) for t in rest) or (Var("P") in rest and len(rest) > 1):
            raise NotationError(f"line {lineno}: expected N(O), N(O+P) or N(O+kR)")
        i = sum(1 for t in rest if t == Var("R"))
        if i in by_round:
            raise NotationError(f"line {lineno}: round {i} given twice")
        by_round[i] = knot
    rounds = sorted(by_round)
    if rounds != list(range(len(rounds))):
        raise NotationError(f"rounds must be 0, 1, 2, ... without gaps, got {rounds}")
    return ProcessiveInput([by_round[i] for i in rounds])


def _distributive(equations, env) -> DistributiveInput:
    if len(equations) != 2:
        raise NotationError(f"a distributive system has two equations, got {len(equations)}")
    parsed = []
    for lineno, terms, knot in equations:
        if len(terms) != 2 or terms[0] != Var("Q"):
            raise NotationError(f"line {lineno}: expected N(Q+X)")
        other = terms[1]
        X = evaluate_tangle(other, env)
        if not isinstance(X, RationalTangle):
            raise NotationError(f"line {lineno}: {X} must be rational")
        parsed.append((X, knot))
    composite = [i for i, (_, k) in enumerate(parsed) if isinstance(k, CompositeKnot)]
    if len(composite) != 1:
        raise NotationError("exactly one equation must have a connected-sum product")
    R, product = parsed[composite[0]]
    P, K1 = parsed[1 - composite[0]]
    if not isinstance(K1, TwoBridgeLink):
        raise NotationError("K1 must be a 2-bridge knot")
    return DistributiveInput(K1, product, P, R)
