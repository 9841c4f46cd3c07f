"""Text notation for tangles, knots, twist words and equations.

Grammar (whitespace is insignificant except inside twist words)::

    statement := word | expr ['=' expr]
    expr      := closure | knot | sum
    closure   := 'N' '(' sum ')'
    sum       := term ('+' term)*
    term      := [INT] primary
    primary   := 'T' '(' frac ')' | 'M' '(' frac (',' frac)+ ')' | VAR | '(' sum ')'
    frac      := 'inf' | ['-'] INT ['/' ['-'] INT]
    knot      := atom ('#' atom)*
    atom      := 'b' '(' ['-'] INT ',' ['-'] INT ')' | NAME | INT '-crossing'
    word      := (('h' | 'v') ['^' ['-'] INT] | 'r')+

``print_ast`` emits the canonical text, and ``parse(print_ast(x)) == x``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd
from typing import Union

from .exceptions import NotationError
from .fourplat import CompositeKnot, TwoBridgeLink
from .rational import ExtendedRational, normalize
from .tangles import MontesinosTangle, RationalTangle, TwistWord, add, word_to_tangle
from .utils.validation import CrossingConstraint

__all__ = [
    "TangleLit",
    "MontesinosLit",
    "Var",
    "Scaled",
    "Sum",
    "Closure",
    "TwoBridgeLit",
    "KnotName",
    "CrossingLit",
    "ConnectedSum",
    "WordLit",
    "Equation",
    "parse",
    "print_ast",
    "parse_knot_list",
    "evaluate_tangle",
    "evaluate_knot",
    "KNOT_NAMES",
]

# Names accepted in knot expressions, as chirality-sensitive Schubert pairs.
KNOT_NAMES = {
    "unknot": (1, 1),
    "unlink": (0, 1),
    "hopf": (2, 1),
    "trefoil": (3, 1),
    "figure-eight": (5, 2),
    "3_1": (3, 1),
    "4_1": (5, 2),
    "5_1": (5, 1),
    "5_2": (7, 3),
    "6_1": (9, 2),
    "6_2": (11, 3),
    "6_3": (13, 5),
    "7_1": (7, 1),
    "7_2": (11, 5),
}


# -- AST --------------------------------------------------------------------

@dataclass(frozen=True)
class TangleLit:
    fraction: ExtendedRational


@dataclass(frozen=True)
class MontesinosLit:
    fractions: tuple[ExtendedRational, ...]


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Scaled:
    count: int
    term: object


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Closure:
    body: object


@dataclass(frozen=True)
class TwoBridgeLit:
    p: int
    q: int


@dataclass(frozen=True)
class KnotName:
    name: str


@dataclass(frozen=True)
class CrossingLit:
    crossings: int


@dataclass(frozen=True)
class ConnectedSum:
    factors: tuple


@dataclass(frozen=True)
class WordLit:
    word: TwistWord


@dataclass(frozen=True)
class Equation:
    lhs: object
    rhs: object


Node = Union[TangleLit, MontesinosLit, Var, Scaled, Sum, Closure, TwoBridgeLit, KnotName,
             CrossingLit, ConnectedSum, WordLit, Equation]

_KNOT_ATOMS = (TwoBridgeLit, KnotName, CrossingLit)


# -- printer ----------------------------------------------------------------

def print_ast(node) -> str:
    """Canonical text of ``node``."""
    if isinstance(node, TangleLit):
        return f"T({node.fraction})"
    if isinstance(node, MontesinosLit):
        return "M(" + ", ".join(str(f) for f in node.fractions) + ")"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Scaled):
        return f"{node.count}{_print_primary(node.term)}"
    if isinstance(node, Sum):
        return "+".join(_print_term(t) for t in node.terms)
    if isinstance(node, Closure):
        return f"N({print_ast(node.body)})"
    if isinstance(node, TwoBridgeLit):
        return f"b({node.p},{node.q})"
    if isinstance(node, KnotName):
        return node.name
    if isinstance(node, CrossingLit):
        return f"{node.crossings}-crossing"
    if isinstance(node, ConnectedSum):
        return "#".join(print_ast(f) for f in node.factors)
    if isinstance(node, WordLit):
        return str(node.word)
    if isinstance(node, Equation):
        return f"{print_ast(node.lhs)}={print_ast(node.rhs)}"
    raise TypeError(f"cannot print {type(node).__name__}")


def _print_primary(node) -> str:
    text = print_ast(node)
    return f"({text})" if isinstance(node, Sum) else text


def _print_term(node) -> str:
    return _print_primary(node) if not isinstance(node, Scaled) else print_ast(node)


# -- lexer ------------------------------------------------------------------

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<crossing>\d+-crossing\b)
  | (?P<knotname>\d+_\d+)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z][A-Za-z0-9_]*(?:-[A-Za-z]+)*)
  | (?P<op>[()/,+#=\-])
    """,
    re.VERBOSE,
)

_WORD = re.compile(r"\s*(?:(?:[hv](?:\s*\^\s*-?\d+)?|r)\s*)+")
_WORD_ITEM = re.compile(r"([hv])(?:\s*\^\s*(-?\d+))?|r")


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    pos: int


def _lex(text: str) -> list[_Tok]:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise NotationError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append(_Tok(kind, m.group(), pos))
        pos = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


# -- parser -----------------------------------------------------------------

class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _lex(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> _Tok:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message: str, tok: _Tok | None = None) -> NotationError:
        tok = tok or self.tok
        return NotationError(message, self.text, tok.pos)

    def take(self, text: str | None = None, kind: str | None = None) -> _Tok:
        tok = self.tok
        if (text is not None and tok.text != text) or (kind is not None and tok.kind != kind):
            want = repr(text) if text is not None else kind
            got = repr(tok.text) if tok.text else "end of input"
            raise self.error(f"expected {want}, got {got}")
        self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.text == text

    # statements
    def statement(self):
        lhs = self.expr()
        if self.at("="):
            self.take("=")
            rhs = self.expr()
            node = Equation(lhs, rhs)
        else:
            node = lhs
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")
        return node

    def expr(self):
        tok = self.tok
        if tok.text == "N" and self.peek().text == "(":
            self.take("N")
            self.take("(")
            body = self.sum()
            self.take(")")
            return Closure(body)
        if self._knot_start():
            return self.knot()
        return self.sum()

    def _knot_start(self) -> bool:
        tok = self.tok
        if tok.kind in ("crossing", "knotname"):
            return True
        if tok.kind == "name":
            if tok.text == "b" and self.peek().text == "(":
                return True
            return tok.text.lower() in KNOT_NAMES
        return False

    # tangles
    def sum(self):
        terms = [self.term()]
        while self.at("+"):
            self.take("+")
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        if self.tok.kind == "int":
            count_tok = self.take(kind="int")
            count = int(count_tok.text)
            if count < 1:
                raise self.error("repetition count must be positive", count_tok)
            return Scaled(count, self.primary())
        return self.primary()

    def primary(self):
        tok = self.tok
        if tok.text == "(":
            self.take("(")
            inner = self.sum()
            self.take(")")
            return inner
        if tok.kind != "name":
            raise self.error(f"expected a tangle, got {tok.text!r}" if tok.text else "expected a tangle, got end of input")
        if tok.text == "T" and self.peek().text == "(":
            self.take("T")
            self.take("(")
            f = self.frac()
            self.take(")")
            return TangleLit(f)
        if tok.text == "M" and self.peek().text == "(":
            self.take("M")
            self.take("(")
            fracs = [self.frac()]
            while self.at(","):
                self.take(",")
                fracs.append(self.frac())
            close = self.take(")")
            if len(fracs) < 2:
                raise self.error("M(...) needs at least two fractions", close)
            return MontesinosLit(tuple(fracs))
        if re.fullmatch(r"[A-Z][A-Za-z0-9_]*", tok.text) and tok.text not in ("T", "M", "N"):
            self.take()
            return Var(tok.text)
        raise self.error(f"unknown tangle {tok.text!r}")

    def signed_int(self) -> int:
        sign = 1
        if self.at("-"):
            self.take("-")
            sign = -1
        return sign * int(self.take(kind="int").text)

    def frac(self) -> ExtendedRational:
        start = self.tok
        if start.text == "inf":
            self.take()
            return normalize(1, 0)
        num = self.signed_int()
        den = 1
        if self.at("/"):
            self.take("/")
            den = self.signed_int()
        if num == 0 and den == 0:
            raise self.error("0/0 is undefined", start)
        return normalize(num, den)

    # knots
    def knot(self):
        atoms = [self.atom()]
        while self.at("#"):
            self.take("#")
            atoms.append(self.atom())
        return atoms[0] if len(atoms) == 1 else ConnectedSum(tuple(atoms))

    def atom(self):
        tok = self.tok
        if tok.kind == "crossing":
            self.take()
            return CrossingLit(int(tok.text.split("-")[0]))
        if tok.kind == "knotname" or (tok.kind == "name" and tok.text.lower() in KNOT_NAMES):
            self.take()
            return KnotName(tok.text.lower())
        if tok.text == "b":
            self.take("b")
            self.take("(")
            p = self.signed_int()
            self.take(",")
            q = self.signed_int()
            self.take(")")
            if gcd(p, q) != 1:
                raise self.error(f"b({p},{q}) needs coprime parameters", tok)
            return TwoBridgeLit(p, q)
        raise self.error(f"expected a knot, got {tok.text!r}" if tok.text else "expected a knot, got end of input")


def _parse_word(text: str) -> WordLit:
    moves = []
    for m in _WORD_ITEM.finditer(text):
        if m.group(0) == "r":
            moves.append(("r", None))
        else:
            moves.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
    return WordLit(TwistWord(tuple(moves)))


def parse(text: str):
    """Parse one statement.

    Raises:
        NotationError: on syntax errors (with column) or semantic errors
            such as a non-coprime Schubert pair.
    """
    if not text.strip():
        raise NotationError("empty input", text, 0)
    if _WORD.fullmatch(text):
        return _parse_word(text)
    return _Parser(text).statement()


def parse_knot_list(text: str) -> list:
    """Comma-separated knot expressions, e.g. ``b(1,1),b(3,1),7-crossing``."""
    parser = _Parser(text)
    items = [parser.knot()]
    while parser.at(","):
        parser.take(",")
        items.append(parser.knot())
    if parser.tok.kind != "end":
        raise parser.error(f"unexpected {parser.tok.text!r}")
    return items


# -- evaluation -------------------------------------------------------------

def evaluate_tangle(node, env: dict | None = None):
    """Tangle value of a tangle expression; ``env`` binds variables."""
    env = env or {}
    if isinstance(node, TangleLit):
        return RationalTangle(node.fraction)
    if isinstance(node, MontesinosLit):
        result = RationalTangle(node.fractions[0])
        for f in node.fractions[1:]:
            result = add(result, RationalTangle(f))
        return result
    if isinstance(node, WordLit):
        return word_to_tangle(node.word)
    if isinstance(node, Var):
        if node.name not in env:
            raise NotationError(f"unbound tangle variable {node.name!r}")
        return env[node.name]
    if isinstance(node, Scaled):
        value = evaluate_tangle(node.term, env)
        result = value
        for _ in range(node.count - 1):
            result = add(result, value)
        return result
    if isinstance(node, Sum):
        result = evaluate_tangle(node.terms[0], env)
        for t in node.terms[1:]:
            result = add(result, evaluate_tangle(t, env))
        return result
    raise NotationError(f"{print_ast(node)} is not a tangle expression")


def evaluate_knot(node):
    """Knot value: :class:`TwoBridgeLink`, :class:`CompositeKnot` or :class:`CrossingConstraint`."""
    if isinstance(node, TwoBridgeLit):
        return TwoBridgeLink(node.p, node.q)
    if isinstance(node, KnotName):
        return TwoBridgeLink(*KNOT_NAMES[node.name])
    if isinstance(node, CrossingLit):
        return CrossingConstraint(node.crossings)
    if isinstance(node, ConnectedSum):
        factors = [evaluate_knot(f) for f in node.factors]
        if any(not isinstance(f, TwoBridgeLink) for f in factors):
            raise NotationError("connected-sum factors must be 2-bridge knots")
        nontrivial = [f for f in factors if not f.is_unknot]
        if len(nontrivial) == 1:
            return nontrivial[0]
        return CompositeKnot(tuple(nontrivial))
    raise NotationError(f"{print_ast(node)} is not a knot expression")


def is_tangle_expr(node) -> bool:
    return isinstance(node, (TangleLit, MontesinosLit, Var, Scaled, Sum, WordLit))


def is_knot_expr(node) -> bool:
    return isinstance(node, (*_KNOT_ATOMS, ConnectedSum))


def montesinos_lit(t: MontesinosTangle) -> MontesinosLit:
    return MontesinosLit(t.fractions)
