"""Rational and Montesinos tangle values.

A rational tangle is identified with its extended-rational fraction.  The
twist homeomorphisms act on fractions as

* ``h^k``: ``f -> f + k`` (``k`` horizontal half-twists on the east side),
* ``v^k``: ``f -> f / (k f + 1)`` (``k`` vertical half-twists on the south side),
* ``r``:   ``f -> 1 / f`` (reflection in the NW-SE diagonal),

and a word is applied to ``T(inf)`` rightmost move first, so the Conway word
``h^a1 r ... h^an r`` lands on ``T(cf_evaluate([a1, ..., an]))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .exceptions import NotIntegralError, TangleError, UndefinedValueError
from .rational import INF, ExtendedRational, as_extended, cf_expand

__all__ = [
    "RationalTangle",
    "MontesinosTangle",
    "TwistWord",
    "T",
    "word_to_tangle",
    "tangle_to_word",
    "add",
    "repeated_add",
    "mirror",
    "distance",
]


@dataclass(frozen=True)
class RationalTangle:
    fraction: ExtendedRational

    def __post_init__(self):
        object.__setattr__(self, "fraction", as_extended(self.fraction))

    @property
    def is_integral(self) -> bool:
        return self.fraction.is_integer

    @property
    def is_infinity(self) -> bool:
        return self.fraction.is_infinite

    def arcs(self) -> tuple[tuple[str, str], tuple[str, str]]:
        """Which boundary points each of the two strings joins.

        Determined by the parities of the reduced fraction ``p/q``: ``p``
        even joins NW to NE, ``q`` even joins NW to SW, otherwise NW to SE.
        """
        p, q = self.fraction.num, self.fraction.den
        if p % 2 == 0:
            return ("NW", "NE"), ("SW", "SE")
        if q % 2 == 0:
            return ("NW", "SW"), ("NE", "SE")
        return ("NW", "SE"), ("NE", "SW")

    def __add__(self, other):
        return add(self, other)

    def __neg__(self):
        return mirror(self)

    def __str__(self) -> str:
        return f"T({self.fraction})"

    def __repr__(self) -> str:
        return f"RationalTangle({self.fraction})"


def T(value, den: int | None = None) -> RationalTangle:
    """Shorthand constructor: ``T(3, 2)``, ``T((3, 2))``, ``T(2)``, ``T(INF)``."""
    if den is not None:
        value = (value, den)
    return RationalTangle(as_extended(value))


@dataclass(frozen=True)
class MontesinosTangle:
    """Ordered sum ``T(r1) + ... + T(rn)`` with ``n >= 2`` and no integral summand.

    A ``T(inf)`` summand is allowed and kept symbolically; it is what turns
    a numerator closure into a connected sum.
    """

    summands: tuple[RationalTangle, ...]

    def __post_init__(self):
        summands = tuple(s if isinstance(s, RationalTangle) else T(s) for s in self.summands)
        if len(summands) < 2:
            raise TangleError("a Montesinos tangle needs at least two summands")
        for s in summands:
            if s.is_integral:
                raise TangleError(f"integral summand {s} must be absorbed into a neighbour")
        object.__setattr__(self, "summands", summands)

    @property
    def fractions(self) -> tuple[ExtendedRational, ...]:
        return tuple(s.fraction for s in self.summands)

    def __add__(self, other):
        return add(self, other)

    def __str__(self) -> str:
        return "M(" + ", ".join(str(s.fraction) for s in self.summands) + ")"


Tangle = Union[RationalTangle, MontesinosTangle]

_MOVES = ("h", "v", "r")


@dataclass(frozen=True)
class TwistWord:
    """Sequence of ``(move, count)`` pairs; ``count`` is ``None`` for ``r``."""

    moves: tuple[tuple[str, int | None], ...] = ()

    def __post_init__(self):
        cleaned = []
        for item in self.moves:
            move, count = (item, None) if isinstance(item, str) else item
            if move not in _MOVES:
                raise TangleError(f"unknown twist move {move!r}")
            if move == "r":
                if count not in (None, 1):
                    raise TangleError("the reflection r takes no exponent")
                count = None
            elif count is None:
                count = 1
            cleaned.append((move, None if count is None else int(count)))
        object.__setattr__(self, "moves", tuple(cleaned))

    @classmethod
    def conway(cls, coeffs: Iterable[int]) -> TwistWord:
        """The word ``h^a1 r h^a2 r ... h^an r``."""
        moves = []
        for a in coeffs:
            moves += [("h", int(a)), ("r", None)]
        return cls(tuple(moves))

    def crossing_count(self) -> int:
        return sum(abs(c) for m, c in self.moves if m != "r")

    def __len__(self) -> int:
        return len(self.moves)

    def __str__(self) -> str:
        parts = []
        for move, count in self.moves:
            parts.append(move if move == "r" else f"{move}^{count}")
        return " ".join(parts)


def _apply_move(move: str, count: int | None, f: ExtendedRational) -> ExtendedRational:
    if move == "r":
        return f.reciprocal()
    if move == "h":
        return f + count
    # v^k is h^k conjugated by r
    return (f.reciprocal() + count).reciprocal()


def word_to_tangle(word: TwistWord) -> RationalTangle:
    """Apply ``word`` to ``T(inf)``, rightmost move first."""
    f = INF
    for move, count in reversed(word.moves):
        f = _apply_move(move, count, f)
    return RationalTangle(f)


def tangle_to_word(tangle: RationalTangle) -> TwistWord:
    """Conway word ``h^a1 r ... h^an r`` whose image of ``T(inf)`` is ``tangle``."""
    return TwistWord.conway(cf_expand(tangle.fraction))


def add(t1: Tangle, t2: Tangle) -> Tangle:
    """Tangle sum ``t1 + t2``.

    Integral summands are folded into their left neighbour, so
    ``T(u/t) + T(m) = T((u + t m)/t)``; two non-integral rational tangles
    give the Montesinos tangle of the pair.
    """
    if isinstance(t2, MontesinosTangle):
        result = t1
        for s in t2.summands:
            result = add(result, s)
        return result
    if not isinstance(t2, RationalTangle):
        raise TypeError(f"cannot add {type(t2).__name__}")

    if isinstance(t1, MontesinosTangle):
        if t2.is_integral:
            *head, last = t1.summands
            return MontesinosTangle((*head, RationalTangle(_absorb(last.fraction, t2.fraction))))
        return MontesinosTangle(t1.summands + (t2,))
    if not isinstance(t1, RationalTangle):
        raise TypeError(f"cannot add {type(t1).__name__}")

    if t1.is_infinity and t2.is_infinity:
        raise UndefinedValueError("T(inf) + T(inf) is not a tangle")
    if t1.is_integral or t2.is_integral:
        return RationalTangle(_absorb(t1.fraction, t2.fraction))
    return MontesinosTangle((t1, t2))


def _absorb(f: ExtendedRational, g: ExtendedRational) -> ExtendedRational:
    if f.is_infinite or g.is_infinite:
        return INF
    return f + g


def repeated_add(t: Tangle, r: RationalTangle, m: int) -> Tangle:
    """``t + r + ... + r`` with ``m`` copies of the integral tangle ``r``."""
    if not isinstance(r, RationalTangle) or not r.is_integral:
        raise NotIntegralError(f"{r} is not integral; the repeated sum would leave the rational class")
    if m < 1:
        raise ValueError(f"repetition count must be positive, got {m}")
    return add(t, RationalTangle(ExtendedRational(m * r.fraction.num, 1)))


def mirror(t: Tangle) -> Tangle:
    """Mirror image: ``T(p/q) -> T(-p/q)``, summand-wise for Montesinos tangles."""
    if isinstance(t, MontesinosTangle):
        return MontesinosTangle(tuple(mirror(s) for s in t.summands))
    return RationalTangle(-t.fraction)


def distance(P: RationalTangle, R: RationalTangle) -> int:
    """``|p s - r q|`` for ``P = T(p/q)`` and ``R = T(r/s)`` in reduced form."""
    for x in (P, R):
        if not isinstance(x, RationalTangle):
            raise TypeError("distance is defined between rational tangles only")
    p, q = P.fraction.num, P.fraction.den
    r, s = R.fraction.num, R.fraction.den
    return abs(p * s - r * q)


def as_tangle(value) -> Tangle:
    if isinstance(value, (RationalTangle, MontesinosTangle)):
        return value
    return T(value)

