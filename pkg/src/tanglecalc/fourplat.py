"""2-bridge links ``b(p, q)``, numerator closures and connected sums.

Schubert's classification: ``b(p, q)`` and ``b(p, q')`` are the same
unoriented link iff ``q' = q^{+-1} (mod p)``; the mirror image of ``b(p, q)``
is ``b(p, -q)``.

Closure convention.  Twists follow the convention in which the numerator
closure of ``T(p/q)`` is ``b(p, -q)``.  Under it the processive Hin chain
``N(T(-1/2) + k T(2))`` reads ``b(3, 1), b(7, 3), b(11, 5)`` exactly and the
left-handed trefoil is ``b(3, 1)``.  Mirror-agnostic comparisons are
unaffected by the choice.  The diagram oracle checks the convention
crossing-for-crossing against independently built 4-plat diagrams.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Union

from .exceptions import NotCoprimeError, TangleError
from .rational import _euclid, normalize
from .tangles import MontesinosTangle, RationalTangle, T, Tangle

__all__ = [
    "EquivalenceMode",
    "CHIRAL",
    "MIRROR_AGNOSTIC",
    "TwoBridgeLink",
    "CompositeKnot",
    "b",
    "schubert_normalize",
    "equivalent",
    "closure_rational",
    "closure_sum",
    "closure",
    "infinity_closure_montesinos",
    "determinant",
    "crossing_number",
    "knot_name",
]


@dataclass(frozen=True)
class EquivalenceMode:
    mirror_agnostic: bool = True

    @property
    def label(self) -> str:
        return "mirror-agnostic" if self.mirror_agnostic else "chirality-sensitive"

    def __str__(self) -> str:
        return self.label


CHIRAL = EquivalenceMode(mirror_agnostic=False)
MIRROR_AGNOSTIC = EquivalenceMode(mirror_agnostic=True)


def _canonical_q(p: int, q: int, mirror_agnostic: bool) -> int:
    if p <= 1:
        return 1
    q %= p
    orbit = {q, pow(q, -1, p)}
    if mirror_agnostic:
        orbit |= {p - x for x in orbit}
    return min(orbit)


def _check_pair(p: int, q: int) -> tuple[int, int]:
    p, q = int(p), int(q)
    if p < 0:
        p, q = -p, -q
    if gcd(p, q) != 1:
        raise NotCoprimeError(f"b({p},{q}) needs coprime parameters")
    return p, q


@dataclass(frozen=True)
class TwoBridgeLink:
    """The 4-plat ``b(p, q)``; stored with ``q`` chirality-sensitively canonical.

    ``p = 1`` is the unknot (stored ``b(1,1)``), ``p = 0`` the 2-component
    unlink (stored ``b(0,1)``, degenerate), odd ``p`` a knot and even ``p``
    a 2-component link.
    """

    p: int
    q: int

    def __post_init__(self):
        p, q = _check_pair(self.p, self.q)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", _canonical_q(p, q, False))

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def is_degenerate(self) -> bool:
        return self.p == 0

    @property
    def is_knot(self) -> bool:
        return self.p % 2 == 1

    @property
    def components(self) -> int:
        return 1 if self.is_knot else 2

    def mirror(self) -> TwoBridgeLink:
        return TwoBridgeLink(self.p, -self.q)

    def canonical(self, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> TwoBridgeLink:
        return schubert_normalize(self.p, self.q, mode)

    def __str__(self) -> str:
        return f"b({self.p},{self.q})"


def b(p: int, q: int) -> TwoBridgeLink:
    return TwoBridgeLink(p, q)


def schubert_normalize(p: int, q: int, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> TwoBridgeLink:
    """Canonical representative of the class of ``b(p, q)`` under ``mode``.

    The representative has the smallest ``q`` in ``(0, p)`` over the orbit
    ``{q, q^-1}`` (chirality-sensitive) or ``{+-q, +-q^-1}`` (mirror-agnostic).

    Raises:
        NotCoprimeError: if ``gcd(p, q) != 1``.
    """
    p, q = _check_pair(p, q)
    return TwoBridgeLink(p, _canonical_q(p, q, mode.mirror_agnostic))


def equivalent(a: TwoBridgeLink, other: TwoBridgeLink, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> bool:
    return a.canonical(mode) == other.canonical(mode)


@dataclass(frozen=True)
class CompositeKnot:
    """Connected sum of at least two nontrivial 2-bridge factors.

    Factors are kept sorted, so ``==`` is multiset equality of the
    chirality-sensitive classes; use :meth:`equivalent` for other modes.
    """

    factors: tuple[TwoBridgeLink, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if len(factors) < 2:
            raise TangleError("a connected sum needs at least two factors")
        for f in factors:
            if not isinstance(f, TwoBridgeLink):
                raise TypeError(f"factor {f!r} is not a TwoBridgeLink")
            if f.p < 2:
                raise TangleError(f"{f} is trivial or degenerate and cannot be a factor")
        object.__setattr__(self, "factors", tuple(sorted(factors, key=lambda f: (f.p, f.q))))

    def canonical(self, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> CompositeKnot:
        return CompositeKnot(tuple(f.canonical(mode) for f in self.factors))

    def equivalent(self, other: CompositeKnot, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> bool:
        if not isinstance(other, CompositeKnot):
            return False
        return Counter(self.canonical(mode).factors) == Counter(other.canonical(mode).factors)

    def mirror(self) -> CompositeKnot:
        return CompositeKnot(tuple(f.mirror() for f in self.factors))

    def __str__(self) -> str:
        return "#".join(str(f) for f in self.factors)


Knot = Union[TwoBridgeLink, CompositeKnot]


def same_knot(a: Knot, other: Knot, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> bool:
    """Equivalence for either kind of value; prime never equals composite."""
    if isinstance(a, TwoBridgeLink) and isinstance(other, TwoBridgeLink):
        return equivalent(a, other, mode)
    if isinstance(a, CompositeKnot) and isinstance(other, CompositeKnot):
        return a.equivalent(other, mode)
    return False


# -- closures ---------------------------------------------------------------

def _bezout(x: int, y: int) -> tuple[int, int]:
    """``(s, t)`` with ``s x + t y = 1`` for coprime ``x, y``."""
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r != 1:
        raise NotCoprimeError(f"{x} and {y} are not coprime")
    return old_s, old_t


def _link(p: int, q: int, mode: EquivalenceMode) -> TwoBridgeLink:
    if p == 0:
        return TwoBridgeLink(0, 1)
    return schubert_normalize(p, q, mode)


def closure_rational(t: RationalTangle, mode: EquivalenceMode = CHIRAL) -> TwoBridgeLink:
    """``N(T(p/q)) = b(p, -q)``; ``N(T(inf))`` is the unknot, ``N(T(0))`` the unlink."""
    f = t.fraction
    return _link(f.num, -f.den, mode)


def closure_sum(t1: RationalTangle, t2: RationalTangle, mode: EquivalenceMode = CHIRAL) -> TwoBridgeLink:
    """2-bridge link ``N(T(a/b) + T(c/d))``.

    The first Schubert parameter is ``|a d + b c|``.  For the second pick
    ``c', d'`` with ``c' d - c d' = 1``; the sum closes like the rational
    tangle ``(a d + b c)/(a d' + b c')``.
    """
    a, b_ = t1.fraction.num, t1.fraction.den
    c, d = t2.fraction.num, t2.fraction.den
    if b_ == 0 and d == 0:
        raise TangleError("N(T(inf) + T(inf)) is not defined")
    # c' d + d'' c = 1 with d' = -d''
    c_prime, d_neg = _bezout(d, c)
    d_prime = -d_neg
    p = a * d + b_ * c
    q = a * d_prime + b_ * c_prime
    return _link(p, -q, mode)


def infinity_closure_montesinos(m: MontesinosTangle, mode: EquivalenceMode = CHIRAL) -> CompositeKnot:
    """``N(T(x1) + T(x2) + T(inf))`` as the connected sum of two 2-bridge links.

    Adding ``T(inf)`` turns the numerator closure into the denominator
    closure, which splits summand by summand; the factor of ``T(x)`` is
    ``N(T(-1/x))``, i.e. ``b(q_i, .)`` for ``x = p_i/q_i``.
    """
    finite = [s for s in m.summands if not s.is_infinity]
    if len(finite) != 2:
        raise TangleError("infinity closure is implemented for two finite summands")
    factors = tuple(closure_rational(RationalTangle(-(s.fraction.reciprocal())), mode) for s in finite)
    return CompositeKnot(factors)


def closure(t: Tangle, mode: EquivalenceMode = CHIRAL) -> Knot:
    """Numerator closure of a rational tangle or a supported Montesinos tangle."""
    if isinstance(t, RationalTangle):
        return closure_rational(t, mode)
    summands = list(t.summands)
    inf_positions = [i for i, s in enumerate(summands) if s.is_infinity]
    if len(inf_positions) > 1:
        raise TangleError("more than one T(inf) summand")
    if inf_positions:
        i = inf_positions[0]
        # N(A + B) = N(B + A): rotate the T(inf) summand to the end
        summands = summands[i + 1:] + summands[:i + 1]
        finite = summands[:-1]
        if len(finite) == 1:
            return closure_sum(finite[0], summands[-1], mode)
        return infinity_closure_montesinos(MontesinosTangle(tuple(summands)), mode)
    if len(summands) == 2:
        return closure_sum(summands[0], summands[1], mode)
    raise TangleError(f"N({t}) is a Montesinos link with {len(summands)} rational summands, not a 4-plat")


# -- invariants -------------------------------------------------------------

def determinant(k: Knot) -> int:
    """``p`` for ``b(p, q)``; multiplicative over connected sums."""
    if isinstance(k, CompositeKnot):
        return prod(f.p for f in k.factors)
    return k.p


def crossing_number(k: Knot) -> int:
    """Minimal crossing number, read off the all-positive continued fraction.

    For ``b(p, q)`` with ``0 < q < p`` the Euclidean expansion of ``p/q``
    describes a reduced alternating diagram, so the sum of its coefficients
    is the crossing number.  Additive over connected sums.
    """
    if isinstance(k, CompositeKnot):
        return sum(crossing_number(f) for f in k.factors)
    if k.p <= 1:
        return 0
    return sum(_euclid(k.p, k.q % k.p))


# Keys are mirror-agnostic canonical pairs.
_NAMES = {
    (0, 1): "2-component unlink",
    (1, 1): "unknot",
    (2, 1): "Hopf link",
    (3, 1): "trefoil (3_1)",
    (5, 2): "figure-eight (4_1)",
    (5, 1): "5_1",
    (7, 2): "5_2",
    (9, 2): "Stevedore (6_1)",
    (11, 3): "6_2",
    (13, 5): "6_3",
    (7, 1): "7_1",
    (11, 2): "7_2 (7-crossing 2-bridge)",
    (13, 3): "7_3",
    (15, 4): "7_4",
    (17, 5): "7_5",
    (19, 7): "7_6",
    (21, 8): "7_7",
}

# Handedness of chiral classes, chirality-sensitive canonical pairs.  The
# trefoil entry is a convention (see module docstring), not a theorem.
HANDEDNESS = {
    (3, 1): "left",
    (3, 2): "right",
}


def knot_name(k: Knot) -> str | None:
    """Conventional name of small classes, e.g. ``'5_2'`` for ``b(7,3)``."""
    if isinstance(k, CompositeKnot):
        names = [knot_name(f) or str(f) for f in k.factors]
        return " # ".join(names)
    c = k.canonical(MIRROR_AGNOSTIC)
    name = _NAMES.get((c.p, c.q))
    hand = HANDEDNESS.get((k.p, k.q))
    if name and hand:
        return f"{hand}-handed {name}"
    return name


def signed_class(knot: TwoBridgeLink, handedness: str) -> TwoBridgeLink:
    """Chirality-sensitive class of ``knot`` carrying the given handedness.

    Raises:
        TangleError: if no handedness convention is recorded for the class.
    """
    for (p, q), hand in HANDEDNESS.items():
        candidate = TwoBridgeLink(p, q)
        if hand == handedness and equivalent(candidate, knot, MIRROR_AGNOSTIC):
            return candidate
    raise TangleError(f"no {handedness!r} handedness convention recorded for {knot}")


def composite(factors: Iterable[TwoBridgeLink]) -> CompositeKnot:
    return CompositeKnot(tuple(factors))


def fraction_of(link: TwoBridgeLink):
    """A rational tangle whose numerator closure is ``link`` (chirality-sensitive)."""
    if link.p == 0:
        return T(0)
    return RationalTangle(normalize(link.p, -link.q))
