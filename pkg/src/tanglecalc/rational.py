"""Exact arithmetic on the extended rationals Q u {inf} and continued fractions.

Rational tangles are classified by extended rationals, and a tangle built by
the twist word ``h^a1 r h^a2 r ... h^an r`` has the fraction
``a1 + 1/(a2 + ... + 1/an)``.  This module supplies both directions of that
correspondence plus the handful of modular helpers the 2-bridge code needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .exceptions import NotCoprimeError, UndefinedValueError

__all__ = [
    "ExtendedRational",
    "INF",
    "ZERO",
    "normalize",
    "cf_evaluate",
    "cf_expand",
    "mod_inverse",
]


@dataclass(frozen=True, order=False)
class ExtendedRational:
    """Reduced fraction ``num/den`` with ``den >= 0``; ``1/0`` is infinity.

    Instances are always canonical, so ``==`` and ``hash`` are value
    equality.  Use :func:`normalize` to build one from an arbitrary pair.
    """

    num: int
    den: int

    def __post_init__(self):
        num, den = self.num, self.den
        if not isinstance(num, int) or not isinstance(den, int):
            raise TypeError("numerator and denominator must be int")
        if den < 0:
            raise ValueError(f"non-canonical denominator {den}; use normalize()")
        if den == 0:
            if num != 1:
                raise ValueError("infinity must be stored as 1/0; use normalize()")
        elif gcd(num, den) != 1:
            raise ValueError(f"{num}/{den} is not reduced; use normalize()")

    # -- predicates -----------------------------------------------------
    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    # -- arithmetic -----------------------------------------------------
    def __neg__(self) -> ExtendedRational:
        if self.is_infinite:
            return self
        return ExtendedRational(-self.num, self.den)

    def __add__(self, other) -> ExtendedRational:
        other = as_extended(other)
        if self.is_infinite and other.is_infinite:
            raise UndefinedValueError("inf + inf is undefined")
        if self.is_infinite or other.is_infinite:
            return INF
        return normalize(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> ExtendedRational:
        return self + (-as_extended(other))

    def __rsub__(self, other) -> ExtendedRational:
        return as_extended(other) + (-self)

    def __mul__(self, other) -> ExtendedRational:
        other = as_extended(other)
        if (self.is_infinite and other.num == 0) or (other.is_infinite and self.num == 0):
            raise UndefinedValueError("0 * inf is undefined")
        return normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self) -> ExtendedRational:
        """``1/x`` with ``1/0 = inf`` and ``1/inf = 0``."""
        if self.num == 0:
            return INF
        return normalize(self.den, self.num)

    def __truediv__(self, other) -> ExtendedRational:
        return self * as_extended(other).reciprocal()

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def __repr__(self) -> str:
        return f"ExtendedRational({self})"


def normalize(num: int, den: int) -> ExtendedRational:
    """Reduce ``num/den`` to its canonical representative.

    Any ``k/0`` with ``k != 0`` collapses to infinity; ``0/0`` is rejected.

    >>> normalize(6, 4)
    ExtendedRational(3/2)
    >>> normalize(-2, -4)
    ExtendedRational(1/2)
    >>> normalize(5, 0)
    ExtendedRational(inf)
    """
    num, den = int(num), int(den)
    if num == 0 and den == 0:
        raise UndefinedValueError("0/0 is undefined")
    if den == 0:
        return ExtendedRational(1, 0)
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    return ExtendedRational(num // g, den // g)


def as_extended(value) -> ExtendedRational:
    """Coerce ints, ``(num, den)`` pairs and fractions to :class:`ExtendedRational`."""
    if isinstance(value, ExtendedRational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a fraction")
    if isinstance(value, int):
        return ExtendedRational(value, 1)
    if isinstance(value, tuple) and len(value) == 2:
        return normalize(*value)
    numerator = getattr(value, "numerator", None)
    denominator = getattr(value, "denominator", None)
    if isinstance(numerator, int) and isinstance(denominator, int):
        return normalize(numerator, denominator)
    raise TypeError(f"cannot interpret {value!r} as an extended rational")


INF = ExtendedRational(1, 0)
ZERO = ExtendedRational(0, 1)


def cf_evaluate(coeffs: Iterable[int]) -> ExtendedRational:
    """Value of ``a1 + 1/(a2 + ... + 1/an)``; the empty list is infinity.

    Intermediate zeros are handled by the extended arithmetic, so e.g.
    ``[1, 0, 2]`` evaluates to ``1 + 1/(0 + 1/2) = 3``.
    """
    value = INF
    for a in reversed(list(coeffs)):
        value = ExtendedRational(int(a), 1) + value.reciprocal()
    return value


def cf_expand(x) -> list[int]:
    """Continued-fraction coefficients of ``x`` (inverse of :func:`cf_evaluate`).

    Non-negative values use the plain Euclidean algorithm, so every
    coefficient after the first is positive and the last one is at least 2
    unless the value is an integer.  Negative values are the negated
    expansion of ``-x``; all coefficients then share one sign, which keeps
    the associated twist diagrams alternating.
    """
    x = as_extended(x)
    if x.is_infinite:
        return []
    if x.num < 0:
        return [-a for a in _euclid(-x.num, x.den)]
    return _euclid(x.num, x.den)


def _euclid(p: int, q: int) -> list[int]:
    coeffs = []
    while q:
        a, rem = divmod(p, q)
        coeffs.append(a)
        p, q = q, rem
    return coeffs


def mod_inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p`` as the representative in ``(0, p)``.

    Raises:
        NotCoprimeError: if ``gcd(a, p) != 1``.
        ValueError: if ``p < 2`` (no residue lies strictly between 0 and p).
    """
    if p < 2:
        raise ValueError(f"modulus must be at least 2, got {p}")
    if gcd(a, p) != 1:
        raise NotCoprimeError(f"{a} has no inverse modulo {p}")
    return pow(a, -1, p)

