"""Sparse Laurent polynomials with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

Exponent = Union[int, Fraction]


def _clean_exponent(e) -> Exponent:
    if isinstance(e, Fraction):
        return int(e) if e.denominator == 1 else e
    return int(e)


class LaurentPolynomial:
    """``sum c_e x^e`` stored as ``{e: c}`` without zero coefficients.

    Exponents are integers, except that a Jones polynomial of a link with an
    even number of components lives in ``Z[t^(1/2), t^(-1/2)]``; those
    half-integers are kept as :class:`fractions.Fraction`.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, var: str = "A"):
        cleaned = {}
        for e, c in (terms or {}).items():
            c = int(c)
            if c:
                e = _clean_exponent(e)
                cleaned[e] = cleaned.get(e, 0) + c
        self.terms = {e: c for e, c in cleaned.items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: Exponent, coeff: int = 1, var: str = "A") -> LaurentPolynomial:
        return cls({exponent: coeff}, var)

    def __add__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms, self.var)

    def __neg__(self) -> LaurentPolynomial:
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        return self + (-other)

    def __mul__(self, other) -> LaurentPolynomial:
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()}, self.var)
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                terms[e1 + e2] = terms.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(terms, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPolynomial:
        result = LaurentPolynomial({0: 1}, self.var)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def mirror(self) -> LaurentPolynomial:
        """Substitute ``x -> 1/x``."""
        return LaurentPolynomial({-e: c for e, c in self.terms.items()}, self.var)

    def substitute_power(self, factor: Exponent, var: str) -> LaurentPolynomial:
        """Rewrite in ``y`` where ``x = y^factor``."""
        return LaurentPolynomial({Fraction(e) * factor: c for e, c in self.terms.items()}, var)

    @property
    def support(self) -> set:
        return set(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self):
        return min(self.terms)

    def evaluate(self, x):
        return sum(c * x ** e for e, c in self.terms.items())

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = self.var if e == 1 else f"{self.var}^{e}" if not isinstance(e, Fraction) \
                    else f"{self.var}^({e})"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out
