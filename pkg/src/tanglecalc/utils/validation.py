"""Argument checks in the spirit of scikit-learn's ``check_*`` helpers.

Each helper returns the validated (possibly coerced) value or raises.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Integral

from ..exceptions import NotIntegralError, TangleError
from ..fourplat import CompositeKnot, TwoBridgeLink
from ..tangles import RationalTangle, as_tangle


@dataclass(frozen=True)
class CrossingConstraint:
    """A product known only by its crossing number, e.g. ``7-crossing``."""

    crossings: int

    def __post_init__(self):
        if self.crossings < 0:
            raise ValueError(f"crossing number must be non-negative, got {self.crossings}")

    def __str__(self) -> str:
        return f"{self.crossings}-crossing"


def check_positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return int(value)


def check_bound(value, name: str) -> int:
    """Search bounds are non-negative integers."""
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise TypeError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return int(value)


def check_rational(value, name: str) -> RationalTangle:
    t = as_tangle(value)
    if not isinstance(t, RationalTangle):
        raise TangleError(f"{name} must be a rational tangle, got {t}")
    return t


def check_integral(value, name: str) -> RationalTangle:
    t = check_rational(value, name)
    if not t.is_integral:
        raise NotIntegralError(f"{name} must be integral, got {t}")
    return t


def check_products(products, min_length: int = 3) -> list:
    """Validate a processive product list.

    Entries are :class:`TwoBridgeLink` values, except that the last may be a
    :class:`CrossingConstraint`.  The first must be the unknot.
    """
    if products is None:
        raise ValueError("product list is empty")
    products = list(products)
    if not products:
        raise ValueError("product list is empty")
    if len(products) < min_length:
        raise ValueError(f"need at least {min_length} products (K0, K1, K2, ...), got {len(products)}")
    for i, k in enumerate(products):
        if isinstance(k, CrossingConstraint):
            if i != len(products) - 1:
                raise ValueError("only the last product may be a crossing-number constraint")
        elif not isinstance(k, TwoBridgeLink):
            raise TypeError(f"product {i} must be a 2-bridge link, got {type(k).__name__}")
    k0 = products[0]
    if not (isinstance(k0, TwoBridgeLink) and k0.is_unknot):
        raise ValueError(f"K0 must be the unknot b(1,1), got {k0}")
    return products


def check_composite(product) -> CompositeKnot:
    if not isinstance(product, CompositeKnot):
        raise TypeError(f"product must be a connected sum, got {type(product).__name__}")
    if len(product.factors) != 2:
        raise ValueError(f"product must have exactly two factors, got {len(product.factors)}")
    return product
