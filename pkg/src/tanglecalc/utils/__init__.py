"""Input validation shared by the solvers and the CLI."""

from .validation import (
    check_bound,
    check_composite,
    check_integral,
    check_positive_int,
    check_products,
    check_rational,
)

__all__ = [
    "check_bound",
    "check_composite",
    "check_integral",
    "check_positive_int",
    "check_products",
    "check_rational",
]
