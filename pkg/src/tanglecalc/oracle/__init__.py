"""Diagrammatic cross-checks that do not share code with the fraction engine."""

from .bracket import jones, kauffman_bracket, same_link, same_up_to_mirror
from .diagram import (
    PlanarDiagram,
    denominator_closure,
    diagram_from_twist_word,
    fourplat_diagram,
    from_pd,
    from_text,
    numerator_closure,
    tangle_from_word,
)
from .goeritz import goeritz_determinant, link_determinant
from .polynomial import LaurentPolynomial

__all__ = [
    "LaurentPolynomial",
    "PlanarDiagram",
    "denominator_closure",
    "diagram_from_twist_word",
    "fourplat_diagram",
    "from_pd",
    "from_text",
    "goeritz_determinant",
    "jones",
    "kauffman_bracket",
    "link_determinant",
    "numerator_closure",
    "same_link",
    "same_up_to_mirror",
    "tangle_from_word",
]
