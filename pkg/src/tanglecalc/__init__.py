"""Rational tangle calculus, 2-bridge links and tangle-equation solvers."""

from .exceptions import (
    DiagramCapError,
    DisconnectedDiagramError,
    NotationError,
    NotCoprimeError,
    NotIntegralError,
    TangleError,
    UndefinedValueError,
)
from .fourplat import (
    CHIRAL,
    MIRROR_AGNOSTIC,
    CompositeKnot,
    EquivalenceMode,
    TwoBridgeLink,
    b,
    closure,
    closure_rational,
    closure_sum,
    crossing_number,
    determinant,
    equivalent,
    infinity_closure_montesinos,
    knot_name,
    schubert_normalize,
)
from .rational import INF, ZERO, ExtendedRational, cf_evaluate, cf_expand, mod_inverse, normalize
from .solvers import (
    DistributiveTangleSolver,
    Observation,
    ProcessiveTangleSolver,
    chirality_filter,
    montesinos_distance_one_family,
    predict_product,
    solve_distributive,
    solve_processive,
)
from .tangles import (
    MontesinosTangle,
    RationalTangle,
    T,
    TwistWord,
    add,
    distance,
    mirror,
    repeated_add,
    tangle_to_word,
    word_to_tangle,
)
from .utils.validation import CrossingConstraint

__version__ = "0.1.0"

__all__ = [
    "CHIRAL",
    "INF",
    "MIRROR_AGNOSTIC",
    "ZERO",
    "CompositeKnot",
    "CrossingConstraint",
    "DiagramCapError",
    "DisconnectedDiagramError",
    "DistributiveTangleSolver",
    "EquivalenceMode",
    "ExtendedRational",
    "MontesinosTangle",
    "NotCoprimeError",
    "NotIntegralError",
    "NotationError",
    "Observation",
    "ProcessiveTangleSolver",
    "RationalTangle",
    "T",
    "TangleError",
    "TwistWord",
    "TwoBridgeLink",
    "UndefinedValueError",
    "add",
    "b",
    "cf_evaluate",
    "cf_expand",
    "chirality_filter",
    "closure",
    "closure_rational",
    "closure_sum",
    "crossing_number",
    "determinant",
    "distance",
    "equivalent",
    "infinity_closure_montesinos",
    "knot_name",
    "mirror",
    "mod_inverse",
    "montesinos_distance_one_family",
    "normalize",
    "predict_product",
    "repeated_add",
    "schubert_normalize",
    "solve_distributive",
    "solve_processive",
    "tangle_to_word",
    "word_to_tangle",
]
