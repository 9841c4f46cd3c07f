"""Kauffman bracket and Jones polynomial by a vectorized state sum."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..exceptions import DiagramCapError
from .diagram import DEFAULT_CAP, PlanarDiagram
from .polynomial import LaurentPolynomial

__all__ = ["kauffman_bracket", "jones", "same_link", "same_up_to_mirror"]

_LOOP = LaurentPolynomial({2: -1, -2: -1})


def kauffman_bracket(diagram: PlanarDiagram, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """``<D>`` in ``Z[A, 1/A]``, normalised so the round unknot is 1.

    All ``2^n`` states are resolved at once.  Each row of an integer label
    array tracks which edges are merged; a smoothing joins two labels by
    relabelling both to the smaller one.
    """
    n = diagram.n_crossings
    if n > cap:
        raise DiagramCapError(f"{n} crossings exceeds the state-sum cap of {cap}")
    if n == 0:
        return _LOOP ** max(diagram.free_loops - 1, 0)

    labels = sorted({v for x in diagram.crossings for v in x})
    index = {v: i for i, v in enumerate(labels)}
    n_edges = len(labels)
    n_states = 1 << n
    states = np.arange(n_states, dtype=np.int64)
    comp = np.tile(np.arange(n_edges, dtype=np.int16), (n_states, 1))
    rows = np.arange(n_states)

    def join(u: np.ndarray, v: np.ndarray) -> None:
        lu = comp[rows, u]
        lv = comp[rows, v]
        lo = np.minimum(lu, lv)[:, None]
        hit = (comp == lu[:, None]) | (comp == lv[:, None])
        np.copyto(comp, np.broadcast_to(lo, comp.shape), where=hit)

    b_count = np.zeros(n_states, dtype=np.int64)
    for i, (a, b, c, d) in enumerate(diagram.crossings):
        is_b = ((states >> i) & 1).astype(bool)
        b_count += is_b
        ia, ib, ic, id_ = index[a], index[b], index[c], index[d]
        # A-smoothing joins (a,b),(c,d); B-smoothing joins (a,d),(b,c)
        join(np.full(n_states, ia), np.where(is_b, id_, ib))
        join(np.full(n_states, ic), np.where(is_b, ib, id_))

    loops = (comp == np.arange(n_edges, dtype=np.int16)).sum(axis=1) + diagram.free_loops
    a_exp = n - 2 * b_count
    pairs, counts = np.unique(np.stack([a_exp, loops], axis=1), axis=0, return_counts=True)
    total = LaurentPolynomial()
    powers: dict[int, LaurentPolynomial] = {}
    for (e, k), cnt in zip(pairs.tolist(), counts.tolist()):
        if k - 1 not in powers:
            powers[k - 1] = _LOOP ** (k - 1)
        total = total + LaurentPolynomial.monomial(e, cnt) * powers[k - 1]
    return total


def jones(diagram: PlanarDiagram, cap: int = DEFAULT_CAP) -> LaurentPolynomial:
    """Jones polynomial in ``t`` via ``(-A^3)^(-w) <D>`` and ``t = A^-4``."""
    w = diagram.writhe
    f = kauffman_bracket(diagram, cap) * LaurentPolynomial.monomial(-3 * w, (-1) ** (w % 2))
    return f.substitute_power(Fraction(-1, 4), "t")


def _normal_form(bracket: LaurentPolynomial) -> LaurentPolynomial:
    """Representative of ``<D>`` modulo units ``+-A^k``.

    Shifting the lowest exponent to zero and fixing the lowest coefficient's
    sign removes framing and, for links, the orientation ambiguity of Jones.
    Comparison is only meaningful between diagrams whose brackets differ by
    a unit ``+-A^(3k)``, which the exponent residue below keeps honest.
    """
    if bracket.is_zero():
        return bracket
    lo = bracket.min_exponent()
    shifted = LaurentPolynomial({e - lo: c for e, c in bracket.terms.items()}, "A")
    if shifted.terms[0] < 0:
        shifted = -shifted
    return shifted


def same_link(d1: PlanarDiagram, d2: PlanarDiagram, cap: int = DEFAULT_CAP) -> bool:
    """Whether the diagrams agree on Jones, up to orientation of components.

    For knots this is equality of Jones polynomials.  For links the bracket
    is compared up to a unit ``+-A^k``, which absorbs both the writhe
    normalisation and component reversal.
    """
    if d1.components != d2.components:
        return False
    if d1.components <= 1:
        return jones(d1, cap) == jones(d2, cap)
    return _normal_form(kauffman_bracket(d1, cap)) == _normal_form(kauffman_bracket(d2, cap))


def same_up_to_mirror(d1: PlanarDiagram, d2: PlanarDiagram, cap: int = DEFAULT_CAP) -> bool:
    return same_link(d1, d2, cap) or same_link(d1, d2.mirror(), cap)
