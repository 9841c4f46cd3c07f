"""Solvers for processive and distributive recombination tangle equations.

Processive systems ``N(O + i R) = K_i`` (``i = 0, 1, 2, ...``) are solved by
bounded enumeration over rational ``O = T(u/v)`` and integral ``R = T(r)``
with ``P = T(0)`` fixed.  Distributive systems ``N(Q + P) = K1``,
``N(Q + R) = K2 # K3`` are split into rational, prime and locally knotted
buckets, each carrying the verdict rule that filled or emptied it.

The surgery-theoretic facts behind the verdict rules are not proved here.
They are recorded by name in the provenance of every result.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .exceptions import NotCoprimeError, TangleError
from .fourplat import (
    MIRROR_AGNOSTIC,
    CompositeKnot,
    EquivalenceMode,
    TwoBridgeLink,
    closure_rational,
    closure_sum,
    crossing_number,
    equivalent,
    knot_name,
    same_knot,
    signed_class,
)
from .rational import normalize
from .tangles import MontesinosTangle, RationalTangle, T, distance, repeated_add
from .utils.validation import (
    CrossingConstraint,
    check_bound,
    check_composite,
    check_integral,
    check_positive_int,
    check_products,
    check_rational,
)

__all__ = [
    "Provenance",
    "ProcessiveSolution",
    "CandidateVerdict",
    "Observation",
    "LocallyKnottedSolution",
    "SolutionSet",
    "CrossingConstraint",
    "predict_product",
    "evaluate_candidate",
    "linear_prefilter",
    "solve_processive",
    "chirality_filter",
    "montesinos_distance_one_family",
    "iter_montesinos_family",
    "MontesinosFamily",
    "family_members_with_p",
    "solve_distributive",
    "ProcessiveTangleSolver",
    "DistributiveTangleSolver",
]


@dataclass(frozen=True)
class Provenance:
    rule: str
    citation: str

    def as_dict(self) -> dict:
        return {"rule": self.rule, "citation": self.citation}


# Verdict rules.  Citations name the mathematical fact, not a source text.
RULE_P_CONVENTION = Provenance(
    "P = T(0) convention",
    "the parental tangle is not determined by the equations; it is fixed to T(0)",
)
RULE_O_RATIONAL = Provenance(
    "O rational",
    "N(O) and N(O + R) are 2-bridge with R rational, which forces O rational",
)
RULE_R_INTEGRAL = Provenance(
    "R integral",
    "three processive rounds whose products include a 4-plat of crossing number >= 7 force R integral",
)
RULE_LINEAR_FILTER = Provenance(
    "linear pre-filter",
    "N(T(u/v) + i T(r)) = b(|u + i r v|, .), so |u + i k| = p_i with k = r v",
)
RULE_CROSSING = Provenance(
    "crossing-number constraint",
    "crossing number of b(p, q) is the sum of the Euclidean continued-fraction coefficients of p/q",
)
RULE_RATIONAL_BUCKET = Provenance(
    "rational exclusion",
    "the sum of two rational tangles closes to a 4-plat, which is prime, so N(Q + R) cannot be composite",
)
RULE_DISTANCE = Provenance(
    "distance>1 prime exclusion",
    "a prime tangle Q with N(Q + R) composite and N(Q + P) a 4-plat requires d(P, R) <= 1",
)
RULE_DISTANCE_ZERO = Provenance(
    "distance zero",
    "P = R makes both closures equal, but K1 is prime and the product is composite",
)
RULE_DISTANCE_ONE = Provenance(
    "Montesinos distance-one family",
    "for Q = T(s/r) + T(u/t) in the frame P = T(0), R = T(inf): p = st + ru + rtm and q = sk + ry with k(u + tm) - yt = 1",
)
RULE_FACTOR_MATCH = Provenance(
    "locally knotted factor match",
    "a local knot survives both closures, so K1 must equal one factor of the product",
)
RULE_CORE_RATIONAL = Provenance(
    "core rational",
    "the reduced core closes to the unknot and to a 4-plat; a non-rational core would contradict the Cyclic Surgery Theorem",
)
FLAG_NON_MONTESINOS = "non-Montesinos prime tangles unresolved"
WARN_TREFOIL = "b(3,1) = left-handed trefoil is a convention"


# -- processive -------------------------------------------------------------

@dataclass(frozen=True)
class ProcessiveSolution:
    O: RationalTangle
    R: RationalTangle
    P_convention: RationalTangle = field(default_factory=lambda: T(0))

    def mirror(self) -> ProcessiveSolution:
        return ProcessiveSolution(-self.O, -self.R, self.P_convention)

    def products(self, rounds: int, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> list[TwoBridgeLink]:
        """``N(O + i R)`` for ``i = 0 .. rounds``."""
        return [_round_product(self.O, self.R, i, mode) for i in range(rounds + 1)]

    def sort_key(self) -> tuple:
        u, v = self.O.fraction.num, self.O.fraction.den
        r = self.R.fraction.num
        return (abs(u), abs(v), abs(r), u < 0, r < 0)

    def __str__(self) -> str:
        return f"O={self.O}, R={self.R}"


def _round_product(O: RationalTangle, R: RationalTangle, i: int, mode: EquivalenceMode) -> TwoBridgeLink:
    t = O if i == 0 else repeated_add(O, R, i)
    return closure_rational(t, mode)


def predict_product(O, R, rounds: int, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> TwoBridgeLink:
    """``N(O + rounds * R)`` for rational ``O`` and integral ``R``.

    Raises:
        NotIntegralError: if ``R`` is not integral.
    """
    O = check_rational(O, "O")
    R = check_integral(R, "R")
    rounds = check_positive_int(rounds, "rounds")
    return _round_product(O, R, rounds, mode)


@dataclass(frozen=True)
class CandidateVerdict:
    O: RationalTangle
    R: RationalTangle
    accepted: bool
    failed_round: int | None = None
    product: TwoBridgeLink | None = None
    expected: object = None
    reason: str = ""


def _describe(k: TwoBridgeLink) -> str:
    name = knot_name(k)
    label = f"{k} ({name})" if name else str(k)
    return f"{label}, {crossing_number(k)} crossings"


def _matches(k: TwoBridgeLink, expected, mode: EquivalenceMode) -> bool:
    if isinstance(expected, CrossingConstraint):
        return crossing_number(k) == expected.crossings
    return same_knot(k, expected, mode)


def evaluate_candidate(O, R, products: Sequence, mode: EquivalenceMode = MIRROR_AGNOSTIC) -> CandidateVerdict:
    """Replay ``N(O + i R)`` against every product; report the first mismatch."""
    O = check_rational(O, "O")
    R = check_integral(R, "R")
    for i, expected in enumerate(products):
        k = _round_product(O, R, i, mode)
        if not _matches(k, expected, mode):
            return CandidateVerdict(
                O, R, False, i, k, expected,
                f"round {i}: N(O+{i}R) = {_describe(k)}, expected {expected}",
            )
    return CandidateVerdict(O, R, True, reason="all rounds match")


def linear_prefilter(products: Sequence, max_u: int) -> list[tuple[int, int]]:
    """Pairs ``(u, k)`` with ``|u + i k| = p_i`` for every known product with ``i >= 1``.

    ``K0`` is left out so the pairs can be compared with the raw linear
    system; the unknot condition ``|u| = 1`` is applied afterwards.
    """
    known = [(i, k.p) for i, k in enumerate(products) if i >= 1 and isinstance(k, TwoBridgeLink)]
    if not known:
        raise ValueError("the pre-filter needs at least one known product after K0")
    i1, p1 = known[0]
    pairs = set()
    for u in range(-max_u, max_u + 1):
        for target in {p1, -p1}:
            num = target - u
            if num % i1:
                continue
            k = num // i1
            if all(abs(u + i * k) == p for i, p in known):
                pairs.add((u, k))
    return sorted(pairs, key=lambda uk: (abs(uk[0]), abs(uk[1]), uk[0] < 0))


def _splits(u: int, k: int, max_v: int, max_r: int) -> Iterator[tuple[int, int]]:
    """``(v, r)`` with ``r v = k``, ``1 <= v <= max_v``, ``gcd(u, v) = 1``."""
    if k == 0:
        for v in range(1, max_v + 1):
            if gcd(u, v) == 1:
                yield v, 0
        if abs(u) == 1:
            yield 0, 0
        return
    for v in range(1, min(abs(k), max_v) + 1):
        if k % v == 0 and abs(k // v) <= max_r and gcd(u, v) == 1:
            yield v, k // v


def _candidates_prefiltered(products, max_u, max_v, max_r):
    pairs = linear_prefilter(products, max_u)
    seen = set()
    for u, k in pairs:
        if abs(u) != 1:  # N(O) = b(1,1) with O = T(u/v)
            continue
        for v, r in _splits(u, k, max_v, max_r):
            key = (normalize(u, v), r)
            if key not in seen:
                seen.add(key)
                yield RationalTangle(key[0]), T(r)


def _candidates_full(max_u, max_v, max_r):
    seen = set()
    for u in range(-max_u, max_u + 1):
        for v in range(0, max_v + 1):
            if gcd(u, v) != 1:
                continue
            f = normalize(u, v)
            if f in seen:
                continue
            seen.add(f)
            for r in range(-max_r, max_r + 1):
                yield RationalTangle(f), T(r)


@dataclass
class ProcessiveResult:
    solutions: list[ProcessiveSolution]
    prefilter: list[tuple[int, int]]
    rejected: list[CandidateVerdict]
    provenance: list[Provenance]
    warnings: list[str]


def solve_processive(
    products: Sequence,
    mode: EquivalenceMode = MIRROR_AGNOSTIC,
    max_u: int = 64,
    max_v: int = 64,
    max_r: int = 32,
    prefilter: bool = True,
) -> ProcessiveResult:
    """All ``(O, R)`` within bounds with ``N(O + i R) = K_i`` for every ``i``.

    Args:
        products: ``[K0, K1, ..., Km]``; ``K0`` must be the unknot and the
            last entry may be a :class:`CrossingConstraint`.
        mode: equivalence used to compare products.
        max_u, max_v, max_r: search bounds on ``|u|``, ``|v|`` and ``|r|``.
        prefilter: use the linear pre-filter.  With ``False`` every grid
            point is replayed, which is slow but assumption-free.

    Returns:
        A :class:`ProcessiveResult`; solutions sorted by
        ``(|u|, |v|, |r|, signs)``.
    """
    products = check_products(products)
    max_u, max_v, max_r = (check_bound(x, n) for x, n in ((max_u, "max_u"), (max_v, "max_v"), (max_r, "max_r")))

    provenance = [RULE_P_CONVENTION, RULE_O_RATIONAL]
    big = any(
        (isinstance(k, CrossingConstraint) and k.crossings >= 7)
        or (isinstance(k, TwoBridgeLink) and crossing_number(k) >= 7)
        for k in products
    )
    warnings = []
    if big and len(products) >= 4:
        provenance.append(RULE_R_INTEGRAL)
    else:
        warnings.append("R restricted to integral tangles by the search; the integrality rule does not apply")
    if any(isinstance(k, CrossingConstraint) for k in products):
        provenance.append(RULE_CROSSING)

    pairs: list[tuple[int, int]] = []
    if prefilter:
        pairs = linear_prefilter(products, max_u)
        provenance.append(RULE_LINEAR_FILTER)
        candidates = _candidates_prefiltered(products, max_u, max_v, max_r)
    else:
        candidates = _candidates_full(max_u, max_v, max_r)

    solutions, rejected = [], []
    for O, R in candidates:
        verdict = evaluate_candidate(O, R, products, mode)
        if verdict.accepted:
            solutions.append(ProcessiveSolution(O, R))
        elif prefilter:
            rejected.append(verdict)
    solutions.sort(key=ProcessiveSolution.sort_key)
    return ProcessiveResult(solutions, pairs, rejected, provenance, warnings)


@dataclass(frozen=True)
class Observation:
    """Chirality datum for one round: a handedness or an explicit signed class."""

    round: int
    handedness: str | None = None
    signed: TwoBridgeLink | None = None

    def __post_init__(self):
        if (self.handedness is None) == (self.signed is None):
            raise ValueError("give exactly one of handedness or signed class")
        if self.handedness is not None and self.handedness not in ("left", "right"):
            raise ValueError(f"handedness must be 'left' or 'right', got {self.handedness!r}")


def chirality_filter(solutions: Sequence[ProcessiveSolution], observed: Observation,
                     n_rounds: int | None = None) -> list[ProcessiveSolution]:
    """Keep solutions whose chirality-sensitive product matches the observation.

    Raises:
        IndexError: if the observed round is negative or, when ``n_rounds``
            is given, not below it.
    """
    i = observed.round
    if i < 0 or (n_rounds is not None and i >= n_rounds):
        raise IndexError(f"observed round {i} is out of range")
    chiral = EquivalenceMode(mirror_agnostic=False)
    kept = []
    for s in solutions:
        k = _round_product(s.O, s.R, i, chiral)
        target = observed.signed if observed.signed is not None else signed_class(k, observed.handedness)
        if equivalent(k, target, chiral):
            kept.append(s)
    return kept


# -- Montesinos distance-one family -----------------------------------------

def _family_coefficients(r: int, s: int, t: int, u: int) -> tuple[int, int, int, int]:
    """``(p0, dp, q0, dq)`` with ``p(m) = p0 + dp m`` and ``q(m) = q0 + dq m``.

    ``u + t m = u (mod t)``, so one Bezout pair ``k0 u - y0 t = 1`` serves
    every ``m`` with ``k = k0`` and ``y = y0 + k0 m``.
    """
    for a, c, label in ((r, s, "r, s"), (t, u, "t, u")):
        if gcd(a, c) != 1:
            raise NotCoprimeError(f"({label}) = ({a}, {c}) must be coprime")
    if abs(r) < 2 or abs(t) < 2:
        raise TangleError("|r| and |t| must be at least 2 so both factors are nontrivial")
    k0 = pow(u, -1, abs(t))
    y0 = (k0 * u - 1) // t
    return s * t + r * u, r * t, s * k0 + r * y0, r * k0


def _family_link(p: int, q: int) -> TwoBridgeLink:
    if p == 0:
        return TwoBridgeLink(0, 1)
    return TwoBridgeLink(p, q)


def iter_montesinos_family(r: int, s: int, t: int, u: int, m_range: range) -> Iterator[tuple[int, int, int]]:
    """Raw ``(m, p, q)`` triples of the family, without normalisation."""
    p0, dp, q0, dq = _family_coefficients(r, s, t, u)
    for m in m_range:
        yield m, p0 + dp * m, q0 + dq * m


class MontesinosFamily(Sequence):
    """Lazy sequence of ``(m, b(p, q))`` for a Montesinos distance-one family.

    ``p`` and ``q`` are affine in ``m``, so the raw parameters are held as
    numpy arrays and each link is normalised only when accessed.  Bulk
    questions about ``p`` (``contains_p``) never build link objects.
    """

    def __init__(self, r: int, s: int, t: int, u: int, m_range: range,
                 mode: EquivalenceMode = MIRROR_AGNOSTIC):
        p0, dp, q0, dq = _family_coefficients(r, s, t, u)
        self.m = np.arange(m_range.start, m_range.stop, m_range.step, dtype=np.int64)
        self.p = p0 + dp * self.m
        self.q = q0 + dq * self.m
        self.mode = mode

    def __len__(self) -> int:
        return len(self.m)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[j] for j in range(*i.indices(len(self)))]
        link = _family_link(int(self.p[i]), int(self.q[i]))
        return int(self.m[i]), (link.canonical(self.mode) if link.p > 1 else link)

    def contains_p(self, target: int) -> bool:
        """Whether the signed parameter ``p = st + ru + rtm`` ever equals ``target``."""
        return bool(np.any(self.p == target))

    def members_with_abs_p(self, target: int) -> list[int]:
        """Values of ``m`` whose link has determinant ``target``."""
        return [int(m) for m in self.m[np.abs(self.p) == target]]


def montesinos_distance_one_family(r: int, s: int, t: int, u: int, m_range,
                                   mode: EquivalenceMode = MIRROR_AGNOSTIC) -> MontesinosFamily:
    """``N(T(s/r) + T((u + t m)/t))`` for each ``m`` in ``m_range``.

    These are the possible ``K1 = N(Q + T(0))`` when ``Q = T(s/r) + T(u/t)``
    up to the integral twist ``m`` and ``R = T(inf)``.

    Args:
        r, s, t, u: summand data with ``gcd(r, s) = gcd(t, u) = 1`` and
            ``|r|, |t| >= 2``.
        m_range: a ``range`` or a ``(lo, hi)`` pair, inclusive.
        mode: normalisation applied to each member.

    Returns:
        A :class:`MontesinosFamily`; indexing or iterating yields
        ``(m, TwoBridgeLink)`` pairs.
    """
    if isinstance(m_range, tuple):
        m_range = range(m_range[0], m_range[1] + 1)
    return MontesinosFamily(r, s, t, u, m_range, mode)


def family_members_with_p(r: int, s: int, t: int, u: int, target_p: int) -> list[int]:
    """Every ``m`` (no bounds) with ``|p(m)| = target_p``."""
    p0, dp, _, _ = _family_coefficients(r, s, t, u)
    ms = set()
    for target in {target_p, -target_p}:
        if (target - p0) % dp == 0:
            ms.add((target - p0) // dp)
    return sorted(ms)


# -- distributive -----------------------------------------------------------

@dataclass(frozen=True)
class LocallyKnottedSolution:
    """Rational core ``Q^`` with a local knot ``insert`` tied into one arc."""

    core: RationalTangle
    insert: TwoBridgeLink
    placement: str
    plausible: bool | None = None

    def closures(self, P: RationalTangle, R: RationalTangle, mode: EquivalenceMode = MIRROR_AGNOSTIC):
        """``(N(Q + P), N(Q + R))`` with the local knot summed back in."""
        out = []
        for X in (P, R):
            base = closure_sum(self.core, X, mode)
            if base.is_unknot:
                out.append(self.insert)
            else:
                out.append(CompositeKnot((base, self.insert)))
        return tuple(out)

    def __str__(self) -> str:
        return f"core {self.core}, insert {self.insert} on arc {self.placement}"


@dataclass(frozen=True)
class PrimeCandidate:
    Q: MontesinosTangle
    m: int
    K1: TwoBridgeLink

    def __str__(self) -> str:
        return f"{self.Q} (m={self.m})"


@dataclass
class SolutionSet:
    rational: list = field(default_factory=list)
    rational_verdict: str = ""
    prime: list = field(default_factory=list)
    prime_verdict: str = ""
    locally_knotted: list = field(default_factory=list)
    locally_knotted_verdict: str = ""
    provenance: list[Provenance] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)
    reduced_filter: str = ""

    @property
    def total(self) -> int:
        return len(self.rational) + len(self.prime) + len(self.locally_knotted)


def _linear_form(a: int, b: int) -> str:
    """Render ``a u + b v`` compactly, e.g. ``u+2v``."""
    parts = []
    for coef, var in ((a, "u"), (b, "v")):
        if coef == 0:
            continue
        mag = "" if abs(coef) == 1 else str(abs(coef))
        sign = "-" if coef < 0 else ("+" if parts else "")
        parts.append(f"{sign}{mag}{var}")
    return "".join(parts) or "0"


def _reduced_filter(P: RationalTangle, R: RationalTangle, p_other: int) -> str:
    # numerator of T(u/v) + T(a/b) is b u + a v
    pa, pb = P.fraction.num, P.fraction.den
    ra, rb = R.fraction.num, R.fraction.den
    return f"|{_linear_form(pb, pa)}| = 1 and |{_linear_form(rb, ra)}| = {p_other}"


def _solve_cores(P, R, other, mode, max_u, max_v) -> list[RationalTangle]:
    cores, seen = [], set()
    for u in range(-max_u, max_u + 1):
        for v in range(0, max_v + 1):
            if gcd(u, v) != 1:
                continue
            f = normalize(u, v)
            if f in seen:
                continue
            seen.add(f)
            core = RationalTangle(f)
            if core.is_infinity and (P.is_infinity or R.is_infinity):
                continue
            if closure_sum(core, P, mode).is_unknot and same_knot(closure_sum(core, R, mode), other, mode):
                cores.append(core)
    cores.sort(key=lambda c: (abs(c.fraction.num), c.fraction.den, c.fraction.num < 0))
    return cores


def _prime_distance_one(K1, product, mode, bound) -> list[PrimeCandidate]:
    """Montesinos ``Q`` in the ``P = T(0)``, ``R = T(inf)`` frame with ``N(Q + P) = K1``."""
    f2, f3 = product.factors

    def numerators(f):
        # T(s/r) contributes the factor N(T(-r/s)) = b(r, -s)
        return [s for s in range(1, f.p) if gcd(s, f.p) == 1 and equivalent(TwoBridgeLink(f.p, -s), f, mode)]

    found = {}
    for s in numerators(f2):
        for u in numerators(f3):
            for m in family_members_with_p(f2.p, s, f3.p, u, K1.p):
                if abs(m) > bound:
                    continue
                Q = MontesinosTangle((T(s, f2.p), T(u + f3.p * m, f3.p)))
                k = closure_sum(Q.summands[0], Q.summands[1], mode)
                if same_knot(k, K1, mode):
                    found[(s, u, m)] = PrimeCandidate(Q, m, k)
    return [found[key] for key in sorted(found)]


def solve_distributive(
    K1: TwoBridgeLink,
    product: CompositeKnot,
    P=T(0),
    R=T(2),
    mode: EquivalenceMode = MIRROR_AGNOSTIC,
    max_u: int = 64,
    max_v: int = 64,
    plausible_placements: Sequence[tuple[str, str]] | None = None,
) -> SolutionSet:
    """Solve ``N(Q + P) = K1``, ``N(Q + R) = product`` bucket by bucket.

    Args:
        K1: 2-bridge product of the first equation.
        product: two-factor connected sum of the second equation.
        P, R: rational tangles.
        mode: equivalence for all comparisons.
        max_u, max_v: bounds for the rational core search.
        plausible_placements: optional list of ``(core fraction, arc)``
            pairs deemed biologically plausible.  Purely configuration;
            when ``None`` the flag is left unset.
    """
    if not isinstance(K1, TwoBridgeLink):
        raise TypeError(f"K1 must be a 2-bridge link, got {type(K1).__name__}")
    product = check_composite(product)
    P, R = check_rational(P, "P"), check_rational(R, "R")
    max_u, max_v = check_bound(max_u, "max_u"), check_bound(max_v, "max_v")

    out = SolutionSet()
    out.rational_verdict = RULE_RATIONAL_BUCKET.rule
    out.provenance.append(RULE_RATIONAL_BUCKET)

    d = distance(P, R)
    if d == 0:
        out.prime_verdict = RULE_DISTANCE_ZERO.rule
        out.locally_knotted_verdict = RULE_DISTANCE_ZERO.rule
        out.provenance.append(RULE_DISTANCE_ZERO)
        return out
    if d >= 2:
        out.prime_verdict = RULE_DISTANCE.rule
        out.provenance.append(RULE_DISTANCE)
    else:
        out.prime = _prime_distance_one(K1, product, mode, bound=max(max_u, max_v))
        out.prime_verdict = RULE_DISTANCE_ONE.rule
        out.provenance.append(RULE_DISTANCE_ONE)
        out.flags.append(FLAG_NON_MONTESINOS)
        if (P, R) != (T(0), T(1, 0)):
            out.flags.append("Montesinos candidates are expressed in the frame P = T(0), R = T(inf)")

    out.provenance.append(RULE_FACTOR_MATCH)
    f2, f3 = product.factors
    if equivalent(K1, f2, mode):
        other = f3
    elif equivalent(K1, f3, mode):
        other = f2
    else:
        out.locally_knotted_verdict = f"{RULE_FACTOR_MATCH.rule}: {K1} matches no factor of {product}"
        return out

    out.provenance.append(RULE_CORE_RATIONAL)
    out.reduced_filter = _reduced_filter(P, R, other.p)
    cores = _solve_cores(P, R, other, mode, max_u, max_v)
    plausible = None if plausible_placements is None else {(str(f), a) for f, a in plausible_placements}
    for core in cores:
        for arc in core.arcs():
            label = "-".join(arc)
            flag = None if plausible is None else (str(core.fraction), label) in plausible
            out.locally_knotted.append(LocallyKnottedSolution(core, K1, label, flag))
    out.locally_knotted_verdict = f"{RULE_CORE_RATIONAL.rule}: {len(cores)} core(s), 2 placements each"
    return out


# -- estimators -------------------------------------------------------------

class ProcessiveTangleSolver(BaseEstimator):
    """Estimator-style wrapper around :func:`solve_processive`.

    ``fit`` takes the observed products ``[K0, K1, ...]``; ``predict`` maps
    round numbers to predicted products of the first solution.

    Attributes:
        solutions_: accepted solutions after the optional chirality filter.
        candidates_: solutions before the chirality filter.
        prefilter_: ``(u, k)`` pairs from the linear pre-filter.
        rejected_: verdicts for pre-filtered candidates that failed.
        provenance_: verdict rules applied.
        warnings_: convention notes.
    """

    def __init__(self, max_u=64, max_v=64, max_r=32, mirror_agnostic=True, prefilter=True, chirality=None):
        self.max_u = max_u
        self.max_v = max_v
        self.max_r = max_r
        self.mirror_agnostic = mirror_agnostic
        self.prefilter = prefilter
        self.chirality = chirality

    def _mode(self) -> EquivalenceMode:
        return EquivalenceMode(mirror_agnostic=bool(self.mirror_agnostic))

    def fit(self, products, y=None):
        result = solve_processive(
            products, self._mode(), self.max_u, self.max_v, self.max_r, self.prefilter,
        )
        self.products_ = list(products)
        self.candidates_ = result.solutions
        self.prefilter_ = result.prefilter
        self.rejected_ = result.rejected
        self.provenance_ = list(result.provenance)
        self.warnings_ = list(result.warnings)
        solutions = result.solutions
        if self.chirality is not None:
            solutions = chirality_filter(solutions, self.chirality, n_rounds=len(self.products_))
            self.warnings_.append(WARN_TREFOIL)
        self.solutions_ = solutions
        return self

    def predict(self, rounds):
        """Predicted product for each round in ``rounds`` using the first solution."""
        check_is_fitted(self, "solutions_")
        if not self.solutions_:
            raise TangleError("the fitted system has no solution to predict from")
        s = self.solutions_[0]
        return [predict_product(s.O, s.R, int(i), self._mode()) for i in rounds]


class DistributiveTangleSolver(BaseEstimator):
    """Estimator-style wrapper around :func:`solve_distributive`.

    Attributes:
        solution_set_: the :class:`SolutionSet` found by ``fit``.
    """

    def __init__(self, P=None, R=None, mirror_agnostic=True, max_u=64, max_v=64, plausible_placements=None):
        self.P = P
        self.R = R
        self.mirror_agnostic = mirror_agnostic
        self.max_u = max_u
        self.max_v = max_v
        self.plausible_placements = plausible_placements

    def fit(self, K1, product=None):
        self.solution_set_ = solve_distributive(
            K1,
            product,
            T(0) if self.P is None else self.P,
            T(2) if self.R is None else self.R,
            EquivalenceMode(mirror_agnostic=bool(self.mirror_agnostic)),
            self.max_u,
            self.max_v,
            self.plausible_placements,
        )
        return self

    def predict(self, X=None):
        """Locally knotted solutions of the fitted system."""
        check_is_fitted(self, "solution_set_")
        return list(self.solution_set_.locally_knotted)
