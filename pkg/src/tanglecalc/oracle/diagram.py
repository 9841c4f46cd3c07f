"""Planar diagrams built crossing by crossing.

Nothing here uses the fraction arithmetic of the engine.  Tangle diagrams
are assembled from twist words by literally adding crossings, reflecting
and gluing; 4-plat diagrams are assembled from a 4-strand braid with plat
caps.  The two constructions meet only in the invariants computed from the
finished :class:`PlanarDiagram`.

Crossing ports are numbered ``0..3`` counter-clockwise; ports 0 and 2 carry
the under strand, ports 1 and 3 the over strand.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Iterable, Sequence

from ..exceptions import DiagramCapError, TangleError
from ..tangles import TwistWord

DEFAULT_CAP = 16

__all__ = [
    "DEFAULT_CAP",
    "PlanarDiagram",
    "TangleDiagram",
    "tangle_from_word",
    "diagram_from_twist_word",
    "numerator_closure",
    "denominator_closure",
    "montesinos_diagram",
    "fourplat_diagram",
    "fourplat_braid",
    "kinked_unknot",
    "disjoint_union",
    "from_pd",
    "from_text",
]


@dataclass(frozen=True)
class PlanarDiagram:
    """Closed link diagram in PD form.

    ``crossings[i]`` lists the four edge labels counter-clockwise starting
    at the incoming under-strand; ``signs[i]`` is its writhe sign under the
    orientation used to label the edges.  ``free_loops`` counts components
    that meet no crossing.
    """

    crossings: tuple[tuple[int, int, int, int], ...]
    signs: tuple[int, ...]
    free_loops: int = 0
    components: int = 0

    def __post_init__(self):
        if len(self.crossings) != len(self.signs):
            raise TangleError("one sign per crossing is required")
        seen: dict[int, int] = {}
        for x in self.crossings:
            for label in x:
                seen[label] = seen.get(label, 0) + 1
        bad = [label for label, n in seen.items() if n != 2]
        if bad:
            raise TangleError(f"edge labels {sorted(bad)} do not pair into closed strands")

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def mirror(self) -> PlanarDiagram:
        """Swap over and under at every crossing."""
        out = []
        for (a, b, c, d), s in zip(self.crossings, self.signs):
            # the old over strand becomes the under strand; start at its incoming end
            out.append((d, a, b, c) if s > 0 else (b, c, d, a))
        return PlanarDiagram(tuple(out), tuple(-s for s in self.signs), self.free_loops, self.components)

    def is_connected(self) -> bool:
        if not self.crossings:
            return self.free_loops <= 1
        if self.free_loops:
            return False
        parent = list(range(len(self.crossings)))

        def find(i):
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        where: dict[int, int] = {}
        for i, x in enumerate(self.crossings):
            for label in x:
                if label in where:
                    parent[find(i)] = find(where[label])
                else:
                    where[label] = i
        return len({find(i) for i in range(len(self.crossings))}) == 1

    def to_text(self) -> str:
        """Edge-list text form, readable back with :func:`from_text`."""
        lines = [
            "# planar diagram: X <a b c d> <sign>, labels ccw from incoming under-strand",
            f"crossings {self.n_crossings}",
            f"components {self.components}",
            f"free_loops {self.free_loops}",
        ]
        for (a, b, c, d), s in zip(self.crossings, self.signs):
            lines.append(f"X {a} {b} {c} {d} {'+1' if s > 0 else '-1'}")
        return "\n".join(lines) + "\n"


def from_text(text: str) -> PlanarDiagram:
    crossings, signs = [], []
    free_loops = components = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "X":
            *labels, sign = rest
            crossings.append(tuple(int(v) for v in labels))
            signs.append(int(sign))
        elif head == "free_loops":
            free_loops = int(rest[0])
        elif head == "components":
            components = int(rest[0])
        elif head != "crossings":
            raise TangleError(f"unrecognised diagram line {raw!r}")
    return PlanarDiagram(tuple(crossings), tuple(signs), free_loops, components)


def from_pd(codes: Iterable[Sequence[int]], free_loops: int = 0) -> PlanarDiagram:
    """Diagram from PD codes whose labels increase along each component.

    The over strand of ``(a, b, c, d)`` runs ``d -> b`` when ``b`` follows
    ``d`` (allowing the wrap-around jump at the end of a component), which
    makes the crossing positive.
    """
    codes = [tuple(int(v) for v in x) for x in codes]
    succ: dict[int, int] = {}
    signs = []
    for a, b, c, d in codes:
        succ[a] = c
        if b - d == 1 or d - b > 1:
            succ[d] = b
            signs.append(1)
        else:
            succ[b] = d
            signs.append(-1)
    labels = {v for x in codes for v in x}
    comps = _count_cycles(succ, labels)
    return PlanarDiagram(tuple(codes), tuple(signs), free_loops, comps + free_loops)


def _count_cycles(succ, labels):
    seen = set()
    n = 0
    for v in sorted(labels):
        if v in seen:
            continue
        n += 1
        while v not in seen:
            seen.add(v)
            v = succ[v]
    return n


# -- construction graph -----------------------------------------------------

@dataclass
class TangleDiagram:
    """Diagram of a 2-string tangle under construction.

    Nodes are crossing ports ``4*i + k`` (non-negative) or virtual boundary
    nodes (negative).  ``wires`` joins nodes; ``ends`` names the four
    boundary nodes.
    """

    n_crossings: int = 0
    wires: list[tuple[int, int]] = field(default_factory=list)
    ends: dict[str, int] = field(default_factory=dict)
    _virtual: count = field(default_factory=lambda: count(1), repr=False)

    def new_virtual(self) -> int:
        return -next(self._virtual)

    def copy_shifted(self, other: TangleDiagram) -> dict[str, int]:
        """Merge ``other`` into ``self`` with fresh ids; return its mapped ends."""
        offset = 4 * self.n_crossings
        vmap: dict[int, int] = {}

        def m(node):
            if node >= 0:
                return node + offset
            if node not in vmap:
                vmap[node] = self.new_virtual()
            return vmap[node]

        self.wires.extend((m(a), m(b)) for a, b in other.wires)
        self.n_crossings += other.n_crossings
        return {k: m(v) for k, v in other.ends.items()}


def _base(kind: str) -> TangleDiagram:
    d = TangleDiagram()
    for name in ("NW", "NE", "SW", "SE"):
        d.ends[name] = d.new_virtual()
    e = d.ends
    if kind == "inf":
        d.wires += [(e["NW"], e["SW"]), (e["NE"], e["SE"])]
    else:
        d.wires += [(e["NW"], e["NE"]), (e["SW"], e["SE"])]
    return d


def _one_crossing(sign: int) -> TangleDiagram:
    """Tangle with one crossing; ``sign=+1`` is the unit horizontal twist.

    Ports sit at SW, SE, NE, NW (counter-clockwise).  For the positive twist
    the under strand runs SW-NE; for the negative one it runs SE-NW.
    """
    d = TangleDiagram(n_crossings=1)
    corners = ("SW", "SE", "NE", "NW")
    start = 0 if sign > 0 else 1
    for k in range(4):
        name = corners[(start + k) % 4]
        v = d.new_virtual()
        d.ends[name] = v
        d.wires.append((k, v))
    return d


def tangle_sum(a: TangleDiagram, b: TangleDiagram) -> TangleDiagram:
    out = TangleDiagram()
    ea = out.copy_shifted(a)
    eb = out.copy_shifted(b)
    out.wires += [(ea["NE"], eb["NW"]), (ea["SE"], eb["SW"])]
    out.ends = {"NW": ea["NW"], "SW": ea["SW"], "NE": eb["NE"], "SE": eb["SE"]}
    return out


def reflect(a: TangleDiagram) -> TangleDiagram:
    """Reflect in the NW-SE diagonal keeping over/under: NE<->SW, ccw order reversed."""
    out = TangleDiagram()
    ends = out.copy_shifted(a)

    def flip(node):
        if node < 0:
            return node
        k = node % 4
        return node - k + {0: 0, 1: 3, 2: 2, 3: 1}[k]

    out.wires = [(flip(x), flip(y)) for x, y in out.wires]
    out.ends = {"NW": ends["NW"], "SE": ends["SE"], "NE": ends["SW"], "SW": ends["NE"]}
    return out


def _twist(d: TangleDiagram, k: int) -> TangleDiagram:
    unit = _one_crossing(1 if k > 0 else -1)
    for _ in range(abs(k)):
        d = tangle_sum(d, unit)
    return d


def tangle_from_word(word: TwistWord, cap: int = DEFAULT_CAP) -> TangleDiagram:
    """Apply the word's moves to the diagram of ``T(inf)``, rightmost first."""
    if word.crossing_count() > cap:
        raise DiagramCapError(f"word needs {word.crossing_count()} crossings, cap is {cap}")
    d = _base("inf")
    for move, k in reversed(word.moves):
        if move == "r":
            d = reflect(d)
        elif move == "h":
            d = _twist(d, k)
        else:
            d = reflect(_twist(reflect(d), k))
    return d


def integral_tangle(k: int) -> TangleDiagram:
    return _twist(_base("zero"), k)


def infinity_tangle() -> TangleDiagram:
    return _base("inf")


def montesinos_diagram(parts: Sequence[TangleDiagram]) -> TangleDiagram:
    d = parts[0]
    for p in parts[1:]:
        d = tangle_sum(d, p)
    return d


def numerator_closure(t: TangleDiagram, cap: int = DEFAULT_CAP) -> PlanarDiagram:
    e = t.ends
    return _close(t, [(e["NW"], e["NE"]), (e["SW"], e["SE"])], cap)


def denominator_closure(t: TangleDiagram, cap: int = DEFAULT_CAP) -> PlanarDiagram:
    e = t.ends
    return _close(t, [(e["NW"], e["SW"]), (e["NE"], e["SE"])], cap)


def diagram_from_twist_word(word: TwistWord, closure: str = "numerator", cap: int = DEFAULT_CAP) -> PlanarDiagram:
    t = tangle_from_word(word, cap)
    if closure == "numerator":
        return numerator_closure(t, cap)
    if closure == "denominator":
        return denominator_closure(t, cap)
    raise ValueError(f"unknown closure {closure!r}")


def _close(t: TangleDiagram, extra: list[tuple[int, int]], cap: int) -> PlanarDiagram:
    if t.n_crossings > cap:
        raise DiagramCapError(f"diagram has {t.n_crossings} crossings, cap is {cap}")
    return _finish(t.n_crossings, t.wires + extra)


def _finish(n: int, wires: list[tuple[int, int]]) -> PlanarDiagram:
    """Contract virtual nodes, orient every component and emit PD codes."""
    adj: dict[int, list[int]] = {}
    for a, b in wires:
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    for node, nbrs in adj.items():
        if len(nbrs) != (1 if node >= 0 else 2):
            raise TangleError(f"dangling strand at node {node}")

    def partner(port: int) -> int:
        prev, cur = port, adj[port][0]
        while cur < 0:
            a, b = adj[cur]
            nxt = b if a == prev else a
            if a == b:  # virtual node joined to one neighbour twice
                nxt = a
            prev, cur = cur, nxt
        return cur

    mate = {port: partner(port) for port in range(4 * n)}

    # free loops: cycles made only of virtual nodes
    seen_virtual: set[int] = set()
    free_loops = 0
    for node in adj:
        if node >= 0 or node in seen_virtual:
            continue
        stack, reaches_crossing, comp = [node], False, set()
        while stack:
            v = stack.pop()
            if v in comp:
                continue
            comp.add(v)
            for w in adj[v]:
                if w >= 0:
                    reaches_crossing = True
                elif w not in comp:
                    stack.append(w)
        seen_virtual |= comp
        if not reaches_crossing:
            free_loops += 1

    # orient by walking: out of a port along its wire, in at the mate, straight across
    label_out: dict[int, int] = {}
    entering: set[int] = set()
    label = 0
    components = 0
    for start in range(4 * n):
        if start in label_out or start in entering:
            continue
        components += 1
        port = start
        while port not in label_out:
            label += 1
            label_out[port] = label
            nxt = mate[port]
            entering.add(nxt)
            port = nxt - nxt % 4 + (nxt % 4 + 2) % 4
    label_in = {mate[p]: lab for p, lab in label_out.items()}

    def lab(port):
        return label_out[port] if port in label_out else label_in[port]

    codes, signs = [], []
    for i in range(n):
        ports = [4 * i + k for k in range(4)]
        first = 0 if ports[0] in entering else 2
        order = [ports[(first + k) % 4] for k in range(4)]
        codes.append(tuple(lab(p) for p in order))
        # positive when the over strand leaves through the second slot
        signs.append(1 if order[1] in label_out else -1)
    return PlanarDiagram(tuple(codes), tuple(signs), free_loops, components + free_loops)


# -- 4-plats ----------------------------------------------------------------

def _positive_cf(p: int, q: int) -> list[int]:
    coeffs = []
    while q:
        a, rem = divmod(p, q)
        coeffs.append(a)
        p, q = q, rem
    return coeffs


def fourplat_braid(p: int, q: int) -> list[tuple[int, int]]:
    """Letters ``(generator, exponent)`` of ``s2^a1 s1^-a2 s2^a3 ... s2^an``.

    ``[a1, ..., an]`` is the odd-length all-positive continued fraction of
    ``p/q'`` with ``q'`` the residue of ``q`` in ``(0, p)``.  Empty for
    ``|p| <= 1``.
    """
    if p < 0:
        p, q = -p, -q
    if p <= 1:
        return []
    coeffs = _positive_cf(p, q % p)
    if len(coeffs) % 2 == 0:
        coeffs = coeffs[:-1] + [coeffs[-1] - 1, 1]
    word = []
    for i, a in enumerate(coeffs):
        word += [(2, 1)] * a if i % 2 == 0 else [(1, -1)] * a
    return word


def fourplat_diagram(p: int, q: int, cap: int = DEFAULT_CAP) -> PlanarDiagram:
    """Plat closure of :func:`fourplat_braid`.

    ``p = 0`` gives the 2-component unlink and ``p = 1`` the round unknot.
    """
    if p == 0:
        return PlanarDiagram((), (), free_loops=2, components=2)
    if abs(p) == 1:
        return PlanarDiagram((), (), free_loops=1, components=1)
    word = fourplat_braid(p, q)
    if len(word) > cap:
        raise DiagramCapError(f"4-plat of b({p},{q}) needs {len(word)} crossings, cap is {cap}")
    return braid_plat(word)


def braid_plat(word: Sequence[tuple[int, int]]) -> PlanarDiagram:
    """Plat-close a 4-strand braid given as ``(generator, exponent)`` letters.

    Read top to bottom.  In a positive letter the strand coming from the
    upper left passes over.  Caps join positions 1-2 and 3-4 at both ends.
    """
    counter = count(1)
    wires: list[tuple[int, int]] = []
    top = [-next(counter) for _ in range(4)]
    wires += [(top[0], top[1]), (top[2], top[3])]
    current = list(top)
    for i, (gen, sign) in enumerate(word):
        base = 4 * i
        left, right = gen - 1, gen
        # ports ccw: 0 BL, 1 BR, 2 TR, 3 TL for a positive letter
        if sign > 0:
            tl, tr, bl, br = base + 3, base + 2, base + 0, base + 1
        else:
            # ccw: 0 BR, 1 TR, 2 TL, 3 BL
            tl, tr, bl, br = base + 2, base + 1, base + 3, base + 0
        wires += [(current[left], tl), (current[right], tr)]
        v_bl, v_br = -next(counter), -next(counter)
        wires += [(bl, v_bl), (br, v_br)]
        current[left], current[right] = v_bl, v_br
    wires += [(current[0], current[1]), (current[2], current[3])]
    return _finish(len(word), wires)


def kinked_unknot(sign: int = 1) -> PlanarDiagram:
    """One-crossing diagram of the unknot (a Reidemeister I kink)."""
    return numerator_closure(_one_crossing(sign))


def add_kink(d: TangleDiagram, sign: int = 1) -> TangleDiagram:
    """Insert a Reidemeister I curl into the tangle's NE strand."""
    curl = tangle_sum(_base("zero"), _one_crossing(sign))
    # close the curl's east side so only its west points stay attached
    out = TangleDiagram()
    ea = out.copy_shifted(d)
    ec = out.copy_shifted(curl)
    out.wires += [(ec["NE"], ec["SE"]), (ea["NE"], ec["NW"])]
    v = out.new_virtual()
    out.wires += [(ec["SW"], v)]
    out.ends = {"NW": ea["NW"], "SW": ea["SW"], "SE": ea["SE"], "NE": v}
    return out


def disjoint_union(d: PlanarDiagram, loops: int = 1) -> PlanarDiagram:
    return PlanarDiagram(d.crossings, d.signs, d.free_loops + loops, d.components + loops)
