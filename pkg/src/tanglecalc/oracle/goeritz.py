"""Link determinant from the Goeritz matrix of a checkerboard colouring."""

from __future__ import annotations

from collections import deque

from ..exceptions import DisconnectedDiagramError, TangleError
from .diagram import PlanarDiagram

__all__ = ["faces", "goeritz_matrix", "goeritz_determinant", "link_determinant"]


def faces(diagram: PlanarDiagram) -> list[list[tuple[int, int]]]:
    """Faces as lists of corners ``(crossing, j)``; corner ``j`` sits between slots ``j`` and ``j+1``.

    From corner ``(c, j)`` the boundary leaves along the edge in slot
    ``j+1``, arrives in slot ``k`` of the next crossing and continues from
    corner ``(c', k)``.
    """
    where: dict[int, list[tuple[int, int]]] = {}
    for c, x in enumerate(diagram.crossings):
        for j, label in enumerate(x):
            where.setdefault(label, []).append((c, j))

    def other_end(c, j):
        a, b = where[diagram.crossings[c][j]]
        return b if a == (c, j) else a

    seen: set[tuple[int, int]] = set()
    out = []
    for c in range(diagram.n_crossings):
        for j in range(4):
            if (c, j) in seen:
                continue
            face = []
            corner = (c, j)
            while corner not in seen:
                seen.add(corner)
                face.append(corner)
                cc, jj = corner
                corner = other_end(cc, (jj + 1) % 4)
            out.append(face)
    return out


def goeritz_matrix(diagram: PlanarDiagram) -> list[list[int]]:
    """Goeritz matrix on the shaded faces, before deleting a row and column."""
    if not diagram.is_connected():
        raise DisconnectedDiagramError("the Goeritz matrix needs a connected diagram")
    fs = faces(diagram)
    if len(fs) != diagram.n_crossings + 2:
        raise TangleError(f"{len(fs)} faces for {diagram.n_crossings} crossings; diagram is not planar")
    face_of = {corner: i for i, f in enumerate(fs) for corner in f}

    # corners j and j+1 of a crossing lie in faces of opposite colour
    colour = {0: 0}
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for c, j in fs[i]:
            for step in (1, 3):
                nb = face_of[(c, (j + step) % 4)]
                want = 1 - colour[i]
                if nb not in colour:
                    colour[nb] = want
                    queue.append(nb)
                elif colour[nb] != want:
                    raise TangleError("faces admit no checkerboard colouring")

    shaded = [i for i in range(len(fs)) if colour[i] == 0]
    pos = {f: k for k, f in enumerate(shaded)}
    g = [[0] * len(shaded) for _ in shaded]
    for c in range(diagram.n_crossings):
        if colour[face_of[(c, 0)]] == 0:
            f1, f2, eta = face_of[(c, 0)], face_of[(c, 2)], 1
        else:
            f1, f2, eta = face_of[(c, 1)], face_of[(c, 3)], -1
        if f1 == f2:
            continue
        i, j = pos[f1], pos[f2]
        g[i][j] -= eta
        g[j][i] -= eta
        g[i][i] += eta
        g[j][j] += eta
    return g


def _bareiss(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def goeritz_determinant(diagram: PlanarDiagram) -> int:
    """``|det|`` of the reduced Goeritz matrix of a connected diagram."""
    if diagram.n_crossings == 0:
        if diagram.free_loops == 1:
            return 1
        raise DisconnectedDiagramError("crossingless diagram with several loops")
    g = goeritz_matrix(diagram)
    reduced = [row[1:] for row in g[1:]]
    return abs(_bareiss(reduced))


def link_determinant(diagram: PlanarDiagram) -> int:
    """Determinant of the link; a split diagram gives 0."""
    if not diagram.is_connected():
        return 0
    return goeritz_determinant(diagram)
