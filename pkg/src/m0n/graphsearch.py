"""Exact automorphism-group order for small simple graphs.

Colour refinement plus individualization backtracking, dependency-free
and deterministic.  Suitable for the few hundred vertices this package
ever produces; no attempt is made at nauty-grade performance.

The order is computed by orbit counting: refine to an equitable
colouring, pick the first non-singleton colour class, count the vertices
in it reachable from its minimum by a colour-preserving automorphism
(the orbit), fix that minimum, and recurse (the stabilizer).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import InconsistencyError


def _as_neighbours(adjacency) -> list[frozenset[int]]:
    """Normalize an adjacency matrix or neighbour listing; validate symmetry."""
    rows = list(adjacency)
    n = len(rows)
    neigh = []
    for v, row in enumerate(rows):
        if isinstance(row, (set, frozenset)):
            nb = frozenset(row)
        else:
            entries = list(row)
            if len(entries) == n and all(x in (0, 1, True, False) for x in entries):
                nb = frozenset(w for w, x in enumerate(entries) if x)
            else:
                nb = frozenset(int(x) for x in entries)
        neigh.append(nb)
    for v, nb in enumerate(neigh):
        if v in nb:
            raise InconsistencyError(f"vertex {v} has a self-loop")
        for w in nb:
            if not 0 <= w < n:
                raise InconsistencyError(f"vertex {v} lists unknown neighbour {w}")
            if v not in neigh[w]:
                raise InconsistencyError(f"edge {v}-{w} is not symmetric")
    return neigh


def _refine(neigh: Sequence[frozenset[int]], colours: Sequence[int]) -> list[int]:
    """Equitable refinement with canonical colour ids.

    Vertices are re-coloured by the sorted rank of (own colour, multiset
    of neighbour colours) until the number of classes stops growing.  The
    ids depend only on the coloured isomorphism type, so two isomorphic
    coloured graphs refine to matching colourings.
    """
    colours = list(colours)
    while True:
        sig = [
            (colours[v], tuple(sorted(colours[w] for w in neigh[v])))
            for v in range(len(colours))
        ]
        order = {s: k for k, s in enumerate(sorted(set(sig)))}
        new = [order[s] for s in sig]
        if len(set(new)) == len(set(colours)):
            return new
        colours = new


def _cells(colours: Sequence[int]) -> dict[int, list[int]]:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        cells.setdefault(c, []).append(v)
    return cells


def _individualize(colours: Sequence[int], v: int) -> list[int]:
    out = list(colours)
    out[v] = max(colours) + 1
    return out


def _exists_iso(
    neigh: Sequence[frozenset[int]],
    left: Sequence[int],
    right: Sequence[int],
) -> bool:
    """Is there a colour-matching automorphism sending each left cell to
    the right cell of the same colour?"""
    left = _refine(neigh, left)
    right = _refine(neigh, right)
    lcells, rcells = _cells(left), _cells(right)
    if sorted((c, len(vs)) for c, vs in lcells.items()) != sorted(
        (c, len(vs)) for c, vs in rcells.items()
    ):
        return False
    open_cells = sorted(
        (len(vs), c) for c, vs in lcells.items() if len(vs) > 1
    )
    if not open_cells:
        phi = {}
        for c, vs in lcells.items():
            phi[vs[0]] = rcells[c][0]
        return all(
            frozenset(phi[w] for w in neigh[v]) == neigh[phi[v]] for v in phi
        )
    _, colour = open_cells[0]
    v = lcells[colour][0]
    for w in rcells[colour]:
        if _exists_iso(neigh, _individualize(left, v), _individualize(right, w)):
            return True
    return False


def _order(neigh: Sequence[frozenset[int]], colours: Sequence[int]) -> int:
    colours = _refine(neigh, colours)
    cells = _cells(colours)
    open_cells = sorted((len(vs), c) for c, vs in cells.items() if len(vs) > 1)
    if not open_cells:
        return 1
    _, colour = open_cells[0]
    cell = cells[colour]
    v = cell[0]
    fixed = _individualize(colours, v)
    stabilizer = _order(neigh, fixed)
    orbit = 1
    for w in cell[1:]:
        if _exists_iso(neigh, fixed, _individualize(colours, w)):
            orbit += 1
    return orbit * stabilizer


def automorphism_group_order(adjacency: Iterable) -> int:
    """Order of the automorphism group of a simple undirected graph.

    Accepts a square 0/1 matrix (any nested sequence) or a list of
    neighbour index collections.
    """
    neigh = _as_neighbours(adjacency)
    if not neigh:
        return 1
    return _order(neigh, [0] * len(neigh))
