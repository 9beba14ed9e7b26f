"""Symmetric-group verification layer on the boundary intersection graph.

The boundary divisors intersect exactly when their defining partitions
are nested or disjoint on suitable sides; the resulting graph carries a
faithful action of the symmetric group on markings (faithful once n >= 5).
Counting all graph automorphisms and checking the kernel rigidity
arithmetic together verify, at desk scale, that relabelling markings is
the only symmetry around: the graph automorphism count matches n! and
the unique exact solution of the divisor-class constraints forces any
automorphism to act by degree-1 maps fixing the marked points.

Transpositions are realized model by model: a transposition of markings
fixes a Kapranov model's omitted label and acts by a projectivity, or
moves it and acts by a standard Cremona transformation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .boundaries import (
    BoundaryIndex,
    canonical_boundary,
    check_labels,
    check_marking_count,
    enumerate_boundaries,
)
from .errors import InconsistencyError, LabelError, SizeError
from .graphsearch import automorphism_group_order
from .kapranov import KapranovModel, VitalSpace


@dataclass(frozen=True, eq=False)
class BoundaryGraph:
    """Intersection graph of the boundary divisors for n markings."""

    n: int
    vertices: tuple[BoundaryIndex, ...]
    adjacency: np.ndarray

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(self.adjacency)) // 2

    def index_of(self, b: BoundaryIndex) -> int:
        try:
            return self._index[b]
        except AttributeError:
            object.__setattr__(
                self, "_index", {v: k for k, v in enumerate(self.vertices)}
            )
            return self._index[b]

    def neighbours(self, k: int) -> list[int]:
        return [int(w) for w in np.flatnonzero(self.adjacency[k])]


def boundaries_compatible(a: BoundaryIndex, b: BoundaryIndex) -> bool:
    """Do two distinct boundary divisors meet?

    They do exactly when some side of one is contained in or disjoint
    from some side of the other.
    """
    if a.n != b.n:
        raise SizeError(f"mixed marking counts n={a.n} and n={b.n}")
    if a == b:
        return False
    for left in a.sides:
        for right in b.sides:
            if left <= right or not (left & right):
                return True
    return False


def boundary_graph(n: int) -> BoundaryGraph:
    """Boundary intersection graph; kept to 4 <= n <= 9 so searches stay desk-scale."""
    check_marking_count(n)
    if n > 9:
        raise SizeError(f"boundary graph is built for n <= 9, got n={n}")
    vertices = tuple(enumerate_boundaries(n))
    count = len(vertices)
    adjacency = np.zeros((count, count), dtype=bool)
    for i in range(count):
        for j in range(i + 1, count):
            if boundaries_compatible(vertices[i], vertices[j]):
                adjacency[i, j] = adjacency[j, i] = True
    return BoundaryGraph(n, vertices, adjacency)


def check_permutation(n: int, sigma: Mapping[int, int] | Sequence[int]) -> dict[int, int]:
    """Normalize a permutation of 1..n given as a mapping or an image sequence."""
    if isinstance(sigma, Mapping):
        out = {int(k): int(v) for k, v in sigma.items()}
    else:
        images = list(sigma)
        out = {k: int(v) for k, v in enumerate(images, start=1)}
    check_labels(n, out.keys())
    check_labels(n, out.values())
    if len(out) != n or len(set(out.values())) != n:
        raise LabelError(f"not a permutation of 1..{n}: {out}")
    return out


def transposition(n: int, i: int, j: int) -> dict[int, int]:
    """The permutation of 1..n exchanging i and j."""
    check_labels(n, (i, j))
    if i == j:
        raise LabelError(f"a transposition needs two distinct markings, got {i}")
    out = {k: k for k in range(1, n + 1)}
    out[i], out[j] = j, i
    return out


def permute_boundary(sigma: Mapping[int, int], b: BoundaryIndex) -> BoundaryIndex:
    """Relabel a boundary divisor by a permutation of the markings."""
    return canonical_boundary(b.n, {sigma[x] for x in b.rep})


def permute_vital(sigma: Mapping[int, int], v: VitalSpace) -> VitalSpace:
    """Relabel a vital space; the model's omitted marking moves along."""
    model = KapranovModel(v.model.n, sigma[v.model.omitted])
    return VitalSpace(model, frozenset(sigma[x] for x in v.span))


def permutation_action(
    n: int, sigma: Mapping[int, int] | Sequence[int], graph: BoundaryGraph | None = None
) -> tuple[int, ...]:
    """Vertex permutation induced on the boundary graph by relabelling markings.

    Entry k is the index of the image of vertex k.  The assignment
    sigma -> action is a homomorphism (with composition read right to
    left) and is injective once n >= 5.
    """
    sigma = check_permutation(n, sigma)
    if graph is None:
        graph = boundary_graph(n)
    elif graph.n != n:
        raise SizeError(f"graph is for n={graph.n}, permutation for n={n}")
    return tuple(
        graph.index_of(permute_boundary(sigma, v)) for v in graph.vertices
    )


def is_graph_automorphism(graph: BoundaryGraph, vertex_map: Sequence[int]) -> bool:
    """Check that a vertex permutation preserves adjacency."""
    perm = np.asarray(vertex_map)
    if sorted(perm.tolist()) != list(range(graph.vertex_count)):
        raise LabelError("vertex map is not a permutation of the vertices")
    return bool(np.array_equal(graph.adjacency[np.ix_(perm, perm)], graph.adjacency))


def graph_automorphism_order(graph: BoundaryGraph) -> int:
    """Exact order of the automorphism group of the boundary graph."""
    return automorphism_group_order(graph.adjacency)


def kneser_graph(m: int, k: int) -> list[frozenset[int]]:
    """Neighbour lists of the Kneser graph on k-subsets of 1..m (disjointness)."""
    subsets = [frozenset(c) for c in combinations(range(1, m + 1), k)]
    return [
        frozenset(
            w for w, t in enumerate(subsets) if w != v and not (s & t)
        )
        for v, s in enumerate(subsets)
    ]


def petersen_isomorphic(graph: BoundaryGraph) -> bool:
    """Is the given boundary graph isomorphic to the Kneser graph K(5,2)?

    Checked constructively: each boundary divisor for n=5 has a unique
    two-element side, and partition compatibility is exactly disjointness
    of those sides.
    """
    if graph.n != 5:
        return False
    kneser = kneser_graph(5, 2)
    if graph.vertex_count != len(kneser):
        return False
    subsets = [frozenset(c) for c in combinations(range(1, 6), 2)]
    position = {s: k for k, s in enumerate(subsets)}
    relabel = []
    for v in graph.vertices:
        small = min(v.sides, key=len)
        if len(small) != 2:
            return False
        relabel.append(position[small])
    if sorted(relabel) != list(range(len(kneser))):
        return False
    for v in range(graph.vertex_count):
        image = frozenset(relabel[w] for w in graph.neighbours(v))
        if image != kneser[relabel[v]]:
            return False
    return True


@dataclass(frozen=True)
class RigiditySolution:
    """Unique exact solution of the kernel constraints: degree and point multiplicity."""

    n: int
    degree: int
    point_mult: int

    @property
    def is_trivial(self) -> bool:
        return self.degree == 1 and self.point_mult == 0


def kernel_rigidity(n: int) -> RigiditySolution:
    """Solve the divisor-class constraints forcing automorphisms to be trivial.

    An automorphism fixing every boundary divisor class must pull a
    hyperplane back to a degree-d system with equal multiplicity m at all
    n-1 marked points.  Lines through each marked point map to lines,
    giving m = d - 1, and the rational normal curve through all of them
    maps to a curve of degree n - 3, giving (n-3)d - (n-1)m = n-3.  The
    determinant of the system is -2 whatever n is, so the exact rational
    solution is unique, and it is d = 1, m = 0: a projectivity fixing the
    marked points, hence the identity.
    """
    check_marking_count(n, 5)
    # Cramer on: 1*d - 1*m = 1 ; (n-3)*d - (n-1)*m = n-3
    a, b, e = Fraction(1), Fraction(-1), Fraction(1)
    c, d_, f = Fraction(n - 3), Fraction(-(n - 1)), Fraction(n - 3)
    det = a * d_ - b * c
    if det == 0:
        raise InconsistencyError(f"degenerate constraint system at n={n}")
    degree = (e * d_ - b * f) / det
    mult = (a * f - e * c) / det
    if degree.denominator != 1 or mult.denominator != 1:
        raise InconsistencyError(
            f"constraints have no integer solution at n={n}: d={degree}, m={mult}"
        )
    if degree != 1 or mult != 0:
        raise InconsistencyError(
            f"constraints admit a nontrivial solution at n={n}: d={degree}, m={mult}"
        )
    return RigiditySolution(n, int(degree), int(mult))


@dataclass(frozen=True)
class TranspositionAction:
    """How exchanging two markings acts on each Kapranov model.

    Models whose omitted label is fixed by the transposition see a
    projectivity permuting the marked points; the two models whose
    omitted label moves see a standard Cremona transformation.
    """

    n: int
    i: int
    j: int

    def __post_init__(self):
        check_labels(self.n, (self.i, self.j))
        if self.i == self.j:
            raise LabelError(
                f"a transposition needs two distinct markings, got {self.i}"
            )

    @property
    def sigma(self) -> dict[int, int]:
        return transposition(self.n, self.i, self.j)

    def device(self, model_label: int) -> str:
        """'projectivity' if the model omits neither swapped marking, else 'cremona'."""
        check_labels(self.n, (model_label,))
        return "cremona" if model_label in (self.i, self.j) else "projectivity"

    def on_boundary(self, b: BoundaryIndex) -> BoundaryIndex:
        if b.n != self.n:
            raise SizeError(f"mixed marking counts n={self.n} and n={b.n}")
        return permute_boundary(self.sigma, b)

    def on_vital(self, v: VitalSpace) -> VitalSpace:
        if v.model.n != self.n:
            raise SizeError(f"mixed marking counts n={self.n} and n={v.model.n}")
        return permute_vital(self.sigma, v)


def transposition_model_map(n: int, i: int, j: int) -> TranspositionAction:
    """Action of the transposition (i j) across the Kapranov models."""
    check_marking_count(n, 5)
    return TranspositionAction(n, i, j)


def graph_to_dot(graph: BoundaryGraph) -> str:
    """DOT export of the boundary intersection graph."""
    lines = ["graph boundaries {"]
    for k, v in enumerate(graph.vertices):
        lines.append(f'  b{k} [label="{v}"];')
    for a in range(graph.vertex_count):
        for b in range(a + 1, graph.vertex_count):
            if graph.adjacency[a, b]:
                lines.append(f"  b{a} -- b{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_adjacency_lines(graph: BoundaryGraph) -> list[str]:
    """Adjacency listing, one line per vertex: 'name: neighbour names'."""
    out = []
    for k, v in enumerate(graph.vertices):
        names = " ".join(str(graph.vertices[w]) for w in graph.neighbours(k))
        out.append(f"{v}: {names}")
    return out
