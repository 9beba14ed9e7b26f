"""The Losev-Manin fan and the classification of toric maps to the line.

The fan of the Losev-Manin space with n - 2 heavy-light markings is the
barycentric subdivision of the standard fan of projective (n-3)-space.
A toric morphism to the projective line is a linear functional that sends
every cone of the fan into a single closed half-line, and the search for
such functionals over a bounded integer box is exhaustive exact integer
arithmetic: every solution turns out to be supported on exactly two of
the undivided rays with opposite values, which identifies it with a
forgetful-map datum.

Fans are stored as primitive integer ray generators plus maximal cones
as ray-index sets; faces are implied.  Construction validates primitivity,
simpliciality (exact integer rank), and completeness via facet pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import gcd
from typing import Sequence

import numpy as np

from .errors import InconsistencyError, ShapeViolationError, SizeError

# candidate coefficient vectors are screened in batches this large
_CHUNK = 8192


def primitivize(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in vec:
        g = gcd(g, abs(x))
    if g == 0:
        raise InconsistencyError("the zero vector has no primitive representative")
    return tuple(x // g for x in vec)


def _rank_exact(rows: list[Sequence[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    rank = 0
    for col in range(len(mat[0])):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col] != 0), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        lead = mat[rank]
        for r in range(rank + 1, len(mat)):
            if mat[r][col]:
                f, p = mat[r][col], lead[col]
                mat[r] = [p * a - f * b for a, b in zip(mat[r], lead)]
        rank += 1
        if rank == len(mat):
            break
    return rank


@dataclass(frozen=True)
class Fan:
    """A complete simplicial fan: primitive rays plus maximal cones.

    maximal_cones are frozensets of ray indices, each of size dim.
    Validation runs at construction: primitivity and distinctness of the
    rays, exact linear independence within each cone, and facet pairing
    (every facet of a maximal cone shared by exactly two), which is the
    completeness certificate for a simplicial fan.
    """

    dim: int
    rays: tuple[tuple[int, ...], ...]
    maximal_cones: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.dim < 1:
            raise SizeError(f"fan dimension must be at least 1, got {self.dim}")
        if len(set(self.rays)) != len(self.rays):
            raise InconsistencyError("duplicate rays")
        for ray in self.rays:
            if len(ray) != self.dim:
                raise InconsistencyError(f"ray {ray} does not have {self.dim} coordinates")
            if primitivize(ray) != ray:
                raise InconsistencyError(f"ray {ray} is not primitive")
        facets: dict[frozenset[int], int] = {}
        if len(set(self.maximal_cones)) != len(self.maximal_cones):
            raise InconsistencyError("duplicate maximal cones")
        for cone in self.maximal_cones:
            if not all(0 <= i < len(self.rays) for i in cone):
                raise InconsistencyError(f"cone {sorted(cone)} uses unknown ray indices")
            if len(cone) != self.dim:
                raise InconsistencyError(
                    f"maximal cone {sorted(cone)} has {len(cone)} rays, want {self.dim}"
                )
            if _rank_exact([self.rays[i] for i in sorted(cone)]) != self.dim:
                raise InconsistencyError(
                    f"cone {sorted(cone)} is not simplicial: rays are dependent"
                )
            for drop in cone:
                facet = cone - {drop}
                facets[facet] = facets.get(facet, 0) + 1
        for facet, count in facets.items():
            if count != 2:
                raise InconsistencyError(
                    f"facet {sorted(facet)} lies in {count} maximal cones, want 2; "
                    "the fan is not complete"
                )

    @property
    def ray_count(self) -> int:
        return len(self.rays)

    @property
    def cone_count(self) -> int:
        return len(self.maximal_cones)


def projective_fan(N: int) -> Fan:
    """The standard complete fan of projective N-space.

    Rays are the coordinate vectors e_1..e_N followed by minus their sum;
    every N-subset of the N+1 rays spans a maximal cone.
    """
    if N < 1:
        raise SizeError(f"projective fan needs N >= 1, got {N}")
    rays = [tuple(1 if j == i else 0 for j in range(N)) for i in range(N)]
    rays.append(tuple([-1] * N))
    cones = [frozenset(c) for c in combinations(range(N + 1), N)]
    return Fan(N, tuple(rays), tuple(cones))


def barycentric_subdivision(f: Fan) -> Fan:
    """Barycentric subdivision of a complete simplicial fan.

    Every nonempty face gets a new ray along the primitivized sum of its
    generators, and the maximal cones are the flags of nested faces.
    Simpliciality of the input is guaranteed by Fan construction.
    """
    faces: set[frozenset[int]] = set()
    for cone in f.maximal_cones:
        members = sorted(cone)
        for size in range(1, len(members) + 1):
            faces.update(frozenset(c) for c in combinations(members, size))
    ordered = sorted(faces, key=lambda s: (len(s), sorted(s)))
    vectors = []
    for face in ordered:
        total = [0] * f.dim
        for i in face:
            total = [a + b for a, b in zip(total, f.rays[i])]
        vectors.append(primitivize(total))
    if len(set(vectors)) != len(vectors):
        raise InconsistencyError("distinct faces produced identical barycenter rays")
    index = {face: k for k, face in enumerate(ordered)}
    cones = []
    for cone in f.maximal_cones:
        for perm in permutations(sorted(cone)):
            flag = []
            for size in range(1, len(perm) + 1):
                flag.append(index[frozenset(perm[:size])])
            cones.append(frozenset(flag))
    cones.sort(key=sorted)
    return Fan(f.dim, tuple(vectors), tuple(cones))


def losev_manin_fan(n: int) -> Fan:
    """Fan of the Losev-Manin space attached to n markings.

    The barycentric subdivision of the fan of projective (n-3)-space:
    2^(n-2) - 2 rays and (n-2)! maximal cones.  Capped at n = 10, where
    the fan already has 40320 maximal cones.
    """
    if n < 5:
        raise SizeError(f"the fan is built for n >= 5, got n={n}")
    if n > 10:
        raise SizeError(
            f"the fan has (n-2)! maximal cones and is kept desk-scale (n <= 10); got n={n}"
        )
    return barycentric_subdivision(projective_fan(n - 3))


@dataclass(frozen=True)
class FanFunctional:
    """An integer linear functional, stored with coprime coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or all(c == 0 for c in self.coeffs):
            raise InconsistencyError("the zero functional is not stored")
        if primitivize(self.coeffs) != self.coeffs:
            raise InconsistencyError(f"coefficients {self.coeffs} are not coprime")

    def values_on(self, fan: Fan) -> tuple[int, ...]:
        """Values on the fan's rays, in ray order."""
        return tuple(
            sum(c * x for c, x in zip(self.coeffs, ray)) for ray in fan.rays
        )

    @classmethod
    def normalized(cls, coeffs: Sequence[int], fan: Fan) -> "FanFunctional":
        """Scale to coprime coefficients with the first nonzero ray value positive."""
        prim = primitivize(coeffs)
        candidate = cls(prim)
        for v in candidate.values_on(fan):
            if v > 0:
                return candidate
            if v < 0:
                return cls(tuple(-c for c in prim))
        raise InconsistencyError(f"functional {prim} vanishes on every ray")

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


def cone_condition(fan: Fan, coeffs: Sequence[int]) -> bool:
    """Does the functional map every maximal cone into one closed half-line?"""
    values = [sum(c * x for c, x in zip(coeffs, ray)) for ray in fan.rays]
    for cone in fan.maximal_cones:
        vals = [values[i] for i in cone]
        if any(v > 0 for v in vals) and any(v < 0 for v in vals):
            return False
    return True


def nested_sum_condition(n: int, coeffs: Sequence[int]) -> bool:
    """Half-line condition for the Losev-Manin fan, via subset partial sums.

    The subdivision's rays are the partial sums of the n - 2 undivided ray
    generators over nonempty proper subsets, and its maximal cones are the
    maximal chains of such subsets; so the condition says no nested pair
    of subsets has partial sums of strictly opposite signs.
    """
    base = projective_fan(n - 3)
    values = [sum(c * x for c, x in zip(coeffs, ray)) for ray in base.rays]
    m = len(values)
    sums = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + values[low.bit_length() - 1]
    full = (1 << m) - 1
    for t in range(1, full):
        st = sums[t]
        if st == 0:
            continue
        s = (t - 1) & t
        while s:
            if sums[s] * st < 0:
                return False
            s = (s - 1) & t
    return True


def cone_halfline_functionals(fan: Fan, bound: int = 2) -> list[FanFunctional]:
    """All functionals, up to positive scaling, mapping each cone to a half-line.

    Exhaustive scan of integer coefficient vectors whose values on every
    ray stay within [-bound, bound]; survivors are gcd- and
    sign-normalized, deduplicated, and sorted.  The zero functional is
    dropped.  The search box is a completeness guarantee only within the
    stated value bound.
    """
    if bound < 1:
        raise SizeError(f"bound must be at least 1, got {bound}")
    rays = np.array(fan.rays, dtype=np.int64)
    cone_index = [sorted(c) for c in fan.maximal_cones]
    found: set[tuple[int, ...]] = set()
    span = range(-bound, bound + 1)
    batch: list[tuple[int, ...]] = []

    def flush(batch: list[tuple[int, ...]]) -> None:
        if not batch:
            return
        coeffs = np.array(batch, dtype=np.int64)
        values = coeffs @ rays.T
        keep = (np.abs(values) <= bound).all(axis=1)
        keep &= values.any(axis=1)
        for idx in cone_index:
            if not keep.any():
                return
            sub = values[:, idx]
            keep &= (sub >= 0).all(axis=1) | (sub <= 0).all(axis=1)
        for row in coeffs[keep]:
            found.add(FanFunctional.normalized([int(x) for x in row], fan).coeffs)

    for cand in product(span, repeat=fan.dim):
        batch.append(cand)
        if len(batch) == _CHUNK:
            flush(batch)
            batch = []
    flush(batch)
    return [FanFunctional(c) for c in sorted(found)]


def functional_to_forgetful(
    g: FanFunctional, n: int, fan: Fan | None = None
) -> tuple[int, int]:
    """Identify a half-line functional with a pair of undivided ray labels.

    A solution must be supported on exactly two of the n - 2 rays of the
    undivided fan, with opposite values there; the 1-based labels of that
    pair are returned (insensitive to a global sign flip).  Anything else
    raises ShapeViolationError carrying the functional and its values as
    a concrete counterexample.
    """
    if n < 5:
        raise SizeError(f"need n >= 5, got n={n}")
    base = projective_fan(n - 3)
    values = [sum(c * x for c, x in zip(g.coeffs, ray)) for ray in base.rays]
    support = [k for k, v in enumerate(values) if v != 0]
    if len(support) != 2:
        raise ShapeViolationError(
            f"functional {g} has support {len(support)} on the undivided rays, "
            f"want 2; values {values}",
            coeffs=g.coeffs,
            ray_values=tuple(values),
        )
    a, b = support
    if values[a] + values[b] != 0:
        raise ShapeViolationError(
            f"functional {g} takes values {values[a]}, {values[b]} on its "
            "support pair; they must be opposite",
            coeffs=g.coeffs,
            ray_values=tuple(values),
        )
    return (a + 1, b + 1)


def fan_to_text(fan: Fan) -> str:
    """Plain structured listing: dimension, rays, maximal cones."""
    lines = [f"dim: {fan.dim}", f"rays[{fan.ray_count}]:"]
    for k, ray in enumerate(fan.rays):
        lines.append(f"  {k}: ({','.join(map(str, ray))})")
    lines.append(f"maximal_cones[{fan.cone_count}]:")
    for k, cone in enumerate(fan.maximal_cones):
        lines.append(f"  {k}: {' '.join(map(str, sorted(cone)))}")
    return "\n".join(lines) + "\n"


def fan_edges(fan: Fan) -> list[tuple[int, int]]:
    """Pairs of ray indices spanning a two-dimensional face, sorted."""
    edges = set()
    for cone in fan.maximal_cones:
        for a, b in combinations(sorted(cone), 2):
            edges.add((a, b))
    return sorted(edges)


def fan_to_dot(fan: Fan) -> str:
    """DOT graph of the fan's rays, joined along two-dimensional faces."""
    lines = ["graph fan {"]
    for k, ray in enumerate(fan.rays):
        lines.append(f'  r{k} [label="({",".join(map(str, ray))})"];')
    for a, b in fan_edges(fan):
        lines.append(f"  r{a} -- r{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
