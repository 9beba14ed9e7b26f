"""Kapranov models and vital linear subspaces.

A Kapranov model of the moduli space of stable n-pointed rational curves
is indexed by the marking i it omits: the remaining n-1 markings label
points in linear general position in projective (n-3)-space, and the
model realizes the moduli space as an iterated blow-up of that space
along the linear spans of subsets of the points.  The tautological class
pulled back from the hyperplane class is tagged psi_i.

No coordinates are ever stored.  In general position the span of k
labelled points has dimension k-1 as long as k <= n-3, so all incidence
and dimension bookkeeping reduces to exact arithmetic on label sets.
The dictionary between spans and boundary divisors is:

    span of the points labelled by J  <->  boundary named by J + {i}

and in the other direction a boundary divisor maps to the span of the
side containing the omitted label i, with i removed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .boundaries import (
    BoundaryIndex,
    canonical_boundary,
    check_labels,
    check_marking_count,
    full_marking_set,
)
from .errors import ArityError, LabelError, SizeError


@dataclass(frozen=True)
class KapranovModel:
    """One projective model of the moduli space, indexed by the omitted marking."""

    n: int
    omitted: int

    def __post_init__(self):
        check_marking_count(self.n)
        check_labels(self.n, (self.omitted,))

    @property
    def ambient_dim(self) -> int:
        """Dimension of the ambient projective space, n - 3."""
        return self.n - 3

    @property
    def point_labels(self) -> frozenset[int]:
        """Labels of the n-1 blown-up points: every marking except the omitted one."""
        return full_marking_set(self.n) - {self.omitted}

    @property
    def psi_class(self) -> str:
        """Tag of the tautological line bundle class realized by this model."""
        return f"psi_{self.omitted}"

    def __str__(self) -> str:
        return f"model(n={self.n}, omitted={self.omitted})"


@dataclass(frozen=True)
class VitalSpace:
    """Span of a subset of the marked points of a Kapranov model.

    The span of k points in general position has dimension k-1, which is
    only guaranteed while k <= n-3; larger subsets span the whole space
    and are rejected.
    """

    model: KapranovModel
    span: frozenset[int]

    def __post_init__(self):
        labels = check_labels(self.model.n, self.span)
        if self.model.omitted in labels:
            raise LabelError(
                f"label {self.model.omitted} is omitted by {self.model} "
                "and does not name a point"
            )
        if not labels:
            raise SizeError("a vital space spans at least one point")
        if len(labels) > self.model.n - 3:
            raise SizeError(
                f"{len(labels)} points span the whole space for n={self.model.n}; "
                f"vital spans hold at most {self.model.n - 3} points"
            )

    @property
    def dim(self) -> int:
        return len(self.span) - 1

    @property
    def codim(self) -> int:
        return self.model.ambient_dim - self.dim

    @property
    def is_point(self) -> bool:
        return len(self.span) == 1

    @property
    def is_hyperplane(self) -> bool:
        return self.codim == 1

    def __str__(self) -> str:
        return f"V^{self.model.omitted}_{{{','.join(map(str, sorted(self.span)))}}}"


def vital_span(model: KapranovModel, labels: Iterable[int]) -> VitalSpace:
    """The vital subspace spanned by the given point labels of the model."""
    return VitalSpace(model, frozenset(labels))


def vital_to_boundary(v: VitalSpace) -> BoundaryIndex:
    """Boundary divisor whose proper transform is the blow-up of this span.

    The span of the points labelled by J corresponds to the boundary
    named by J together with the omitted label.
    """
    return canonical_boundary(v.model.n, v.span | {v.model.omitted})


def boundary_image(model: KapranovModel, b: BoundaryIndex) -> VitalSpace:
    """Vital subspace a boundary divisor contracts to in the given model.

    Uses the side of the partition containing the omitted label; removing
    that label leaves between 1 and n-3 point labels, so the image is
    always a genuine vital span and round-trips through vital_to_boundary.
    """
    if model.n != b.n:
        raise ArityError(f"mixed marking counts n={model.n} and n={b.n}")
    side = b.side_containing(model.omitted)
    return VitalSpace(model, side - {model.omitted})


def restrict_model(model: KapranovModel, h: int, k: int) -> tuple[KapranovModel, dict[int, int]]:
    """Merge two markings and drop to the model with one marking fewer.

    Geometrically this restricts the model to the vital hyperplane where
    the points labelled h and k collide.  Labels are renumbered to keep
    the marking set contiguous: the merged pair keeps the smaller of the
    two old labels and every surviving label is compressed in order.
    Returns the restricted model together with the full old-to-new label
    map (h and k map to the same new label).

    The omitted marking must survive, so it cannot be h or k.
    """
    check_labels(model.n, (h, k))
    if h == k:
        raise LabelError(f"need two distinct markings to merge, got {h} twice")
    if model.omitted in (h, k):
        raise LabelError(
            f"cannot merge the omitted marking {model.omitted} of {model}"
        )
    if model.n - 1 < 4:
        raise SizeError(f"restriction below 4 markings from n={model.n}")
    lo, hi = min(h, k), max(h, k)
    survivors = sorted(full_marking_set(model.n) - {hi})
    relabel = {old: new for new, old in enumerate(survivors, start=1)}
    relabel[hi] = relabel[lo]
    return KapranovModel(model.n - 1, relabel[model.omitted]), relabel
