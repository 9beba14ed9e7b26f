"""Forgetful maps, their sections, projections, and fiber bookkeeping.

A forgetful map drops a subset of the markings of a stable pointed curve
and stabilizes the result.  What matters combinatorially is the forgotten
set together with an optional relabeling of the survivors, so that is all
a ForgetfulMap stores; equality of maps is plain set and mapping equality.

Read in a Kapranov model, a forgetful map becomes a linear projection:
from the span of the forgotten labels when the model's omitted marking
survives, and from a Cremona-transported system of degree r - 2 when the
omitted marking is itself forgotten (r the number of surviving markings).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .boundaries import (
    BoundaryIndex,
    canonical_boundary,
    check_labels,
    check_marking_count,
    full_marking_set,
)
from .cremona import (
    ConeShape,
    LinearShape,
    LinearSystemDescriptor,
    PhiType,
    linear_system,
    phi1_transform,
)
from .errors import ArityError, InconsistencyError, LabelError, SizeError
from .kapranov import KapranovModel, VitalSpace, vital_span


@dataclass(frozen=True)
class ForgetfulMap:
    """A forgetful map: source markings, forgotten subset, survivor relabeling.

    labels is the source marking set, forgotten the subset it drops, and
    relabel a bijection from the survivors onto the target marking set,
    stored as sorted (source, target) pairs.  Directly built maps use the
    identity relabeling; compositions may not.
    """

    labels: frozenset[int]
    forgotten: frozenset[int]
    relabel: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.forgotten:
            raise SizeError("a forgetful map forgets at least one marking")
        if not self.forgotten <= self.labels:
            raise LabelError(
                f"forgotten markings {sorted(self.forgotten - self.labels)} "
                "are not source markings"
            )
        remembered = self.labels - self.forgotten
        if len(remembered) < 4:
            raise SizeError(
                f"forgetting {len(self.forgotten)} of {len(self.labels)} markings "
                "leaves an unstable target; at least 4 must survive"
            )
        sources = [s for s, _ in self.relabel]
        targets = [t for _, t in self.relabel]
        if frozenset(sources) != remembered or len(set(targets)) != len(targets):
            raise LabelError("relabel must be a bijection on the surviving markings")
        if self.relabel != tuple(sorted(self.relabel)):
            raise LabelError("relabel pairs must be sorted by source label")

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def remembered(self) -> frozenset[int]:
        return self.labels - self.forgotten

    @property
    def target_markings(self) -> frozenset[int]:
        return frozenset(t for _, t in self.relabel)

    @property
    def relabel_map(self) -> dict[int, int]:
        return dict(self.relabel)

    def image_label(self, label: int) -> int:
        """Target marking a surviving source marking ends up as."""
        try:
            return dict(self.relabel)[label]
        except KeyError:
            raise LabelError(f"marking {label} does not survive this map") from None

    def __str__(self) -> str:
        return f"phi_{{{','.join(map(str, sorted(self.forgotten)))}}}"


def forgetful_map(
    markings: int | Iterable[int],
    forgotten: Iterable[int],
    relabel: Mapping[int, int] | None = None,
) -> ForgetfulMap:
    """Build a forgetful map over {1..n} or over an explicit marking set.

    With no relabel argument the survivors keep their names.
    """
    if isinstance(markings, int):
        labels = full_marking_set(markings)
    else:
        labels = frozenset(markings)
        if not labels:
            raise SizeError("empty marking set")
    forgotten = frozenset(forgotten)
    remembered = labels - forgotten
    if relabel is None:
        pairs = tuple((s, s) for s in sorted(remembered))
    else:
        pairs = tuple(sorted(relabel.items()))
    return ForgetfulMap(labels, forgotten, pairs)


def compose_forgetful(outer: ForgetfulMap, inner: ForgetfulMap) -> ForgetfulMap:
    """The forgetful map 'inner, then outer', as a single map.

    outer must be defined on inner's target markings.  The composite
    forgets everything inner forgets plus the survivors whose images
    outer forgets, and relabels through both maps.
    """
    if outer.labels != inner.target_markings:
        raise ArityError(
            f"outer map is defined on {sorted(outer.labels)} but inner "
            f"produces markings {sorted(inner.target_markings)}"
        )
    inner_map = inner.relabel_map
    forgotten = set(inner.forgotten)
    pairs = []
    for source, mid in inner_map.items():
        if mid in outer.forgotten:
            forgotten.add(source)
        else:
            pairs.append((source, outer.image_label(mid)))
    return ForgetfulMap(inner.labels, frozenset(forgotten), tuple(sorted(pairs)))


def _check_projection_args(f: ForgetfulMap, model_label: int) -> int:
    n = f.n
    check_marking_count(n, 5)
    if f.labels != full_marking_set(n):
        raise LabelError(
            "projection bookkeeping needs the standard marking set 1..n, "
            f"got {sorted(f.labels)}"
        )
    check_labels(n, (model_label,))
    return n


def projection_system(f: ForgetfulMap, model_label: int) -> LinearSystemDescriptor:
    """The linear system inducing the forgetful map, read in one model.

    When the model's omitted marking survives, the map is the projection
    from the span of the forgotten labels: hyperplanes through that span.
    When the omitted marking is forgotten, the system is the Cremona
    transport of such a pencil picture and has degree r - 2 with cone
    base-locus data, r being the number of surviving markings.
    """
    n = _check_projection_args(f, model_label)
    forgotten = f.forgotten
    r = n - len(forgotten)
    model = KapranovModel(n, model_label)
    if model_label not in forgotten:
        center = vital_span(model, forgotten)
        mults = {label: 1 for label in center.span}
        return linear_system(
            model, 1, mults, ((center, 1),), PhiType(r, LinearShape(center.codim))
        )
    if r == 4:
        pencil = phi1_transform(n, f.remembered, min(f.remembered), model_label)
        return pencil.linear_system()
    vertex_labels = forgotten - {model_label}
    vertex = VitalSpace(model, vertex_labels) if vertex_labels else None
    base = ((vertex, r - 2),) if vertex is not None else ()
    return LinearSystemDescriptor(
        model, r - 2, None, base, PhiType(r, ConeShape(vertex, r - 3))
    )


@dataclass(frozen=True)
class LinearFiber:
    """General fiber image is linear; the codim index is the forgotten count."""

    codim: int


@dataclass(frozen=True)
class ConeFiber:
    """General fiber image is a cone over a rational normal curve.

    The vertex is the span of the forgotten labels other than the model's
    omitted one, and is None exactly in the universal-curve case where
    only the omitted marking is forgotten.
    """

    vertex: VitalSpace | None
    curve_degree: int


FiberDescriptor = LinearFiber | ConeFiber


def fiber_descriptor(f: ForgetfulMap, model_label: int) -> LinearFiber | ConeFiber:
    """Shape of the image of a general fiber in the given Kapranov model.

    Fibers of the projection from the span of the forgotten labels are
    linear when the omitted marking survives.  When the omitted marking
    is forgotten they are cones with vertex the span of the remaining
    forgotten labels over rational normal curves of degree n - 2 - |I|.
    """
    n = _check_projection_args(f, model_label)
    forgotten = f.forgotten
    if model_label not in forgotten:
        return LinearFiber(codim=len(forgotten))
    model = KapranovModel(n, model_label)
    vertex_labels = forgotten - {model_label}
    vertex = VitalSpace(model, vertex_labels) if vertex_labels else None
    return ConeFiber(vertex=vertex, curve_degree=n - 2 - len(forgotten))


def section_divisor(i: int, j: int, n: int) -> BoundaryIndex:
    """Boundary divisor swept by the section of the universal curve at i through j.

    Forgetting marking i admits n - 1 sections, one per other marking j;
    the image of the section through j is the boundary divisor named by
    the pair {i, j}.
    """
    check_labels(n, (i, j))
    if i == j:
        raise LabelError(f"section needs two distinct markings, got {i} twice")
    return canonical_boundary(n, {i, j})


def factor_through(sys: LinearSystemDescriptor) -> frozenset[int]:
    """Markings whose forgetful maps factor the morphism of the system.

    A marked point forces factorization exactly when every member of the
    system has full multiplicity there, so this returns the point labels
    with multiplicity equal to the degree.  The full multiplicity vector
    must be tracked.
    """
    if sys.mults is None:
        raise InconsistencyError(
            "factorization needs the full multiplicity vector; "
            "this descriptor does not track one"
        )
    return frozenset(label for label, m in sys.mults if m == sys.degree)
