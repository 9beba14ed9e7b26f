"""Standard Cremona transformations between Kapranov models.

The standard Cremona transformation of projective (n-3)-space centered on
n-2 of the n-1 marked points is the classical degree-(n-3) birational
involution; omitting the point p_j from the center realizes the change of
model i -> j.  On vital subspaces the transformation acts by exact label
arithmetic, and on boundary names it acts trivially: transporting a vital
space and re-reading its boundary name returns the name you started with.

Linear systems are tracked as pure bookkeeping data: degree, multiplicity
at each marked point, and named base-locus components.  The degree of the
transformed system follows from intersecting with a general rational
normal curve through the center.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .boundaries import check_labels, check_marking_count, complement
from .errors import ArityError, InconsistencyError, LabelError, SizeError
from .kapranov import (
    KapranovModel,
    VitalSpace,
    boundary_image,
    vital_span,
    vital_to_boundary,
)


@dataclass(frozen=True)
class LinearShape:
    """Base locus is a single linear space of the given codimension."""

    codim: int


@dataclass(frozen=True)
class ConeShape:
    """Base locus is a cone with the given vertex over an index-k family.

    The vertex is None when the cone degenerates to the family itself,
    which happens exactly when the marking count is minimal.
    """

    vertex: VitalSpace | None
    family_index: int


@dataclass(frozen=True)
class PhiType:
    """Fibration type of a one-dimensional-family linear system.

    The field r is the number of markings the fibration remembers; the
    conventional subscript counts the cross-ratio coordinates of the
    target, which is r - 3.  So the pencil case r = 4 carries the label
    Phi_1 even though it remembers four markings.
    """

    r: int
    shape: LinearShape | ConeShape

    def __post_init__(self):
        if self.r < 4:
            raise SizeError(f"a fibration target needs at least 4 markings, got r={self.r}")

    @property
    def label(self) -> str:
        return f"Phi_{self.r - 3}"


@dataclass(frozen=True)
class LinearSystemDescriptor:
    """Bookkeeping data of a linear system on a Kapranov model.

    mults maps every point label of the model to the multiplicity a
    general member has there; it is None when multiplicities are not
    tracked.  base_components lists named base-locus components with
    their multiplicities.  phi_type carries the fibration type when one
    is known at construction time.
    """

    model: KapranovModel
    degree: int
    mults: tuple[tuple[int, int], ...] | None
    base_components: tuple[tuple[VitalSpace, int], ...] = ()
    phi_type: PhiType | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise SizeError(f"degree must be positive, got {self.degree}")
        if self.mults is not None:
            seen = dict(self.mults)
            if frozenset(seen) != self.model.point_labels:
                raise LabelError(
                    f"multiplicity labels {sorted(seen)} must be exactly the "
                    f"point labels of {self.model}"
                )
            for label, m in seen.items():
                if not 0 <= m <= self.degree:
                    raise InconsistencyError(
                        f"multiplicity {m} at point {label} outside [0, degree={self.degree}]"
                    )
            if self.mults != tuple(sorted(seen.items())):
                raise InconsistencyError("multiplicities must be sorted by label")
        for comp, m in self.base_components:
            if comp.model != self.model:
                raise ArityError(f"base component {comp} lives in {comp.model}, not {self.model}")
            if m < 1:
                raise SizeError(f"base component multiplicity must be positive, got {m}")

    @property
    def mult_map(self) -> dict[int, int] | None:
        return None if self.mults is None else dict(self.mults)

    def mult_at(self, label: int) -> int:
        if self.mults is None:
            raise InconsistencyError("this descriptor does not track multiplicities")
        return dict(self.mults)[label]


def linear_system(
    model: KapranovModel,
    degree: int,
    mults: Mapping[int, int] | None = None,
    base_components: Iterable[tuple[VitalSpace, int]] = (),
    phi_type: PhiType | None = None,
) -> LinearSystemDescriptor:
    """Build a descriptor, filling unmentioned point multiplicities with zero."""
    packed = None
    if mults is not None:
        check_labels(model.n, mults.keys())
        bad = set(mults) - model.point_labels
        if bad:
            raise LabelError(f"labels {sorted(bad)} are not points of {model}")
        full = {label: 0 for label in model.point_labels}
        full.update(mults)
        packed = tuple(sorted(full.items()))
    return LinearSystemDescriptor(model, degree, packed, tuple(base_components), phi_type)


def _check_target(model: KapranovModel, target_label: int) -> None:
    check_labels(model.n, (target_label,))
    if target_label == model.omitted:
        raise LabelError(
            f"target label {target_label} is omitted by {model}; "
            "the transformation must move to a different model"
        )


def cremona_vital_closed_form(
    model: KapranovModel, target_label: int, v: VitalSpace
) -> VitalSpace:
    """Image of a vital span under the model change i -> j, by label arithmetic.

    For the span of J in the model omitting i, the image in the model
    omitting j is the span of (J - {j}) + {i} when j is in J, and the
    span of the complement of J + {i} + {j} otherwise.
    """
    _check_target(model, target_label)
    if v.model != model:
        raise ArityError(f"{v} lives in {v.model}, not {model}")
    n, i, j = model.n, model.omitted, target_label
    target = KapranovModel(n, j)
    if j in v.span:
        return VitalSpace(target, (v.span - {j}) | {i})
    return VitalSpace(target, complement(n, v.span | {i}) - {j})


def cremona_vital_via_boundary(
    model: KapranovModel, target_label: int, v: VitalSpace
) -> VitalSpace:
    """Image of a vital span under the model change i -> j, via boundary names.

    The transported span names the same boundary divisor, just read in the
    target model.
    """
    _check_target(model, target_label)
    if v.model != model:
        raise ArityError(f"{v} lives in {v.model}, not {model}")
    return boundary_image(KapranovModel(model.n, target_label), vital_to_boundary(v))


def cremona_vital(model: KapranovModel, target_label: int, v: VitalSpace) -> VitalSpace:
    """Image of a vital span under the standard model change i -> j.

    Computes the boundary-name route and the label-arithmetic closed form
    and insists they agree, so every call doubles as a consistency check.
    """
    by_boundary = cremona_vital_via_boundary(model, target_label, v)
    by_labels = cremona_vital_closed_form(model, target_label, v)
    if by_boundary != by_labels:
        raise InconsistencyError(
            f"transport routes disagree on {v}: {by_boundary} vs {by_labels}"
        )
    return by_labels


def transform_degree(sys: LinearSystemDescriptor, target_label: int) -> int:
    """Degree of the Cremona-transformed system.

    Intersecting a general member with a rational normal curve through
    the n-2 center points gives degree (n-3)*d minus the multiplicities
    at every center, i.e. at every marked point except the target.
    """
    _check_target(sys.model, target_label)
    if sys.mults is None:
        raise InconsistencyError(
            "degree transform needs the full multiplicity vector"
        )
    n = sys.model.n
    total = sum(m for label, m in sys.mults if label != target_label)
    out = (n - 3) * sys.degree - total
    if out < 1:
        raise InconsistencyError(
            f"transformed degree {out} is not positive; "
            "the multiplicity data is inconsistent"
        )
    return out


@dataclass(frozen=True)
class CremonaCertificate:
    """Witness that a descriptor arose from a recorded model change.

    Names the pencil data: the four remembered markings (including the
    source model's omitted label) and the target label the transformation
    moved to.
    """

    n: int
    remembered: frozenset[int]
    source_omitted: int
    target_label: int


@dataclass(frozen=True)
class QuadricPencilDescriptor:
    """Transported pencil of hyperplanes: a pencil of quadrics of rank <= 4.

    components are the four codimension-2 spans that make up the base
    locus; singular_locus is their common intersection, along which every
    member is singular (None when the intersection is empty, which
    happens only at the minimal marking count).
    """

    model: KapranovModel
    source: KapranovModel
    remembered: frozenset[int]
    target_label: int
    degree: int
    components: tuple[VitalSpace, VitalSpace, VitalSpace, VitalSpace]
    singular_locus: VitalSpace | None

    def __post_init__(self):
        if self.degree != 2:
            raise InconsistencyError(f"a quadric pencil has degree 2, got {self.degree}")
        common = None
        for comp in self.components:
            if comp.model != self.model:
                raise ArityError(f"component {comp} lives in {comp.model}, not {self.model}")
            if comp.codim != 2:
                raise InconsistencyError(f"component {comp} has codim {comp.codim}, want 2")
            common = comp.span if common is None else common & comp.span
        for a in self.components:
            for b in self.components:
                if a is not b and (a.span & b.span) != common:
                    raise InconsistencyError(
                        f"pairwise intersection of {a} and {b} differs from the core"
                    )
        want = None if not common else VitalSpace(self.model, common)
        if self.singular_locus != want:
            raise InconsistencyError(
                f"singular locus {self.singular_locus} is not the component core {want}"
            )

    @property
    def vertex_labels(self) -> frozenset[int]:
        return frozenset() if self.singular_locus is None else self.singular_locus.span

    def linear_system(self) -> LinearSystemDescriptor:
        """The same pencil as a plain descriptor with full multiplicity data.

        Members are cones with vertex along the singular locus, so they
        carry multiplicity 2 there and pass simply through the four
        remembered points' spans.
        """
        mults = {label: 1 for label in self.model.point_labels}
        for label in self.vertex_labels:
            mults[label] = 2
        phi = PhiType(4, ConeShape(self.singular_locus, 1))
        return linear_system(
            self.model,
            self.degree,
            mults,
            tuple((comp, 1) for comp in self.components),
            phi,
        )

    def certificate(self) -> CremonaCertificate:
        return CremonaCertificate(
            self.model.n, self.remembered, self.source.omitted, self.target_label
        )


def phi1_normal_form(n: int, remembered: Iterable[int], i: int) -> LinearSystemDescriptor:
    """Pencil of hyperplanes through the span of the forgotten markings.

    This is the normal form of a fibration remembering four markings,
    written in the model that omits one of them: degree 1, base locus the
    codimension-2 span of the forgotten labels.
    """
    check_marking_count(n, 5)
    remembered = check_labels(n, remembered)
    if len(remembered) != 4:
        raise SizeError(f"a pencil remembers exactly 4 markings, got {len(remembered)}")
    if i not in remembered:
        raise LabelError(f"model label {i} must be one of the remembered markings")
    model = KapranovModel(n, i)
    center = vital_span(model, complement(n, remembered))
    mults = {label: 1 for label in center.span}
    return linear_system(
        model, 1, mults, ((center, 1),), PhiType(4, LinearShape(2))
    )


def phi1_transform(
    n: int, remembered: Iterable[int], i: int, target_label: int
) -> QuadricPencilDescriptor:
    """Transport the pencil normal form through the model change i -> j.

    The target label j must be one of the forgotten markings, so the
    pencil's base center meets the transformation's center and the image
    pencil consists of quadrics: degree (n-3)*1 - (n-5) = 2.  Its base
    locus has four codimension-2 components, one per remembered marking,
    and every member is singular along their common core.
    """
    remembered = check_labels(n, remembered)
    normal = phi1_normal_form(n, remembered, i)
    forgotten = complement(n, remembered)
    if target_label not in forgotten:
        raise LabelError(
            f"target label {target_label} must be a forgotten marking "
            f"{sorted(forgotten)}"
        )
    degree = transform_degree(normal, target_label)
    target = KapranovModel(n, target_label)
    shared = forgotten - {target_label}
    components = tuple(
        VitalSpace(target, shared | {h}) for h in sorted(remembered)
    )
    singular = VitalSpace(target, shared) if shared else None
    return QuadricPencilDescriptor(
        model=target,
        source=normal.model,
        remembered=remembered,
        target_label=target_label,
        degree=degree,
        components=components,
        singular_locus=singular,
    )


def classify_phi_type(
    sys: LinearSystemDescriptor,
    certificate: CremonaCertificate | None = None,
) -> PhiType | None:
    """Recognize the fibration type of a descriptor, if any.

    Degree-1 systems based along a single vital space of codimension c
    are fibrations remembering c + 2 markings.  Degree-2 systems are
    recognized only against a supplied certificate: the descriptor must
    match, field for field, the transported pencil the certificate names.
    Anything else returns None.
    """
    if sys.degree == 1:
        if len(sys.base_components) != 1:
            return None
        center, mult = sys.base_components[0]
        if mult != 1:
            return None
        r = center.codim + 2
        if r < 4:
            return None
        return PhiType(r, LinearShape(center.codim))
    if certificate is not None:
        if certificate.n != sys.model.n:
            raise ArityError(
                f"certificate is for n={certificate.n}, descriptor for n={sys.model.n}"
            )
        try:
            pencil = phi1_transform(
                certificate.n,
                certificate.remembered,
                certificate.source_omitted,
                certificate.target_label,
            )
        except (LabelError, SizeError):
            return None
        reference = pencil.linear_system()
        same = (
            sys.model == reference.model
            and sys.degree == reference.degree
            and sys.mults == reference.mults
            and frozenset(sys.base_components) == frozenset(reference.base_components)
        )
        if same:
            return reference.phi_type
    return None
