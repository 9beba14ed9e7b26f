"""
Cremona transport between models
================================

Changing the omitted marking of a Kapranov model is a standard Cremona
transformation of projective space.  Vital spans move by exact label
arithmetic, boundary names do not move at all, and a pencil of
hyperplanes through a codimension-2 span turns into a pencil of quadric
cones.  This script transports spans and one full pencil.
"""

from m0n import (
    KapranovModel,
    classify_phi_type,
    cremona_vital,
    phi1_normal_form,
    phi1_transform,
    transform_degree,
    vital_span,
    vital_to_boundary,
)

n = 7
source = KapranovModel(n, 4)
v = vital_span(source, {1, 2})
print(f"start: {v} in {source}, boundary {vital_to_boundary(v)}")

# Transport to two other models.  Every call computes the image twice
# (by closed-form label arithmetic and through the boundary name) and
# insists the answers agree.
for target in (5, 1):
    image = cremona_vital(source, target, v)
    print(f"  to model {target}: {image}, boundary {vital_to_boundary(image)}")

# Round trip: both legs fix the boundary name, so we come back exactly.
back = cremona_vital(KapranovModel(n, 5), 4, cremona_vital(source, 5, v))
print(f"there and back: {back} (equal to start: {back == v})")

# A fibration remembering markings {1,2,3,4} is, in the model omitting
# 4, the pencil of hyperplanes through the span of the forgotten labels.
remembered = frozenset({1, 2, 3, 4})
pencil = phi1_normal_form(n, remembered, 4)
center, _ = pencil.base_components[0]
print(f"\npencil normal form: degree {pencil.degree}, base {center} (codim {center.codim})")
print(f"type label: {classify_phi_type(pencil).label}")

# Read the same pencil in the model omitting the forgotten marking 5.
# The degree doubles and the base locus becomes four codimension-2
# spans through a common singular core.
quadrics = phi1_transform(n, remembered, 4, 5)
print(f"\ntransported to model 5: degree {quadrics.degree}")
for comp in quadrics.components:
    print(f"  component {comp}")
print(f"singular along {quadrics.singular_locus}")

# The transported system still carries full multiplicity data, so the
# inverse transformation recovers the original degree 1.
system = quadrics.linear_system()
print(f"multiplicities: {system.mult_map}")
print(f"degree after transporting back: {transform_degree(system, 4)}")
print(f"certified type: {classify_phi_type(system, quadrics.certificate()).label}")
