"""
Boundary divisors and Kapranov models
=====================================

A stable curve with n marked points degenerates along boundary divisors,
one per way of splitting the markings into two sides with at least two
labels each.  The same space has one projective model per omitted
marking, and each boundary divisor appears in a model as the linear span
of some of its marked points.  This script walks the dictionary both
ways.
"""

from m0n import (
    KapranovModel,
    boundary_count,
    boundary_image,
    canonical_boundary,
    enumerate_boundaries,
    restrict_model,
    vital_span,
    vital_to_boundary,
)

# Boundary divisors are named by subsets, canonicalized to the side
# holding label 1 so that a subset and its complement get the same name.
n = 6
print(f"boundary divisors for n={n}: {boundary_count(n)}")
for b in enumerate_boundaries(n)[:6]:
    print(f"  {b}   (other side {sorted(set(range(1, n + 1)) - b.rep)})")
print("  ...")

same = canonical_boundary(n, {3, 4, 5, 6}) == canonical_boundary(n, {1, 2})
print(f"{{3,4,5,6}} and {{1,2}} name the same divisor: {same}")

# Pick the model that omits marking 4.  Its points are labelled by the
# other five markings and live in projective (n-3)-space.
model = KapranovModel(n, 4)
print(f"\n{model}: ambient dimension {model.ambient_dim},", end=" ")
print(f"points {sorted(model.point_labels)}, class {model.psi_class}")

# The span of a label set J corresponds to the boundary named J + {4}.
v = vital_span(model, {1, 2})
print(f"span {v}: dim {v.dim}, codim {v.codim}")
print(f"its boundary divisor: {vital_to_boundary(v)}")

# In the other direction a boundary divisor contracts onto the span of
# the side containing the omitted label, minus that label.
b = canonical_boundary(n, {1, 2})
for omitted in (1, 3):
    image = boundary_image(KapranovModel(n, omitted), b)
    print(f"divisor {b} in the model omitting {omitted}: {image} (dim {image.dim})")

# Merging two markings restricts the model to a vital hyperplane and
# renumbers the survivors; the merged pair keeps the smaller label.
smaller, relabel = restrict_model(model, 5, 6)
print(f"\nmerging markings 5 and 6: {smaller}")
print(f"label map: {relabel}")
