"""
Forgetful maps, projections, and their fibers
=============================================

Dropping a subset of the markings is a morphism to a smaller moduli
space.  Read in a Kapranov model, the map is a linear projection when
the model's omitted marking survives, and a Cremona-transported system
of higher degree when it does not.  The image of a general fiber changes
shape accordingly: a linear space in the first case, a cone over a
rational normal curve in the second.
"""

from m0n import (
    compose_forgetful,
    factor_through,
    fiber_descriptor,
    forgetful_map,
    projection_system,
    section_divisor,
)

n = 7
f = forgetful_map(n, {6, 7})
print(f"{f}: forgets {sorted(f.forgotten)}, remembers {sorted(f.remembered)}")

# In a model whose omitted marking survives the map is the projection
# from the span of the forgotten labels: degree 1, linear fibers.
sys1 = projection_system(f, 1)
center, _ = sys1.base_components[0]
print(f"\nmodel omitting 1: degree {sys1.degree}, projection from {center}")
print(f"  fiber image: {fiber_descriptor(f, 1)}")
print(f"  factors through forgetting: {sorted(factor_through(sys1))}")

# In a model whose omitted marking is forgotten, the same map is a
# degree r-2 system and general fibers become cones over rational
# normal curves.
sys6 = projection_system(f, 6)
print(f"\nmodel omitting 6: degree {sys6.degree}, type {sys6.phi_type.label}")
fiber = fiber_descriptor(f, 6)
print(f"  fiber image: cone with vertex {fiber.vertex} over a curve of degree {fiber.curve_degree}")

# Forgetting one marking gives the universal curve; its sections sweep
# the boundary divisors named by pairs.
print(f"\nsections of the map forgetting marking 6 (n={n}):")
for j in range(1, n + 1):
    if j != 6:
        print(f"  through {j}: divisor {section_divisor(6, j, n)}")

# Forgetful maps compose; the composite forgets the union and threads
# any relabeling through both maps.
first = forgetful_map(n, {7})
second = forgetful_map(6, {6})
both = compose_forgetful(second, first)
print(f"\n{first} then {second} = {both} on {len(both.labels)} markings")
