"""
The Losev-Manin fan and toric maps to the line
==============================================

The Losev-Manin space sits between the moduli space and its Kapranov
model, and it is toric: its fan is the barycentric subdivision of the
fan of projective (n-3)-space.  Every toric morphism to the projective
line is a linear functional sending each cone into one closed half-line.
An exhaustive exact search shows that the only such functionals are
differences of two undivided rays, so each one comes from forgetting
all but two of the heavy markings.
"""

from m0n import (
    cone_condition,
    cone_halfline_functionals,
    functional_to_forgetful,
    losev_manin_fan,
    nested_sum_condition,
    projective_fan,
)

n = 6
fan = losev_manin_fan(n)
print(f"fan for n={n}: dim {fan.dim}, {fan.ray_count} rays, {fan.cone_count} maximal cones")

# The first n-2 rays are the undivided generators inherited from
# projective space; the rest are barycenters of its faces.
base = projective_fan(n - 3)
print(f"undivided rays: {list(fan.rays[: n - 2])}")
print(f"first subdivided rays: {list(fan.rays[n - 2 : n + 2])} ...")

# Scan every integer functional whose ray values stay in [-2, 2].
found = cone_halfline_functionals(fan, bound=2)
expected = (n - 2) * (n - 3) // 2
print(f"\nhalf-line functionals found: {len(found)} (expected {expected})")
for g in found:
    a, b = functional_to_forgetful(g, n, fan)
    values = g.values_on(fan)[: n - 2]
    print(f"  {g}: undivided values {values} -> heavy pair ({a},{b})")

# The half-line condition has a second, fan-free formulation through
# partial sums over nested subsets; the two agree everywhere.
sample = [(1, -1, 0), (1, 1, -1), (2, -1, -1), (0, 0, 1)]
print("\ncone condition vs nested-sum condition:")
for coeffs in sample:
    print(
        f"  {coeffs}: {cone_condition(fan, coeffs)} / {nested_sum_condition(n, coeffs)}"
    )
