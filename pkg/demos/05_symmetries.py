"""
Counting the symmetries of the boundary
=======================================

Two boundary divisors intersect exactly when their defining partitions
are nested or disjoint on suitable sides.  Relabelling the markings
permutes the resulting intersection graph, and at desk scale one can
count all graph automorphisms exactly: the count matches n!, so the
graph has no symmetries beyond relabelling.  A two-equation integer
system then pins any symmetry fixing every divisor class to a
projectivity, and transpositions are realized model by model as
projectivities or Cremona transformations.
"""

from itertools import permutations

from m0n import (
    boundary_graph,
    graph_automorphism_order,
    kernel_rigidity,
    permutation_action,
    petersen_isomorphic,
    transposition_model_map,
)
from m0n.aut import is_graph_automorphism

# The n=5 boundary graph is the Petersen graph: 2-subsets of a 5-set,
# joined when disjoint.
graph = boundary_graph(5)
print(f"n=5: {graph.vertex_count} vertices, {graph.edge_count} edges")
print(f"isomorphic to the Kneser graph K(5,2): {petersen_isomorphic(graph)}")
print(f"graph automorphisms: {graph_automorphism_order(graph)} (5! = 120)")

# Every marking permutation acts on the graph, the actions are all
# distinct, and nothing else preserves adjacency.
actions = set()
for images in permutations(range(1, 6)):
    action = permutation_action(5, images, graph)
    assert is_graph_automorphism(graph, action)
    actions.add(action)
print(f"distinct actions of the 120 marking permutations: {len(actions)}")

graph6 = boundary_graph(6)
print(f"\nn=6: {graph6.vertex_count} vertices, {graph6.edge_count} edges")
print(f"graph automorphisms: {graph_automorphism_order(graph6)} (6! = 720)")

# The rigidity arithmetic: a symmetry fixing all divisor classes pulls a
# hyperplane back to degree d with multiplicity m at every marked point,
# and the constraints force d=1, m=0 for every n.
print("\nkernel rigidity:")
for n in (5, 8, 20):
    sol = kernel_rigidity(n)
    print(f"  n={n}: degree {sol.degree}, point multiplicity {sol.point_mult}")

# Exchanging two markings acts on a Kapranov model either by a
# projectivity (omitted marking fixed) or by a Cremona transformation
# (omitted marking moved).
act = transposition_model_map(6, 2, 5)
print(f"\ntransposition (2 5) for n=6, model by model:")
for model_label in range(1, 7):
    print(f"  model omitting {model_label}: {act.device(model_label)}")
