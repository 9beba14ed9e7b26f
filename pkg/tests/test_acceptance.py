"""End-to-end acceptance checks.

Ten headline guarantees, each as one test that prints a single verdict
line (visible with pytest -rA or -s) and asserts exact values, with wall
clock limits where speed is part of the contract.  Every expectation here
is recomputed independently inside the test body; nothing is read back
from the code under test.
"""

import random
import time
from itertools import combinations, permutations, product
from math import factorial

import numpy as np

from m0n import (
    ConeFiber,
    KapranovModel,
    VitalSpace,
    boundary_graph,
    cremona_vital_closed_form,
    cremona_vital_via_boundary,
    enumerate_boundaries,
    fiber_descriptor,
    forgetful_map,
    graph_automorphism_order,
    kernel_rigidity,
    losev_manin_fan,
    permutation_action,
    petersen_isomorphic,
    phi1_normal_form,
    projective_fan,
    transform_degree,
    cone_halfline_functionals,
)
from m0n.aut import is_graph_automorphism, kneser_graph


def report(tag, ok, detail):
    print(f"acceptance {tag}: {'pass' if ok else 'FAIL'} ({detail})")
    assert ok, f"{tag}: {detail}"


def all_spans(n, omitted):
    labels = [x for x in range(1, n + 1) if x != omitted]
    return [
        frozenset(span)
        for size in range(1, n - 2)
        for span in combinations(labels, size)
    ]


def test_01_cremona_routes_agree_everywhere():
    start = time.perf_counter()
    checked = 0
    mismatches = 0
    for n in range(5, 10):
        for i in range(1, n + 1):
            model = KapranovModel(n, i)
            spans = all_spans(n, i)
            for j in range(1, n + 1):
                if j == i:
                    continue
                for span in spans:
                    v = VitalSpace(model, span)
                    closed = cremona_vital_closed_form(model, j, v)
                    routed = cremona_vital_via_boundary(model, j, v)
                    checked += 1
                    if closed != routed:
                        mismatches += 1
    elapsed = time.perf_counter() - start
    report(
        "01 transport route equivalence",
        mismatches == 0 and elapsed < 10.0,
        f"{checked} transports over n=5..9, {mismatches} mismatches, {elapsed:.2f}s",
    )


def test_02_pencil_normal_form_transforms_to_degree_2():
    bad = 0
    cases = 0
    for n in range(5, 10):
        for remembered in combinations(range(1, n + 1), 4):
            rset = frozenset(remembered)
            forgotten = sorted(set(range(1, n + 1)) - rset)
            for i in remembered:
                normal = phi1_normal_form(n, rset, i)
                for j in forgotten:
                    cases += 1
                    if transform_degree(normal, j) != 2:
                        bad += 1
    report(
        "02 pencil degree after transport",
        bad == 0,
        f"{cases} pencils over n=5..9, {bad} off degree 2",
    )


def test_03_cone_fibers_have_pinned_vertex_and_degree():
    bad = 0
    cases = 0
    for n in range(5, 9):
        for size in range(1, n - 3):
            for combo in combinations(range(1, n + 1), size):
                forgotten = frozenset(combo)
                f = forgetful_map(n, forgotten)
                for j in sorted(forgotten):
                    fiber = fiber_descriptor(f, j)
                    rest = forgotten - {j}
                    want_vertex = (
                        VitalSpace(KapranovModel(n, j), rest) if rest else None
                    )
                    cases += 1
                    if not isinstance(fiber, ConeFiber):
                        bad += 1
                    elif (
                        fiber.curve_degree != n - 2 - size
                        or fiber.vertex != want_vertex
                    ):
                        bad += 1
    report(
        "03 cone fiber vertex and curve degree",
        bad == 0,
        f"{cases} fibers over n=5..8, {bad} wrong",
    )


def test_04_fan_counts_simpliciality_completeness():
    start = time.perf_counter()
    problems = []
    for n in range(5, 9):
        fan = losev_manin_fan(n)
        if fan.ray_count != 2 ** (n - 2) - 2:
            problems.append(f"n={n} rays {fan.ray_count}")
        if fan.cone_count != factorial(n - 2):
            problems.append(f"n={n} cones {fan.cone_count}")
        facets = {}
        for cone in fan.maximal_cones:
            if len(cone) != fan.dim:
                problems.append(f"n={n} non-simplicial cone size {len(cone)}")
                continue
            rows = np.array([fan.rays[k] for k in sorted(cone)])
            if np.linalg.matrix_rank(rows) != fan.dim:
                problems.append(f"n={n} dependent cone {sorted(cone)}")
            for drop in cone:
                facet = cone - {drop}
                facets[facet] = facets.get(facet, 0) + 1
        if any(count != 2 for count in facets.values()):
            problems.append(f"n={n} facet pairing broken")
    elapsed = time.perf_counter() - start
    report(
        "04 fan combinatorics",
        not problems and elapsed < 30.0,
        f"n=5..8 rays/cones/simplicial/facet-paired, {elapsed:.2f}s"
        + (f"; problems: {problems}" if problems else ""),
    )


def test_05_toric_line_classification():
    start = time.perf_counter()
    problems = []
    for n, expected in ((5, 3), (6, 6), (7, 10)):
        fan = losev_manin_fan(n)
        found = cone_halfline_functionals(fan, 2)
        if len(found) != expected:
            problems.append(f"n={n} count {len(found)} != {expected}")
        base = projective_fan(n - 3)
        pairs = set()
        for g in found:
            values = [
                sum(c * x for c, x in zip(g.coeffs, ray)) for ray in base.rays
            ]
            support = [k for k, v in enumerate(values) if v != 0]
            if len(support) != 2 or values[support[0]] + values[support[1]] != 0:
                problems.append(f"n={n} bad support {g.coeffs}: {values}")
            else:
                pairs.add(tuple(support))
        if len(pairs) != expected:
            problems.append(f"n={n} pairs {len(pairs)} != {expected}")
    elapsed = time.perf_counter() - start
    report(
        "05 toric maps to the line",
        not problems and elapsed < 120.0,
        f"counts 3/6/10 for n=5..7, all support-2 opposite, {elapsed:.2f}s"
        + (f"; problems: {problems}" if problems else ""),
    )


def test_06_petersen_graph():
    start = time.perf_counter()
    graph = boundary_graph(5)
    kneser = kneser_graph(5, 2)
    kneser_edges = sum(len(nb) for nb in kneser) // 2
    iso = petersen_isomorphic(graph)
    order = graph_automorphism_order(graph)
    elapsed = time.perf_counter() - start
    ok = (
        graph.vertex_count == len(kneser) == 10
        and graph.edge_count == kneser_edges == 15
        and iso
        and order == 120 == factorial(5)
    )
    report(
        "06 Petersen boundary graph",
        ok and elapsed < 1.0,
        f"10 vertices, 15 edges, Kneser-isomorphic={iso}, order={order}, {elapsed:.2f}s",
    )


def test_07_marking_permutations_embed_into_graph_automorphisms():
    rng = random.Random(7)
    problems = []
    for n in (5, 6, 7):
        graph = boundary_graph(n)
        actions = {}
        for images in permutations(range(1, n + 1)):
            action = permutation_action(n, images, graph)
            actions[images] = action
            if not is_graph_automorphism(graph, action):
                problems.append(f"n={n} non-automorphism {images}")
        if len(set(actions.values())) != factorial(n):
            problems.append(f"n={n} actions not distinct")
        keys = list(actions)
        for _ in range(40):
            sigma, tau = rng.choice(keys), rng.choice(keys)
            composed = tuple(sigma[tau[x - 1] - 1] for x in range(1, n + 1))
            left = actions[composed]
            right = tuple(actions[sigma][k] for k in actions[tau])
            if left != right:
                problems.append(f"n={n} homomorphism broken at {sigma}, {tau}")
    report(
        "07 symmetric group embedding",
        not problems,
        "n! distinct adjacency-preserving actions for n=5..7, composition respected"
        + (f"; problems: {problems}" if problems else ""),
    )


def test_08_kernel_rigidity():
    bad = [
        n
        for n in range(5, 51)
        if (sol := kernel_rigidity(n)).degree != 1 or sol.point_mult != 0
    ]
    report(
        "08 kernel rigidity",
        not bad,
        f"unique solution d=1, m=0 for n=5..50{f'; failed at {bad}' if bad else ''}",
    )


def test_09_boundary_counts_match_brute_force():
    bad = []
    for n in range(4, 13):
        labels = frozenset(range(1, n + 1))
        seen = set()
        for size in range(2, n - 1):
            for combo in combinations(sorted(labels), size):
                group = frozenset(combo)
                seen.add(group if 1 in group else labels - group)
        listed = enumerate_boundaries(n)
        if len(listed) != len(seen) or len(listed) != 2 ** (n - 1) - n - 1:
            bad.append(n)
    report(
        "09 boundary divisor count",
        not bad,
        f"2^(n-1)-n-1 vs brute force for n=4..12{f'; failed at {bad}' if bad else ''}",
    )


def test_10_transport_involution_and_cocycle():
    exceptions = 0
    cases = 0
    for n in range(4, 9):
        models = {i: KapranovModel(n, i) for i in range(1, n + 1)}
        spans = {i: all_spans(n, i) for i in range(1, n + 1)}

        def move(i, j, v):
            out = cremona_vital_closed_form(models[i], j, v)
            if out != cremona_vital_via_boundary(models[i], j, v):
                return None
            return out

        for i, j in permutations(range(1, n + 1), 2):
            for span in spans[i]:
                v = VitalSpace(models[i], span)
                there = move(i, j, v)
                cases += 1
                if there is None or move(j, i, there) != v:
                    exceptions += 1
        for i, j, k in permutations(range(1, n + 1), 3):
            for span in spans[i]:
                v = VitalSpace(models[i], span)
                there = move(i, j, v)
                cases += 1
                if there is None or move(j, k, there) != move(i, k, v):
                    exceptions += 1
    report(
        "10 involution and cocycle laws",
        exceptions == 0,
        f"{cases} cases over n=4..8, {exceptions} exceptions",
    )
