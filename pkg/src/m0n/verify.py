"""One-shot invariant suite over every module, for a single marking count.

Each check compares an independently computable expectation against the
engine's answer and reports a CheckResult; the CLI renders these as
pass/fail lines.  Everything here is deterministic: sweeps are exhaustive
where desk-scale allows and strided (never randomized) where not.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import factorial

from . import aut, boundaries, cremona, forgetful, kapranov, toric
from .errors import M0nError


@dataclass
class CheckResult:
    name: str
    passed: bool
    expected: str
    actual: str

    def line(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return f"check {self.name}: {verdict} (expected {self.expected}, actual {self.actual})"


def _result(name: str, expected, actual) -> CheckResult:
    return CheckResult(name, expected == actual, str(expected), str(actual))


def _all_vitals(model: kapranov.KapranovModel) -> list[kapranov.VitalSpace]:
    labels = sorted(model.point_labels)
    out = []
    for size in range(1, model.n - 2):
        for span in combinations(labels, size):
            out.append(kapranov.VitalSpace(model, frozenset(span)))
    return out


def check_boundary_counts(n: int) -> list[CheckResult]:
    listed = boundaries.enumerate_boundaries(n)
    # independent oracle: canonicalize every admissible subset by brute force
    seen = set()
    labels = sorted(boundaries.full_marking_set(n))
    for size in range(2, n - 1):
        for sub in combinations(labels, size):
            side = frozenset(sub) if 1 in sub else frozenset(labels) - frozenset(sub)
            seen.add(side)
    return [
        _result("boundary-count-formula", boundaries.boundary_count(n), len(listed)),
        _result("boundary-count-bruteforce", len(seen), len(listed)),
        _result("boundary-list-deduplicated", len(listed), len(set(listed))),
        _result(
            "boundary-list-sorted",
            True,
            listed == sorted(listed, key=lambda b: sorted(b.rep)),
        ),
        _result(
            "boundary-canonical-idempotent",
            True,
            all(
                boundaries.canonical_boundary(n, b.rep) == b
                and boundaries.canonical_boundary(
                    n, boundaries.complement(n, b.rep)
                )
                == b
                for b in listed
            ),
        ),
    ]


def check_vital_roundtrip(n: int) -> list[CheckResult]:
    listed = boundaries.enumerate_boundaries(n)
    ok = True
    for omitted in range(1, n + 1):
        model = kapranov.KapranovModel(n, omitted)
        for b in listed:
            v = kapranov.boundary_image(model, b)
            if kapranov.vital_to_boundary(v) != b:
                ok = False
    return [_result("vital-boundary-roundtrip", True, ok)]


def check_cremona(n: int) -> list[CheckResult]:
    mismatches = 0
    involution_ok = True
    for i in range(1, n + 1):
        model = kapranov.KapranovModel(n, i)
        vitals = _all_vitals(model)
        for j in model.point_labels:
            back = kapranov.KapranovModel(n, j)
            for v in vitals:
                routed = cremona.cremona_vital_via_boundary(model, j, v)
                closed = cremona.cremona_vital_closed_form(model, j, v)
                if routed != closed:
                    mismatches += 1
                if cremona.cremona_vital(back, i, closed) != v:
                    involution_ok = False
    results = [
        _result("cremona-route-equivalence", 0, mismatches),
        _result("cremona-involution", True, involution_ok),
    ]
    cocycle_ok = True
    for i, j, k in permutations(range(1, n + 1), 3):
        model = kapranov.KapranovModel(n, i)
        mid = kapranov.KapranovModel(n, j)
        for v in _all_vitals(model):
            direct = cremona.cremona_vital(model, k, v)
            stepped = cremona.cremona_vital(mid, k, cremona.cremona_vital(model, j, v))
            if direct != stepped:
                cocycle_ok = False
    results.append(_result("cremona-cocycle", True, cocycle_ok))
    return results


def check_pencils(n: int) -> list[CheckResult]:
    degrees_ok = True
    inverse_ok = True
    classify_ok = True
    labels = range(1, n + 1)
    for remembered in combinations(labels, 4):
        rset = frozenset(remembered)
        forgotten = boundaries.complement(n, rset)
        for i in remembered:
            normal = cremona.phi1_normal_form(n, rset, i)
            if cremona.classify_phi_type(normal) != cremona.PhiType(
                4, cremona.LinearShape(2)
            ):
                classify_ok = False
            for j in sorted(forgotten):
                pencil = cremona.phi1_transform(n, rset, i, j)
                if pencil.degree != 2:
                    degrees_ok = False
                system = pencil.linear_system()
                if cremona.transform_degree(system, i) != 1:
                    inverse_ok = False
                if cremona.classify_phi_type(system, pencil.certificate()) is None:
                    classify_ok = False
    return [
        _result("pencil-transform-degree-2", True, degrees_ok),
        _result("pencil-inverse-degree-1", True, inverse_ok),
        _result("pencil-classification", True, classify_ok),
    ]


def check_forgetful(n: int) -> list[CheckResult]:
    fiber_ok = True
    degree_ok = True
    factor_ok = True
    labels = sorted(range(1, n + 1))
    subsets = [
        frozenset(c)
        for size in range(1, n - 3)
        for c in combinations(labels, size)
    ]
    for forgotten in subsets:
        f = forgetful.forgetful_map(n, forgotten)
        r = n - len(forgotten)
        for j in labels:
            fiber = forgetful.fiber_descriptor(f, j)
            if j in forgotten:
                want_vertex = (
                    kapranov.VitalSpace(
                        kapranov.KapranovModel(n, j), forgotten - {j}
                    )
                    if forgotten - {j}
                    else None
                )
                if not isinstance(fiber, forgetful.ConeFiber):
                    fiber_ok = False
                elif fiber.curve_degree != n - 2 - len(forgotten) or fiber.vertex != want_vertex:
                    fiber_ok = False
            else:
                if not isinstance(fiber, forgetful.LinearFiber):
                    fiber_ok = False
                elif fiber.codim != len(forgotten):
                    fiber_ok = False
            system = forgetful.projection_system(f, j)
            want_degree = r - 2 if j in forgotten else 1
            if system.degree != want_degree:
                degree_ok = False
            if j not in forgotten and forgetful.factor_through(system) != forgotten:
                factor_ok = False
    return [
        _result("fiber-descriptor-laws", True, fiber_ok),
        _result("projection-degree-law", True, degree_ok),
        _result("factorization-criterion", True, factor_ok),
    ]


def check_compositions(n: int) -> list[CheckResult]:
    if n > 8:
        return []
    labels = list(range(1, n + 1))
    budget = n - 4
    pair_ok = True
    for assignment in product(range(3), repeat=n):
        groups: dict[int, set[int]] = {1: set(), 2: set()}
        for label, slot in zip(labels, assignment):
            if slot:
                groups[slot].add(label)
        if not all(groups.values()) or sum(map(len, groups.values())) > budget:
            continue
        first = forgetful.forgetful_map(n, groups[1])
        second = forgetful.forgetful_map(first.target_markings, groups[2])
        composite = forgetful.compose_forgetful(second, first)
        if composite.forgotten != groups[1] | groups[2]:
            pair_ok = False
        # naive tracing: push every label through both maps in turn
        surviving = {s: s for s in labels}
        for fmap in (first, second):
            surviving = {
                s: fmap.relabel_map[t]
                for s, t in surviving.items()
                if t not in fmap.forgotten
            }
        if surviving != composite.relabel_map:
            pair_ok = False
    results = [_result("forgetful-composition-tracing", True, pair_ok)]
    if n < 7:
        return results
    assoc_ok = True
    for assignment in product(range(4), repeat=n):
        groups = {1: set(), 2: set(), 3: set()}
        for label, slot in zip(labels, assignment):
            if slot:
                groups[slot].add(label)
        if not all(groups.values()) or sum(map(len, groups.values())) > budget:
            continue
        first = forgetful.forgetful_map(n, groups[1])
        second = forgetful.forgetful_map(first.target_markings, groups[2])
        third = forgetful.forgetful_map(second.target_markings, groups[3])
        left = forgetful.compose_forgetful(
            third, forgetful.compose_forgetful(second, first)
        )
        right = forgetful.compose_forgetful(
            forgetful.compose_forgetful(third, second), first
        )
        if left != right or left.forgotten != groups[1] | groups[2] | groups[3]:
            assoc_ok = False
    results.append(_result("forgetful-composition-associative", True, assoc_ok))
    return results


def check_fan(n: int) -> list[CheckResult]:
    fan = toric.losev_manin_fan(n)
    undivided = toric.projective_fan(n - 3)
    return [
        _result("fan-ray-count", 2 ** (n - 2) - 2, fan.ray_count),
        _result("fan-cone-count", factorial(n - 2), fan.cone_count),
        _result(
            "fan-keeps-undivided-rays",
            True,
            fan.rays[: n - 2] == undivided.rays,
        ),
    ]


def check_halfline(n: int) -> list[CheckResult]:
    fan = toric.losev_manin_fan(n)
    solutions = toric.cone_halfline_functionals(fan, 2)
    expected = (n - 2) * (n - 3) // 2
    support_ok = True
    pairs = set()
    for g in solutions:
        try:
            pairs.add(toric.functional_to_forgetful(g, n))
        except M0nError:
            support_ok = False
    agree = True
    stride = 1 if n <= 7 else 7
    for k, cand in enumerate(product(range(-2, 3), repeat=fan.dim)):
        if k % stride or not any(cand):
            continue
        if toric.cone_condition(fan, cand) != toric.nested_sum_condition(n, cand):
            agree = False
    return [
        _result("halfline-class-count", expected, len(solutions)),
        _result("halfline-support-2", True, support_ok),
        _result("halfline-distinct-pairs", expected, len(pairs)),
        _result("halfline-dual-route", True, agree),
    ]


def check_rigidity(n: int) -> list[CheckResult]:
    sol = aut.kernel_rigidity(n)
    return [
        _result("rigidity-degree", 1, sol.degree),
        _result("rigidity-point-mult", 0, sol.point_mult),
    ]


def check_sections(n: int) -> list[CheckResult]:
    ok = True
    for i in range(1, n + 1):
        model = kapranov.KapranovModel(n, i)
        for j in range(1, n + 1):
            if i == j:
                continue
            divisor = forgetful.section_divisor(i, j, n)
            image = kapranov.boundary_image(model, divisor)
            if image.span != frozenset({j}):
                ok = False
    return [_result("section-divisor-is-marked-point", True, ok)]


def check_graph(n: int) -> list[CheckResult]:
    graph = aut.boundary_graph(n)
    results = [
        _result("graph-vertex-count", boundaries.boundary_count(n), graph.vertex_count),
        _result(
            "graph-adjacency-symmetric",
            True,
            bool((graph.adjacency == graph.adjacency.T).all())
            and not graph.adjacency.diagonal().any(),
        ),
    ]
    if n == 5:
        results.append(_result("graph-petersen", True, aut.petersen_isomorphic(graph)))
        results.append(_result("graph-edge-count", 15, graph.edge_count))
        results.append(
            _result("graph-automorphism-order", 120, aut.graph_automorphism_order(graph))
        )
    if n <= 7:
        actions = set()
        auto_ok = True
        for images in permutations(range(1, n + 1)):
            action = aut.permutation_action(n, images, graph)
            actions.add(action)
            if not aut.is_graph_automorphism(graph, action):
                auto_ok = False
        results.append(_result("embedding-distinct-actions", factorial(n), len(actions)))
        results.append(_result("embedding-actions-preserve-adjacency", True, auto_ok))
    else:
        auto_ok = True
        for i, j in combinations(range(1, n + 1), 2):
            action = aut.permutation_action(n, aut.transposition(n, i, j), graph)
            if not aut.is_graph_automorphism(graph, action):
                auto_ok = False
        results.append(
            _result("embedding-transpositions-preserve-adjacency", True, auto_ok)
        )
    consistent = True
    for i, j in combinations(range(1, n + 1), 2):
        act = aut.transposition_model_map(n, i, j)
        model = kapranov.KapranovModel(n, i)
        if act.device(i) != "cremona" or act.device(j) != "cremona":
            consistent = False
        for b in graph.vertices:
            if act.on_boundary(act.on_boundary(b)) != b:
                consistent = False
            via_relabel = kapranov.boundary_image(model, act.on_boundary(b))
            via_cremona = aut.permute_vital(
                act.sigma,
                cremona.cremona_vital(model, j, kapranov.boundary_image(model, b)),
            )
            if via_relabel != via_cremona:
                consistent = False
    results.append(_result("transposition-cremona-consistency", True, consistent))
    return results


def run_suite(n: int) -> list[CheckResult]:
    """Every applicable check for one marking count; 5 <= n <= 9."""
    boundaries.check_marking_count(n, 5)
    if n > 9:
        raise M0nError(f"the verification suite is desk-scale, n <= 9; got n={n}")
    out: list[CheckResult] = []
    out += check_boundary_counts(n)
    out += check_vital_roundtrip(n)
    out += check_cremona(n)
    out += check_pencils(n)
    out += check_forgetful(n)
    out += check_compositions(n)
    out += check_fan(n)
    out += check_halfline(n)
    out += check_rigidity(n)
    out += check_sections(n)
    out += check_graph(n)
    return out
