"""Batch command-line surface over the engine.

One subcommand per operation family, each emitting a single
self-describing report: echoed parameters, results, and check lines with
expected versus actual values.  Output is deterministic for fixed flags;
--json emits the same report as one JSON object, --timing appends the
elapsed wall time (and is therefore off by default to keep runs
byte-identical).  Exit codes: 0 success, 1 check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from math import factorial

from . import aut, boundaries, cremona, forgetful, kapranov, toric, verify
from .errors import M0nError, ShapeViolationError


@dataclass
class Report:
    command: str
    params: list[tuple[str, object]] = field(default_factory=list)
    results: list[tuple[str, object]] = field(default_factory=list)
    checks: list[verify.CheckResult] = field(default_factory=list)
    raw: str | None = None
    elapsed_ms: float | None = None

    def param(self, key: str, value) -> None:
        self.params.append((key, value))

    def result(self, key: str, value) -> None:
        self.results.append((key, value))

    def check(self, name: str, expected, actual) -> None:
        self.checks.append(
            verify.CheckResult(name, expected == actual, str(expected), str(actual))
        )

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_text(self) -> str:
        if self.raw is not None:
            return self.raw
        lines = [f"command: {self.command}"]
        for key, value in self.params:
            lines.append(f"param {key}: {value}")
        for key, value in self.results:
            if isinstance(value, (list, tuple)):
                lines.append(f"{key}[{len(value)}]:")
                lines.extend(f"  {item}" for item in value)
            else:
                lines.append(f"{key}: {value}")
        for c in self.checks:
            lines.append(c.line())
        if self.elapsed_ms is not None:
            lines.append(f"elapsed_ms: {self.elapsed_ms:.1f}")
        lines.append(f"status: {'ok' if self.ok else 'fail'}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        doc: dict[str, object] = {
            "command": self.command,
            "params": {k: v for k, v in self.params},
            "results": {
                k: (list(v) if isinstance(v, tuple) else v) for k, v in self.results
            },
            "checks": [
                {
                    "name": c.name,
                    "passed": c.passed,
                    "expected": c.expected,
                    "actual": c.actual,
                }
                for c in self.checks
            ],
            "status": "ok" if self.ok else "fail",
        }
        if self.raw is not None:
            doc["raw"] = self.raw
        if self.elapsed_ms is not None:
            doc["elapsed_ms"] = round(self.elapsed_ms, 1)
        return json.dumps(doc, indent=2) + "\n"


def _parse_labels(text: str) -> frozenset[int]:
    try:
        return frozenset(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise M0nError(f"expected comma-separated integers, got {text!r}") from None


def _parse_mults(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in text.split(","):
        if part.strip() == "":
            continue
        try:
            label, mult = part.split(":")
            out[int(label)] = int(mult)
        except ValueError:
            raise M0nError(
                f"expected label:mult pairs like '6:1,7:1', got {text!r}"
            ) from None
    return out


def _describe_system(report: Report, sys_desc: cremona.LinearSystemDescriptor) -> None:
    report.result("model", str(sys_desc.model))
    report.result("degree", sys_desc.degree)
    if sys_desc.mults is None:
        report.result("mults", "untracked")
    else:
        report.result(
            "mults", [f"{label}:{m}" for label, m in sys_desc.mults]
        )
    report.result(
        "base_components",
        [f"{comp} mult {m}" for comp, m in sys_desc.base_components],
    )
    if sys_desc.phi_type is not None:
        phi = sys_desc.phi_type
        report.result("phi_label", phi.label)
        report.result("phi_target_markings", phi.r)
        if isinstance(phi.shape, cremona.LinearShape):
            report.result("phi_shape", f"linear codim {phi.shape.codim}")
        else:
            vertex = phi.shape.vertex
            report.result(
                "phi_shape",
                f"cone vertex {'(empty)' if vertex is None else vertex} "
                f"family index {phi.shape.family_index}",
            )


def _cmd_boundaries(args, report: Report) -> None:
    listed = boundaries.enumerate_boundaries(args.n)
    report.result("count", len(listed))
    report.result("boundaries", [str(b) for b in listed])
    report.check("count-formula", boundaries.boundary_count(args.n), len(listed))


def _cmd_vital(args, report: Report) -> None:
    model = kapranov.KapranovModel(args.n, args.model)
    v = kapranov.vital_span(model, _parse_labels(args.set))
    b = kapranov.vital_to_boundary(v)
    report.result("model", str(model))
    report.result("psi_class", model.psi_class)
    report.result("vital", str(v))
    report.result("dim", v.dim)
    report.result("codim", v.codim)
    report.result("is_hyperplane", v.is_hyperplane)
    report.result("boundary", str(b))
    report.check("boundary-roundtrip", str(v), str(kapranov.boundary_image(model, b)))


def _cmd_cremona(args, report: Report) -> None:
    model = kapranov.KapranovModel(args.n, args.source)
    v = kapranov.vital_span(model, _parse_labels(args.set))
    closed = cremona.cremona_vital_closed_form(model, args.to, v)
    routed = cremona.cremona_vital_via_boundary(model, args.to, v)
    report.result("source", str(v))
    report.result("image_closed_form", str(closed))
    report.result("image_boundary_route", str(routed))
    report.result("image_boundary", str(kapranov.vital_to_boundary(closed)))
    report.check("routes-agree", str(closed), str(routed))


def _cmd_transform_degree(args, report: Report) -> None:
    model = kapranov.KapranovModel(args.n, args.model)
    sys_desc = cremona.linear_system(model, args.d, _parse_mults(args.mults))
    out = cremona.transform_degree(sys_desc, args.to)
    report.result("input_degree", args.d)
    report.result("target_label", args.to)
    report.result("transformed_degree", out)


def _cmd_forgetful(args, report: Report) -> None:
    forgotten = _parse_labels(args.forget)
    f = forgetful.forgetful_map(args.n, forgotten)
    model_label = args.model if args.model is not None else min(f.remembered)
    report.result("forgotten", "{" + ",".join(map(str, sorted(forgotten))) + "}")
    report.result("remembered_count", len(f.remembered))
    system = forgetful.projection_system(f, model_label)
    _describe_system(report, system)
    fiber = forgetful.fiber_descriptor(f, model_label)
    if isinstance(fiber, forgetful.LinearFiber):
        report.result("fiber", f"linear codim {fiber.codim}")
    else:
        vertex = "(empty)" if fiber.vertex is None else str(fiber.vertex)
        report.result("fiber", f"cone vertex {vertex} curve degree {fiber.curve_degree}")
        report.check("fiber-curve-degree", args.n - 2 - len(forgotten), fiber.curve_degree)
    if system.mults is not None:
        factors = forgetful.factor_through(system)
        report.result(
            "factors_through", "{" + ",".join(map(str, sorted(factors))) + "}"
        )
    expected_degree = 1 if model_label not in forgotten else args.n - len(forgotten) - 2
    report.check("projection-degree-law", expected_degree, system.degree)


def _cmd_fan(args, report: Report) -> None:
    fan = toric.losev_manin_fan(args.n)
    if args.emit == "dot":
        report.raw = toric.fan_to_dot(fan)
        return
    if args.emit == "text":
        report.raw = toric.fan_to_text(fan)
        return
    report.result("dim", fan.dim)
    report.result("ray_count", fan.ray_count)
    report.result("cone_count", fan.cone_count)
    if args.emit == "rays":
        report.result(
            "rays", [f"{k}: ({','.join(map(str, r))})" for k, r in enumerate(fan.rays)]
        )
    if args.emit == "cones":
        report.result(
            "cones",
            [
                f"{k}: {' '.join(map(str, sorted(c)))}"
                for k, c in enumerate(fan.maximal_cones)
            ],
        )
    report.check("ray-count-formula", 2 ** (args.n - 2) - 2, fan.ray_count)
    report.check("cone-count-formula", factorial(args.n - 2), fan.cone_count)


def _cmd_classify_p1(args, report: Report) -> None:
    fan = toric.losev_manin_fan(args.n)
    solutions = toric.cone_halfline_functionals(fan, args.bound)
    report.result(
        "search_note",
        f"exhaustive over integer functionals with ray values in [-{args.bound},{args.bound}]",
    )
    report.result("class_count", len(solutions))
    lines = []
    support_ok = True
    witness = ""
    for g in solutions:
        try:
            a, b = toric.functional_to_forgetful(g, args.n, fan)
            lines.append(f"{g} -> rays ({a},{b})")
        except ShapeViolationError as err:
            support_ok = False
            witness = f"{g}: {err}"
            lines.append(f"{g} -> SHAPE VIOLATION")
    report.result("solutions", lines)
    report.check("support-2-shape", "all support-2", "all support-2" if support_ok else witness)
    if args.bound == 2:
        report.check(
            "class-count-formula", (args.n - 2) * (args.n - 3) // 2, len(solutions)
        )


def _cmd_aut_graph(args, report: Report) -> None:
    graph = aut.boundary_graph(args.n)
    if args.emit == "dot":
        report.raw = aut.graph_to_dot(graph)
        return
    report.result("vertex_count", graph.vertex_count)
    report.result("edge_count", graph.edge_count)
    if args.emit == "adj":
        report.result("adjacency", aut.graph_to_adjacency_lines(graph))
    report.check(
        "vertex-count-formula", boundaries.boundary_count(args.n), graph.vertex_count
    )
    if args.count:
        if graph.vertex_count > 60:
            raise M0nError(
                f"automorphism counting is desk-scale (<= 60 vertices); "
                f"n={args.n} has {graph.vertex_count}"
            )
        order = aut.graph_automorphism_order(graph)
        report.result("automorphism_order", order)
        report.check(
            "divisible-by-marking-permutations",
            0,
            order % factorial(args.n),
        )
        if args.n == 5:
            report.check("petersen-order", 120, order)


def _cmd_rigidity(args, report: Report) -> None:
    sol = aut.kernel_rigidity(args.n)
    report.result("degree", sol.degree)
    report.result("point_mult", sol.point_mult)
    report.check("degree-is-1", 1, sol.degree)
    report.check("point-mult-is-0", 0, sol.point_mult)


def _cmd_verify(args, report: Report) -> None:
    report.checks.extend(verify.run_suite(args.n))
    report.result("checks_run", len(report.checks))


_HANDLERS = {
    "boundaries": _cmd_boundaries,
    "vital": _cmd_vital,
    "cremona": _cmd_cremona,
    "transform-degree": _cmd_transform_degree,
    "forgetful": _cmd_forgetful,
    "fan": _cmd_fan,
    "classify-p1": _cmd_classify_p1,
    "aut-graph": _cmd_aut_graph,
    "rigidity": _cmd_rigidity,
    "verify": _cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit the report as JSON")
    common.add_argument(
        "--timing", action="store_true", help="append elapsed wall time to the report"
    )
    parser = argparse.ArgumentParser(
        prog="m0n",
        description="exact combinatorics of models, boundaries, and fibrations "
        "of the moduli space of stable pointed rational curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundaries", parents=[common], help="list boundary divisor names")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("vital", parents=[common], help="vital span and its boundary name")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--model", type=int, required=True, help="omitted marking of the model")
    p.add_argument("--set", required=True, help="comma-separated point labels")

    p = sub.add_parser("cremona", parents=[common], help="transport a vital span between models")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--from", dest="source", type=int, required=True, help="source model label")
    p.add_argument("--to", type=int, required=True, help="target model label")
    p.add_argument("--set", required=True, help="comma-separated point labels")

    p = sub.add_parser(
        "transform-degree", parents=[common], help="degree of a transformed linear system"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--model", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--d", type=int, required=True, help="degree of the input system")
    p.add_argument(
        "--mults", default="", help="point multiplicities as label:mult pairs, e.g. 6:1,7:1"
    )

    p = sub.add_parser(
        "forgetful", parents=[common], help="projection system and fiber data of a forgetful map"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forget", required=True, help="comma-separated forgotten markings")
    p.add_argument("--model", type=int, help="model label; defaults to the least survivor")

    p = sub.add_parser("fan", parents=[common], help="Losev-Manin fan data")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--emit",
        choices=["summary", "rays", "cones", "text", "dot"],
        default="summary",
    )

    p = sub.add_parser(
        "classify-p1", parents=[common], help="classify functionals mapping the fan to a line"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=2, help="ray-value bound of the search box")

    p = sub.add_parser("aut-graph", parents=[common], help="boundary intersection graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="count graph automorphisms")
    p.add_argument("--emit", choices=["summary", "adj", "dot"], default="summary")

    p = sub.add_parser("rigidity", parents=[common], help="kernel rigidity arithmetic")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run the invariant suite for one n")
    p.add_argument("--n", type=int, required=True)

    return parser


def _check_thread_cap() -> None:
    raw = os.environ.get("M0N_THREADS")
    if raw is None:
        return
    try:
        cap = int(raw)
    except ValueError:
        raise M0nError(f"M0N_THREADS must be a positive integer, got {raw!r}") from None
    if cap < 1:
        raise M0nError(f"M0N_THREADS must be a positive integer, got {raw!r}")
    # the engine is single-threaded and deterministic; any positive cap is satisfied


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    report = Report(command=args.command)
    try:
        _check_thread_cap()
        for key in ("n", "model", "source", "to", "d", "set", "mults", "forget", "bound", "emit", "count"):
            if hasattr(args, key):
                value = getattr(args, key)
                if value is None or value is False or value == "":
                    continue
                report.param(key, value)
        start = time.perf_counter()
        _HANDLERS[args.command](args, report)
        if args.timing:
            report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    except M0nError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
