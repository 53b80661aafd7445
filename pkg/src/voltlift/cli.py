"""Command-line interface.

Commands::

    validate FILE                 parse and validate an instance file
    derive FILE                   print the derived embedding as an instance file
    analyze FILE [--circle NAME]  surface/component/region analysis
    medial FILE [--circle NAME]   total graph with voltages; claw data per circle
    zgraph FILE --circle NAME     z-graph (--method brute|coset|both; --dot/--json)
    verify FILE [--circle NAME]   run every applicable check on one instance
    verify --seed S --count N     randomized verification harness
    example FAMILY PARAMS...      generate a documented example family

Exit codes: 0 success, 1 usage error, 2 validation error, 3 failed check.
"""

from __future__ import annotations

import argparse
import json
import sys

from .families import FAMILIES, FamilyError, generate_example
from .groups import GroupError, make_cyclic
from .medial import (claw_tips_for_circle, crossing_free_group,
                     crossing_free_tip_parts, medial, medial_local_group,
                     total_graph_with_voltages, verify_archdeacon)
from .surface import (SurfaceError, ZGraph, circle_from_edges,
                      circle_orientation_type, is_separating)
from .textfmt import (InstanceFile, ParseError, default_edge_names,
                      instance_for, parse, print_instance)
from .voltage import (VerificationError, VoltageEmbedding, VoltageError,
                      component_count, derive, face_lift_prediction,
                      restricted_voltage_group)
from .zregion import (check_theorem_314, check_theorem_317, circle_net_voltage,
                      compare_zgraphs, fiber_circles,
                      lifts_orientation_preserving, predict_zregion_count,
                      zgraph_for_circle, zregions)
from .fuzz import fuzz


class UsageError(ValueError):
    pass


# -- emission -------------------------------------------------------------


def _label_text(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(_label_text(x) for x in label) + ")"
    if isinstance(label, frozenset):
        return "{" + ",".join(str(x) for x in sorted(label)) + "}"
    return str(label)


def emit_dot(zg: ZGraph, name: str = "zgraph") -> str:
    """DOT text for a z-graph: stable ordering, loops and multi-edges kept."""
    lines = [f"graph {name} {{"]
    for i, label in enumerate(zg.vertex_labels):
        lines.append(f'  n{i} [label="{_label_text(label)}"];')
    for j, (u, v) in enumerate(zg.endpoints):
        lines.append(f'  n{u} -- n{v} [label="{_label_text(zg.edge_labels[j])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _jsonable(obj):
    if isinstance(obj, dict):
        return {_label_text(k) if not isinstance(k, str) else k: _jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, frozenset):
        return sorted(obj)
    return obj


def emit_json(data) -> str:
    return json.dumps(_jsonable(data), indent=2) + "\n"


def zgraph_json(zg: ZGraph) -> dict:
    return {
        "vertices": [_label_text(x) for x in zg.vertex_labels],
        "edges": [{"label": _label_text(zg.edge_labels[j]),
                   "ends": list(zg.endpoints[j])}
                  for j in range(len(zg.edge_labels))],
    }


# -- command helpers ------------------------------------------------------


def _load(path: str) -> InstanceFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as exc:
        raise UsageError(str(exc)) from None


def _named_circle(inst: InstanceFile, name: str):
    if name not in inst.circles:
        raise UsageError(f"no circle named {name!r} in the input "
                         f"(declared: {sorted(inst.circles) or 'none'})")
    edges = inst.circles[name]
    base = inst.ve.base
    return circle_from_edges(base, edges, base.edge_tails[edges[0]])


def _instance_summary(inst: InstanceFile) -> dict:
    ve = inst.ve
    base = ve.base
    orientable, genus = base.genus_report()
    return {
        "group": " ".join(inst.group_tokens),
        "group_order": ve.group.order,
        "vertices": base.vertex_count,
        "edges": base.edge_count,
        "faces": base.face_count(),
        "euler_characteristic": base.euler_characteristic(),
        "orientable": orientable,
        "genus": genus,
    }


def _print(out, text: str) -> None:
    out.write(text if text.endswith("\n") else text + "\n")


def _report_lines(data: dict) -> str:
    return "\n".join(f"{k}: {v}" for k, v in data.items()) + "\n"


# -- commands -------------------------------------------------------------


def cmd_validate(args, out) -> int:
    inst = _load(args.file)
    data = _instance_summary(inst)
    data["status"] = "valid"
    _print(out, emit_json(data) if args.json else _report_lines(data))
    return 0


def cmd_derive(args, out) -> int:
    inst = _load(args.file)
    ve = inst.ve
    der = derive(ve)
    g = ve.group
    names = [f"{inst.edge_names[e]}@{g.name(a)}"
             for e in range(ve.base.edge_count) for a in range(g.order)]
    # edge_index(e, a) = e * |A| + a, so the name list above is index-aligned
    trivial = VoltageEmbedding(der.graph, make_cyclic(1),
                               [0] * der.graph.dart_count)
    derived_inst = instance_for(trivial, ("cyclic", "1"), names)
    _print(out, print_instance(derived_inst))
    return 0


def cmd_analyze(args, out) -> int:
    inst = _load(args.file)
    ve = inst.ve
    der = derive(ve)
    orientable, genus = der.graph.genus_report()
    faces, chi = face_lift_prediction(ve)
    data = {
        "base": _instance_summary(inst),
        "derived": {
            "components": component_count(ve)[0],
            "vertices": der.graph.vertex_count,
            "edges": der.graph.edge_count,
            "faces": faces,
            "euler_characteristic": chi,
            "orientable": orientable,
            "genus": genus,
        },
    }
    if args.faces:
        if args.faces not in inst.face_chains:
            raise UsageError(f"no face chain named {args.faces!r} in the input")
        chain = inst.face_chains[args.faces]
        verts, skel_edges, conn = ve.base.subcomplex_skeleton(chain)
        fdata = {
            "faces": list(chain),
            "skeleton_edges": sorted(inst.edge_names[e] for e in skel_edges),
            "skeleton_connected": conn,
        }
        if conn and verts:
            v0 = min(verts)
            sub = restricted_voltage_group(ve, skel_edges, v0)
            fdata["restricted_voltage_group"] = [ve.group.name(a)
                                                 for a in sub.elements]
        data["face_chain"] = fdata
    if args.circle:
        a = ve.group.parse_element(args.component) if args.component else 0
        circle = _named_circle(inst, args.circle)
        kind = circle_orientation_type(ve.base, circle)
        omega = circle_net_voltage(ve, circle)
        fibers = fiber_circles(ve, circle, a)
        cdata = {
            "orientation": kind,
            "separating": is_separating(ve.base, circle),
            "net_voltage": ve.group.name(omega),
            "net_voltage_order": ve.group.element_order(omega),
            "lifted_circles": len(fibers.circles),
        }
        if kind == "preserving" or ve.group.element_order(omega) % 2 == 0:
            parts = zregions(ve, circle, a)
            cdata["zregions"] = parts.region_count
        else:
            cdata["zregions"] = "undefined (lifts reverse orientation)"
        data["circle"] = cdata
    if args.json:
        _print(out, emit_json(data))
    else:
        for section, values in data.items():
            _print(out, f"[{section}]")
            _print(out, _report_lines(values))
    return 0


def cmd_medial(args, out) -> int:
    inst = _load(args.file)
    ve = inst.ve
    tvg = total_graph_with_voltages(ve)
    g = ve.group
    base = ve.base
    med = medial(base)
    # medial edge x runs v_{E(x)} -> m_x -> v_{E(rot_next(x))}; its voltage is
    # the product of the two half-edge voltages through the corner midpoint
    alpha_m: list[int] = []
    for x in range(base.dart_count):
        net = g.mul(tvg.alpha[2 * tvg.m_half_a[x]], tvg.alpha[2 * tvg.m_half_b[x]])
        alpha_m.extend([net, g.inv(net)])
    med_ve = VoltageEmbedding(med.graph, g, alpha_m)
    names = [f"m{x}" for x in range(base.dart_count)]
    _print(out, print_instance(instance_for(med_ve, inst.group_tokens, names)))
    if args.circle:
        circle = _named_circle(inst, args.circle)
        w_corner, y_corner = claw_tips_for_circle(tvg, circle)
        data = {
            "claw_w_corner": w_corner,
            "claw_y_corner": y_corner,
            "medial_local_group": [g.name(a)
                                   for a in medial_local_group(tvg, w_corner).elements],
            "crossing_free_group": [g.name(a) for a in
                                    crossing_free_group(tvg, circle, w_corner).elements],
        }
        ws, ys = crossing_free_tip_parts(tvg, circle, w_corner, y_corner)
        data["tip_fiber_w"] = [g.name(a) for a in sorted(ws)]
        data["tip_fiber_y"] = [g.name(a) for a in sorted(ys)]
        _print(out, emit_json(data) if args.json else _report_lines(data))
    return 0


def cmd_zgraph(args, out) -> int:
    inst = _load(args.file)
    if not args.circle:
        raise UsageError("zgraph requires --circle NAME")
    circle = _named_circle(inst, args.circle)
    ve = inst.ve
    a = ve.group.parse_element(args.component) if args.component else 0
    coset, brute = zgraph_for_circle(ve, circle, a)
    if args.method == "both":
        compare_zgraphs(coset, brute)
    zg = brute if args.method == "brute" else coset
    if args.dot:
        _print(out, emit_dot(zg))
    elif args.json:
        _print(out, emit_json(zgraph_json(zg)))
    else:
        data = zgraph_json(zg)
        _print(out, f"vertices: {len(data['vertices'])}")
        for label in data["vertices"]:
            _print(out, f"  {label}")
        _print(out, f"edges: {len(data['edges'])}")
        for edge in data["edges"]:
            _print(out, f"  {edge['label']} : {edge['ends'][0]} -- {edge['ends'][1]}")
        if args.method == "both":
            _print(out, "brute-force comparison: equal")
    return 0


def cmd_verify(args, out) -> int:
    if args.file is None:
        report = fuzz(args.seed, args.count)
        _print(out, emit_json({
            "seed": report.seed,
            "count": report.count,
            "totals": report.totals(),
            "failures": [{"index": r.index, "failure": r.failure,
                          "reproducer": r.reproducer}
                         for r in report.failures],
            "result": "FAILED" if report.failures else "ok",
        }) if args.json else report.render())
        return 3 if report.failures else 0

    inst = _load(args.file)
    ve = inst.ve
    checks: dict[str, str] = {}
    faces, chi = face_lift_prediction(ve)
    der = derive(ve)
    ok = faces == der.graph.face_count() and chi == der.graph.euler_characteristic()
    if not ok:
        raise VerificationError("face-lift prediction disagrees with tracing")
    checks["face_lift"] = "confirmed"
    component_count(ve)
    checks["components"] = "confirmed"
    verify_archdeacon(ve)
    checks["medial_lift"] = "confirmed"
    names = [args.circle] if args.circle else sorted(inst.circles)
    for name in names:
        circle = _named_circle(inst, name)
        kind = circle_orientation_type(ve.base, circle)
        omega_order = ve.group.element_order(circle_net_voltage(ve, circle))
        if kind == "reversing":
            lifts_orientation_preserving(ve, circle)
            checks[f"{name}:lift_parity"] = "confirmed"
            if omega_order % 2 != 0:
                checks[f"{name}:zgraph"] = "vacuous (lifts reverse orientation)"
                continue
            check_theorem_314(ve, circle)
            checks[f"{name}:reversing_structure"] = "confirmed"
        elif not is_separating(ve.base, circle):
            rep = check_theorem_317(ve, circle)
            checks[f"{name}:preserving_structure"] = (
                "confirmed" if rep.hypotheses_met else "vacuous")
        if not is_separating(ve.base, circle):
            predict_zregion_count(ve, circle)
            checks[f"{name}:region_count"] = "confirmed"
        coset, brute = zgraph_for_circle(ve, circle)
        compare_zgraphs(coset, brute)
        checks[f"{name}:zgraph"] = "confirmed"
    checks["result"] = "ok"
    _print(out, emit_json(checks) if args.json else _report_lines(checks))
    return 0


def cmd_example(args, out) -> int:
    if args.family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r} "
                         f"(available: {', '.join(sorted(FAMILIES))})")
    try:
        params = tuple(int(p) for p in args.params)
    except ValueError:
        raise UsageError("family parameters must be integers") from None
    ex = generate_example(args.family, params)
    if args.json:
        _print(out, emit_json({
            "family": ex.family,
            "params": list(ex.params),
            "expected": ex.expected,
            "instance": print_instance(ex.instance),
        }))
    else:
        _print(out, print_instance(ex.instance))
        for k, v in ex.expected.items():
            _print(out, f"# expected {k}: {v}")
    return 0


# -- dispatch -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="voltlift", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, file_mode="required"):
        p = sub.add_parser(name)
        if file_mode == "required":
            p.add_argument("file")
        elif file_mode == "optional":
            p.add_argument("file", nargs="?", default=None)
        p.add_argument("--circle", default=None)
        p.add_argument("--faces", default=None)
        p.add_argument("--component", default=None)
        p.add_argument("--method", choices=("brute", "coset", "both"),
                       default="both")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--count", type=int, default=100)
        p.add_argument("--json", action="store_true")
        p.add_argument("--dot", action="store_true")
        p.set_defaults(func=func)
        return p

    def add_all_theorems(p):
        p.add_argument("--all-theorems", action="store_true",
                       help="run every checker (the default for verify FILE)")

    add("validate", cmd_validate)
    add("derive", cmd_derive)
    add("analyze", cmd_analyze)
    add("medial", cmd_medial)
    add("zgraph", cmd_zgraph)
    add_all_theorems(add("verify", cmd_verify, file_mode="optional"))
    p = add("example", cmd_example, file_mode="none")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, GroupError, SurfaceError, VoltageError,
            FamilyError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
