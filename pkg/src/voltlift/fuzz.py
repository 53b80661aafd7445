"""Seeded randomized verification harness.

Generates random connected signed rotation systems with random voltages and
replays every structural identity the library implements against brute force:
face lifting, component prediction, the four coset-count identities, the
medial-lift correspondence, lifted-circle orientation parity, the region
structure checks, the region-count prediction, and the coset z-graph
constructions.

Reports are deterministic for a given seed: :meth:`VerificationReport.render`
excludes wall-clock timings, so the same seed always produces byte-identical
text.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .groups import direct_product, make_cyclic
from .surface import (CircleSubgraph, EmbeddedGraph, SurfaceError,
                      circle_from_edges, circle_orientation_type, is_separating)
from .medial import verify_archdeacon
from .textfmt import instance_for, print_instance
from .voltage import (VerificationError, VoltageEmbedding, component_count,
                      coset_count_check, derive, face_lift_prediction,
                      make_walk, same_component)
from .zregion import (check_theorem_314, check_theorem_317, circle_net_voltage,
                      compare_zgraphs, lifts_orientation_preserving,
                      predict_zregion_count, zgraph_for_circle)

CHECK_NAMES = (
    "face_lift",
    "components",
    "coset_counts",
    "medial_lift",
    "lift_parity",
    "reversing_structure",
    "preserving_structure",
    "region_count",
    "zgraph",
)

VERTEX_CAP = 4
EDGE_CAP = 8
DERIVED_VERTEX_CAP = 10_000


@dataclass
class InstanceResult:
    index: int
    summary: str
    statuses: dict[str, str]
    elapsed: float = 0.0
    failure: str | None = None
    reproducer: str | None = None


@dataclass
class VerificationReport:
    seed: int
    count: int
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if r.failure is not None]

    def totals(self) -> dict[str, dict[str, int]]:
        out = {name: {"confirmed": 0, "vacuous": 0, "FAILED": 0}
               for name in CHECK_NAMES}
        for r in self.results:
            for name, status in r.statuses.items():
                out[name][status] += 1
        return out

    def render(self) -> str:
        lines = [f"fuzz seed={self.seed} count={self.count}"]
        for r in self.results:
            marks = " ".join(f"{n}={r.statuses[n]}" for n in CHECK_NAMES)
            lines.append(f"instance {r.index}: {r.summary}")
            lines.append(f"  {marks}")
            if r.failure is not None:
                lines.append(f"  FAILURE: {r.failure}")
                for rep_line in (r.reproducer or "").splitlines():
                    lines.append(f"  | {rep_line}")
        totals = self.totals()
        for name in CHECK_NAMES:
            t = totals[name]
            lines.append(f"total {name}: confirmed={t['confirmed']} "
                         f"vacuous={t['vacuous']} failed={t['FAILED']}")
        lines.append("result: " + ("FAILED" if self.failures else "ok"))
        return "\n".join(lines) + "\n"


# -- random instance generation -------------------------------------------


_GROUP_CHOICES = (
    [("cyclic", str(n)) for n in range(1, 13)]
    + [("product", "cyclic", "2", "cyclic", str(n)) for n in range(1, 7)]
)


def _make_group(tokens):
    if tokens[0] == "cyclic":
        return make_cyclic(int(tokens[1]))
    return direct_product(make_cyclic(int(tokens[2])), make_cyclic(int(tokens[4])))


def random_instance(rng: random.Random) -> tuple[VoltageEmbedding, tuple[str, ...]]:
    """A random connected voltage embedding within the documented caps."""
    tokens = rng.choice(_GROUP_CHOICES)
    group = _make_group(tokens)
    nv = rng.randint(1, VERTEX_CAP)
    while nv * group.order > DERIVED_VERTEX_CAP:
        nv -= 1
    edges: list[tuple[int, int]] = []
    # spanning tree keeps the base connected; extra edges may be loops
    for v in range(1, nv):
        edges.append((rng.randrange(v), v))
    ne = rng.randint(max(len(edges), 1), EDGE_CAP)
    while len(edges) < ne:
        edges.append((rng.randrange(nv), rng.randrange(nv)))
    rng.shuffle(edges)
    rotation: list[list[int]] = [[] for _ in range(nv)]
    for e, (t, h) in enumerate(edges):
        rotation[t].append(2 * e)
        rotation[h].append(2 * e + 1)
    for darts in rotation:
        rng.shuffle(darts)
    signature = [rng.choice((1, -1)) for _ in edges]
    alpha: list[int] = []
    for _ in edges:
        a = rng.randrange(group.order)
        alpha.extend([a, group.inv(a)])
    graph = EmbeddedGraph(nv, edges, rotation, signature)
    return VoltageEmbedding(graph, group, alpha), tokens


def _random_circle(ve: VoltageEmbedding, rng: random.Random) -> CircleSubgraph | None:
    """A random simple cycle, found by a non-edge-repeating random walk."""
    base = ve.base
    start = rng.randrange(base.vertex_count)
    path_darts: list[int] = []
    seen_at = {start: 0}
    cur = start
    for _ in range(2 * base.edge_count):
        used = {d >> 1 for d in path_darts}
        options = [d for d in range(base.dart_count)
                   if base.tail(d) == cur and (d >> 1) not in used]
        if not options:
            return None
        d = rng.choice(options)
        path_darts.append(d)
        cur = base.head(d)
        if cur in seen_at:
            cycle = path_darts[seen_at[cur]:]
            return circle_from_edges(base, {x >> 1 for x in cycle},
                                     base.tail(cycle[0]))
        seen_at[cur] = len(path_darts)
    return None


def _random_coset_sample(ve: VoltageEmbedding, rng: random.Random):
    """A random (v, face chain, y-subgraph, closed walk) for the count checks.

    The face chain grows from a face at v through shared edges, and is widened
    until its skeleton is connected and contains v.
    """
    base = ve.base
    v = rng.randrange(base.vertex_count)
    faces = base.trace_faces()
    face_vertices = [frozenset(base.tail(d) for d in f.darts) for f in faces]
    seeds = [i for i, vs in enumerate(face_vertices) if v in vs]
    order = [rng.choice(seeds)]
    while True:
        chain_edges = set()
        for i in order:
            chain_edges.update(faces[i].edges())
        frontier = [i for i in range(len(faces)) if i not in order
                    and chain_edges & set(faces[i].edges())]
        _, skel_edges, conn = base.subcomplex_skeleton(order)
        if conn and (v in {base.edge_tails[e] for e in skel_edges}
                     | {base.edge_heads[e] for e in skel_edges}
                     or base.edge_count == 0):
            if not frontier or rng.random() < 0.5:
                break
        if not frontier:
            order = list(range(len(faces)))
            _, skel_edges, _ = base.subcomplex_skeleton(order)
            break
        order.append(rng.choice(frontier))

    # y-subgraph: a random spanning tree of the skeleton from v, plus extras
    y_edges: set[int] = set()
    reached = {v}
    pool = sorted(skel_edges)
    progress = True
    while progress:
        progress = False
        rng.shuffle(pool)
        for e in pool:
            t, h = base.edge_tails[e], base.edge_heads[e]
            if (t in reached) != (h in reached):
                y_edges.add(e)
                reached.update((t, h))
                progress = True
    for e in pool:
        t, h = base.edge_tails[e], base.edge_heads[e]
        if t in reached and h in reached and rng.random() < 0.4:
            y_edges.add(e)
    if not any(v in (base.edge_tails[e], base.edge_heads[e]) for e in y_edges):
        y_edges.add(next(e for e in pool
                         if v in (base.edge_tails[e], base.edge_heads[e])))

    # closed walk at v inside the y-subgraph: random walk out, reverse back
    walk_darts: list[int] = []
    cur = v
    for _ in range(rng.randint(0, 6)):
        options = [d for d in range(base.dart_count)
                   if base.tail(d) == cur and (d >> 1) in y_edges]
        if not options:
            break
        d = rng.choice(options)
        walk_darts.append(d)
        cur = base.head(d)
    prefix_ends = [i for i in range(1, len(walk_darts) + 1)
                   if base.head(walk_darts[i - 1]) == v]
    if prefix_ends and rng.random() < 0.7:
        walk_darts = walk_darts[:rng.choice(prefix_ends)]
    else:
        walk_darts = walk_darts + [d ^ 1 for d in reversed(walk_darts)]
    return v, order, y_edges, make_walk(base, walk_darts)


# -- per-instance checks --------------------------------------------------


def _check_instance(ve: VoltageEmbedding, rng: random.Random,
                    statuses: dict[str, str], current: list[str]) -> None:
    base, g = ve.base, ve.group
    der = derive(ve)

    current[0] = "face_lift"
    faces, chi = face_lift_prediction(ve)
    if faces != der.graph.face_count() or chi != der.graph.euler_characteristic():
        raise VerificationError(
            f"face lift: predicted ({faces}, {chi}), traced "
            f"({der.graph.face_count()}, {der.graph.euler_characteristic()})")
    statuses["face_lift"] = "confirmed"

    current[0] = "components"
    component_count(ve)
    comps = der.graph.vertex_components()
    for _ in range(8):
        v = rng.randrange(base.vertex_count)
        a, b = rng.randrange(g.order), rng.randrange(g.order)
        brute = comps[der.vertex_index(v, a)] == comps[der.vertex_index(v, b)]
        if same_component(ve, v, a, b) != brute:
            raise VerificationError(f"same-component prediction wrong at ({v},{a},{b})")
    statuses["components"] = "confirmed"

    current[0] = "coset_counts"
    for _ in range(2):
        v, I, y_edges, walk = _random_coset_sample(ve, rng)
        coset_count_check(ve, v, I, y_edges, walk)
    statuses["coset_counts"] = "confirmed"

    current[0] = "medial_lift"
    verify_archdeacon(ve)
    statuses["medial_lift"] = "confirmed"

    circles = []
    for _ in range(4):
        c = _random_circle(ve, rng)
        if c is not None and all(c.edges != c2.edges for c2 in circles):
            circles.append(c)
    for circle in circles[:2]:
        kind = circle_orientation_type(base, circle)
        omega = circle_net_voltage(ve, circle)
        if kind == "reversing":
            current[0] = "lift_parity"
            preserving = lifts_orientation_preserving(ve, circle)
            if preserving != (g.element_order(omega) % 2 == 0):
                raise VerificationError("lift parity disagrees with |omega|")
            statuses["lift_parity"] = "confirmed"
            if not preserving:
                continue
            current[0] = "reversing_structure"
            check_theorem_314(ve, circle)
            statuses["reversing_structure"] = "confirmed"
            current[0] = "region_count"
            predict_zregion_count(ve, circle)
            statuses["region_count"] = "confirmed"
        elif not is_separating(base, circle):
            current[0] = "preserving_structure"
            rep = check_theorem_317(ve, circle)
            if rep.hypotheses_met:
                statuses["preserving_structure"] = "confirmed"
            current[0] = "region_count"
            predict_zregion_count(ve, circle)
            statuses["region_count"] = "confirmed"
        current[0] = "zgraph"
        coset, brute = zgraph_for_circle(ve, circle)
        compare_zgraphs(coset, brute)
        statuses["zgraph"] = "confirmed"


def fuzz(seed: int, count: int) -> VerificationReport:
    """Run ``count`` random instances and cross-check every implemented theorem."""
    report = VerificationReport(seed, count)
    master = random.Random(seed)
    for index in range(count):
        rng = random.Random(master.randrange(2 ** 63))
        ve, tokens = random_instance(rng)
        summary = (f"group={' '.join(tokens)} vertices={ve.base.vertex_count} "
                   f"edges={ve.base.edge_count}")
        statuses = {name: "vacuous" for name in CHECK_NAMES}
        result = InstanceResult(index, summary, statuses)
        current = ["face_lift"]
        start = time.perf_counter()
        try:
            _check_instance(ve, rng, statuses, current)
        except VerificationError as exc:
            statuses[current[0]] = "FAILED"
            result.failure = str(exc)
            result.reproducer = print_instance(instance_for(ve, tokens))
        result.elapsed = time.perf_counter() - start
        report.results.append(result)
    return report
