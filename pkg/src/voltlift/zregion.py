"""Z-regions of the derived surface and the coset z-graph constructions.

The derived surface is cut along the lifts of a single base circle; the
resulting regions and their incidence graph are computed twice — once by
brute force on the derived embedding, once from cosets of local voltage
groups — and compared as labeled graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .groups import (CosetPartition, Subgroup, left_cosets, subgroup_generated)
from .surface import (CircleSubgraph, RegionPartition, SurfaceError, ZGraph,
                      circle_from_edges, circle_orientation_type, cut_regions,
                      is_separating)
from .voltage import (VerificationError, VoltageEmbedding, VoltageError,
                      derive, restricted_voltage_group)
from .medial import (claw_tips_for_circle, crossing_free_group,
                     crossing_free_tip_parts, total_graph_with_voltages)


@dataclass(frozen=True)
class FiberCircle:
    """One lifted circle, labeled by the superscript coset it runs through."""

    coset: tuple[int, ...]
    circle: CircleSubgraph
    orientation: str


@dataclass(frozen=True)
class FiberCircleSet:
    """All lifts of a base circle inside one component of the derived surface."""

    base_circle: CircleSubgraph
    omega: int
    component_superscripts: tuple[int, ...]
    circles: tuple[FiberCircle, ...]


def circle_net_voltage(ve: VoltageEmbedding, circle: CircleSubgraph) -> int:
    return ve.group.product(ve.alpha[d] for d in circle.traversal)


def fiber_circles(ve: VoltageEmbedding, circle: CircleSubgraph, a: int = 0,
                  der=None) -> FiberCircleSet:
    """The lifted circles over ``circle`` in the component of (base vertex, a).

    Lifts are grouped by the left cosets of <omega> inside the component's
    superscript set over the base vertex; each lift traverses the base circle
    |omega| times.
    """
    g = ve.group
    der = der if der is not None else derive(ve)
    v = circle.base_vertex
    omega = circle_net_voltage(ve, circle)
    comps = der.graph.vertex_components()
    root = comps[der.vertex_index(v, a)]
    sups = tuple(b for b in g.elements() if comps[der.vertex_index(v, b)] == root)
    omega_sub = subgroup_generated(g, [omega])
    # the restriction of the voltages to the circle generates exactly <omega>
    if restricted_voltage_group(ve, circle.edges, v).element_set() != omega_sub.element_set():
        raise VerificationError("circle voltages do not generate <omega>")
    part = left_cosets(sups, omega_sub)
    n = g.element_order(omega)
    circles = []
    for coset in part.cosets:
        rep = coset[0]
        darts: list[int] = []
        cur = rep
        for _ in range(n):
            lifted, cur = der.lift_walk(circle.traversal, cur)
            darts.extend(lifted)
        if cur != rep:
            raise VerificationError("lifted circle failed to close after |omega| trips")
        lifted_circle = circle_from_edges(der.graph, {d >> 1 for d in darts},
                                          der.vertex_index(v, rep))
        circles.append(FiberCircle(coset, lifted_circle,
                                   circle_orientation_type(der.graph, lifted_circle)))
    return FiberCircleSet(circle, omega, sups, tuple(circles))


def lifts_orientation_preserving(ve: VoltageEmbedding, circle: CircleSubgraph) -> bool:
    """Whether the lifts of an orientation-reversing circle preserve orientation.

    True exactly when |omega| is even; cross-checked against the traced
    orientation type of every lift.
    """
    if circle_orientation_type(ve.base, circle) != "reversing":
        raise SurfaceError("base circle is orientation-preserving; lifts trivially preserve")
    n = ve.group.element_order(circle_net_voltage(ve, circle))
    expected = "preserving" if n % 2 == 0 else "reversing"
    for fc in fiber_circles(ve, circle).circles:
        if fc.orientation != expected:
            raise VerificationError("lift orientation disagrees with |omega| parity")
    return n % 2 == 0


@dataclass
class CircleAnalysis:
    """Everything about one base circle within one derived component."""

    ve: VoltageEmbedding
    der: object
    circle: CircleSubgraph
    a: int
    fibers: FiberCircleSet
    parts: RegionPartition
    region_ids: tuple[int, ...]   # regions meeting the analyzed component
    w_corner: int
    y_corner: int

    @property
    def superscripts(self) -> tuple[int, ...]:
        return self.fibers.component_superscripts

    def tip_region(self, tip_corner: int, b: int) -> int:
        """Region of the derived claw tip with superscript b over the base vertex."""
        return self.parts.corner_region[self.der.dart_lift(tip_corner, b)]


def analyze_circle(ve: VoltageEmbedding, circle: CircleSubgraph,
                   a: int = 0) -> CircleAnalysis:
    der = derive(ve)
    fibers = fiber_circles(ve, circle, a, der)
    for fc in fibers.circles:
        if fc.orientation != "preserving":
            raise SurfaceError(
                "lifted circles reverse orientation (|omega| odd over a reversing "
                "circle); the region cut is undefined")
    parts = cut_regions(der.graph, [fc.circle for fc in fibers.circles])
    comps = der.graph.vertex_components()
    v = circle.base_vertex
    root = comps[der.vertex_index(v, a)]
    region_ids = tuple(sorted({
        parts.corner_region[d] for d in range(der.graph.dart_count)
        if comps[der.graph.tail(d)] == root}))
    tvg_tips = claw_tips_for_circle(total_graph_with_voltages(ve), circle)
    return CircleAnalysis(ve, der, circle, a, fibers, parts, region_ids,
                          tvg_tips[0], tvg_tips[1])


def zregions(ve: VoltageEmbedding, circle: CircleSubgraph, a: int = 0) -> RegionPartition:
    """Regions of the derived surface cut along the component's lifted circles."""
    return analyze_circle(ve, circle, a).parts


def predict_zregion_count(ve: VoltageEmbedding, circle: CircleSubgraph,
                          w_corner: int | None = None, a: int = 0) -> int:
    """|A(v)| / |crossing-free group at w'|, verified against the brute count."""
    if is_separating(ve.base, circle):
        raise SurfaceError("region-count prediction needs a nonseparating circle")
    an = analyze_circle(ve, circle, a)
    if w_corner is None:
        w_corner = an.w_corner
    tvg = total_graph_with_voltages(ve)
    avee = crossing_free_group(tvg, circle, w_corner)
    predicted = len(an.superscripts) // len(avee)
    brute = len(an.region_ids)
    if predicted != brute:
        raise VerificationError(
            f"predicted {predicted} regions but the cut produced {brute}")
    return predicted


# -- brute-force labeled z-graphs ----------------------------------------


def _region_vertex_superscripts(an: CircleAnalysis, r: int) -> tuple[int, ...]:
    """Superscripts b over the base vertex with a corner of region r at (v, b)."""
    base = an.ve.base
    v = an.circle.base_vertex
    out = []
    for b in an.superscripts:
        if any(an.parts.corner_region[an.der.dart_lift(x, b)] == r
               for x in base.rotation[v]):
            out.append(b)
    return tuple(out)


def _region_tip_superscripts(an: CircleAnalysis, r: int,
                             tips: Sequence[int]) -> tuple[int, ...]:
    out = set()
    for tip in tips:
        for b in an.superscripts:
            if an.tip_region(tip, b) == r:
                out.add(b)
    return tuple(sorted(out))


def _base_face_of_derived_face(an: CircleAnalysis, fi: int) -> int:
    from .surface import _walk_corners
    walk = an.der.graph.trace_faces()[fi]
    corner = _walk_corners(an.der.graph, walk)[0]
    base_corner = an.der.dart_project(corner)[0]
    base_walks = an.ve.base.trace_faces()
    for i, w in enumerate(base_walks):
        if base_corner in _walk_corners(an.ve.base, w):
            return i
    raise SurfaceError("derived face projects to no base face")


def zgraph_brute_labeled(ve: VoltageEmbedding, circle: CircleSubgraph,
                         I: Sequence[int] | None = None, a: int = 0) -> ZGraph:
    """Brute-force z-graph with coset-style labels.

    Separating circles (I given) label regions by side and vertex-fiber
    superscripts; nonseparating ones by claw-tip-fiber superscripts.
    """
    an = analyze_circle(ve, circle, a)
    separating = I is not None
    reversing = circle_orientation_type(ve.base, circle) == "reversing"
    labels = []
    for r in an.region_ids:
        if separating:
            dface = next(fi for fi, fr in enumerate(an.parts.face_region)
                         if fr == r)
            side = "I" if _base_face_of_derived_face(an, dface) in set(I) else "Ic"
            labels.append((side, _region_vertex_superscripts(an, r)))
        elif reversing:
            labels.append(_region_tip_superscripts(an, r, [an.w_corner]))
        else:
            labels.append((_region_tip_superscripts(an, r, [an.w_corner]),
                           _region_tip_superscripts(an, r, [an.y_corner])))
    index_of = {r: i for i, r in enumerate(an.region_ids)}
    edge_labels = []
    endpoints = []
    for i, fc in enumerate(an.fibers.circles):
        edge_labels.append(tuple(fc.coset))
        bank = an.parts.banks[i]
        endpoints.append((index_of[bank[0]], index_of[bank[1]]))
    return ZGraph(tuple(labels), tuple(edge_labels), tuple(endpoints))


# -- coset constructions --------------------------------------------------


def _vertex_containing(vertex_sets: Sequence[tuple], coset: Sequence[int]) -> list[int]:
    cs = set(coset)
    return [i for i, vs in enumerate(vertex_sets) if cs <= set(vs)]


def zgraph_coset_separating(ve: VoltageEmbedding, circle: CircleSubgraph,
                            I: Sequence[int], a: int = 0) -> ZGraph:
    """Z-graph of a separating circle from cosets of the two side subgroups."""
    base, g = ve.base, ve.group
    if not is_separating(base, circle):
        raise SurfaceError("construction needs a separating circle")
    v = circle.base_vertex
    I = sorted(set(I))
    if base.boundary(I) != circle.edges:
        raise SurfaceError("face set does not bound the circle")
    Ic = sorted(set(range(base.face_count())) - set(I))
    sides = []
    for faces in (I, Ic):
        verts, edges, connected = base.subcomplex_skeleton(faces)
        if not connected or v not in verts:
            raise SurfaceError("side subcomplex must be connected and contain the base vertex")
        sides.append(restricted_voltage_group(ve, edges, v))
    sub_i, sub_ic = sides
    an = analyze_circle(ve, circle, a)
    sups = an.superscripts
    omega_sub = subgroup_generated(g, [an.fibers.omega])
    cos_i = left_cosets(sups, sub_i)
    cos_ic = left_cosets(sups, sub_ic)
    vertex_labels = ([("I", c) for c in cos_i.cosets]
                     + [("Ic", c) for c in cos_ic.cosets])
    vertex_sets = [c for _, c in vertex_labels]
    edge_labels = []
    endpoints = []
    for coset in left_cosets(sups, omega_sub).cosets:
        side_i = _vertex_containing(vertex_sets[:len(cos_i)], coset)
        side_ic = _vertex_containing(vertex_sets[len(cos_i):], coset)
        if len(side_i) != 1 or len(side_ic) != 1:
            raise VerificationError("circle coset not contained in exactly one side coset")
        edge_labels.append(coset)
        endpoints.append((side_i[0], len(cos_i) + side_ic[0]))
    return ZGraph(tuple(vertex_labels), tuple(edge_labels), tuple(endpoints))


def zgraph_coset_reversing(ve: VoltageEmbedding, circle: CircleSubgraph,
                           w_corner: int | None = None, a: int = 0) -> ZGraph:
    """Z-graph of an orientation-reversing circle with |omega| even.

    Vertices are cosets of the crossing-free group; each <omega>-coset edge
    has its two ends on the two <omega^2>-cosets inside it.
    """
    g = ve.group
    if circle_orientation_type(ve.base, circle) != "reversing":
        raise SurfaceError("construction needs an orientation-reversing circle")
    omega = circle_net_voltage(ve, circle)
    if g.element_order(omega) % 2 != 0:
        raise SurfaceError("lifts reverse orientation (|omega| odd); no region cut exists")
    an = analyze_circle(ve, circle, a)
    if w_corner is None:
        w_corner = an.w_corner
    tvg = total_graph_with_voltages(ve)
    avee = crossing_free_group(tvg, circle, w_corner)
    sups = an.superscripts
    cos_v = left_cosets(sups, avee)
    vertex_sets = list(cos_v.cosets)
    omega_sub = subgroup_generated(g, [omega])
    omega2_sub = subgroup_generated(g, [g.mul(omega, omega)])
    edge_labels = []
    endpoints = []
    for coset in left_cosets(sups, omega_sub).cosets:
        halves = left_cosets(coset, omega2_sub).cosets
        if len(halves) != 2:
            raise VerificationError("omega-coset did not split into two omega^2-cosets")
        ends = []
        for half in halves:
            hit = _vertex_containing(vertex_sets, half)
            if len(hit) != 1:
                raise VerificationError("edge end not contained in exactly one vertex coset")
            ends.append(hit[0])
        edge_labels.append(coset)
        endpoints.append((ends[0], ends[1]))
    return ZGraph(tuple(vertex_sets), tuple(edge_labels), tuple(endpoints))


def zgraph_coset_preserving(ve: VoltageEmbedding, circle: CircleSubgraph,
                            w_corner: int | None = None,
                            y_corner: int | None = None, a: int = 0) -> ZGraph:
    """Z-graph of an orientation-preserving nonseparating circle.

    Vertices are the left translates of the crossing-free tip set, labeled by
    their w'-fiber and y'-fiber parts; an <omega>-coset edge joins the vertex
    whose w'-part contains it to the vertex whose y'-part contains it.
    """
    g = ve.group
    if circle_orientation_type(ve.base, circle) != "preserving":
        raise SurfaceError("construction needs an orientation-preserving circle")
    if is_separating(ve.base, circle):
        raise SurfaceError("construction needs a nonseparating circle")
    an = analyze_circle(ve, circle, a)
    if w_corner is None:
        w_corner = an.w_corner
    if y_corner is None:
        y_corner = an.y_corner
    tvg = total_graph_with_voltages(ve)
    w_part, y_part = crossing_free_tip_parts(tvg, circle, w_corner, y_corner)
    sups = an.superscripts
    vertex_labels = sorted({
        (tuple(sorted(g.mul(a1, t) for t in w_part)),
         tuple(sorted(g.mul(a1, t) for t in y_part)))
        for a1 in sups})
    omega_sub = subgroup_generated(g, [an.fibers.omega])
    edge_labels = []
    endpoints = []
    for coset in left_cosets(sups, omega_sub).cosets:
        w_hits = _vertex_containing([lab[0] for lab in vertex_labels], coset)
        y_hits = _vertex_containing([lab[1] for lab in vertex_labels], coset)
        if len(w_hits) != 1 or len(y_hits) != 1:
            raise VerificationError(
                "circle coset not contained in exactly one tip coset per side")
        edge_labels.append(coset)
        endpoints.append((w_hits[0], y_hits[0]))
    return ZGraph(tuple(vertex_labels), tuple(edge_labels), tuple(endpoints))


def compare_zgraphs(coset: ZGraph, brute: ZGraph) -> bool:
    """Labeled equality of two z-graphs; raises on any discrepancy."""

    def edge_view(zg: ZGraph):
        out = []
        for lab, (i, j) in zip(zg.edge_labels, zg.endpoints):
            ends = tuple(sorted([zg.vertex_labels[i], zg.vertex_labels[j]]))
            out.append((tuple(lab), ends))
        return sorted(out)

    if sorted(coset.vertex_labels) != sorted(brute.vertex_labels):
        raise VerificationError(
            f"z-graph vertex labels differ: {sorted(coset.vertex_labels)} "
            f"vs {sorted(brute.vertex_labels)}")
    if edge_view(coset) != edge_view(brute):
        raise VerificationError(
            f"z-graph edges differ: {edge_view(coset)} vs {edge_view(brute)}")
    return True


# -- theorem checkers -----------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    name: str
    hypotheses_met: bool
    skips: tuple[str, ...]
    assertions: tuple[tuple[str, bool], ...]
    witnesses: dict


def _assert_all(name: str, assertions: Sequence[tuple[str, bool]], witnesses: dict):
    for label, ok in assertions:
        if not ok:
            raise VerificationError(f"{name}: {label} failed ({witnesses})")


def check_theorem_314(ve: VoltageEmbedding, circle: CircleSubgraph,
                      w_corner: int | None = None, a: int = 0) -> TheoremReport:
    """Reversing circle, |omega| even: region tip-fiber counts, region count, lifts.

    Asserts equal nonzero tip-fiber size per region, one or two regions in the
    component, and (when <omega> is proper) nonseparating lifts.
    """
    name = "reversing-circle structure"
    g = ve.group
    skips = []
    if circle_orientation_type(ve.base, circle) != "reversing":
        skips.append("base circle not orientation-reversing")
    else:
        omega = circle_net_voltage(ve, circle)
        if g.element_order(omega) % 2 != 0:
            skips.append("|omega| odd: lifts reverse orientation")
    if skips:
        return TheoremReport(name, False, tuple(skips), (), {})
    an = analyze_circle(ve, circle, a)
    if w_corner is None:
        w_corner = an.w_corner
    counts = {r: sum(1 for b in an.superscripts if an.tip_region(w_corner, b) == r)
              for r in an.region_ids}
    assertions = [
        ("equal nonzero tip-fiber count per region",
         len(set(counts.values())) == 1 and min(counts.values()) > 0),
        ("one or two regions in the component", len(an.region_ids) in (1, 2)),
    ]
    omega_sub = subgroup_generated(g, [an.fibers.omega])
    if set(omega_sub.elements) != set(an.superscripts):
        nonsep = all(not is_separating(an.der.graph, fc.circle)
                     for fc in an.fibers.circles)
        assertions.append(("lifted circles nonseparating", nonsep))
    else:
        skips.append("<omega> is the whole component group: nonseparating clause vacuous")
    witnesses = {"tip_fiber_counts": counts, "region_ids": an.region_ids}
    _assert_all(name, assertions, witnesses)
    return TheoremReport(name, True, tuple(skips), tuple(assertions), witnesses)


def check_theorem_317(ve: VoltageEmbedding, circle: CircleSubgraph,
                      w_corner: int | None = None, y_corner: int | None = None,
                      a: int = 0) -> TheoremReport:
    """Preserving nonseparating circle: tips in every region, even boundaries, lifts.

    Asserts each region meets both tip fibers, even boundary-circle count per
    region when there are several regions, and nonseparating lifts.
    """
    name = "preserving-circle structure"
    skips = []
    if circle_orientation_type(ve.base, circle) != "preserving":
        skips.append("base circle not orientation-preserving")
    elif is_separating(ve.base, circle):
        skips.append("base circle separating")
    if skips:
        return TheoremReport(name, False, tuple(skips), (), {})
    an = analyze_circle(ve, circle, a)
    if w_corner is None:
        w_corner = an.w_corner
    if y_corner is None:
        y_corner = an.y_corner
    touches = all(
        any(an.tip_region(w_corner, b) == r for b in an.superscripts)
        and any(an.tip_region(y_corner, b) == r for b in an.superscripts)
        for r in an.region_ids)
    degrees = {r: 0 for r in an.region_ids}
    for i, fc in enumerate(an.fibers.circles):
        for bank in an.parts.banks[i]:
            degrees[bank] += 1
    assertions = [("each region meets both tip fibers", touches)]
    if len(an.region_ids) > 1:
        assertions.append(("even boundary-circle count per region",
                           all(d % 2 == 0 for d in degrees.values())))
    nonsep = all(not is_separating(an.der.graph, fc.circle)
                 for fc in an.fibers.circles)
    assertions.append(("lifted circles nonseparating", nonsep))
    witnesses = {"region_degrees": degrees, "region_ids": an.region_ids}
    _assert_all(name, assertions, witnesses)
    return TheoremReport(name, True, tuple(skips), tuple(assertions), witnesses)


def separating_faces(ve: VoltageEmbedding, circle: CircleSubgraph) -> list[int]:
    """One side's face set for a separating circle (the side of the first bank)."""
    base = ve.base
    parts = cut_regions(base, [circle])
    side = parts.banks[0][0]
    return [f for f in range(base.face_count()) if parts.face_region[f] == side]


def zgraph_for_circle(ve: VoltageEmbedding, circle: CircleSubgraph,
                      a: int = 0) -> tuple[ZGraph, ZGraph]:
    """Dispatch to the matching coset construction and pair it with brute force."""
    if is_separating(ve.base, circle):
        I = separating_faces(ve, circle)
        coset = zgraph_coset_separating(ve, circle, I, a)
        brute = zgraph_brute_labeled(ve, circle, I, a)
    elif circle_orientation_type(ve.base, circle) == "reversing":
        coset = zgraph_coset_reversing(ve, circle, a=a)
        brute = zgraph_brute_labeled(ve, circle, None, a)
    else:
        coset = zgraph_coset_preserving(ve, circle, a=a)
        brute = zgraph_brute_labeled(ve, circle, None, a)
    return coset, brute
