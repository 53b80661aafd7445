"""Medial graphs, the total graph with extended voltages, claws, and crossings.

Medial vertices are base edges; medial edges are base corners, identified by
the first dart of the corner pair (x, rot_next(x)).  The total graph carries
the subdivided base, the subdivided medial, and the projection psi, with the
extended voltage assignment defined so that alpha(psi(d)) = alpha_E(d).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import FiniteGroup, Subgroup, subgroup_generated
from .surface import CircleSubgraph, DisjointSets, EmbeddedGraph, SurfaceError, edge_of
from .voltage import (VoltageEmbedding, VoltageError, _local_group_elements, derive)


@dataclass
class MedialEmbedding:
    """The medial graph embedded in the same surface as the base.

    Medial vertex i is base edge i; medial edge x is the base corner
    (x, rot_next(x)).
    """

    base: EmbeddedGraph
    graph: EmbeddedGraph

    def classify_faces(self) -> tuple[dict[int, int], dict[int, int]]:
        """Partition medial faces into vertex-faces and face-faces.

        The vertex-face at v is the medial face through the state
        (2 * rotation[v][0], -1); the remaining faces match base faces by
        their corner multisets, which partition the corners.  Raises if the
        classification is not a clean bijection.
        """
        base = self.base
        mg = self.graph
        mfaces = mg.trace_faces()
        corner_key = [frozenset_with_counts(d >> 1 for d in w.darts) for w in mfaces]

        vertex_faces: dict[int, int] = {}
        for v in range(base.vertex_count):
            mi = mg.face_of_state(2 * base.rotation[v][0], -1)
            if mi in vertex_faces.values():
                raise SurfaceError(f"two base vertices map to medial face {mi}")
            if corner_key[mi] != frozenset_with_counts(base.rotation[v]):
                raise SurfaceError(f"vertex-face at {v} has wrong corner multiset")
            vertex_faces[v] = mi

        from .surface import _walk_corners
        face_faces: dict[int, int] = {}
        remaining = set(range(len(mfaces))) - set(vertex_faces.values())
        for fi, w in enumerate(base.trace_faces()):
            key = frozenset_with_counts(_walk_corners(base, w))
            cands = [mi for mi in remaining if corner_key[mi] == key]
            if len(cands) != 1:
                raise SurfaceError(f"base face {fi} matches {len(cands)} medial faces")
            face_faces[fi] = cands[0]
            remaining.remove(cands[0])
        if remaining:
            raise SurfaceError("unclassified medial faces remain")
        return vertex_faces, face_faces


def frozenset_with_counts(items: Iterable[int]) -> tuple:
    counts: dict[int, int] = {}
    for x in items:
        counts[x] = counts.get(x, 0) + 1
    return tuple(sorted(counts.items()))


def _medial_slots(base: EmbeddedGraph, e: int) -> list[int]:
    """The four medial darts around medial vertex e, in rotation order.

    Slot L(x) is the positive dart of medial edge x; R(y) is the negative
    dart of medial edge rot_prev(y).  Slots 0,3 share one side of the base
    edge, slots 1,2 the other.
    """
    dp, dn = 2 * e, 2 * e + 1

    def L(x: int) -> int:
        return 2 * x

    def R(y: int) -> int:
        return 2 * base.rot_prev(y) + 1

    if base.signature[e] == 1:
        return [L(dp), R(dp), L(dn), R(dn)]
    return [L(dp), R(dp), R(dn), L(dn)]


def medial(base: EmbeddedGraph) -> MedialEmbedding:
    """Medial embedding: 4-regular, one vertex per base edge, same surface."""
    E = base.edge_count
    edges = []
    signature = []
    for x in range(2 * E):
        y = base.rot_next(x)
        edges.append((edge_of(x), edge_of(y)))
        sx = 1 if x & 1 == 0 else base.signature[edge_of(x)]
        sy = 1 if y & 1 == 0 else base.signature[edge_of(y)]
        signature.append(sx * sy)
    rotation = [_medial_slots(base, e) for e in range(E)]
    graph = EmbeddedGraph(E, edges, rotation, signature)
    return MedialEmbedding(base, graph)


@dataclass
class TotalVoltageGraph:
    """The total graph T(G) with the extended voltage assignment.

    Vertices: base vertices, then one midpoint per base edge (the medial
    vertex v_e), then one midpoint per corner (the subdivision vertices of
    the medial, where claw tips live).
    """

    ve: VoltageEmbedding
    vertex_count: int
    edges: list[tuple[int, int]]
    alpha: list[int]
    g_half1: list[int]   # base edge -> first-half T edge (tail, v_e)
    g_half2: list[int]   # base edge -> second-half T edge (v_e, head)
    m_half_a: list[int]  # corner x -> T edge (v_{E(x)}, m_x)
    m_half_b: list[int]  # corner x -> T edge (m_x, v_{E(rot_next(x))})
    psi: dict[int, int]  # T dart -> G' dart it projects to

    @property
    def base(self) -> EmbeddedGraph:
        return self.ve.base

    @property
    def group(self) -> FiniteGroup:
        return self.ve.group

    def midpoint_vertex(self, e: int) -> int:
        return self.base.vertex_count + e

    def corner_vertex(self, x: int) -> int:
        return self.base.vertex_count + self.base.edge_count + x

    def tail(self, d: int) -> int:
        e = d >> 1
        return self.edges[e][0] if d & 1 == 0 else self.edges[e][1]

    def head(self, d: int) -> int:
        return self.tail(d ^ 1)

    def medial_edge_indices(self) -> list[int]:
        return sorted(self.m_half_a + self.m_half_b)

    def medial_side_ends(self, e: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """The four medial darts at v_e grouped by side of the base edge.

        Darts have tail v_e; each returned pair lies on one side.
        """
        slots = _medial_slots(self.base, e)
        ends = []
        for slot in slots:
            x = slot >> 1
            if slot & 1 == 0:  # L(x): half-a edge, tail end at v_{E(x)}
                ends.append(2 * self.m_half_a[x])
            else:              # R end: half-b edge of corner x, head end
                ends.append(2 * self.m_half_b[x] + 1)
        return (ends[0], ends[3]), (ends[1], ends[2])


def total_graph_with_voltages(ve: VoltageEmbedding) -> TotalVoltageGraph:
    base, g = ve.base, ve.group
    V, E = base.vertex_count, base.edge_count
    edges: list[tuple[int, int]] = []
    alpha: list[int] = []
    psi: dict[int, int] = {}

    def add_edge(t: int, h: int, a: int) -> int:
        edges.append((t, h))
        alpha.extend([a, g.inv(a)])
        return len(edges) - 1

    g_half1, g_half2 = [], []
    for e in range(E):
        t, h = base.edge_tails[e], base.edge_heads[e]
        g_half1.append(add_edge(t, V + e, ve.alpha[2 * e]))
        g_half2.append(add_edge(V + e, h, 0))
    m_half_a, m_half_b = [], []
    for x in range(2 * E):
        y = base.rot_next(x)
        mx = V + E + x
        # alpha_E from psi-compatibility: the medial half projects onto the
        # G' dart bounding the corner (from the midpoint toward the corner
        # vertex and back out)
        a_in = g.inv(ve.alpha[x]) if x & 1 == 0 else 0
        a_out = ve.alpha[y] if y & 1 == 0 else 0
        ia = add_edge(V + edge_of(x), mx, a_in)
        ib = add_edge(mx, V + edge_of(y), a_out)
        m_half_a.append(ia)
        m_half_b.append(ib)
        # psi on the medial darts
        def gprime_dart(from_vertex_to_midpoint: bool, d: int) -> int:
            e0 = edge_of(d)
            if d & 1 == 0:  # corner vertex is the tail of the base edge
                return 2 * g_half1[e0] + (0 if from_vertex_to_midpoint else 1)
            return 2 * g_half2[e0] + (1 if from_vertex_to_midpoint else 0)
        psi[2 * ia] = gprime_dart(False, x)      # v_{E(x)} -> m_x projects to v_e -> v
        psi[2 * ia + 1] = gprime_dart(True, x)
        psi[2 * ib] = gprime_dart(True, y)       # m_x -> v_{E(y)} projects to v -> v_e
        psi[2 * ib + 1] = gprime_dart(False, y)
    for e in range(E):
        for d in (2 * g_half1[e], 2 * g_half1[e] + 1, 2 * g_half2[e], 2 * g_half2[e] + 1):
            psi[d] = d
    tvg = TotalVoltageGraph(ve, V + E + 2 * E, edges, alpha,
                            g_half1, g_half2, m_half_a, m_half_b, psi)
    for d, pd in psi.items():
        assert tvg.alpha[d] == tvg.alpha[pd], "extended voltages must match psi"
    return tvg


@dataclass(frozen=True)
class SpecialClaw:
    """The three total-graph edges tying a base edge's corner structure together.

    ``tip_w`` and ``tip_y`` are the corner midpoints flanking the edge's
    positive dart, one on each side of the edge.
    """

    edge: int
    center: int   # the midpoint vertex v_e
    tip_w: int
    tip_y: int
    claw_edges: tuple[int, int, int]


def claw_for_dart(tvg: TotalVoltageGraph, dart: int) -> SpecialClaw:
    """The claw at tail(dart) whose tips flank that end of the edge."""
    base, g = tvg.base, tvg.group
    e = edge_of(dart)
    w_corner = dart                      # corner (dart, rot_next(dart))
    y_corner = base.rot_prev(dart)       # corner on the other side of the edge
    stem = tvg.g_half1[e] if dart & 1 == 0 else tvg.g_half2[e]
    claw = SpecialClaw(
        e, tvg.midpoint_vertex(e),
        tvg.corner_vertex(w_corner), tvg.corner_vertex(y_corner),
        (stem, tvg.m_half_a[w_corner], tvg.m_half_b[y_corner]),
    )
    # walks from the base vertex through v_e to either tip carry trivial voltage
    if dart & 1 == 0:
        a_stem = tvg.alpha[2 * stem]          # tail -> v_e
    else:
        a_stem = tvg.alpha[2 * stem + 1]      # head -> v_e
    a_to_w = tvg.alpha[2 * tvg.m_half_a[w_corner]]           # v_e -> m_w
    a_to_y = tvg.alpha[2 * tvg.m_half_b[y_corner] + 1]       # v_e -> m_y
    if g.mul(a_stem, a_to_w) != 0 or g.mul(a_stem, a_to_y) != 0:
        raise VoltageError("claw walks must have trivial net voltage")
    return claw


def special_claw(tvg: TotalVoltageGraph, e: int) -> SpecialClaw:
    """The claw of a base edge, taken at the tail of its positive dart."""
    return claw_for_dart(tvg, 2 * e)


@dataclass
class SplitGraph:
    """The medial subgraph with circle midpoints split into side vertices."""

    vertex_count: int
    edges: list[tuple[int, int]]
    alpha: list[int]
    group: FiniteGroup
    midpoint_side_vertex: dict[tuple[int, int], int]  # (base edge, side) -> vertex
    midpoint_vertex: dict[int, int]                   # uncut base edge -> vertex
    tip_vertex: dict[int, int]                        # corner id -> vertex


def crossing_free_split(tvg: TotalVoltageGraph,
                        circle: CircleSubgraph | None) -> SplitGraph:
    """Split each medial vertex over a circle edge into its two side vertices.

    Walks in the split graph are exactly the medial walks that never
    transversely cross the circle.  With no circle the medial subdivision is
    returned unchanged.
    """
    base = tvg.base
    E = base.edge_count
    cut = circle.edges if circle is not None else frozenset()
    vertex_count = 0
    midpoint_side: dict[tuple[int, int], int] = {}
    midpoint: dict[int, int] = {}
    for e in range(E):
        if e in cut:
            midpoint_side[(e, 0)] = vertex_count
            midpoint_side[(e, 1)] = vertex_count + 1
            vertex_count += 2
        else:
            midpoint[e] = vertex_count
            vertex_count += 1
    tip: dict[int, int] = {}
    for x in range(2 * E):
        tip[x] = vertex_count
        vertex_count += 1

    side_of_end: dict[int, int] = {}
    for e in cut:
        side0, side1 = tvg.medial_side_ends(e)
        for d in side0:
            side_of_end[d] = 0
        for d in side1:
            side_of_end[d] = 1

    def resolve(e_base: int, end_dart: int) -> int:
        if e_base in cut:
            return midpoint_side[(e_base, side_of_end[end_dart])]
        return midpoint[e_base]

    edges = []
    alpha = []
    for x in range(2 * E):
        y = base.rot_next(x)
        ia, ib = tvg.m_half_a[x], tvg.m_half_b[x]
        edges.append((resolve(edge_of(x), 2 * ia), tip[x]))
        alpha.extend([tvg.alpha[2 * ia], tvg.alpha[2 * ia + 1]])
        edges.append((tip[x], resolve(edge_of(y), 2 * ib + 1)))
        alpha.extend([tvg.alpha[2 * ib], tvg.alpha[2 * ib + 1]])
    return SplitGraph(vertex_count, edges, alpha, tvg.group, midpoint_side, midpoint, tip)


def _component_edges(vertex_count: int, edges: Sequence[tuple[int, int]], v: int) -> set[int]:
    dsu = DisjointSets(vertex_count)
    for t, h in edges:
        dsu.union(t, h)
    root = dsu.find(v)
    return {i for i, (t, h) in enumerate(edges) if dsu.find(t) == root}


def claw_tips_for_circle(tvg: TotalVoltageGraph, circle: CircleSubgraph) -> tuple[int, int]:
    """Canonical tip corners (w', y') flanking the circle traversal's first dart."""
    d1 = circle.traversal[0]
    return d1, tvg.base.rot_prev(d1)


def medial_local_group(tvg: TotalVoltageGraph, tip_corner: int) -> Subgroup:
    """Net voltages of closed medial walks at a claw tip (no crossing restriction)."""
    return crossing_free_group(tvg, None, tip_corner)


def crossing_free_group(tvg: TotalVoltageGraph, circle: CircleSubgraph | None,
                        tip_corner: int) -> Subgroup:
    """Net voltages of crossing-free closed medial walks at a claw tip."""
    split = crossing_free_split(tvg, circle)
    if tip_corner not in split.tip_vertex:
        raise VoltageError("tip is not a medial subdivision vertex")
    w = split.tip_vertex[tip_corner]
    allowed = _component_edges(split.vertex_count, split.edges, w)
    gens = _local_group_elements(split.vertex_count, split.edges,
                                 lambda d: split.alpha[d], split.group, w, allowed)
    return subgroup_generated(split.group, gens)


def crossing_free_tip_parts(tvg: TotalVoltageGraph, circle: CircleSubgraph | None,
                            w_corner: int, y_corner: int
                            ) -> tuple[frozenset[int], frozenset[int]]:
    """Net voltages of crossing-free medial walks from w' to w' and from w' to y'.

    Computed as reachability in the derived split graph from (w', identity);
    the first set is the crossing-free group, the second its translate by any
    tip-to-tip voltage (empty when y' is unreachable).
    """
    base = tvg.base
    if not 0 <= w_corner < base.dart_count or y_corner != base.rot_prev(w_corner):
        raise VoltageError("tips must be the two tips of one special claw")
    split = crossing_free_split(tvg, circle)
    g = split.group
    nA = g.order
    dsu = DisjointSets(split.vertex_count * nA)
    for i, (t, h) in enumerate(split.edges):
        a = split.alpha[2 * i]
        for b in range(nA):
            dsu.union(t * nA + b, h * nA + g.mul(b, a))
    w = split.tip_vertex[w_corner]
    y = split.tip_vertex[y_corner]
    root = dsu.find(w * nA + 0)
    ws = frozenset(b for b in range(nA) if dsu.find(w * nA + b) == root)
    ys = frozenset(b for b in range(nA) if dsu.find(y * nA + b) == root)
    return ws, ys


def crossing_free_tip_set(tvg: TotalVoltageGraph, circle: CircleSubgraph | None,
                          w_corner: int, y_corner: int) -> frozenset[int]:
    """Net voltages of crossing-free medial walks from w' to w' or y'."""
    ws, ys = crossing_free_tip_parts(tvg, circle, w_corner, y_corner)
    return ws | ys


def verify_archdeacon(ve: VoltageEmbedding) -> None:
    """Check that deriving the subdivided medial equals the derived graph's medial.

    Both sides are expanded as labeled edge lists over midpoint and
    medial-vertex labels; the correspondence is forced by the projection and
    the trivial claw voltages.  Any mismatch raises.
    """
    base, g = ve.base, ve.group
    nA = g.order
    tvg = total_graph_with_voltages(ve)
    der = derive(ve)
    dgraph = der.graph

    def phi_mv(e: int, c: int) -> int:
        # midpoint (v_e, c) sits on derived edge (e, c * alpha(e)^-1)
        return der.edge_index(e, g.mul(c, g.inv(ve.alpha[2 * e])))

    lifted = []
    for x in range(2 * base.edge_count):
        y = base.rot_next(x)
        a_to_ex = tvg.alpha[2 * tvg.m_half_a[x] + 1]   # m_x -> v_{E(x)}
        a_to_ey = tvg.alpha[2 * tvg.m_half_b[x]]       # m_x -> v_{E(y)}
        for b in range(nA):
            mid = der.dart_lift(x, b)
            lifted.append((("mid", mid), ("mv", phi_mv(edge_of(x), g.mul(b, a_to_ex)))))
            lifted.append((("mid", mid), ("mv", phi_mv(edge_of(y), g.mul(b, a_to_ey)))))

    target = []
    for X in range(dgraph.dart_count):
        Y = dgraph.rot_next(X)
        target.append((("mid", X), ("mv", X >> 1)))
        target.append((("mid", X), ("mv", Y >> 1)))

    if sorted(lifted) != sorted(target):
        raise VoltageError("derived medial does not match the medial of the derived graph")
