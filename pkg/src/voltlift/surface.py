"""Embedded graphs as signed rotation systems.

An edge ``e`` owns two darts: ``2e`` (positive) and ``2e+1`` (negative).
The rotation is the cyclic order of darts around each vertex; the signature
assigns +1/-1 per edge (edge type).  Face tracing, Euler characteristic,
orientability, circle subgraphs, mod-2 chains and region cutting along
circles all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class SurfaceError(ValueError):
    pass


def opposite(d: int) -> int:
    return d ^ 1


def edge_of(d: int) -> int:
    return d >> 1


class DisjointSets:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class FaceWalk:
    """One face boundary walk: cyclic dart sequence plus traversal sides."""

    darts: tuple[int, ...]
    sides: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def edges(self) -> list[int]:
        return [edge_of(d) for d in self.darts]


class EmbeddedGraph:
    """A signed rotation system on a multigraph.

    The graph need not be connected (derived graphs usually are not);
    operations that require connectivity check it explicitly.
    """

    def __init__(self, vertex_count: int, edges: Sequence[tuple[int, int]],
                 rotation: Sequence[Sequence[int]], signature: Sequence[int]):
        self.vertex_count = vertex_count
        self.edge_tails = [e[0] for e in edges]
        self.edge_heads = [e[1] for e in edges]
        self.rotation = [list(r) for r in rotation]
        self.signature = list(signature)
        self._validate()
        self._faces: list[FaceWalk] | None = None

    @property
    def edge_count(self) -> int:
        return len(self.edge_tails)

    @property
    def dart_count(self) -> int:
        return 2 * len(self.edge_tails)

    def tail(self, d: int) -> int:
        e = d >> 1
        return self.edge_tails[e] if d & 1 == 0 else self.edge_heads[e]

    def head(self, d: int) -> int:
        return self.tail(d ^ 1)

    def sign(self, d: int) -> int:
        return self.signature[d >> 1]

    def _validate(self) -> None:
        if self.vertex_count < 1:
            raise SurfaceError("need at least one vertex")
        if not self.edge_tails:
            raise SurfaceError("need at least one edge")
        E = self.edge_count
        if len(self.rotation) != self.vertex_count:
            raise SurfaceError("rotation must list every vertex")
        if len(self.signature) != E:
            raise SurfaceError("signature must cover every edge")
        for s in self.signature:
            if s not in (1, -1):
                raise SurfaceError("signature values must be +1 or -1")
        for t, h in zip(self.edge_tails, self.edge_heads):
            for v in (t, h):
                if not 0 <= v < self.vertex_count:
                    raise SurfaceError(f"edge endpoint {v} out of range")
        seen = [0] * (2 * E)
        for v, rot in enumerate(self.rotation):
            for d in rot:
                if not 0 <= d < 2 * E:
                    raise SurfaceError(f"dart {d} out of range in rotation of {v}")
                if seen[d]:
                    raise SurfaceError(f"dart {d} appears twice in rotations")
                seen[d] = 1
                if self.tail(d) != v:
                    raise SurfaceError(f"dart {d} listed at vertex {v}, tail is {self.tail(d)}")
        if E and not all(seen):
            missing = seen.index(0)
            raise SurfaceError(f"dart {missing} missing from rotations")
        # rotation successor/predecessor lookup
        self._rot_next = [0] * (2 * E)
        self._rot_prev = [0] * (2 * E)
        for rot in self.rotation:
            k = len(rot)
            for i, d in enumerate(rot):
                self._rot_next[d] = rot[(i + 1) % k]
                self._rot_prev[d] = rot[(i - 1) % k]

    def rot_next(self, d: int) -> int:
        return self._rot_next[d]

    def rot_prev(self, d: int) -> int:
        return self._rot_prev[d]

    # -- connectivity -------------------------------------------------

    def vertex_components(self) -> list[int]:
        dsu = DisjointSets(self.vertex_count)
        for t, h in zip(self.edge_tails, self.edge_heads):
            dsu.union(t, h)
        return [dsu.find(v) for v in range(self.vertex_count)]

    def is_connected(self) -> bool:
        return len(set(self.vertex_components())) == 1

    # -- face tracing -------------------------------------------------

    def _face_successor(self, d: int, s: int) -> tuple[int, int]:
        s2 = s * self.sign(d)
        d2 = self.rot_next(d ^ 1) if s2 == 1 else self.rot_prev(d ^ 1)
        return d2, s2

    def trace_faces(self) -> list[FaceWalk]:
        """Boundary walks of the band decomposition.

        Orbits of the successor map on dart-side states pair up under the
        reversal involution (d, s) -> (opposite(d), -s * sign(d)); one
        representative walk is kept per pair.  The walk lengths sum to 2E.
        """
        if self._faces is not None:
            return self._faces
        states = {}  # (dart, side) -> orbit index
        orbits: list[list[tuple[int, int]]] = []
        for d0 in range(self.dart_count):
            for s0 in (1, -1):
                if (d0, s0) in states:
                    continue
                orbit = []
                d, s = d0, s0
                while (d, s) not in states:
                    states[(d, s)] = len(orbits)
                    orbit.append((d, s))
                    d, s = self._face_successor(d, s)
                if (d, s) != (d0, s0):
                    raise SurfaceError("malformed rotation: face orbit is not closed")
                orbits.append(orbit)
        faces = []
        used = set()
        for i, orbit in enumerate(orbits):
            if i in used:
                continue
            d, s = orbit[0]
            j = states[(d ^ 1, -s * self.sign(d))]
            if j == i or j in used:
                raise SurfaceError("face orbit pairing failed")
            used.add(i)
            used.add(j)
            faces.append(FaceWalk(tuple(d for d, _ in orbit), tuple(s for _, s in orbit)))
        assert sum(len(f) for f in faces) == self.dart_count
        self._faces = faces
        return faces

    def face_of_state(self, d: int, s: int) -> int:
        """Index of the face whose boundary orbit (or its reversal) contains (d, s)."""
        faces = self.trace_faces()
        orbit = set()
        state = (d, s)
        while state not in orbit:
            orbit.add(state)
            state = self._face_successor(*state)
        # the kept representative may be the reversal partner of this orbit
        partner = {(dd ^ 1, -ss * self.sign(dd)) for dd, ss in orbit}
        for i, f in enumerate(faces):
            fstates = set(zip(f.darts, f.sides))
            if fstates & orbit or fstates & partner:
                return i
        raise SurfaceError("state not on any face boundary")

    def face_count(self) -> int:
        return len(self.trace_faces())

    def euler_characteristic(self) -> int:
        return self.vertex_count - self.edge_count + self.face_count()

    def genus_report(self) -> tuple[bool, int]:
        """(orientable, genus-or-crosscap-number) of the closed surface."""
        if not self.is_connected():
            raise SurfaceError("genus is defined per connected surface")
        chi = self.euler_characteristic()
        if self.is_orientable():
            if chi % 2 != 0:
                raise SurfaceError("odd Euler characteristic on orientable surface")
            return True, (2 - chi) // 2
        return False, 2 - chi

    # -- orientability ------------------------------------------------

    def is_orientable(self) -> bool:
        """True iff every cycle has signature product +1.

        Signs are propagated over a spanning forest; each non-forest edge
        closes a fundamental cycle whose total sign must be +1.
        """
        sign_at = [0] * self.vertex_count
        for root in range(self.vertex_count):
            if sign_at[root]:
                continue
            sign_at[root] = 1
            stack = [root]
            while stack:
                v = stack.pop()
                for d in self.rotation[v]:
                    u = self.head(d)
                    if sign_at[u] == 0:
                        sign_at[u] = sign_at[v] * self.sign(d)
                        stack.append(u)
        for e in range(self.edge_count):
            t, h = self.edge_tails[e], self.edge_heads[e]
            if sign_at[t] * self.signature[e] * sign_at[h] != 1:
                return False
        return True

    # -- local modifications ------------------------------------------

    def local_sign_switch(self, v: int) -> "EmbeddedGraph":
        """Reverse the rotation at v and flip the type of every link at v."""
        if not 0 <= v < self.vertex_count:
            raise SurfaceError(f"vertex {v} out of range")
        rotation = [list(r) for r in self.rotation]
        rotation[v] = list(reversed(rotation[v]))
        signature = list(self.signature)
        for e in range(self.edge_count):
            t, h = self.edge_tails[e], self.edge_heads[e]
            if (t == v) != (h == v):  # links only; loops keep their type
                signature[e] = -signature[e]
        return EmbeddedGraph(self.vertex_count,
                             list(zip(self.edge_tails, self.edge_heads)),
                             rotation, signature)

    def subdivide_edge(self, e: int) -> "EmbeddedGraph":
        """Replace edge e with a path of length 2 through a new vertex.

        The first new edge keeps sign(e), the second is +1, so the path
        composes to the original type.
        """
        if not 0 <= e < self.edge_count:
            raise SurfaceError(f"edge {e} out of range")
        w = self.vertex_count
        edges = list(zip(self.edge_tails, self.edge_heads))
        t, h = edges[e]
        e2 = len(edges)
        edges[e] = (t, w)
        edges.append((w, h))
        signature = list(self.signature)
        signature.append(1)
        rotation = [list(r) for r in self.rotation]
        # dart 2e keeps its slot at t; dart 2e+1 at h becomes dart of the new
        # edge (2*e2+1); the midpoint sees the path's two inner darts.
        for rot in rotation:
            for i, d in enumerate(rot):
                if d == 2 * e + 1:
                    rot[i] = 2 * e2 + 1
        rotation.append([2 * e + 1, 2 * e2])
        return EmbeddedGraph(w + 1, edges, rotation, signature)

    # -- chains -------------------------------------------------------

    def boundary(self, faces: Iterable[int]) -> frozenset[int]:
        """Mod-2 boundary of a face chain, as an edge set."""
        walks = self.trace_faces()
        count: dict[int, int] = {}
        for f in faces:
            if not 0 <= f < len(walks):
                raise SurfaceError(f"face {f} out of range")
            for e in walks[f].edges():
                count[e] = count.get(e, 0) + 1
        return frozenset(e for e, c in count.items() if c % 2 == 1)

    def subcomplex_skeleton(self, faces: Iterable[int]) -> tuple[frozenset[int], frozenset[int], bool]:
        """1-skeleton (vertices, edges) of the faces' subcomplex, plus connectedness."""
        walks = self.trace_faces()
        edges: set[int] = set()
        for f in faces:
            if not 0 <= f < len(walks):
                raise SurfaceError(f"face {f} out of range")
            edges.update(walks[f].edges())
        verts: set[int] = set()
        for e in edges:
            verts.add(self.edge_tails[e])
            verts.add(self.edge_heads[e])
        connected = True
        if verts:
            dsu = DisjointSets(self.vertex_count)
            for e in edges:
                dsu.union(self.edge_tails[e], self.edge_heads[e])
            connected = len({dsu.find(v) for v in verts}) == 1
        return frozenset(verts), frozenset(edges), connected

    def edge_subgraph_components(self, edges: Iterable[int]) -> list[frozenset[int]]:
        """Partition an edge set into connected-subgraph edge classes."""
        edges = list(edges)
        dsu = DisjointSets(self.vertex_count)
        for e in edges:
            dsu.union(self.edge_tails[e], self.edge_heads[e])
        by_root: dict[int, set[int]] = {}
        for e in edges:
            by_root.setdefault(dsu.find(self.edge_tails[e]), set()).add(e)
        return [frozenset(s) for _, s in sorted(by_root.items())]


@dataclass(frozen=True)
class CircleSubgraph:
    """A connected 2-regular subgraph with a cached Eulerian traversal."""

    edges: frozenset[int]
    base_vertex: int
    traversal: tuple[int, ...]  # darts d1..dk, cyclic, starting at base_vertex

    def __len__(self) -> int:
        return len(self.edges)


def circle_from_edges(g: EmbeddedGraph, edges: Iterable[int], base_vertex: int) -> CircleSubgraph:
    """Build a circle from a 1-chain, canonicalizing the traversal direction.

    The traversal starts with the minimal dart index leaving base_vertex on
    the circle.
    """
    eset = frozenset(edges)
    if not eset:
        raise SurfaceError("a circle needs at least one edge")
    degree: dict[int, int] = {}
    for e in eset:
        if not 0 <= e < g.edge_count:
            raise SurfaceError(f"edge {e} out of range")
        degree[g.edge_tails[e]] = degree.get(g.edge_tails[e], 0) + 1
        degree[g.edge_heads[e]] = degree.get(g.edge_heads[e], 0) + 1
    if any(d != 2 for d in degree.values()):
        raise SurfaceError("chain is not 2-regular")
    if base_vertex not in degree:
        raise SurfaceError("base vertex not on the chain")
    if len(g.edge_subgraph_components(eset)) != 1:
        raise SurfaceError("chain is not connected")
    start = min(d for e in eset for d in (2 * e, 2 * e + 1) if g.tail(d) == base_vertex)
    traversal = [start]
    used = {start >> 1}
    v = g.head(start)
    while len(traversal) < len(eset):
        nxt = [d for e in eset if e not in used
               for d in (2 * e, 2 * e + 1) if g.tail(d) == v]
        d = min(nxt)
        traversal.append(d)
        used.add(d >> 1)
        v = g.head(d)
    if v != base_vertex:
        raise SurfaceError("traversal did not close up")
    return CircleSubgraph(eset, base_vertex, tuple(traversal))


def circle_orientation_type(g: EmbeddedGraph, c: CircleSubgraph) -> str:
    """'reversing' iff the signature product over the circle is -1."""
    prod = 1
    for e in c.edges:
        prod *= g.signature[e]
    return "preserving" if prod == 1 else "reversing"


@dataclass(frozen=True)
class RegionPartition:
    """Faces partitioned into regions after cutting along circles.

    ``corner_region[d]`` is the region of the corner (d, rot_next(d));
    ``banks[i]`` is the ordered region pair on the two sides of circle i.
    """

    face_region: tuple[int, ...]
    corner_region: tuple[int, ...]
    banks: tuple[tuple[int, int], ...]
    region_count: int


def check_property_delta(g: EmbeddedGraph, circles: Sequence[CircleSubgraph]) -> None:
    seen_vertices: set[int] = set()
    for c in circles:
        if circle_orientation_type(g, c) != "preserving":
            raise SurfaceError("orientation-reversing circle: property-Delta violation")
        verts = {g.tail(d) for d in c.traversal}
        if verts & seen_vertices:
            raise SurfaceError("circles share a vertex: property-Delta violation")
        seen_vertices |= verts


def cut_regions(g: EmbeddedGraph, circles: Sequence[CircleSubgraph]) -> RegionPartition:
    """Regions of the surface cut along vertex-disjoint orientation-preserving circles.

    Works on the corner graph: corners are rotation-consecutive dart pairs,
    identified by their first dart.  Corners on the same face walk are merged,
    and corners adjacent around a vertex are merged unless separated by a
    dart on a cut circle.
    """
    check_property_delta(g, circles)
    cut_edges = set()
    for c in circles:
        cut_edges |= c.edges
    nd = g.dart_count
    dsu = DisjointSets(max(nd, 1))
    faces = g.trace_faces()
    face_corner = []
    for walk in faces:
        corners = _walk_corners(g, walk)
        for c1, c2 in zip(corners, corners[1:]):
            dsu.union(c1, c2)
        face_corner.append(corners[0])
    for d in range(nd):
        if edge_of(d) not in cut_edges:
            dsu.union(g.rot_prev(d), d)
    roots = sorted({dsu.find(c) for c in range(nd)}) if nd else [0]
    region_id = {r: i for i, r in enumerate(roots)}
    corner_region = tuple(region_id[dsu.find(c)] for c in range(nd))
    face_region = tuple(region_id[dsu.find(c)] for c in face_corner)
    banks = []
    for c in circles:
        d1 = c.traversal[0]
        dk_op = c.traversal[-1] ^ 1
        banks.append((region_id[dsu.find(d1)], region_id[dsu.find(dk_op)]))
    return RegionPartition(face_region, corner_region, tuple(banks), len(roots))


def _walk_corners(g: EmbeddedGraph, walk: FaceWalk) -> list[int]:
    """Corners consumed by a face walk, one per transition, in walk order."""
    corners = []
    k = len(walk)
    for i in range(k):
        d = walk.darts[i]
        d_next = walk.darts[(i + 1) % k]
        s_next = walk.sides[(i + 1) % k]
        corners.append(d ^ 1 if s_next == 1 else d_next)
    return corners


def is_separating(g: EmbeddedGraph, c: CircleSubgraph) -> bool:
    """True iff cutting along the circle splits its surface component in two."""
    if circle_orientation_type(g, c) == "reversing":
        return False
    parts = cut_regions(g, [c])
    comps = g.vertex_components()
    comp = comps[c.base_vertex]
    faces = g.trace_faces()
    local_regions = {parts.face_region[f] for f in range(len(faces))
                     if comps[g.tail(faces[f].darts[0])] == comp}
    return len(local_regions) == 2


@dataclass(frozen=True)
class ZGraph:
    """Incidence multigraph of regions (vertices) and circles (edges).

    Vertex and edge labels are opaque hashables; an edge is a loop when its
    two endpoint labels coincide.
    """

    vertex_labels: tuple
    edge_labels: tuple
    endpoints: tuple[tuple[int, int], ...]  # indices into vertex_labels

    def degree(self, i: int) -> int:
        deg = 0
        for a, b in self.endpoints:
            deg += (a == i) + (b == i)
        return deg

    def is_connected(self) -> bool:
        n = len(self.vertex_labels)
        dsu = DisjointSets(max(n, 1))
        for a, b in self.endpoints:
            dsu.union(a, b)
        return len({dsu.find(i) for i in range(n)}) <= 1


def zgraph_bruteforce(g: EmbeddedGraph, circles: Sequence[CircleSubgraph]) -> ZGraph:
    """Z-graph from an explicit region cut: one vertex per region, one edge per circle."""
    parts = cut_regions(g, circles)
    labels = tuple(range(parts.region_count))
    endpoints = tuple(parts.banks)
    return ZGraph(labels, tuple(range(len(circles))), endpoints)
