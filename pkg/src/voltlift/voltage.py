"""Ordinary voltage graphs, derived embeddings, and local voltage groups.

The derived embedding lifts a base embedding fiberwise: vertex (v, a) is
index ``v * |A| + a``, edge (e, a) is index ``e * |A| + a``, where the edge
label is the tail superscript of the positive dart's lift.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import FiniteGroup, Subgroup, subgroup_generated
from .surface import DisjointSets, EmbeddedGraph, SurfaceError

DEFAULT_LABEL_CAP = 100_000


class VoltageError(ValueError):
    pass


@dataclass(frozen=True)
class WalkSpec:
    """A dart sequence with matching heads and tails."""

    darts: tuple[int, ...]
    closed: bool

    def __len__(self) -> int:
        return len(self.darts)


def make_walk(g: EmbeddedGraph, darts: Sequence[int]) -> WalkSpec:
    darts = tuple(darts)
    for d1, d2 in zip(darts, darts[1:]):
        if g.head(d1) != g.tail(d2):
            raise VoltageError(f"darts {d1},{d2} do not concatenate")
    closed = bool(darts) and g.head(darts[-1]) == g.tail(darts[0])
    return WalkSpec(darts, closed)


class VoltageEmbedding:
    """An embedded graph with a dart-voltage map into a finite group."""

    def __init__(self, base: EmbeddedGraph, group: FiniteGroup, alpha: Sequence[int]):
        if len(alpha) != base.dart_count:
            raise VoltageError("voltage list must cover every dart")
        self.base = base
        self.group = group
        self.alpha = list(alpha)
        self.validate()

    def validate(self) -> None:
        g = self.group
        for a in self.alpha:
            if not 0 <= a < g.order:
                raise VoltageError(f"voltage {a} out of range")
        for e in range(self.base.edge_count):
            if self.alpha[2 * e + 1] != g.inv(self.alpha[2 * e]):
                raise VoltageError(
                    f"edge {e}: opposite darts must carry inverse voltages")

    def net_voltage(self, w: WalkSpec | Sequence[int]) -> int:
        if not isinstance(w, WalkSpec):
            w = make_walk(self.base, w)
        return self.group.product(self.alpha[d] for d in w.darts)

    def with_alpha(self, alpha: Sequence[int]) -> "VoltageEmbedding":
        return VoltageEmbedding(self.base, self.group, alpha)


@dataclass
class DerivedEmbedding:
    """The derived embedding plus label maps in both directions."""

    graph: EmbeddedGraph
    base: VoltageEmbedding

    @property
    def group_order(self) -> int:
        return self.base.group.order

    def vertex_index(self, v: int, a: int) -> int:
        return v * self.group_order + a

    def vertex_label(self, i: int) -> tuple[int, int]:
        return divmod(i, self.group_order)

    def edge_index(self, e: int, a: int) -> int:
        return e * self.group_order + a

    def edge_label(self, i: int) -> tuple[int, int]:
        return divmod(i, self.group_order)

    def dart_lift(self, d: int, a: int) -> int:
        """Lift of base dart d with tail superscript a."""
        nA = self.group_order
        e = d >> 1
        if d & 1 == 0:
            return 2 * (e * nA + a)
        g = self.base.group
        return 2 * (e * nA + g.mul(a, self.base.alpha[d])) + 1

    def dart_project(self, derived_dart: int) -> tuple[int, int]:
        """Base dart and tail superscript of a derived dart."""
        e, a = divmod(derived_dart >> 1, self.group_order)
        d = 2 * e + (derived_dart & 1)
        if derived_dart & 1:
            a = self.base.group.mul(a, self.base.alpha[2 * e])
        return d, a

    def vertex_fiber(self, v: int) -> list[int]:
        return [self.vertex_index(v, a) for a in range(self.group_order)]

    def lift_walk(self, darts: Sequence[int], start: int) -> tuple[list[int], int]:
        """Lift a base walk from superscript ``start``; returns darts and end superscript."""
        g = self.base.group
        a = start
        out = []
        for d in darts:
            out.append(self.dart_lift(d, a))
            a = g.mul(a, self.base.alpha[d])
        return out, a


def derive(ve: VoltageEmbedding, label_cap: int = DEFAULT_LABEL_CAP) -> DerivedEmbedding:
    base, g = ve.base, ve.group
    nA = g.order
    if base.vertex_count * nA > label_cap or base.edge_count * nA > label_cap:
        raise VoltageError("derived graph exceeds the label cap")
    edges = []
    for e in range(base.edge_count):
        t, h = base.edge_tails[e], base.edge_heads[e]
        for a in range(nA):
            edges.append((t * nA + a, h * nA + g.mul(a, ve.alpha[2 * e])))
    signature = [base.signature[e] for e in range(base.edge_count) for _ in range(nA)]

    def lift(d: int, a: int) -> int:
        e = d >> 1
        if d & 1 == 0:
            return 2 * (e * nA + a)
        return 2 * (e * nA + g.mul(a, ve.alpha[d])) + 1

    rotation = []
    for v in range(base.vertex_count):
        for a in range(nA):
            rotation.append([lift(d, a) for d in base.rotation[v]])
    derived_graph = EmbeddedGraph(base.vertex_count * nA, edges, rotation, signature)
    return DerivedEmbedding(derived_graph, ve)


def face_lift_prediction(ve: VoltageEmbedding) -> tuple[int, int]:
    """(face count, Euler characteristic) of the derived surface, from net face voltages.

    A base face whose boundary net voltage has order n lifts to |A|/n faces.
    """
    base, g = ve.base, ve.group
    nA = g.order
    total = 0
    for walk in base.trace_faces():
        nv = g.product(ve.alpha[d] for d in walk.darts)
        total += nA // g.element_order(nv)
    chi = nA * (base.vertex_count - base.edge_count) + total
    return total, chi


# -- local voltage groups -------------------------------------------------


def _local_group_elements(vertex_count: int, edge_list: Sequence[tuple[int, int]],
                          dart_alpha, group: FiniteGroup, v: int,
                          allowed_edges: Iterable[int] | None = None) -> list[int]:
    """Generators of the net-voltage group of closed walks at v.

    Spanning-tree potentials: each non-tree dart d contributes
    pot(tail) * alpha(d) * pot(head)^-1.
    """
    allowed = set(range(len(edge_list))) if allowed_edges is None else set(allowed_edges)
    incident: dict[int, list[int]] = {}
    for e in allowed:
        t, h = edge_list[e]
        incident.setdefault(t, []).append(2 * e)
        incident.setdefault(h, []).append(2 * e + 1)
    pot = {v: 0}
    order = [v]
    queue = [v]
    while queue:
        u = queue.pop(0)
        for d in sorted(incident.get(u, [])):
            e = d >> 1
            t, h = edge_list[e]
            w = h if d & 1 == 0 else t
            if w not in pot:
                pot[w] = group.mul(pot[u], dart_alpha(d))
                queue.append(w)
                order.append(w)
    gens = []
    for e in allowed:
        t, h = edge_list[e]
        if t not in pot or h not in pot:
            raise VoltageError("subgraph is not connected at the basepoint")
        d = 2 * e
        gens.append(group.product([pot[t], dart_alpha(d), group.inv(pot[h])]))
    return gens


def local_voltage_group(ve: VoltageEmbedding, v: int) -> Subgroup:
    """A(v): net voltages of closed walks based at v."""
    base = ve.base
    if not 0 <= v < base.vertex_count:
        raise VoltageError(f"vertex {v} out of range")
    if not base.is_connected():
        raise VoltageError("local voltage group needs a connected base")
    gens = _local_group_elements(base.vertex_count,
                                 list(zip(base.edge_tails, base.edge_heads)),
                                 lambda d: ve.alpha[d], ve.group, v)
    return subgroup_generated(ve.group, gens)


def restricted_voltage_group(ve: VoltageEmbedding, edges: Iterable[int], v: int) -> Subgroup:
    """A(v, X): net voltages of closed walks inside the edge subset X."""
    base = ve.base
    edges = set(edges)
    verts = set()
    for e in edges:
        verts.add(base.edge_tails[e])
        verts.add(base.edge_heads[e])
    if v not in verts:
        raise VoltageError("basepoint not on the subgraph")
    if len(base.edge_subgraph_components(edges)) != 1:
        raise VoltageError("subgraph is not connected")
    gens = _local_group_elements(base.vertex_count,
                                 list(zip(base.edge_tails, base.edge_heads)),
                                 lambda d: ve.alpha[d], ve.group, v, edges)
    return subgroup_generated(ve.group, gens)


def same_component(ve: VoltageEmbedding, v: int, a: int, b: int) -> bool:
    """Whether v^a and v^b share a component: true iff a^-1 b lies in A(v)."""
    g = ve.group
    return g.mul(g.inv(a), b) in local_voltage_group(ve, v)


# -- component counting (predicted vs brute force) ------------------------


class VerificationError(AssertionError):
    """A predicted count disagreed with its brute-force counterpart."""


def _derived_vertex_components(der: DerivedEmbedding) -> list[int]:
    return der.graph.vertex_components()


def component_count(ve: VoltageEmbedding, v: int = 0) -> tuple[int, int]:
    """(predicted, brute) number of components of the derived surface."""
    predicted = ve.group.order // len(local_voltage_group(ve, v))
    der = derive(ve)
    brute = len(set(_derived_vertex_components(der)))
    if predicted != brute:
        raise VerificationError(
            f"component count: predicted {predicted}, brute-forced {brute}")
    return predicted, brute


def fiber_components(ve: VoltageEmbedding, edges: Iterable[int], v: int,
                     within: Iterable[int] | None = None,
                     der: DerivedEmbedding | None = None) -> list[frozenset[int]]:
    """Components of the lifted edge-subgraph, as derived-vertex frozensets.

    ``within`` restricts to components meeting the given derived vertex set.
    """
    if der is None:
        der = derive(ve)
    nA = der.group_order
    edges = list(edges)
    dsu = DisjointSets(der.graph.vertex_count)
    for e in edges:
        for a in range(nA):
            de = der.edge_index(e, a)
            dsu.union(der.graph.edge_tails[de], der.graph.edge_heads[de])
    members: dict[int, set[int]] = {}
    for e in edges:
        for a in range(nA):
            de = der.edge_index(e, a)
            for u in (der.graph.edge_tails[de], der.graph.edge_heads[de]):
                members.setdefault(dsu.find(u), set()).add(u)
    comps = [frozenset(s) for _, s in sorted(members.items())]
    if within is not None:
        wset = set(within)
        comps = [c for c in comps if c & wset]
    return comps


@dataclass
class CosetCountReport:
    """The four coset-count identities as (predicted, brute) pairs."""

    components: tuple[int, int]
    subcomplex_components: tuple[int, int]
    subgraph_components: tuple[int, int]
    lift_sets: tuple[int, int]


def coset_count_check(ve: VoltageEmbedding, v: int, I_faces: Sequence[int],
                      y_edges: Iterable[int], walk: WalkSpec) -> CosetCountReport:
    """Check the four coset-count identities against brute force.

    I_faces: face chain with connected subcomplex containing v.
    y_edges: connected subgraph of the subcomplex's skeleton containing v.
    walk: closed walk in the y-subgraph based at v.
    """
    base, g = ve.base, ve.group
    y_edges = set(y_edges)
    _, skel_edges, skel_conn = base.subcomplex_skeleton(I_faces)
    if not skel_conn:
        raise VoltageError("subcomplex skeleton is not connected")
    if not y_edges <= skel_edges:
        raise VoltageError("y-subgraph must lie in the subcomplex skeleton")
    if walk.darts and base.tail(walk.darts[0]) != v:
        raise VoltageError("walk must be based at v")
    if not walk.closed and walk.darts:
        raise VoltageError("walk must be closed")
    if any((d >> 1) not in y_edges for d in walk.darts):
        raise VoltageError("walk must stay in the y-subgraph")

    A_v = local_voltage_group(ve, v)
    A_I = restricted_voltage_group(ve, skel_edges, v)
    A_y = restricted_voltage_group(ve, y_edges, v)
    omega = ve.net_voltage(walk)
    omega_order = g.element_order(omega)

    der = derive(ve)
    comps = _derived_vertex_components(der)
    brute_components = len(set(comps))
    predicted_components = g.order // len(A_v)

    home = {u for u in range(der.graph.vertex_count)
            if comps[u] == comps[der.vertex_index(v, 0)]}
    sub_comps = fiber_components(ve, skel_edges, v, within=home, der=der)
    predicted_sub = len(A_v) // len(A_I)

    home_I = next(c for c in sub_comps if der.vertex_index(v, 0) in c)
    y_comps = fiber_components(ve, y_edges, v, within=home_I, der=der)
    predicted_y = len(A_I) // len(A_y)

    home_y = next(c for c in y_comps if der.vertex_index(v, 0) in c)
    coset = sorted(a for a in range(g.order) if der.vertex_index(v, a) in home_y)
    sets = consecutive_lift_sets(ve, walk, coset, der=der)
    predicted_sets = len(A_y) // omega_order

    report = CosetCountReport(
        (predicted_components, brute_components),
        (predicted_sub, len(sub_comps)),
        (predicted_y, len(y_comps)),
        (predicted_sets, len(sets)),
    )
    for name, (p, b) in (("components", report.components),
                         ("subcomplex", report.subcomplex_components),
                         ("subgraph", report.subgraph_components),
                         ("lift sets", report.lift_sets)):
        if p != b:
            raise VerificationError(f"{name}: predicted {p}, brute-forced {b}")
    return report


@dataclass(frozen=True)
class LiftSet:
    """A set of consecutive lifts of a closed walk, as its start superscripts."""

    superscripts: tuple[int, ...]


def consecutive_lift_sets(ve: VoltageEmbedding, walk: WalkSpec,
                          within_coset: Sequence[int],
                          der: DerivedEmbedding | None = None) -> list[LiftSet]:
    """Partition a coset into consecutive-lift sets by simulating the lifts."""
    if walk.darts and not walk.closed:
        raise VoltageError("consecutive lifts need a closed walk")
    if der is None:
        der = derive(ve)
    g = ve.group
    remaining = set(within_coset)
    sets = []
    while remaining:
        start = min(remaining)
        supers = []
        a = start
        while True:
            supers.append(a)
            _, a = der.lift_walk(walk.darts, a)
            if a == start:
                break
        if not set(supers) <= remaining:
            raise VoltageError("coset is not closed under the walk's net voltage")
        remaining -= set(supers)
        sets.append(LiftSet(tuple(supers)))
    return sets


# -- the A-action and voltage-preserving modifications --------------------


def act(der: DerivedEmbedding, c: int) -> tuple[list[int], list[int]]:
    """Left action of c: vertex and edge permutations of the derived graph."""
    g = der.base.group
    nA = g.order
    vperm = [0] * der.graph.vertex_count
    for v in range(der.base.base.vertex_count):
        for a in range(nA):
            vperm[der.vertex_index(v, a)] = der.vertex_index(v, g.mul(c, a))
    eperm = [0] * der.graph.edge_count
    for e in range(der.base.base.edge_count):
        for a in range(nA):
            eperm[der.edge_index(e, a)] = der.edge_index(e, g.mul(c, a))
    return vperm, eperm


def local_voltage_modification(ve: VoltageEmbedding, v: int, c: int) -> VoltageEmbedding:
    """Replace alpha(d) by c * alpha(d) on darts leaving v (no loops at v)."""
    base, g = ve.base, ve.group
    for e in range(base.edge_count):
        if base.edge_tails[e] == v and base.edge_heads[e] == v:
            raise VoltageError("local voltage modification requires no loops at v")
    alpha = list(ve.alpha)
    for e in range(base.edge_count):
        for d in (2 * e, 2 * e + 1):
            if base.tail(d) == v:
                alpha[d] = g.mul(c, ve.alpha[d])
                alpha[d ^ 1] = g.inv(alpha[d])
    return ve.with_alpha(alpha)


def subdivide_voltage(ve: VoltageEmbedding, e: int) -> VoltageEmbedding:
    """Subdivide edge e; the first half keeps alpha(e), the second is trivial."""
    base2 = ve.base.subdivide_edge(e)
    alpha2 = list(ve.alpha) + [0, 0]
    return VoltageEmbedding(base2, ve.group, alpha2)


def graphs_isomorphic_by_vertex_map(g1: EmbeddedGraph, g2: EmbeddedGraph,
                                    vertex_map: Sequence[int]) -> bool:
    """Check that a vertex bijection carries g1's edge multiset onto g2's."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if sorted(vertex_map) != list(range(g2.vertex_count)):
        return False

    def key(pairs):
        return sorted(tuple(sorted(p)) for p in pairs)

    mapped = [(vertex_map[t], vertex_map[h])
              for t, h in zip(g1.edge_tails, g1.edge_heads)]
    return key(mapped) == key(list(zip(g2.edge_tails, g2.edge_heads)))
