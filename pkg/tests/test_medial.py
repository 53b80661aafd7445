import pytest

from voltlift.catalog import (klein_bouquet, projective_loop, sphere_loop,
                              sphere_theta, torus_bouquet)
from voltlift.groups import direct_product, make_cyclic
from voltlift.medial import (claw_for_dart, claw_tips_for_circle,
                             crossing_free_group, crossing_free_split,
                             crossing_free_tip_parts, medial,
                             medial_local_group, special_claw,
                             total_graph_with_voltages, verify_archdeacon)
from voltlift.surface import circle_from_edges
from voltlift.voltage import VoltageEmbedding, local_voltage_group

ALL_CATALOG = [sphere_theta, projective_loop, torus_bouquet, klein_bouquet,
               sphere_loop]


def test_medial_is_four_regular_same_surface():
    for make in ALL_CATALOG:
        base = make()
        med = medial(base)
        g = med.graph
        assert g.vertex_count == base.edge_count
        assert g.edge_count == base.dart_count
        for v in range(g.vertex_count):
            assert len(g.rotation[v]) == 4
        assert g.euler_characteristic() == base.euler_characteristic()
        assert g.is_orientable() == base.is_orientable()


def test_medial_face_classification_partitions():
    for make in ALL_CATALOG:
        base = make()
        med = medial(base)
        vertex_faces, face_faces = med.classify_faces()
        assert len(vertex_faces) == base.vertex_count
        assert len(face_faces) == base.face_count()
        used = list(vertex_faces.values()) + list(face_faces.values())
        assert sorted(used) == list(range(med.graph.face_count()))


def _instances():
    z4 = make_cyclic(4)
    z6 = make_cyclic(6)
    z2z2 = direct_product(make_cyclic(2), make_cyclic(2))
    return [
        VoltageEmbedding(torus_bouquet(), z6, [2, 4, 3, 3]),
        VoltageEmbedding(projective_loop(), z4, [1, 3]),
        VoltageEmbedding(sphere_theta(), z2z2, [1, 1, 2, 2, 3, 3]),
        VoltageEmbedding(klein_bouquet(), z4, [1, 3, 2, 2]),
    ]


def test_total_graph_shape_and_psi():
    for ve in _instances():
        base = ve.base
        tvg = total_graph_with_voltages(ve)
        assert tvg.vertex_count == base.vertex_count + base.edge_count + base.dart_count
        assert len(tvg.edges) == 2 * base.edge_count + 2 * base.dart_count
        for d, pd in tvg.psi.items():
            assert tvg.alpha[d] == tvg.alpha[pd]


def test_claws_have_trivial_net_voltage():
    # claw_for_dart validates the stem+tip voltage identities internally
    for ve in _instances():
        tvg = total_graph_with_voltages(ve)
        for e in range(ve.base.edge_count):
            special_claw(tvg, e)
        for d in range(ve.base.dart_count):
            claw = claw_for_dart(tvg, d)
            assert claw.center == tvg.midpoint_vertex(d >> 1)
            assert claw.tip_w == tvg.corner_vertex(d)


def test_medial_local_group_matches_base_local_group():
    for ve in _instances():
        tvg = total_graph_with_voltages(ve)
        for d in range(ve.base.dart_count):
            a_med = medial_local_group(tvg, d)
            a_base = local_voltage_group(ve, ve.base.tail(d))
            assert a_med.element_set() == a_base.element_set()


def test_crossing_free_group_is_subgroup_of_local():
    for ve in _instances():
        tvg = total_graph_with_voltages(ve)
        for edges in ([0], [1]):
            try:
                circle = circle_from_edges(ve.base, edges, ve.base.edge_tails[edges[0]])
            except Exception:
                continue
            w, y = claw_tips_for_circle(tvg, circle)
            avee = crossing_free_group(tvg, circle, w)
            full = medial_local_group(tvg, w)
            assert avee.element_set() <= full.element_set()


def test_crossing_free_split_degrees():
    ve = _instances()[0]
    tvg = total_graph_with_voltages(ve)
    circle = circle_from_edges(ve.base, [0], 0)
    split = crossing_free_split(tvg, circle)
    # one vertex per uncut midpoint, two per cut midpoint, one per corner
    E = ve.base.edge_count
    assert split.vertex_count == 3 * E + len(circle.edges)
    assert set(split.midpoint_side_vertex) == {(0, 0), (0, 1)}


def test_tip_parts_partition_component():
    g = make_cyclic(6)
    ve = VoltageEmbedding(torus_bouquet(), g, [2, 4, 3, 3])
    tvg = total_graph_with_voltages(ve)
    circle = circle_from_edges(ve.base, [0], 0)
    w, y = claw_tips_for_circle(tvg, circle)
    ws, ys = crossing_free_tip_parts(tvg, circle, w, y)
    assert ws == frozenset({0, 2, 4})
    assert ys == frozenset({1, 3, 5})
    # the w-part is closed under the crossing-free group
    avee = crossing_free_group(tvg, circle, w)
    for a in ws:
        for b in avee.elements:
            assert g.mul(a, b) in ws


def test_medial_lift_correspondence():
    for ve in _instances():
        verify_archdeacon(ve)
