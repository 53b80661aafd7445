import pytest

from voltlift.catalog import (klein_bouquet, projective_loop, sphere_loop,
                              sphere_theta, torus_bouquet)
from voltlift.surface import (EmbeddedGraph, SurfaceError, circle_from_edges,
                              circle_orientation_type, cut_regions,
                              is_separating, zgraph_bruteforce)

ALL_CATALOG = [sphere_theta, projective_loop, torus_bouquet, klein_bouquet,
               sphere_loop]


def test_catalog_surfaces():
    expected = {
        sphere_theta: (2, True, 0),
        projective_loop: (1, False, 1),
        torus_bouquet: (0, True, 1),
        klein_bouquet: (0, False, 2),
        sphere_loop: (2, True, 0),
    }
    for make, (chi, orientable, genus) in expected.items():
        g = make()
        assert g.euler_characteristic() == chi
        assert g.genus_report() == (orientable, genus)


def test_rotation_navigation():
    g = sphere_theta()
    for d in range(g.dart_count):
        assert g.rot_prev(g.rot_next(d)) == d
        assert g.tail(d) == g.head(d ^ 1)


def test_face_counts():
    assert sphere_theta().face_count() == 3
    assert torus_bouquet().face_count() == 1
    assert projective_loop().face_count() == 1
    assert sphere_loop().face_count() == 2


def test_validation_rejects_bad_rotation():
    with pytest.raises(SurfaceError):
        EmbeddedGraph(1, [(0, 0)], [[0, 0]], [1])
    with pytest.raises(SurfaceError):
        EmbeddedGraph(2, [(0, 1)], [[0], []], [1])


def test_local_sign_switch_invariance():
    for make in ALL_CATALOG:
        g = make()
        for v in range(g.vertex_count):
            g2 = g.local_sign_switch(v)
            assert g2.euler_characteristic() == g.euler_characteristic()
            assert g2.is_orientable() == g.is_orientable()
            assert g2.face_count() == g.face_count()


def test_subdivide_edge_invariance():
    for make in ALL_CATALOG:
        g = make()
        g2 = g.subdivide_edge(0)
        assert g2.vertex_count == g.vertex_count + 1
        assert g2.edge_count == g.edge_count + 1
        assert g2.euler_characteristic() == g.euler_characteristic()
        assert g2.is_orientable() == g.is_orientable()
        assert g2.face_count() == g.face_count()


def test_circle_classification():
    torus = torus_bouquet()
    c = circle_from_edges(torus, [0], 0)
    assert circle_orientation_type(torus, c) == "preserving"
    assert not is_separating(torus, c)

    klein = klein_bouquet()
    assert circle_orientation_type(klein, circle_from_edges(klein, [1], 0)) == "reversing"

    proj = projective_loop()
    assert circle_orientation_type(proj, circle_from_edges(proj, [0], 0)) == "reversing"


def test_circle_rejects_non_cycles():
    g = sphere_theta()
    with pytest.raises(SurfaceError):
        circle_from_edges(g, [0], 0)  # single link is a path, not a cycle
    c = circle_from_edges(g, [0, 1], 0)
    assert c.edges == frozenset({0, 1})
    assert is_separating(g, c)


def test_cut_regions_separating():
    g = sphere_theta()
    c = circle_from_edges(g, [0, 1], 0)
    parts = cut_regions(g, [c])
    assert parts.region_count == 2
    regions = set(parts.face_region)
    assert regions == {parts.face_region[f] for f in range(3)}
    assert len(regions) == 2
    # both banks of the single circle are distinct regions
    assert len(set(parts.banks[0])) == 2


def test_cut_regions_nonseparating():
    g = torus_bouquet()
    c = circle_from_edges(g, [0], 0)
    parts = cut_regions(g, [c])
    assert parts.region_count == 1
    assert set(parts.banks[0]) == {0}


def test_zgraph_bruteforce_shapes():
    g = sphere_theta()
    c = circle_from_edges(g, [0, 1], 0)
    zg = zgraph_bruteforce(g, [c])
    assert len(zg.vertex_labels) == 2
    assert len(zg.edge_labels) == 1
    assert zg.is_connected()

    torus = torus_bouquet()
    zg2 = zgraph_bruteforce(torus, [circle_from_edges(torus, [0], 0)])
    assert len(zg2.vertex_labels) == 1
    assert len(zg2.edge_labels) == 1
    assert zg2.degree(0) == 2  # a loop contributes twice
