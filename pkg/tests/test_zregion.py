import pytest

from voltlift.catalog import klein_bouquet, projective_loop, torus_bouquet
from voltlift.groups import direct_product, make_cyclic
from voltlift.surface import SurfaceError, circle_from_edges
from voltlift.voltage import VoltageEmbedding
from voltlift.zregion import (analyze_circle, check_theorem_314,
                              check_theorem_317, circle_net_voltage,
                              compare_zgraphs, fiber_circles,
                              lifts_orientation_preserving,
                              predict_zregion_count, zgraph_for_circle,
                              zregions)


def torus_z(n: int, a0: int = 1, a1: int = 0) -> VoltageEmbedding:
    g = make_cyclic(n)
    return VoltageEmbedding(torus_bouquet(), g, [a0, g.inv(a0), a1, g.inv(a1)])


def test_fiber_circles_grouping():
    ve = torus_z(6, 2, 3)
    circle = circle_from_edges(ve.base, [0], 0)
    fibers = fiber_circles(ve, circle)
    assert ve.group.name(fibers.omega) == "2"
    # one component: superscripts are all of Z6; <2> has index 2
    assert len(fibers.circles) == 2
    for fc in fibers.circles:
        assert len(fc.circle.traversal) == 3  # |omega| = 3 trips
        assert fc.orientation == "preserving"


def test_lift_parity():
    proj = projective_loop()
    g2 = make_cyclic(2)
    ve_even = VoltageEmbedding(proj, g2, [1, 1])
    circle = circle_from_edges(proj, [0], 0)
    assert lifts_orientation_preserving(ve_even, circle)

    g3 = make_cyclic(3)
    ve_odd = VoltageEmbedding(proj, g3, [1, 2])
    assert not lifts_orientation_preserving(ve_odd, circle)
    with pytest.raises(SurfaceError):
        analyze_circle(ve_odd, circle)  # regions undefined for reversing lifts


def test_zregions_preserving_count():
    # voltages: cut loop has voltage 2 in Z6, other loop voltage 1
    ve = torus_z(6, 2, 1)
    circle = circle_from_edges(ve.base, [0], 0)
    parts = zregions(ve, circle)
    predicted = predict_zregion_count(ve, circle)
    assert predicted == parts.region_count


def test_reversing_structure_theorem():
    g = direct_product(make_cyclic(2), make_cyclic(3))
    # Klein bottle, reversing loop with voltage (1,0): |omega| = 2
    a = g.parse_element("1,0")
    b = g.parse_element("0,1")
    ve = VoltageEmbedding(klein_bouquet(), g, [b, g.inv(b), a, g.inv(a)])
    circle = circle_from_edges(ve.base, [1], 0)
    report = check_theorem_314(ve, circle)
    assert report.hypotheses_met
    assert all(ok for _, ok in report.assertions)


def test_reversing_structure_skips_odd_omega():
    g = make_cyclic(3)
    ve = VoltageEmbedding(projective_loop(), g, [1, 2])
    circle = circle_from_edges(ve.base, [0], 0)
    report = check_theorem_314(ve, circle)
    assert not report.hypotheses_met
    assert any("odd" in s for s in report.skips)


def test_preserving_structure_theorem():
    ve = torus_z(6, 2, 3)
    circle = circle_from_edges(ve.base, [0], 0)
    report = check_theorem_317(ve, circle)
    assert report.hypotheses_met
    assert all(ok for _, ok in report.assertions)


def test_preserving_structure_skips_reversing_circle():
    g = make_cyclic(2)
    ve = VoltageEmbedding(projective_loop(), g, [1, 1])
    circle = circle_from_edges(ve.base, [0], 0)
    report = check_theorem_317(ve, circle)
    assert not report.hypotheses_met


def test_zgraph_preserving_pair_labels():
    ve = torus_z(6, 2, 3)
    circle = circle_from_edges(ve.base, [0], 0)
    coset, brute = zgraph_for_circle(ve, circle)
    assert compare_zgraphs(coset, brute)
    # the two regions carry distinct (w-part, y-part) labels over the tips
    labels = set(coset.vertex_labels)
    assert len(labels) == len(coset.vertex_labels)


def test_zgraph_reversing():
    g = direct_product(make_cyclic(2), make_cyclic(4))
    a = g.parse_element("1,0")
    ve = VoltageEmbedding(klein_bouquet(), g,
                          [g.parse_element("0,1"), g.parse_element("0,3"),
                           a, g.inv(a)])
    circle = circle_from_edges(ve.base, [1], 0)
    coset, brute = zgraph_for_circle(ve, circle)
    assert compare_zgraphs(coset, brute)
    assert coset.is_connected()


def test_zgraph_separating():
    from voltlift.catalog import sphere_theta
    g = make_cyclic(4)
    ve = VoltageEmbedding(sphere_theta(), g, [1, 3, 0, 0, 2, 2])
    circle = circle_from_edges(ve.base, [0, 1], 0)
    coset, brute = zgraph_for_circle(ve, circle)
    assert compare_zgraphs(coset, brute)
    sides = {label[0] for label in coset.vertex_labels}
    assert sides == {"I", "Ic"}  # bipartite across the two sides


def test_circle_net_voltage():
    ve = torus_z(6, 2, 3)
    circle = circle_from_edges(ve.base, [0], 0)
    assert circle_net_voltage(ve, circle) in (2, 4)
