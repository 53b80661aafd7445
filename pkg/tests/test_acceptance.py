"""End-to-end acceptance suite.

Each test exercises one published acceptance criterion: exact combinatorial
agreement between the coset-theoretic predictions and brute force, on large
randomized batches, on the documented example families, and under the
voltage- and embedding-preserving modifications.
"""

import random
import time

import pytest

from voltlift.catalog import (klein_bouquet, projective_loop, sphere_theta,
                              torus_bouquet)
from voltlift.families import generate_example
from voltlift.fuzz import fuzz, random_instance
from voltlift.groups import direct_product, make_cyclic
from voltlift.voltage import (VoltageEmbedding, component_count, derive,
                              face_lift_prediction,
                              graphs_isomorphic_by_vertex_map,
                              local_voltage_modification, subdivide_voltage)
from voltlift.zregion import compare_zgraphs, zgraph_for_circle

FUZZ_SEED = 2024
FUZZ_COUNT = 1000


@pytest.fixture(scope="module")
def big_run():
    start = time.perf_counter()
    report = fuzz(FUZZ_SEED, FUZZ_COUNT)
    elapsed = time.perf_counter() - start
    assert not report.failures, report.render()
    return report.totals(), elapsed


def test_component_prediction_batch(big_run):
    # criterion: predicted same-component relation equals derived union-find
    # on >= 1000 fuzzed instances in under a minute
    totals, elapsed = big_run
    assert totals["components"]["confirmed"] == FUZZ_COUNT
    assert totals["components"]["FAILED"] == 0
    assert elapsed < 60.0


def test_coset_count_identities_batch(big_run):
    # criterion: all four coset-count identities hold exactly on every
    # fuzzed instance and every sampled (face chain, subgraph, walk)
    totals, _ = big_run
    assert totals["coset_counts"]["confirmed"] == FUZZ_COUNT
    assert totals["coset_counts"]["FAILED"] == 0


def test_face_lifting_batch(big_run):
    # criterion: predicted face counts and Euler characteristic equal tracing
    totals, _ = big_run
    assert totals["face_lift"]["confirmed"] == FUZZ_COUNT
    assert totals["face_lift"]["FAILED"] == 0


def test_medial_lift_batch(big_run):
    # criterion: derived medial voltage graph equals the labeled subdivided
    # medial of the derived embedding on >= 100 fuzzed instances
    totals, _ = big_run
    assert totals["medial_lift"]["confirmed"] >= 100
    assert totals["medial_lift"]["FAILED"] == 0


def test_lift_orientation_parity_batch(big_run):
    # criterion: for every sampled orientation-reversing circle, the lifts
    # preserve orientation exactly when the net voltage has even order
    totals, _ = big_run
    assert totals["lift_parity"]["confirmed"] >= 100
    assert totals["lift_parity"]["FAILED"] == 0


def test_region_structure_batch(big_run):
    # criterion: region counts, tip-fiber counts, boundary parities,
    # nonseparating lifts, and the |A(v)|/|crossing-free| region-count
    # formula hold on every hypothesis-satisfying sampled circle
    totals, _ = big_run
    assert totals["reversing_structure"]["confirmed"] >= 100
    assert totals["preserving_structure"]["confirmed"] >= 100
    assert totals["region_count"]["confirmed"] >= 100
    for name in ("reversing_structure", "preserving_structure", "region_count"):
        assert totals[name]["FAILED"] == 0


def test_coset_zgraphs_batch(big_run):
    # criterion: coset z-graph constructions equal brute force as labeled
    # graphs on every applicable sampled circle ...
    totals, _ = big_run
    assert totals["zgraph"]["confirmed"] >= 400
    assert totals["zgraph"]["FAILED"] == 0


def test_coset_zgraphs_on_families():
    # ... and on every example family
    for family, params in [("ex41", (2, 3)), ("ex41", (3, 4)),
                           ("ex42", (5,)), ("ex43", (5,)),
                           ("ex44", (2, 3)), ("ex45", (5,))]:
        ex = generate_example(family, params)
        coset, brute = zgraph_for_circle(ex.ve, ex.z_circle())
        assert compare_zgraphs(coset, brute)


def test_example_families_documented_outcomes():
    import math
    for a in range(1, 6):
        for b in range(1, 6):
            start = time.perf_counter()
            ex = generate_example("ex41", (a, b))
            lcm = math.lcm(a, b)
            d = lcm // b
            c = lcm // a
            n = a * b
            g = ex.ve.group
            assert ex.expected["components"] == 1
            assert ex.expected["side_I_components"] == n // g.element_order(d % n)
            assert ex.expected["circles_per_I_component"] == g.element_order(d % n)
            assert ex.expected["side_Ic_components"] == n // g.element_order(c % n)
            assert ex.expected["circles_per_Ic_component"] == g.element_order(c % n)
            assert time.perf_counter() - start < 5.0
    for n in range(1, 9):
        start = time.perf_counter()
        ex = generate_example("ex42", (n,))
        assert ex.expected["zregions"] == 2
        assert ex.expected["zgraph_vertices"] == 2
        assert ex.expected["zgraph_edges"] == n  # n parallel edges
        ex = generate_example("ex43", (n,))
        assert ex.expected["zregions"] == 1
        assert ex.expected["zgraph_vertices"] == 1
        assert ex.expected["zgraph_edges"] == n  # bouquet of n loops
        assert time.perf_counter() - start < 5.0
    for k in range(2, 5):
        for d in range(1, 5):
            start = time.perf_counter()
            ex = generate_example("ex44", (k, d))
            assert ex.expected["zregions_brute"] == d
            assert ex.expected["zgraph_vertices"] == d
            assert ex.expected["zgraph_edges"] == k * d  # 2k-regular on d vertices
            assert ex.expected["region_boundary_circles"] == 2 * k
            assert time.perf_counter() - start < 5.0
    for n in range(1, 9):
        start = time.perf_counter()
        ex = generate_example("ex45", (n,))
        assert ex.expected["zregions_brute"] == 1
        assert ex.expected["zgraph_vertices"] == 1
        assert ex.expected["zgraph_edges"] == n  # bouquet of n loops
        assert ex.expected["zregions_published"] == 2
        assert ex.expected["discrepancy_flagged"] is True
        assert time.perf_counter() - start < 5.0


# -- invariance suite -----------------------------------------------------


def _catalog_instances():
    z4 = make_cyclic(4)
    z6 = make_cyclic(6)
    z2z3 = direct_product(make_cyclic(2), make_cyclic(3))
    a, b = z2z3.parse_element("0,1"), z2z3.parse_element("1,0")
    return [
        VoltageEmbedding(sphere_theta(), z4, [1, 3, 0, 0, 2, 2]),
        VoltageEmbedding(projective_loop(), z6, [2, 4]),
        VoltageEmbedding(torus_bouquet(), z6, [2, 4, 3, 3]),
        VoltageEmbedding(klein_bouquet(), z2z3,
                         [a, z2z3.inv(a), b, z2z3.inv(b)]),
    ]


def _invariance_instances():
    rng = random.Random(99)
    instances = _catalog_instances()
    while len(instances) < len(_catalog_instances()) + 100:
        ve, _ = random_instance(rng)
        if ve.base.vertex_count * ve.group.order * 4 <= 10_000:
            instances.append(ve)
    return instances


def _check_local_modification(ve, rng):
    base, g = ve.base, ve.group
    loop_free = [v for v in range(base.vertex_count)
                 if not any(base.edge_tails[e] == v == base.edge_heads[e]
                            for e in range(base.edge_count))]
    if not loop_free:
        return
    v = rng.choice(loop_free)
    c = rng.randrange(g.order)
    der = derive(ve)
    der2 = derive(local_voltage_modification(ve, v, c))
    vmap = list(range(der.graph.vertex_count))
    for a in range(g.order):
        vmap[der2.vertex_index(v, a)] = der.vertex_index(v, g.mul(a, c))
    assert graphs_isomorphic_by_vertex_map(der2.graph, der.graph, vmap)


def _check_subdivision(ve, rng):
    g = ve.group
    nA = g.order
    e = rng.randrange(ve.base.edge_count)
    der = derive(ve)
    der2 = derive(subdivide_voltage(ve, e))
    sub = der.graph
    for b in range(nA):
        sub = sub.subdivide_edge(der.edge_index(e, b))
    inv_alpha = g.inv(ve.alpha[2 * e])
    vmap = list(range(der.graph.vertex_count)) + [0] * nA
    w = ve.base.vertex_count
    for x in range(nA):
        vmap[der2.vertex_index(w, x)] = der.graph.vertex_count + g.mul(x, inv_alpha)
    assert graphs_isomorphic_by_vertex_map(der2.graph, sub, vmap)
    assert der2.graph.euler_characteristic() == der.graph.euler_characteristic()
    assert der2.graph.is_orientable() == der.graph.is_orientable()


def _check_sign_switch(ve, rng):
    v = rng.randrange(ve.base.vertex_count)
    base2 = ve.base.local_sign_switch(v)
    assert base2.euler_characteristic() == ve.base.euler_characteristic()
    assert base2.is_orientable() == ve.base.is_orientable()
    ve2 = VoltageEmbedding(base2, ve.group, ve.alpha)
    der = derive(ve)
    der2 = derive(ve2)
    assert der2.graph.euler_characteristic() == der.graph.euler_characteristic()
    assert der2.graph.is_orientable() == der.graph.is_orientable()


def _check_component_multiplication(ve, rng):
    n = rng.randint(2, 4)
    g = ve.group
    g2 = direct_product(g, make_cyclic(n))
    # (a, 0) has index a * n in the product ordering
    alpha2 = [a * n for a in ve.alpha]
    ve2 = VoltageEmbedding(ve.base, g2, alpha2)
    assert component_count(ve2)[0] == n * component_count(ve)[0]
    faces2, chi2 = face_lift_prediction(ve2)
    faces, chi = face_lift_prediction(ve)
    assert faces2 == n * faces
    assert chi2 == n * chi


def test_invariance_suite():
    rng = random.Random(7)
    for ve in _invariance_instances():
        _check_local_modification(ve, rng)
        _check_subdivision(ve, rng)
        _check_sign_switch(ve, rng)
        _check_component_multiplication(ve, rng)
