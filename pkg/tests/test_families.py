import pytest

from voltlift.families import FAMILIES, FamilyError, generate_example
from voltlift.textfmt import parse, print_instance
from voltlift.zregion import compare_zgraphs, zgraph_for_circle


def test_family_registry():
    assert set(FAMILIES) == {"ex41", "ex42", "ex43", "ex44", "ex45"}


def test_nested_loops_family():
    ex = generate_example("ex41", (2, 3))
    assert ex.expected["components"] == 1
    assert ex.expected["side_I_components"] == 2
    assert ex.expected["circles_per_I_component"] == 3
    assert ex.expected["side_Ic_components"] == 3
    assert ex.expected["circles_per_Ic_component"] == 2


def test_projective_parallel_family():
    ex = generate_example("ex42", (4,))
    assert ex.expected["zregions"] == 2
    assert ex.expected["zgraph_vertices"] == 2
    assert ex.expected["zgraph_edges"] == 4


def test_projective_bouquet_family():
    ex = generate_example("ex43", (4,))
    assert ex.expected["zregions"] == 1
    assert ex.expected["zgraph_vertices"] == 1
    assert ex.expected["zgraph_edges"] == 4


def test_torus_regular_family():
    ex = generate_example("ex44", (3, 2))
    assert ex.expected["zregions_brute"] == 2
    assert ex.expected["zgraph_vertices"] == 2
    assert ex.expected["zgraph_edges"] == 6
    assert ex.expected["region_boundary_circles"] == 6


def test_torus_bouquet_family_discrepancy():
    ex = generate_example("ex45", (4,))
    assert ex.expected["zregions_brute"] == 1
    assert ex.expected["zregions_published"] == 2
    assert ex.expected["discrepancy_flagged"] is True


def test_family_instances_round_trip():
    for family, params in [("ex41", (2, 3)), ("ex42", (3,)), ("ex43", (3,)),
                           ("ex44", (2, 2)), ("ex45", (3,))]:
        ex = generate_example(family, params)
        text = print_instance(ex.instance)
        assert print_instance(parse(text)) == text


def test_family_zgraphs_match_bruteforce():
    for family, params in [("ex41", (2, 3)), ("ex42", (3,)), ("ex43", (3,)),
                           ("ex44", (2, 2)), ("ex45", (3,))]:
        ex = generate_example(family, params)
        coset, brute = zgraph_for_circle(ex.ve, ex.z_circle())
        assert compare_zgraphs(coset, brute)


def test_family_rejects_bad_params():
    with pytest.raises(FamilyError):
        generate_example("ex41", (0, 3))
    with pytest.raises(FamilyError):
        generate_example("ex42", (99,))
    with pytest.raises(FamilyError):
        generate_example("nope", (1,))
