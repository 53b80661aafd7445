import pytest

from voltlift.catalog import (klein_bouquet, projective_loop, sphere_theta,
                              torus_bouquet)
from voltlift.groups import make_cyclic
from voltlift.textfmt import ParseError, instance_for, parse, print_instance
from voltlift.voltage import VoltageEmbedding

MINIMAL = """\
group cyclic 4
vertices 1
edge a 0 0 sign=- voltage=1
rotation 0: a+ a-
"""

FULL = """\
group product cyclic 2 cyclic 3
vertices 2
edge a 0 1 sign=+ voltage=1,2
edge b 1 0 sign=+ voltage=0,0
rotation 0: a+ b-
rotation 1: b+ a-
circle z: a b
faces disk: 0
"""


def test_minimal_parse():
    inst = parse(MINIMAL)
    assert inst.ve.base.vertex_count == 1
    assert inst.ve.group.order == 4
    assert inst.ve.alpha == [1, 3]
    assert print_instance(inst) == MINIMAL


def test_full_round_trip():
    inst = parse(FULL)
    assert inst.circles == {"z": (0, 1)}
    assert inst.face_chains == {"disk": (0,)}
    text = print_instance(inst)
    assert text == FULL
    assert print_instance(parse(text)) == text


def test_comments_and_blank_lines():
    text = MINIMAL.replace("vertices 1", "# a comment\n\nvertices 1  # trailing")
    inst = parse(text)
    assert print_instance(inst) == MINIMAL


def test_table_group_round_trip():
    text = ("group table 2\n0 1\n1 0\nvertices 1\n"
            "edge a 0 0 sign=+ voltage=1\nrotation 0: a+ a-\n")
    inst = parse(text)
    assert inst.ve.group.order == 2
    assert print_instance(inst) == text


def test_errors_carry_line_numbers():
    cases = [
        ("vertices 1\n", "line 1"),
        ("group cyclic 4\n", "line 1: expected 'vertices"),
        ("group cyclic 4\nvertices 1\n", "at least one edge"),
        ("group cyclic 4\nvertices 1\nedge a 0 0 sign=* voltage=0\n", "line 3"),
        ("group cyclic 4\nvertices 1\nedge a 0 0 sign=+ voltage=9\n", "line 3"),
        ("group cyclic 4\nvertices 1\nedge a 0 1 sign=+ voltage=0\n", "line 3"),
        (MINIMAL + "rotation 0: a+ a-\n", "duplicate rotation"),
        (MINIMAL.replace("a+ a-", "a+ b-"), "unknown edge"),
        (MINIMAL.replace("rotation 0: a+ a-\n", ""), "missing rotation"),
        (MINIMAL.replace("a+ a-", "a+ a+"), "line 4"),
        (MINIMAL + "circle z: q\n", "unknown edge name"),
        (MINIMAL + "faces f: 9\n", "out of range"),
        (MINIMAL + "junk here: now\n", "unrecognized"),
    ]
    for text, fragment in cases:
        with pytest.raises(ParseError) as exc:
            parse(text)
        assert fragment in str(exc.value), text


def test_catalog_round_trip():
    for make in (sphere_theta, projective_loop, torus_bouquet, klein_bouquet):
        base = make()
        g = make_cyclic(3)
        ve = VoltageEmbedding(base, g, [1, 2] * base.edge_count)
        inst = instance_for(ve, ("cyclic", "3"))
        text = print_instance(inst)
        again = parse(text)
        assert print_instance(again) == text
        assert again.ve.base.rotation == base.rotation
        assert again.ve.alpha == ve.alpha
