"""Derived embeddings of voltage graphs on surfaces.

Construct derived surfaces from ordinary voltage graphs in signed rotation
systems and verify their coset-theoretic structure exactly: components,
fibers of subgraphs and subcomplexes, medial lifts, and the regions and
z-graphs obtained by cutting along the lifts of a circle.
"""

from .groups import (CosetPartition, FiniteGroup, GroupError, Subgroup,
                     direct_product, element_order, left_cosets, make_cyclic,
                     make_table, subgroup_generated)
from .surface import (CircleSubgraph, EmbeddedGraph, FaceWalk, RegionPartition,
                      SurfaceError, ZGraph, circle_from_edges,
                      circle_orientation_type, cut_regions, is_separating,
                      zgraph_bruteforce)
from .voltage import (CosetCountReport, DerivedEmbedding, VerificationError,
                      VoltageEmbedding, VoltageError, WalkSpec,
                      component_count, coset_count_check, derive,
                      face_lift_prediction, fiber_components,
                      local_voltage_group, local_voltage_modification,
                      make_walk, restricted_voltage_group, same_component,
                      subdivide_voltage)
from .medial import (MedialEmbedding, SpecialClaw, TotalVoltageGraph,
                     claw_for_dart, claw_tips_for_circle, crossing_free_group,
                     crossing_free_split, crossing_free_tip_parts, medial,
                     medial_local_group, special_claw,
                     total_graph_with_voltages, verify_archdeacon)
from .zregion import (CircleAnalysis, FiberCircle, FiberCircleSet,
                      TheoremReport, analyze_circle, check_theorem_314,
                      check_theorem_317, circle_net_voltage, compare_zgraphs,
                      fiber_circles, lifts_orientation_preserving,
                      predict_zregion_count, zgraph_brute_labeled,
                      zgraph_coset_preserving, zgraph_coset_reversing,
                      zgraph_coset_separating, zgraph_for_circle, zregions)
from .textfmt import InstanceFile, ParseError, instance_for, parse, print_instance
from .families import ExampleFamily, FamilyError, generate_example
from .fuzz import VerificationReport, fuzz
from . import catalog

__all__ = [name for name in dir() if not name.startswith("_")]
