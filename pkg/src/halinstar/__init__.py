"""Star edge coloring of Halin graphs.

Constructive colorings (six colors for cubic graphs, floor(3*delta/2) + 2
in general), a violation-witness verifier, an exact backtracking oracle,
and deterministic instance generators.
"""

from .core import (
    CycleEdgeClass,
    EdgeColoring,
    HalinGraph,
    PlaneTree,
    build_halin,
    classify_cycle_edges,
    cross_leaf_cap,
    leaves_with_cross_edges,
    longest_tree_path,
    uncolored_cross_counts,
)
from .cubic import ColorPermutation, ReductionFrame, base_case_coloring, color_cubic
from .cubic import extend_coloring, reduce_instance
from .exact import (
    SearchConfig,
    is_star_colorable,
    naive_is_star_colorable,
    naive_star_chromatic_index,
    star_chromatic_index,
)
from .gen import (
    GenSpec,
    canonical_code,
    enumerate_halin_trees,
    enumerate_small_cubic_halin,
    generate,
)
from .general import (
    ForbiddenSet,
    PatternPlan,
    color_halin,
    color_tree,
    complete_cycle,
    palette_bound,
    plan_cycle_patterns,
)
from .report import ColoringStats
from .verify import StarViolation, find_violation, four_edge_structures, is_star_valid

__version__ = "0.1.0"

__all__ = [
    "CycleEdgeClass",
    "EdgeColoring",
    "HalinGraph",
    "PlaneTree",
    "build_halin",
    "classify_cycle_edges",
    "cross_leaf_cap",
    "leaves_with_cross_edges",
    "longest_tree_path",
    "uncolored_cross_counts",
    "ColorPermutation",
    "ReductionFrame",
    "base_case_coloring",
    "color_cubic",
    "extend_coloring",
    "reduce_instance",
    "SearchConfig",
    "is_star_colorable",
    "naive_is_star_colorable",
    "naive_star_chromatic_index",
    "star_chromatic_index",
    "GenSpec",
    "canonical_code",
    "enumerate_halin_trees",
    "enumerate_small_cubic_halin",
    "generate",
    "ForbiddenSet",
    "PatternPlan",
    "color_halin",
    "color_tree",
    "complete_cycle",
    "palette_bound",
    "plan_cycle_patterns",
    "ColoringStats",
    "StarViolation",
    "find_violation",
    "four_edge_structures",
    "is_star_valid",
    "__version__",
]
