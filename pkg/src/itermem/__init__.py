"""Iterated shared-memory protocols over chromatic simplicial complexes.

Builds protocol complexes for the collect / atomic-snapshot / immediate-
snapshot read patterns, the standard chromatic subdivision, greedy star
covers with bounded-register encodings, a bounded-run simulator, and the
set-cover embedding for minimum-length sequences.
"""

from .bounds import BoundsReport, bounds_table
from .complexes import (
    ChromaticComplex,
    Simplex,
    Vertex,
    assert_facet,
    assert_subcomplex,
    build_complex,
)
from .encoding import (
    BOTTOM,
    Encoding,
    distinguishable_subcomplex,
    is_subcomplex_distinguishable,
    is_vertex_distinguishable,
    lower_bound_rounds,
)
from .errors import (
    AmbiguousDecode,
    DanglingVertexReference,
    DuplicateColorInFacet,
    FacetContainment,
    IncompatibleVertexSpaces,
    InvalidParameters,
    ItermemError,
    NotAFacet,
    NotASubcomplex,
    ResourceLimit,
    SimplexNotInComplex,
    UnsupportedFormat,
    VertexNotInComplex,
)
from .generators import gen_glued, gen_path, gen_random, gen_simplex
from .greedy import (
    StarCoverTrace,
    StarRound,
    greedy_star,
    split_to_budget,
    upper_bound_rounds,
    verify_cover,
)
from .io import export_complex, import_complex
from .iso import brute_force_isomorphic, is_isomorphic
from .protocols import (
    IAS,
    IC,
    IIS,
    PATTERNS,
    GlobalView,
    StateRegistry,
    check_intersection_preserving,
    check_no_input_edges,
    one_round,
    protocol_complex,
    raw_interleaving_views,
    round_views,
    schedule_oracle,
)
from .setcover import (
    SetCoverInstance,
    exact_min_sequence,
    explain_reduction,
    set_cover_optimum,
    set_cover_reduce,
)
from .simulator import (
    SimProcessState,
    bounded_protocol_complex,
    concurrent_schedule,
    decode,
    iterate_pipeline,
    run_bounded,
    sequential_schedule,
    code_collision_counterexample,
)
from .subdivision import (
    GrowthRow,
    chromatic_subdivide,
    degree_growth_table,
    iterate_subdivide,
    ordered_bell,
    ordered_set_partitions,
)

__all__ = [
    "AmbiguousDecode",
    "BOTTOM",
    "BoundsReport",
    "ChromaticComplex",
    "DanglingVertexReference",
    "DuplicateColorInFacet",
    "Encoding",
    "FacetContainment",
    "GlobalView",
    "GrowthRow",
    "IAS",
    "IC",
    "IIS",
    "IncompatibleVertexSpaces",
    "InvalidParameters",
    "ItermemError",
    "NotAFacet",
    "NotASubcomplex",
    "PATTERNS",
    "ResourceLimit",
    "SetCoverInstance",
    "SimProcessState",
    "Simplex",
    "SimplexNotInComplex",
    "StarCoverTrace",
    "StarRound",
    "StateRegistry",
    "UnsupportedFormat",
    "Vertex",
    "VertexNotInComplex",
    "assert_facet",
    "assert_subcomplex",
    "bounded_protocol_complex",
    "bounds_table",
    "brute_force_isomorphic",
    "build_complex",
    "check_intersection_preserving",
    "check_no_input_edges",
    "chromatic_subdivide",
    "concurrent_schedule",
    "decode",
    "degree_growth_table",
    "distinguishable_subcomplex",
    "exact_min_sequence",
    "explain_reduction",
    "export_complex",
    "gen_glued",
    "gen_path",
    "gen_random",
    "gen_simplex",
    "greedy_star",
    "import_complex",
    "is_isomorphic",
    "is_subcomplex_distinguishable",
    "is_vertex_distinguishable",
    "iterate_pipeline",
    "iterate_subdivide",
    "lower_bound_rounds",
    "one_round",
    "ordered_bell",
    "ordered_set_partitions",
    "protocol_complex",
    "raw_interleaving_views",
    "round_views",
    "run_bounded",
    "schedule_oracle",
    "sequential_schedule",
    "set_cover_optimum",
    "set_cover_reduce",
    "split_to_budget",
    "code_collision_counterexample",
    "upper_bound_rounds",
    "verify_cover",
]
