"""Exact arithmetic in finite Dickson nearfields and the near-vector spaces R^m."""

from .nearfield import (
    DicksonPair,
    Nearfield,
    PairVerdict,
    Witness,
    build_nearfield,
    validate_dickson_pair,
)
from .vectors import (
    NfMatrix,
    left_multiple_of,
    matrix_format,
    matrix_parse,
    vec_add,
    vec_neg,
    vec_scale_left,
    vec_scale_right,
    vec_sub,
)
from .ege import (
    GenDecomposition,
    Step,
    column_pair_dependent,
    distributivity_trick,
    ege,
    is_one_column_independent,
    replay,
    replay_states,
    rref,
    trace_from_text,
    trace_to_text,
)
from .closure import (
    BudgetExceededError,
    Lc1Report,
    VectorSet,
    check_lc1_cardinality,
    gen_closure,
    is_gamma_dependent,
    lc_index,
    lc_step,
    pack_vector,
    unpack_vector,
)
from .linmaps import (
    MapClass,
    MapRep,
    apply_map,
    classify,
    compose,
    count_maps,
    enumerate_maps,
    is_bijective,
    is_linear,
    is_normal,
    linear_violation,
    map_sum,
    scale_family,
)
from .counting import (
    count_subgroup_orbits,
    count_subgroups,
    enumerate_canonical,
    partitions_into_parts,
)
from .seeds import SeedMatrix, build_seed, seed_number, u_max, verify_seed

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DicksonPair",
    "GenDecomposition",
    "Lc1Report",
    "MapClass",
    "MapRep",
    "Nearfield",
    "NfMatrix",
    "PairVerdict",
    "SeedMatrix",
    "Step",
    "VectorSet",
    "Witness",
    "apply_map",
    "build_nearfield",
    "build_seed",
    "check_lc1_cardinality",
    "classify",
    "column_pair_dependent",
    "compose",
    "count_maps",
    "count_subgroup_orbits",
    "count_subgroups",
    "distributivity_trick",
    "ege",
    "enumerate_canonical",
    "enumerate_maps",
    "gen_closure",
    "is_bijective",
    "is_gamma_dependent",
    "is_linear",
    "is_normal",
    "is_one_column_independent",
    "lc_index",
    "lc_step",
    "left_multiple_of",
    "linear_violation",
    "map_sum",
    "matrix_format",
    "matrix_parse",
    "pack_vector",
    "partitions_into_parts",
    "replay",
    "replay_states",
    "rref",
    "scale_family",
    "seed_number",
    "trace_from_text",
    "trace_to_text",
    "u_max",
    "unpack_vector",
    "validate_dickson_pair",
    "vec_add",
    "vec_neg",
    "vec_scale_left",
    "vec_scale_right",
    "vec_sub",
    "verify_seed",
]
