"""Ordinal arithmetic below epsilon_0, the Ignatiev algebra, and its Kripke
frame of filters, with an entailment decision procedure for variable-free
strictly positive formulas."""

from ._core import (
    ChainViolation,
    EnumerationBound,
    ExtOrdinal,
    Formula,
    NoMaximum,
    NotSuitable,
    Ordinal,
    ParseError,
    Point,
    SuitableSequence,
    Tail,
    add,
    brute_glb,
    check_filter_closure,
    cmp,
    decompose_last,
    diamond,
    ell,
    entails,
    enumerate_ordinals,
    enumerate_points,
    enumerate_suitable_sequences,
    eval,
    forces,
    format_ordinal,
    format_point,
    format_sequence,
    glb,
    is_limit,
    is_successor,
    is_suitable,
    leq,
    make_point,
    member,
    nabla,
    omega_pow,
    omega_tower,
    parse_formula,
    parse_ordinal,
    parse_point,
    parse_sequence,
    pred,
    principal_filter_sequence,
    print_formula,
    rel_R,
    rel_S,
    run_suites,
    sigma,
    suitability_violation,
    witness_R,
)

__version__ = "0.1.0"
