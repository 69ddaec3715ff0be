"""Exact lattice-point geometry of dilated standard simplices.

Decides, counts, and enumerates lonely points (integer points with no other
point of the set in their residue class modulo a lattice), and applies the
counts to reduce the recurrence order of closed-form sequences with rational
exponential bases.  All arithmetic is exact.
"""

from .cfinite import (
    ClosedForm,
    Reduction,
    SymbolicClosedForm,
    compose_polynomial,
    degree_bound_exists,
    evaluate,
    exponent_lattice,
    minimal_order,
    normalize,
    reduce_order,
    specialize,
    symbolic_compose,
    uncancellable_term_count,
)
from .counting import (
    INFINITE,
    DimensionGuarantee,
    LonelyCount,
    ResourceLimitError,
    StaircaseStep,
    dimension_bound_guarantee,
    enumerate_lonely_simplex,
    has_infinitely_many_lonely_points,
    lonely_points_in_cone,
    number_of_lonely_points,
    staircase_trace,
    ultimate_number_of_lonely_points,
)
from .geometry import (
    Cone,
    DilatedSimplex,
    Lattice,
    balance,
    corner_cone,
    edge_lonely_condition,
    edge_lonely_violation,
    is_lonely_in_cone,
    is_visible,
    lattice_cone_meeting,
    lattice_cone_trivial,
    switch_cone_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedForm",
    "Cone",
    "DilatedSimplex",
    "DimensionGuarantee",
    "INFINITE",
    "Lattice",
    "LonelyCount",
    "Reduction",
    "ResourceLimitError",
    "StaircaseStep",
    "SymbolicClosedForm",
    "balance",
    "compose_polynomial",
    "corner_cone",
    "degree_bound_exists",
    "dimension_bound_guarantee",
    "edge_lonely_condition",
    "edge_lonely_violation",
    "enumerate_lonely_simplex",
    "evaluate",
    "exponent_lattice",
    "has_infinitely_many_lonely_points",
    "is_lonely_in_cone",
    "is_visible",
    "lattice_cone_meeting",
    "lattice_cone_trivial",
    "lonely_points_in_cone",
    "minimal_order",
    "normalize",
    "number_of_lonely_points",
    "reduce_order",
    "specialize",
    "staircase_trace",
    "switch_cone_witness",
    "symbolic_compose",
    "ultimate_number_of_lonely_points",
    "uncancellable_term_count",
]
