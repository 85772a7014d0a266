"""Partition calculus and cuspidality criteria for Arthur packets of Sp(2n).

The package decides, from published combinatorial criteria, when a global
Arthur packet of a symplectic group provably contains no cuspidal members.
Everything is exact integer/rational arithmetic; see the README for the
command-line interface.
"""

from .errors import (
    AmbiguousExpansion,
    CuspcheckError,
    InternalInvariantViolation,
    InvalidArgument,
    InvalidPartition,
    InvalidWeight,
    ParameterError,
)
from .partitions import (
    GroupFamily,
    Order,
    Partition,
    barbasch_vogan_dual,
    compare_dominance,
    compare_lex,
    dominance_le,
    enumerate_grs,
    expansion,
    is_grs_admissible,
    is_special,
    lex_le,
    parse_partition,
    partitions_of,
    symplectic_collapse,
)
from .arthur import (
    ArthurParameter,
    CharacterLabel,
    SelfDualType,
    SimpleParameter,
    Triviality,
    parse_parameter,
    render_parameter,
    validate,
)
from .engine import (
    Assumption,
    BoundsReport,
    FieldKind,
    Firing,
    OrderChoice,
    ScanCell,
    Status,
    Verdict,
    bounds,
    grs_max_weight,
    is_realizable,
    rank_only_bound,
    scan,
    verdict,
)
from .satake import ThetaBound, check_r_theta, satake_exponent_bound
from .smallrep import (
    Existence,
    FamilyMatch,
    SmallFamily,
    conjectured_so_lower_bound,
    grs_minimal_partition,
    hypercuspidal_existence,
    nonsingular_expansion,
    nonsingular_partition,
    small_family_match,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousExpansion",
    "ArthurParameter",
    "Assumption",
    "BoundsReport",
    "CharacterLabel",
    "CuspcheckError",
    "Existence",
    "FamilyMatch",
    "FieldKind",
    "Firing",
    "GroupFamily",
    "InternalInvariantViolation",
    "InvalidArgument",
    "InvalidPartition",
    "InvalidWeight",
    "Order",
    "OrderChoice",
    "ParameterError",
    "Partition",
    "ScanCell",
    "SelfDualType",
    "SimpleParameter",
    "SmallFamily",
    "Status",
    "ThetaBound",
    "Triviality",
    "Verdict",
    "barbasch_vogan_dual",
    "bounds",
    "check_r_theta",
    "compare_dominance",
    "compare_lex",
    "conjectured_so_lower_bound",
    "dominance_le",
    "enumerate_grs",
    "expansion",
    "grs_max_weight",
    "grs_minimal_partition",
    "hypercuspidal_existence",
    "is_grs_admissible",
    "is_realizable",
    "is_special",
    "lex_le",
    "nonsingular_expansion",
    "nonsingular_partition",
    "parse_parameter",
    "parse_partition",
    "partitions_of",
    "rank_only_bound",
    "render_parameter",
    "satake_exponent_bound",
    "scan",
    "small_family_match",
    "symplectic_collapse",
    "validate",
    "verdict",
]
