"""Exact combinatorics of skew-shape Schur expansions.

Partitions and skew shapes in French notation, semistandard and
row-strict/column-weak fillings, row insertion with bump traces, the
signed slide involution with its star-shape fixed points, exact
integer Schur-basis arithmetic, and the signed expansion rules built
on top of them. Everything is exhaustive and exact; no floats, no
randomness outside the property tests.
"""

from .shapes import (
    Cell,
    EMPTY,
    HORIZONTAL,
    ParseError,
    Partition,
    SkewShape,
    VERTICAL,
    enumerate_inner_strips,
    enumerate_outer_strips,
    format_partition,
    format_shape,
    parse_partition,
    parse_shape,
    partitions_of_size,
    star,
    subpartitions_of_size,
    superpartitions,
)
from .tableaux import (
    ASSYT,
    SSYT,
    Tableau,
    enumerate_fillings,
    enumerate_ssyt,
    format_tableau,
    is_lr_filling,
    is_yamanouchi,
    lr_fillings,
    monomial,
    parse_tableau,
    reading_word,
    reverse_reading_word,
    validate,
)
from .insertion import (
    BumpRecord,
    FORWARD,
    InvalidResult,
    NoInsideCorner,
    NotOutsideCorner,
    REVERSE,
    external_insert,
    internal_insert,
    reverse_insert,
)
from .involution import (
    NoUpwardPath,
    NotFixedPoint,
    SlideContext,
    SlideStep,
    downward_path,
    downward_slide,
    enumerate_contexts,
    exits_right,
    fixed_point_to_star,
    inner_strip_cells,
    is_fixed_point,
    outer_strip_cells,
    phi,
    star_to_fixed_point,
    upward_path,
    upward_slide,
    verify_involution,
)
from .symfunc import (
    NotSymmetric,
    SchurExpansion,
    SkewExpansion,
    e,
    expansion_from_json,
    expansion_to_json,
    h,
    hall_inner,
    lr_coefficient,
    lr_expand,
    monomial_expansion,
    monomial_product,
    omega,
    perp,
    schur,
    schur_from_monomials,
    schur_monomials,
    schur_product,
    skew_expansion_to_schur,
    skew_monomials,
    skew_to_schur,
    verify_perp_identities,
)
from .rules import (
    InvalidDifference,
    is_admissible_pair,
    iterated_skew_pieri,
    pieri,
    skew_h_rho_product,
    skew_lr_pairs,
    skew_lr_product,
    skew_pieri,
    skew_pieri_linear,
    verify_perp_range,
    verify_skew_lr,
    verify_skew_pieri,
)

__version__ = "0.1.0"

__all__ = [
    "ASSYT",
    "BumpRecord",
    "Cell",
    "EMPTY",
    "FORWARD",
    "HORIZONTAL",
    "InvalidDifference",
    "InvalidResult",
    "NoInsideCorner",
    "NotFixedPoint",
    "NotOutsideCorner",
    "NotSymmetric",
    "NoUpwardPath",
    "ParseError",
    "Partition",
    "REVERSE",
    "SSYT",
    "SchurExpansion",
    "SkewExpansion",
    "SkewShape",
    "SlideContext",
    "SlideStep",
    "Tableau",
    "VERTICAL",
    "downward_path",
    "downward_slide",
    "e",
    "enumerate_contexts",
    "enumerate_fillings",
    "enumerate_inner_strips",
    "enumerate_outer_strips",
    "enumerate_ssyt",
    "exits_right",
    "expansion_from_json",
    "expansion_to_json",
    "external_insert",
    "fixed_point_to_star",
    "format_partition",
    "format_shape",
    "format_tableau",
    "h",
    "hall_inner",
    "inner_strip_cells",
    "internal_insert",
    "is_admissible_pair",
    "is_fixed_point",
    "is_lr_filling",
    "is_yamanouchi",
    "iterated_skew_pieri",
    "lr_coefficient",
    "lr_expand",
    "lr_fillings",
    "monomial",
    "monomial_expansion",
    "monomial_product",
    "omega",
    "outer_strip_cells",
    "parse_partition",
    "parse_shape",
    "parse_tableau",
    "partitions_of_size",
    "perp",
    "phi",
    "pieri",
    "reading_word",
    "reverse_insert",
    "reverse_reading_word",
    "schur",
    "schur_from_monomials",
    "schur_monomials",
    "schur_product",
    "skew_expansion_to_schur",
    "skew_h_rho_product",
    "skew_lr_pairs",
    "skew_lr_product",
    "skew_monomials",
    "skew_pieri",
    "skew_pieri_linear",
    "skew_to_schur",
    "star",
    "star_to_fixed_point",
    "subpartitions_of_size",
    "superpartitions",
    "upward_path",
    "upward_slide",
    "validate",
    "verify_perp_identities",
    "verify_perp_range",
    "verify_involution",
    "verify_skew_lr",
    "verify_skew_pieri",
]
