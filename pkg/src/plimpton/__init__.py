"""Exact sexagesimal arithmetic and reconstruction of Plimpton 322."""

from .sexagesimal import (
    ONE,
    ZERO,
    RegularNumber,
    SexValue,
    SexagesimalError,
    add,
    cmp_quadratic,
    factor_2_3_5,
    from_fraction,
    halve,
    is_regular,
    mul,
    parse_sex,
    place_length,
    reciprocal,
    regular_from_int,
    render_sex,
    sqrt_exact,
    sub,
)
from .pairs import (
    Correction,
    PairCriterion,
    ReciprocalPair,
    bruins_excluded,
    enumerate_pairs,
    enumerate_regulars,
    excluded_pairs,
    full_mult10_list,
    mult10_criterion,
    padded_multiple_of_10,
    plimpton_range,
)
from .rows import (
    PQPair,
    RowCandidate,
    XYPair,
    build_row,
    column_A,
    pair_from_pq,
    pq_to_triple,
    reduce_factorization,
    xy_from_pair,
)
from .hypotheses import (
    ExtensionRow,
    Hypothesis,
    LinkChain,
    extend_phillips,
    extension_corrections,
    generate,
    link_to_standard,
    phillips_pairs,
    standard_table,
)
from .tablet import (
    DiffReport,
    ErrorAnnotation,
    TabletCell,
    TabletRowRecord,
    diff_against,
    error_annotations,
    tablet_data,
    verify_properties,
)

__version__ = "0.1.0"
