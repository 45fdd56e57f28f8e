"""Privileged and palindromic factor complexity of infinite words.

The package materializes certified prefixes of the Thue-Morse word and
a few companion words, enumerates their privileged and palindromic
factors by brute force, evaluates the matching recursive complexity
formulas, and cross-verifies the two routes against each other.
"""
from .errors import (
    BudgetExceededError,
    CertificationTooShortError,
    DomainViolationError,
    EmptyImageError,
    EmptyPatternError,
    EmptyWordError,
    IndexTooSmallError,
    MorphismSpecError,
    NonBinaryError,
    NotAFactorError,
    NotPrivilegedError,
    NotProlongableError,
    OutOfRangeError,
    PrivwordError,
    RangeViolationError,
    UnknownConstructionError,
    UnknownLetterError,
)
from .words import (
    BUILTIN_WORDS,
    CHACON_MORPHISM,
    H_MORPHISM,
    InfiniteWordSpec,
    MorphicImage,
    MorphicWord,
    Morphism,
    PHI_MORPHISM,
    RecursiveWord,
    StabilizedPrefix,
    THETA_MORPHISM,
    build_morphism,
    construction_prefix,
    default_byte_cap,
    fixed_point_prefix,
    parse_morphism_spec,
    stabilize,
)
from .factors import (
    FactorIndex,
    Interpretation,
    borders,
    build_index,
    delete_ends,
    exchange,
    is_complete_first_return,
    is_primitive,
    matches_over,
    occurrence_count,
    occurrence_positions,
)
from .privileged import (
    ALPHA_RETURNS,
    BETA_RETURNS,
    CLASS_PREFIXES,
    DefectReport,
    GAMMA_RETURNS,
    PalPriClassification,
    PrivilegedSet,
    REDUCTION_MAPS,
    apply_reduction,
    classify_tm_privileged,
    defect,
    invert_reduction,
    is_palindrome,
    is_privileged,
    is_rich,
    longest_proper_privileged_border,
    new_privileged_at,
    oracle_complexity,
    palindromic_factors,
    privileged_set,
    shortest_nonpalindromic_privileged,
    theta_preimage,
)
from .recurrences import (
    A,
    A_00,
    A_010,
    A_0110,
    A_REFERENCE_EVEN,
    A_pow2,
    B,
    B_00,
    B_010,
    B_0110,
    ComplexityTable,
    GapInterval,
    KINDS,
    P,
    a_seq,
    b_seq,
    complexity,
    complexity_table,
    gap_interval,
    gap_report,
    reference_mismatches,
)

__version__ = "0.1.0"
