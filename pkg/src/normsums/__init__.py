"""Sums of norms in imaginary quadratic fields Q(sqrt(-d)) with class
number 1, 2 or 3: which unary Hermitian lattices are sums of norms, the
minimum number of norms each needs, and the uniform bound g over a field.
"""

from .quadfield import (
    CLASS_NUMBER_1_FIELDS,
    CLASS_NUMBER_2_FIELDS,
    CLASS_NUMBER_3_FIELDS,
    SUPPORTED_FIELDS,
    FieldParams,
    NotSquarefree,
    OmegaBranch,
    Overflow,
    RingElement,
    UnsupportedField,
    conjugate,
    make_field,
    norm,
    scaled_form_value,
)
from .classdata import (
    CongruenceCondition,
    IdealClassRep,
    class_reps,
    condition_display,
    congruence_for,
    odd_sqrt_of_minus_d,
    predicate_holds,
    rep_for,
    simplify_condition,
    validate_tables,
)
from .repsearch import (
    DEFAULT_DP_CAP,
    GInvariantResult,
    LatticeQuery,
    MinTermsResult,
    NormValueSet,
    RepCertificate,
    enumerate_norm_values,
    exceptional_set,
    find_certificate,
    g_invariant,
    min_count_table,
    min_terms,
    transfer_certificate,
)
from .universality import (
    FIFTEEN,
    TWO_NINETY,
    CriterionSet,
    CrossCheckFailed,
    DiagonalForm,
    MixedSum,
    TermKind,
    check_criterion,
    is_sum_of_three_squares,
    m_d,
    norm_sum_first_gap,
    represents_bounded,
    sun_polynomial_universal,
    three_norm_sum,
    three_norm_witness_table,
    universal_up_to,
)
from .verify import (
    DiffReport,
    ExpectedRow,
    FieldReport,
    describe_expected,
    expected_row,
    recheck_certificate,
    report_table,
    report_to_json,
    verify_all,
    verify_field,
)

__version__ = "0.1.0"
