"""Exact engine for classical and quantum cohomology rings of projectivized
split vector bundles over projective spaces."""

from .errors import (
    ExpressionError,
    ExpressionSyntaxError,
    InvalidSpecError,
    NegativeExponentError,
    NonIntegralDualError,
    NonTerminationError,
    NotFanoError,
    NotNormalFormError,
    QBundleError,
    SingularPairingError,
    UnknownIdentifierError,
    ZeroPolynomialError,
)
from .poly import (
    H,
    Grading,
    Inhomogeneous,
    Monomial,
    ONE,
    Polynomial,
    Q1,
    Q2,
    XI,
    ZERO,
)
from .bundle import (
    A1,
    A2,
    BundleSpec,
    ChernData,
    CurveClass,
    DivisorClass,
    anticanonical,
    chern,
    grading,
    intersect_curve,
    validate_spec,
    virtual_dimension,
)
from .rewrite import (
    DEFAULT_MAX_STEPS,
    RewriteRule,
    RingKind,
    RingPresentation,
    build_presentation,
    chern_leray_polynomial,
    enumerate_basis,
    normal_form,
    normal_form_random,
    reduce_mod,
)
from .pairing import (
    PairingData,
    compute_pairing,
    dual_basis,
    integrate,
    pairing_matrix,
)
from .gwrules import (
    InvariantQuery,
    KnownValue,
    RULE_DIMENSION,
    RULE_FIBER_LOW_DEGREE,
    RULE_FIBER_NORMALIZATION,
    RULE_SECTION_VANISHING,
    UNKNOWN,
    applicable_rules,
    classical_degree,
    divide_by_hyperplane_class,
    evaluate,
)
from .verify import (
    CheckResult,
    Report,
    ScanResult,
    fano_family,
    random_polynomial,
    run_suite,
    scan,
)
from .expr import parse_expression, parse_polynomial, to_polynomial

__version__ = "0.1.0"
