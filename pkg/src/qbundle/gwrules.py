"""Pattern-based answers for three-point genus-zero invariants.

Only four facts are encoded, and nothing else is ever claimed:

  * dimension: the invariant vanishes unless the three degrees sum to the
    virtual dimension of the moduli space for the given curve class;
  * fiber_line_normalization: against the class of a line in a fiber,
    (xi, xi^(r-1), xi^(r-1) h^n) pairs to exactly 1;
  * fiber_line_low_degree: against the fiber line, two monomial insertions
    whose xi-degrees sum below r force vanishing, whatever the third slot;
  * section_ray_vanishing: for a pure multiple of the section ray (b >= 1),
    the invariant vanishes whenever the first insertion is divisible by
    (xi - h), the class of the subbundle hypersurface that such curves miss.

Every other query is answered Unknown: the presented ring alone does not
determine general invariants, and pretending otherwise would be wrong.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bundle import A1, BundleSpec, CurveClass, virtual_dimension
from .poly import Grading, H, Monomial, Polynomial, XI

__all__ = [
    "RULE_DIMENSION",
    "RULE_FIBER_NORMALIZATION",
    "RULE_FIBER_LOW_DEGREE",
    "RULE_SECTION_VANISHING",
    "RULE_NAMES",
    "KnownValue",
    "UNKNOWN",
    "InvariantQuery",
    "classical_degree",
    "divide_by_hyperplane_class",
    "applicable_rules",
    "evaluate",
]

RULE_DIMENSION = "dimension"
RULE_FIBER_NORMALIZATION = "fiber_line_normalization"
RULE_FIBER_LOW_DEGREE = "fiber_line_low_degree"
RULE_SECTION_VANISHING = "section_ray_vanishing"
RULE_NAMES = (
    RULE_DIMENSION,
    RULE_FIBER_NORMALIZATION,
    RULE_FIBER_LOW_DEGREE,
    RULE_SECTION_VANISHING,
)

# q-weights are irrelevant for classical (q-free) classes
_CLASSICAL_GRADING = Grading(deg_q1=1, deg_q2=1)


@dataclass(frozen=True)
class KnownValue:
    """Either a value pinned by one of the four rules, or honest ignorance."""

    value: Optional[int]
    rule: Optional[str]

    def __post_init__(self) -> None:
        if (self.value is None) != (self.rule is None):
            raise ValueError("value and rule must be both set or both absent")
        if self.rule is not None and self.rule not in RULE_NAMES:
            raise ValueError(f"unknown rule name {self.rule!r}")

    @property
    def known(self) -> bool:
        return self.value is not None


UNKNOWN = KnownValue(None, None)


def classical_degree(p: Polynomial) -> int:
    """Cohomological degree of a nonzero homogeneous q-free class."""
    degree = p.weighted_degree(_CLASSICAL_GRADING)
    if not isinstance(degree, int):
        raise ValueError(f"class {p} is not homogeneous: {degree}")
    return degree


def _check_class(spec: BundleSpec, p: Polynomial, slot: str) -> None:
    if p.is_zero:
        raise ValueError(f"{slot} must be a nonzero class")
    for mono in p.terms:
        if mono.e_q1 or mono.e_q2:
            raise ValueError(f"{slot} carries deformation variables: {mono}")
        if mono.e_xi > spec.r - 1 or mono.e_h > spec.n:
            raise ValueError(f"{slot} is not a classical normal form: {mono}")
    classical_degree(p)  # raises if inhomogeneous


@dataclass(frozen=True)
class InvariantQuery:
    """Three homogeneous classical classes against one effective curve class."""

    spec: BundleSpec
    curve: CurveClass
    alpha: Polynomial
    beta: Polynomial
    gamma: Polynomial

    def __post_init__(self) -> None:
        _check_class(self.spec, self.alpha, "alpha")
        _check_class(self.spec, self.beta, "beta")
        _check_class(self.spec, self.gamma, "gamma")


def divide_by_hyperplane_class(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder of division by (xi - h) in the free ring.

    Synthetic division treating p as a polynomial in xi over Z[h]; the
    remainder is p with xi substituted by h, so it vanishes exactly when
    (xi - h) divides p.
    """
    if any(mono.e_q1 or mono.e_q2 for mono in p.terms):
        raise ValueError("division by (xi - h) expects a q-free polynomial")
    by_xi: dict[int, Polynomial] = {}
    for mono, coeff in p.terms.items():
        piece = Polynomial.monomial(Monomial(0, mono.e_h, 0, 0), coeff)
        by_xi[mono.e_xi] = by_xi.get(mono.e_xi, Polynomial.zero()) + piece
    top = max(by_xi, default=0)
    quotient = Polynomial.zero()
    acc = by_xi.get(top, Polynomial.zero())
    for k in range(top, 0, -1):
        quotient = quotient + acc * XI ** (k - 1)
        acc = by_xi.get(k - 1, Polynomial.zero()) + H * acc
    return quotient, acc


def _is_monomial(p: Polynomial) -> Optional[Monomial]:
    if len(p.terms) == 1:
        return next(iter(p.terms))
    return None


def applicable_rules(query: InvariantQuery) -> tuple[KnownValue, ...]:
    """All rules matching the query, in evaluation precedence order.

    Exposed so batteries can assert that overlapping rules never disagree.
    """
    spec, curve = query.spec, query.curve
    matches: list[KnownValue] = []

    degree_sum = (
        classical_degree(query.alpha)
        + classical_degree(query.beta)
        + classical_degree(query.gamma)
    )
    if degree_sum != virtual_dimension(spec, curve):
        matches.append(KnownValue(0, RULE_DIMENSION))

    if curve == A1:
        top = Polynomial.monomial(Monomial(spec.r - 1, spec.n, 0, 0))
        if (
            query.alpha == XI
            and query.beta == XI ** (spec.r - 1)
            and query.gamma == top
        ):
            matches.append(KnownValue(1, RULE_FIBER_NORMALIZATION))
        mono_a = _is_monomial(query.alpha)
        mono_b = _is_monomial(query.beta)
        if (
            mono_a is not None
            and mono_b is not None
            and mono_a.e_xi + mono_b.e_xi < spec.r
        ):
            matches.append(KnownValue(0, RULE_FIBER_LOW_DEGREE))

    if curve.a == 0 and curve.b >= 1:
        _, remainder = divide_by_hyperplane_class(query.alpha)
        if remainder.is_zero:
            matches.append(KnownValue(0, RULE_SECTION_VANISHING))

    return tuple(matches)


def evaluate(query: InvariantQuery) -> KnownValue:
    """First matching rule in precedence order, or Unknown."""
    matches = applicable_rules(query)
    return matches[0] if matches else UNKNOWN
