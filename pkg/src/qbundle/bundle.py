"""Bundle data: validation, Chern numbers, curve intersections, gradings.

The input is a pair (n, m) describing a direct sum of line bundles of degrees
m_1 <= ... <= m_r over projective n-space; everything the engine needs is an
integer derived from it.  Conventions:

  * cbar[j] is the j-th elementary symmetric polynomial of the twists, so
    prod(xi - m_i*h) = sum_j (-1)^j cbar[j] xi^(r-j) h^j and the alternating
    sum of the cbar[j] equals prod(1 - m_i), which vanishes iff some m_i = 1.
  * the anticanonical class is r*xi + (n+1-c1)*h,
  * the two extremal curve classes meet divisors through the table
    xi.A1 = 1, h.A1 = 0, xi.A2 = 1, h.A2 = 1,
  * deg(q1) = -K.A1 = r and deg(q2) = -K.A2 = n+1+r-c1 (positive iff Fano).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import InvalidSpecError, NotFanoError
from .poly import Grading, H, Polynomial, XI

__all__ = [
    "BundleSpec",
    "ChernData",
    "DivisorClass",
    "CurveClass",
    "A1",
    "A2",
    "validate_spec",
    "chern",
    "anticanonical",
    "intersect_curve",
    "grading",
    "virtual_dimension",
]


@dataclass(frozen=True)
class BundleSpec:
    """Split bundle O(m_1) + ... + O(m_r) over P^n; twists kept sorted."""

    n: int
    m: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidSpecError(f"base dimension must be a positive integer, got {self.n!r}")
        twists = tuple(sorted(self.m))
        if len(twists) < 2:
            raise InvalidSpecError("need at least two summands (r >= 2)")
        if any(not isinstance(mi, int) or mi < 1 for mi in twists):
            raise InvalidSpecError(f"all twists must be integers >= 1, got {list(self.m)}")
        object.__setattr__(self, "m", twists)

    @property
    def r(self) -> int:
        return len(self.m)

    @property
    def c1(self) -> int:
        return sum(self.m)

    @property
    def dim(self) -> int:
        """Dimension of the projectivized bundle, n + r - 1."""
        return self.n + self.r - 1

    @property
    def fano(self) -> bool:
        return self.c1 <= self.n + self.r

    @property
    def theorem_hypothesis(self) -> bool:
        """Twist profile 1 = m_1 < m_2."""
        return self.m[0] == 1 and self.m[0] < self.m[1]

    @property
    def qin_ruan_condition(self) -> bool:
        """c1 < min(2r, (n+1+2r)/2, (2n+2+r)/2), halves compared exactly."""
        n, r = self.n, self.r
        bound = min(
            Fraction(2 * r),
            Fraction(n + 1 + 2 * r, 2),
            Fraction(2 * n + 2 + r, 2),
        )
        return self.c1 < bound

    def __str__(self) -> str:
        return f"n={self.n} m={','.join(str(mi) for mi in self.m)}"


@dataclass(frozen=True)
class ChernData:
    """Elementary symmetric values of the twists; cbar[0] = 1, cbar[1] = c1."""

    cbar: tuple[int, ...]
    c1: int


@dataclass(frozen=True)
class DivisorClass:
    """Integer divisor class coef_xi * xi + coef_h * h."""

    coef_xi: int
    coef_h: int

    def to_polynomial(self) -> Polynomial:
        return self.coef_xi * XI + self.coef_h * H

    def __str__(self) -> str:
        return str(self.to_polynomial())


@dataclass(frozen=True)
class CurveClass:
    """Effective curve class a*A1 + b*A2 in the Mori cone."""

    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"curve class must be effective, got ({self.a}, {self.b})")


A1 = CurveClass(1, 0)
A2 = CurveClass(0, 1)


def validate_spec(n: int, m: Iterable[int]) -> BundleSpec:
    """Validate and normalize (n, m); raises InvalidSpecError on bad input."""
    return BundleSpec(n, tuple(m))


def chern(spec: BundleSpec) -> ChernData:
    """Elementary symmetric polynomials of the twists, via the product
    prod(1 + m_i t) expanded coefficient by coefficient."""
    coeffs = [1]
    for mi in spec.m:
        coeffs = [
            (coeffs[j] if j < len(coeffs) else 0)
            + (mi * coeffs[j - 1] if j > 0 else 0)
            for j in range(len(coeffs) + 1)
        ]
    return ChernData(cbar=tuple(coeffs), c1=coeffs[1])


def anticanonical(spec: BundleSpec) -> DivisorClass:
    return DivisorClass(coef_xi=spec.r, coef_h=spec.n + 1 - spec.c1)


def intersect_curve(d: DivisorClass, curve: CurveClass) -> int:
    """Bilinear extension of xi.A1 = 1, h.A1 = 0, xi.A2 = 1, h.A2 = 1."""
    return d.coef_xi * (curve.a + curve.b) + d.coef_h * curve.b


def grading(spec: BundleSpec) -> Grading:
    """deg(q1) = r, deg(q2) = n+1+r-c1; defined only in the Fano range."""
    deg_q2 = spec.n + 1 + spec.r - spec.c1
    if deg_q2 < 1:
        raise NotFanoError(
            f"c1 = {spec.c1} exceeds n + r = {spec.n + spec.r}; "
            "deformation grading would not be positive"
        )
    return Grading(deg_q1=spec.r, deg_q2=deg_q2)


def virtual_dimension(spec: BundleSpec, curve: CurveClass) -> int:
    """Expected dimension of the three-pointed genus-zero moduli space for
    the class a*A1 + b*A2: -K.B + dim = a*r + b*(n+1+r-c1) + n+r-1."""
    deg_q2 = spec.n + 1 + spec.r - spec.c1
    return curve.a * spec.r + curve.b * deg_q2 + spec.dim
