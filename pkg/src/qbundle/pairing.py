"""Classical Poincaré pairing, its matrix over the monomial basis, duals.

Normalization: the top monomial xi^(r-1) h^n integrates to 1 and every other
basis monomial to 0, so integrating a classical normal form just reads one
coefficient.  The pairing matrix is symmetric and unimodular over the
integers, hence the dual basis (solved by exact rational elimination) is
integral; both facts are asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bundle import BundleSpec
from .errors import NonIntegralDualError, NotNormalFormError, SingularPairingError
from .poly import Monomial, Polynomial
from .rewrite import RingKind, build_presentation, enumerate_basis, normal_form

__all__ = [
    "PairingData",
    "integrate",
    "compute_pairing",
    "pairing_matrix",
    "dual_basis",
]


@dataclass(frozen=True)
class PairingData:
    spec: BundleSpec
    basis: tuple[Monomial, ...]
    matrix: tuple[tuple[int, ...], ...]
    duals: tuple[Polynomial, ...]
    determinant: int


def integrate(spec: BundleSpec, p: Polynomial) -> int:
    """Coefficient of xi^(r-1) h^n; input must be a classical normal form."""
    r, n = spec.r, spec.n
    for mono in p.terms:
        if mono.e_q1 or mono.e_q2:
            raise NotNormalFormError(f"term {mono} carries deformation variables")
        if mono.e_xi > r - 1 or mono.e_h > n:
            raise NotNormalFormError(
                f"term {mono} exceeds the basis bounds (xi^{r - 1}, h^{n})"
            )
    return p.coefficient(Monomial(r - 1, n, 0, 0))


def _invert(matrix: list[list[int]]) -> tuple[list[list[Fraction]], Fraction]:
    """Gauss-Jordan inverse over exact rationals; also returns the determinant."""
    size = len(matrix)
    work = [[Fraction(x) for x in row] for row in matrix]
    inv = [[Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    det = Fraction(1)
    for col in range(size):
        pivot_row = next(
            (row for row in range(col, size) if work[row][col] != 0), None
        )
        if pivot_row is None:
            raise SingularPairingError(
                f"pairing matrix is singular at column {col}; upstream bug"
            )
        if pivot_row != col:
            work[col], work[pivot_row] = work[pivot_row], work[col]
            inv[col], inv[pivot_row] = inv[pivot_row], inv[col]
            det = -det
        pivot = work[col][col]
        det *= pivot
        work[col] = [x / pivot for x in work[col]]
        inv[col] = [x / pivot for x in inv[col]]
        for row in range(size):
            if row != col and work[row][col] != 0:
                factor = work[row][col]
                work[row] = [a - factor * b for a, b in zip(work[row], work[col])]
                inv[row] = [a - factor * b for a, b in zip(inv[row], inv[col])]
    return inv, det


def compute_pairing(spec: BundleSpec) -> PairingData:
    """Pairing matrix over the canonical basis plus the integral dual basis."""
    pres = build_presentation(spec, RingKind.CLASSICAL)
    basis = enumerate_basis(spec)
    basis_polys = [Polynomial.monomial(mono) for mono in basis]
    matrix = [
        [integrate(spec, normal_form(bi * bj, pres)) for bj in basis_polys]
        for bi in basis_polys
    ]
    inverse, det = _invert(matrix)
    if det.denominator != 1:  # pragma: no cover - impossible for int input
        raise SingularPairingError("determinant of an integer matrix is not integral")
    duals = []
    for j in range(len(basis)):
        dual = Polynomial.zero()
        for k, mono in enumerate(basis):
            entry = inverse[k][j]
            if entry.denominator != 1:
                raise NonIntegralDualError(
                    f"dual of {mono} has non-integer coefficient {entry}"
                )
            if entry:
                dual = dual + Polynomial.monomial(mono, int(entry))
        duals.append(dual)
    return PairingData(
        spec=spec,
        basis=basis,
        matrix=tuple(tuple(row) for row in matrix),
        duals=tuple(duals),
        determinant=int(det),
    )


def pairing_matrix(spec: BundleSpec) -> tuple[tuple[int, ...], ...]:
    return compute_pairing(spec).matrix


def dual_basis(spec: BundleSpec) -> tuple[Polynomial, ...]:
    return compute_pairing(spec).duals
