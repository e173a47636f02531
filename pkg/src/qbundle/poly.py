"""Exact sparse polynomial arithmetic in the variables xi, h, q1 and q2.

A polynomial is a map from exponent vectors to nonzero integer coefficients,
so every value is automatically in canonical form and equality is dictionary
equality.  Coefficients are Python ints, hence exact at any size.  The
variable set is fixed: xi and h are the two ring generators (both of weight
one) and q1, q2 are the deformation parameters whose weights come from a
:class:`Grading`.

Term order for printing and serialization is lexicographic on
(e_xi, e_h, e_q1, e_q2), largest term first, which keeps golden outputs and
JSON byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import ClassVar, Iterable, Mapping, NamedTuple, Union

from .errors import ZeroPolynomialError

__all__ = [
    "VARIABLES",
    "Monomial",
    "Grading",
    "Inhomogeneous",
    "Polynomial",
    "XI",
    "H",
    "Q1",
    "Q2",
    "ONE",
    "ZERO",
]

VARIABLES = ("xi", "h", "q1", "q2")


class Monomial(NamedTuple):
    """Exponent vector of a single term.

    Tuple order (e_xi, e_h, e_q1, e_q2) doubles as the canonical
    lexicographic order used for printing.
    """

    e_xi: int = 0
    e_h: int = 0
    e_q1: int = 0
    e_q2: int = 0

    def times(self, other: "Monomial") -> "Monomial":
        """Exponentwise sum (the product of the underlying monomials)."""
        return Monomial(
            self.e_xi + other.e_xi,
            self.e_h + other.e_h,
            self.e_q1 + other.e_q1,
            self.e_q2 + other.e_q2,
        )

    def weighted_degree(self, grading: "Grading") -> int:
        return (
            self.e_xi
            + self.e_h
            + self.e_q1 * grading.deg_q1
            + self.e_q2 * grading.deg_q2
        )

    def exponent(self, var: str) -> int:
        return self[VARIABLES.index(var)]

    def __str__(self) -> str:
        factors = []
        for name, e in zip(VARIABLES, self):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class Grading:
    """Variable weights; xi and h always weigh one, q-weights are positive."""

    deg_q1: int
    deg_q2: int

    deg_xi: ClassVar[int] = 1
    deg_h: ClassVar[int] = 1

    def __post_init__(self) -> None:
        if self.deg_q1 < 1 or self.deg_q2 < 1:
            raise ValueError(
                f"q-weights must be positive, got ({self.deg_q1}, {self.deg_q2})"
            )


@dataclass(frozen=True)
class Inhomogeneous:
    """Marker returned by weighted_degree when terms mix several degrees."""

    degrees: frozenset[int]

    def __str__(self) -> str:
        return "Inhomogeneous{%s}" % ", ".join(str(d) for d in sorted(self.degrees))


class Polynomial:
    """Immutable sparse polynomial with exact integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(
        self,
        terms: Union[Mapping[Monomial, int], Iterable[tuple[Monomial, int]]] = (),
    ):
        data: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = Monomial(*mono)
            if min(mono) < 0:
                raise ValueError(f"negative exponent in monomial {mono!r}")
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient must be int, got {type(coeff).__name__}")
            acc = data.get(mono, 0) + coeff
            if acc:
                data[mono] = acc
            elif mono in data:
                del data[mono]
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[Monomial, int]) -> "Polynomial":
        # trusted canonical dict, skips revalidation (internal hot path)
        out = object.__new__(cls)
        out._terms = data
        return out

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls._raw({Monomial(): value} if value else {})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls([(Monomial(*mono), coeff)])

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        if name not in VARIABLES:
            raise ValueError(f"unknown variable {name!r}, expected one of {VARIABLES}")
        exps = [0, 0, 0, 0]
        exps[VARIABLES.index(name)] = 1
        return cls._raw({Monomial(*exps): 1})

    @property
    def terms(self) -> Mapping[Monomial, int]:
        return MappingProxyType(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, mono: Monomial) -> int:
        return self._terms.get(Monomial(*mono), 0)

    def coefficient_in(self, var: str, power: int) -> "Polynomial":
        """The coefficient of var**power, as a polynomial in the other variables."""
        idx = VARIABLES.index(var)
        data: dict[Monomial, int] = {}
        for mono, coeff in self._terms.items():
            if mono[idx] == power:
                rest = list(mono)
                rest[idx] = 0
                data[Monomial(*rest)] = coeff
        return Polynomial._raw(data)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms in canonical order, largest monomial first."""
        return sorted(self._terms.items(), reverse=True)

    def weighted_degree(self, grading: Grading) -> Union[int, Inhomogeneous]:
        """Common weighted degree of all terms, or an Inhomogeneous marker.

        Raises ZeroPolynomialError for the zero polynomial, whose degree is
        left to the caller's convention.
        """
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        degrees = {mono.weighted_degree(grading) for mono in self._terms}
        if len(degrees) == 1:
            return next(iter(degrees))
        return Inhomogeneous(frozenset(degrees))

    def evaluate(self, xi: int, h: int, q1: int, q2: int) -> int:
        total = 0
        for mono, coeff in self._terms.items():
            total += coeff * xi**mono.e_xi * h**mono.e_h * q1**mono.e_q1 * q2**mono.e_q2
        return total

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other: object) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in rhs._terms.items():
            acc = data.get(mono, 0) + coeff
            if acc:
                data[mono] = acc
            else:
                del data[mono]
        return Polynomial._raw(data)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({mono: -coeff for mono, coeff in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        data: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in rhs._terms.items():
                mono = m1.times(m2)
                acc = data.get(mono, 0) + c1 * c2
                if acc:
                    data[mono] = acc
                elif mono in data:
                    del data[mono]
        return Polynomial._raw(data)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("polynomial exponent must be non-negative")
        result = Polynomial.constant(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- formatting and serialization ---------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for i, (mono, coeff) in enumerate(self.sorted_terms()):
            magnitude = abs(coeff)
            body = str(mono)
            if body == "1":
                text = str(magnitude)
            elif magnitude == 1:
                text = body
            else:
                text = f"{magnitude}*{body}"
            if i == 0:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_records(self) -> list[dict[str, object]]:
        """Term records for JSON: coeff as decimal string, exponents as ints."""
        return [
            {"coeff": str(coeff), "xi": m.e_xi, "h": m.e_h, "q1": m.e_q1, "q2": m.e_q2}
            for m, coeff in self.sorted_terms()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, object]]) -> "Polynomial":
        items = []
        for rec in records:
            mono = Monomial(int(rec["xi"]), int(rec["h"]), int(rec["q1"]), int(rec["q2"]))
            items.append((mono, int(str(rec["coeff"]))))
        return cls(items)


XI = Polynomial.variable("xi")
H = Polynomial.variable("h")
Q1 = Polynomial.variable("q1")
Q2 = Polynomial.variable("q2")
ONE = Polynomial.constant(1)
ZERO = Polynomial.zero()
