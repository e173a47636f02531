"""Classical and quantum ring presentations as terminating rewrite systems.

Both presentations have two rules, one replacing xi^r and one replacing
h^(n+1):

  classical:  xi^r    -> xi^r - prod(xi - m_i h)          (pure (xi,h) terms)
              h^(n+1) -> 0
  quantum:    xi^r    -> xi^r - prod(xi - m_i h) + q1
              h^(n+1) -> prod(xi - m_i h)^(m_i - 1) * q2

A term is reducible when its (xi, h) exponents dominate a head; rewriting
multiplies the replacement by the cofactor and q-exponents ride along
untouched.  Termination measure: every replacement term is strictly below its
head in the order "total (xi,h)-degree first, then xi-degree".  The xi-rule
keeps the total degree and lowers the xi-degree (the q1 term drops the total
degree by r); the h-rule drops the total degree by n+1-(c1-r), positive
exactly when the bundle is Fano.  The measure is asserted at build time.

The deterministic strategy always reduces the largest xi-reducible term in
canonical order, then the largest h-reducible one; `normal_form_random`
applies the same rules in seeded random order and is used to check confluence
empirically.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Optional

from .bundle import BundleSpec, chern, grading
from .errors import NonTerminationError, NotFanoError
from .poly import Grading, H, Monomial, Polynomial, Q1, Q2, XI, ZERO

__all__ = [
    "DEFAULT_MAX_STEPS",
    "RingKind",
    "RewriteRule",
    "RingPresentation",
    "chern_leray_polynomial",
    "enumerate_basis",
    "build_presentation",
    "normal_form",
    "normal_form_random",
    "reduce_mod",
]

DEFAULT_MAX_STEPS = 1_000_000


class RingKind(enum.Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"


@dataclass(frozen=True)
class RewriteRule:
    """head -> replacement, with head a pure (xi, h) monomial."""

    head: Monomial
    replacement: Polynomial

    def reduces(self, mono: Monomial) -> bool:
        return mono.e_xi >= self.head.e_xi and mono.e_h >= self.head.e_h


@dataclass(frozen=True)
class RingPresentation:
    """Immutable rewrite presentation of one cohomology ring."""

    spec: BundleSpec
    kind: RingKind
    rules: tuple[RewriteRule, RewriteRule]
    grading: Optional[Grading]
    basis: tuple[Monomial, ...]

    @property
    def xi_rule(self) -> RewriteRule:
        return self.rules[0]

    @property
    def h_rule(self) -> RewriteRule:
        return self.rules[1]


def chern_leray_polynomial(spec: BundleSpec) -> Polynomial:
    """prod(xi - m_i h), the left side of both hyperplane-bundle relations."""
    out = Polynomial.constant(1)
    for mi in spec.m:
        out = out * (XI - mi * H)
    return out


def enumerate_basis(spec: BundleSpec) -> tuple[Monomial, ...]:
    """The r(n+1) monomials xi^l h^m, l < r, m <= n, by degree then xi-power."""
    monos = [
        Monomial(l, m, 0, 0) for l in range(spec.r) for m in range(spec.n + 1)
    ]
    monos.sort(key=lambda mo: (mo.e_xi + mo.e_h, mo))
    return tuple(monos)


def _assert_measure(rule: RewriteRule) -> None:
    head_total = rule.head.e_xi + rule.head.e_h
    for mono in rule.replacement.terms:
        total = mono.e_xi + mono.e_h
        assert total < head_total or (
            total == head_total and mono.e_xi < rule.head.e_xi
        ), f"replacement term {mono} does not decrease under head {rule.head}"


def build_presentation(spec: BundleSpec, kind: RingKind) -> RingPresentation:
    """Expand the two relations of the requested ring into rewrite rules.

    The quantum kind needs the Fano bound so the h-rule strictly decreases
    total degree; it raises NotFanoError otherwise.
    """
    r, n = spec.r, spec.n
    product = chern_leray_polynomial(spec)
    xi_replacement = XI**r - product
    if kind is RingKind.QUANTUM:
        ring_grading: Optional[Grading] = grading(spec)  # raises NotFanoError
        xi_replacement = xi_replacement + Q1
        correction = Polynomial.constant(1)
        for mi in spec.m:
            correction = correction * (XI - mi * H) ** (mi - 1)
        h_replacement = correction * Q2
    elif kind is RingKind.CLASSICAL:
        ring_grading = None
        h_replacement = ZERO
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown ring kind {kind!r}")

    xi_rule = RewriteRule(Monomial(r, 0, 0, 0), xi_replacement)
    h_rule = RewriteRule(Monomial(0, n + 1, 0, 0), h_replacement)
    _assert_measure(xi_rule)
    _assert_measure(h_rule)
    return RingPresentation(
        spec=spec,
        kind=kind,
        rules=(xi_rule, h_rule),
        grading=ring_grading,
        basis=enumerate_basis(spec),
    )


def _apply(terms: dict[Monomial, int], mono: Monomial, rule: RewriteRule) -> None:
    # replace coeff*mono by coeff*(mono/head)*replacement, in place
    coeff = terms.pop(mono)
    head = rule.head
    for rm, rc in rule.replacement.terms.items():
        new = Monomial(
            mono.e_xi - head.e_xi + rm.e_xi,
            mono.e_h - head.e_h + rm.e_h,
            mono.e_q1 + rm.e_q1,
            mono.e_q2 + rm.e_q2,
        )
        acc = terms.get(new, 0) + coeff * rc
        if acc:
            terms[new] = acc
        elif new in terms:
            del terms[new]


def _check_classical_input(p: Polynomial, pres: RingPresentation) -> None:
    if pres.kind is RingKind.CLASSICAL and any(
        mono.e_q1 or mono.e_q2 for mono in p.terms
    ):
        raise ValueError("classical normal form requires a polynomial without q1, q2")


def _bail(pres: RingPresentation, steps: int, terms: dict[Monomial, int]) -> None:
    raise NonTerminationError(
        f"rewriting on ({pres.spec}) exceeded {steps} steps "
        f"with {len(terms)} live terms; raise max_steps or check the Fano bound",
        steps,
    )


def normal_form(
    p: Polynomial, pres: RingPresentation, max_steps: int = DEFAULT_MAX_STEPS
) -> Polynomial:
    """Unique fixpoint of exhaustive rewriting under the canonical strategy.

    Every resulting term has e_xi <= r-1 and e_h <= n.  Aborts with
    NonTerminationError after max_steps rule applications; on Fano input the
    bound is unreachable because the termination measure strictly decreases.
    """
    _check_classical_input(p, pres)
    r, n = pres.spec.r, pres.spec.n
    terms = dict(p.terms)
    steps = 0
    while True:
        best_xi: Optional[Monomial] = None
        best_h: Optional[Monomial] = None
        for mono in terms:
            if mono.e_xi >= r:
                if best_xi is None or mono > best_xi:
                    best_xi = mono
            elif mono.e_h >= n + 1:
                if best_h is None or mono > best_h:
                    best_h = mono
        if best_xi is not None:
            target, rule = best_xi, pres.xi_rule
        elif best_h is not None:
            target, rule = best_h, pres.h_rule
        else:
            return Polynomial(terms)
        steps += 1
        if steps > max_steps:
            _bail(pres, steps, terms)
        _apply(terms, target, rule)


def normal_form_random(
    p: Polynomial,
    pres: RingPresentation,
    rng: random.Random,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> Polynomial:
    """Same fixpoint computed by applying rules in seeded random order.

    At each step every reducible (term, rule) pair is a candidate, including
    both rules for terms that match both heads.  Used by the confluence
    checks; agreement with `normal_form` is an empirical property, asserted
    over large seeded batteries rather than proven.
    """
    _check_classical_input(p, pres)
    r, n = pres.spec.r, pres.spec.n
    terms = dict(p.terms)
    steps = 0
    while True:
        candidates: list[tuple[Monomial, int]] = []
        for mono in terms:
            if mono.e_xi >= r:
                candidates.append((mono, 0))
            if mono.e_h >= n + 1:
                candidates.append((mono, 1))
        if not candidates:
            return Polynomial(terms)
        steps += 1
        if steps > max_steps:
            _bail(pres, steps, terms)
        candidates.sort()
        target, which = rng.choice(candidates)
        _apply(terms, target, pres.rules[which])


def reduce_mod(p: Polynomial, which: str) -> Polynomial:
    """Drop every term with a positive exponent of q1 or q2."""
    if which not in ("q1", "q2"):
        raise ValueError(f"expected 'q1' or 'q2', got {which!r}")
    idx = 2 if which == "q1" else 3
    return Polynomial._raw(
        {mono: coeff for mono, coeff in p.terms.items() if mono[idx] == 0}
    )
