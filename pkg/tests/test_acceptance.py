"""Acceptance suite.

Each criterion prints one pass/fail line (run with -s to see them) and fails
hard on any deviation.  Criterion 1 carries its own wall-clock budget; all
identities are exact integer comparisons with zero tolerance.
"""

import itertools
import random
import time

import pytest

from qbundle import (
    A1,
    A2,
    CurveClass,
    H,
    InvariantQuery,
    KnownValue,
    Monomial,
    NotFanoError,
    ONE,
    Polynomial,
    Q1,
    Q2,
    RULE_DIMENSION,
    RULE_FIBER_LOW_DEGREE,
    RULE_FIBER_NORMALIZATION,
    RULE_SECTION_VANISHING,
    RingKind,
    XI,
    anticanonical,
    applicable_rules,
    build_presentation,
    chern_leray_polynomial,
    compute_pairing,
    evaluate,
    grading,
    integrate,
    intersect_curve,
    normal_form,
    reduce_mod,
    run_suite,
    validate_spec,
)

SEED = 20240817


def theorem_family():
    """Every Fano spec with n <= 4, r <= 4, m_1 = 1 < m_2, m_i <= 6."""
    family = []
    for n in range(1, 5):
        for r in range(2, 5):
            for rest in itertools.combinations_with_replacement(range(2, 7), r - 1):
                spec = validate_spec(n, (1,) + rest)
                if spec.fano:
                    family.append(spec)
    return family


FAMILY = theorem_family()


def report(criterion, ok, detail):
    print(f"ACCEPT {criterion}: {'pass' if ok else 'FAIL'} - {detail}")
    assert ok, f"{criterion}: {detail}"


def test_family_is_the_expected_size():
    assert len(FAMILY) == 20
    assert all(spec.theorem_hypothesis and spec.fano for spec in FAMILY)


def test_criterion_1_quantum_relation_across_family():
    start = time.perf_counter()
    for spec in FAMILY:
        pres = build_presentation(spec, RingKind.QUANTUM)
        assert normal_form(chern_leray_polynomial(spec), pres) == Q1, spec
    elapsed = time.perf_counter() - start
    report(
        "criterion 1 (quantum relation)",
        elapsed < 10.0,
        f"{len(FAMILY)} instances, exact q1, {elapsed:.2f}s < 10s",
    )


def test_criterion_2_q1_coefficients_across_family():
    for spec in FAMILY:
        pres = build_presentation(spec, RingKind.QUANTUM)
        for i in range(spec.r + 1):
            nf = normal_form(XI ** (spec.r - i) * H**i, pres)
            coeff = reduce_mod(nf, "q2").coefficient(Monomial(0, 0, 1, 0))
            assert coeff == (1 if i == 0 else 0), (spec, i)
    report(
        "criterion 2 (power ladder q1-coefficients)",
        True,
        f"delta pattern on {len(FAMILY)} instances",
    )


def test_criterion_3_golden_instance():
    spec = validate_spec(1, [1, 2])
    pres = build_presentation(spec, RingKind.QUANTUM)
    assert normal_form(XI**2, pres) == 3 * XI * H - 2 * XI * Q2 + 4 * H * Q2 + Q1
    assert normal_form(H**2, pres) == XI * Q2 - 2 * H * Q2
    data = compute_pairing(spec)
    duals = {str(b): d for b, d in zip(data.basis, data.duals)}
    assert duals["1"] == XI * H
    assert duals["h"] == XI - 3 * H
    assert duals["xi"] == H
    assert duals["xi*h"] == ONE
    assert abs(data.determinant) == 1
    g = grading(spec)
    assert (g.deg_q1, g.deg_q2) == (2, 1)
    minus_k = anticanonical(spec)
    assert intersect_curve(minus_k, A1) == 2
    assert intersect_curve(minus_k, A2) == 1
    assert spec.theorem_hypothesis and not spec.qin_ruan_condition
    report("criterion 3 (golden instance)", True, "all frozen values byte-exact")


def test_criterion_4_property_suites_across_family():
    failures = []
    for spec in FAMILY:
        result = run_suite(spec, SEED, cases=200)
        for check in result.checks:
            if check.status == "fail":
                failures.append((str(spec), check.name, check.detail))
            assert check.status != "skipped", (str(spec), check.name)
    report(
        "criterion 4 (seeded property suites, 200 cases each)",
        not failures,
        f"{len(FAMILY)} instances x 11 checks" if not failures else str(failures),
    )


def homogeneous_class(rng, spec, degree):
    monos = [
        Monomial(l, d, 0, 0)
        for l in range(spec.r)
        for d in range(spec.n + 1)
        if l + d == degree
    ]
    if not monos:
        return None
    p = Polynomial([(mono, rng.randint(-3, 3)) for mono in monos])
    return None if p.is_zero else p


def test_criterion_5_invariant_rule_battery():
    rng = random.Random(SEED)
    for spec in FAMILY:
        top = Polynomial.monomial(Monomial(spec.r - 1, spec.n, 0, 0))

        # the normalization value and its presented-ring cross-check
        norm_query = InvariantQuery(
            spec=spec, curve=A1, alpha=XI, beta=XI ** (spec.r - 1), gamma=top
        )
        assert evaluate(norm_query) == KnownValue(1, RULE_FIBER_NORMALIZATION)
        quantum = build_presentation(spec, RingKind.QUANTUM)
        classical = build_presentation(spec, RingKind.CLASSICAL)
        reduced = reduce_mod(normal_form(XI**spec.r, quantum), "q2")
        identity_class = reduced.coefficient_in("q1", 1)
        assert identity_class == ONE
        assert integrate(spec, normal_form(identity_class * top, classical)) == 1

        # queries that pin each zero-returning rule, then a random battery
        queries = [
            norm_query,
            InvariantQuery(spec=spec, curve=A1, alpha=ONE, beta=ONE, gamma=ONE),
            InvariantQuery(
                spec=spec, curve=CurveClass(0, 1), alpha=XI - H, beta=XI, gamma=H
            ),
            InvariantQuery(spec=spec, curve=A1, alpha=XI, beta=H, gamma=top),
        ]
        while len(queries) < 120:
            curve = CurveClass(rng.randint(0, 2), rng.randint(0, 2))
            classes = [
                homogeneous_class(rng, spec, rng.randint(0, spec.dim))
                for _ in range(3)
            ]
            if any(c is None for c in classes):
                continue
            queries.append(
                InvariantQuery(
                    spec=spec, curve=curve,
                    alpha=classes[0], beta=classes[1], gamma=classes[2],
                )
            )

        hits = {name: 0 for name in (
            RULE_DIMENSION,
            RULE_FIBER_NORMALIZATION,
            RULE_FIBER_LOW_DEGREE,
            RULE_SECTION_VANISHING,
        )}
        for query in queries:
            matches = applicable_rules(query)
            assert len({m.value for m in matches}) <= 1, (str(spec), matches)
            answer = evaluate(query)
            if matches:
                assert answer == matches[0]
            else:
                assert not answer.known
            for match in matches:
                hits[match.rule] += 1
                if match.rule != RULE_FIBER_NORMALIZATION:
                    assert match.value == 0
        assert all(count > 0 for count in hits.values()), (str(spec), hits)
    report(
        "criterion 5 (invariant pattern rules)",
        True,
        f"120 consistent queries per instance on {len(FAMILY)} instances",
    )


def test_criterion_6_negative_paths():
    with pytest.raises(NotFanoError):
        build_presentation(validate_spec(1, [1, 3]), RingKind.QUANTUM)
    # the step guard stays silent on every Fano family instance
    for spec in FAMILY:
        pres = build_presentation(spec, RingKind.QUANTUM)
        normal_form(chern_leray_polynomial(spec), pres)  # must not raise
    report(
        "criterion 6 (negative paths)",
        True,
        "NotFano rejection and silent step guard on the Fano family",
    )
