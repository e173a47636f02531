import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qbundle import (
    A1,
    CurveClass,
    H,
    InvariantQuery,
    KnownValue,
    Monomial,
    Polynomial,
    Q1,
    RULE_DIMENSION,
    RULE_FIBER_LOW_DEGREE,
    RULE_FIBER_NORMALIZATION,
    RULE_SECTION_VANISHING,
    UNKNOWN,
    XI,
    applicable_rules,
    classical_degree,
    divide_by_hyperplane_class,
    evaluate,
    validate_spec,
    virtual_dimension,
)

GOLDEN = validate_spec(1, [1, 2])


def normalization_query(spec):
    return InvariantQuery(
        spec=spec,
        curve=A1,
        alpha=XI,
        beta=XI ** (spec.r - 1),
        gamma=Polynomial.monomial(Monomial(spec.r - 1, spec.n, 0, 0)),
    )


def test_normalization_rule():
    for spec in (GOLDEN, validate_spec(2, [1, 1, 1]), validate_spec(3, [1, 2, 2])):
        assert evaluate(normalization_query(spec)) == KnownValue(
            1, RULE_FIBER_NORMALIZATION
        )


def test_low_degree_rule():
    # degree sum 1 + 1 + 2 matches the fiber-line virtual dimension 4
    query = InvariantQuery(
        spec=GOLDEN, curve=A1, alpha=XI, beta=H, gamma=XI * H
    )
    assert evaluate(query) == KnownValue(0, RULE_FIBER_LOW_DEGREE)


def test_section_vanishing_rule_on_fano_spec():
    query = InvariantQuery(
        spec=GOLDEN, curve=CurveClass(0, 1), alpha=XI - H, beta=XI, gamma=H
    )
    assert evaluate(query) == KnownValue(0, RULE_SECTION_VANISHING)


def test_section_vanishing_rule_with_double_section_class():
    # needs r >= 3 and a section weight of zero for the dimension filter to
    # stay silent, i.e. a non-Fano spec with c1 = n + 1 + r
    spec = validate_spec(2, [1, 2, 3])
    assert virtual_dimension(spec, CurveClass(0, 2)) == 4
    query = InvariantQuery(
        spec=spec,
        curve=CurveClass(0, 2),
        alpha=(XI - H) * XI,
        beta=H,
        gamma=XI,
    )
    assert evaluate(query) == KnownValue(0, RULE_SECTION_VANISHING)


def test_dimension_rule():
    query = InvariantQuery(
        spec=GOLDEN, curve=CurveClass(0, 1), alpha=XI, beta=XI, gamma=XI * H
    )
    assert evaluate(query) == KnownValue(0, RULE_DIMENSION)


def test_unknown_fall_through():
    query = InvariantQuery(
        spec=GOLDEN, curve=CurveClass(0, 1), alpha=XI, beta=XI, gamma=H
    )
    assert evaluate(query) == UNKNOWN
    assert not evaluate(query).known


def test_normalization_degrees_always_match_the_dimension_filter():
    for n in range(1, 5):
        for r in range(2, 5):
            for m in itertools.combinations_with_replacement(range(1, 4), r):
                spec = validate_spec(n, m)
                degree_sum = 1 + (spec.r - 1) + (spec.r - 1 + spec.n)
                assert degree_sum == virtual_dimension(spec, CurveClass(1, 0))


def test_query_validation():
    with pytest.raises(ValueError):
        InvariantQuery(spec=GOLDEN, curve=A1, alpha=XI + XI * H, beta=XI, gamma=XI)
    with pytest.raises(ValueError):
        InvariantQuery(spec=GOLDEN, curve=A1, alpha=Q1, beta=XI, gamma=XI)
    with pytest.raises(ValueError):
        InvariantQuery(spec=GOLDEN, curve=A1, alpha=XI**2, beta=XI, gamma=XI)
    with pytest.raises(ValueError):
        InvariantQuery(
            spec=GOLDEN, curve=A1, alpha=Polynomial.zero(), beta=XI, gamma=XI
        )


def test_known_value_invariants():
    with pytest.raises(ValueError):
        KnownValue(1, None)
    with pytest.raises(ValueError):
        KnownValue(None, RULE_DIMENSION)
    with pytest.raises(ValueError):
        KnownValue(0, "made-up")


def test_classical_degree():
    assert classical_degree(XI * H) == 2
    assert classical_degree(3 * XI - 5 * H) == 1
    with pytest.raises(ValueError):
        classical_degree(XI + XI * H)


q_free_polys = st.dictionaries(
    st.builds(Monomial, st.integers(0, 4), st.integers(0, 4)),
    st.integers(-9, 9),
    max_size=5,
).map(Polynomial)


@given(q_free_polys)
def test_hyperplane_division_round_trip(p):
    quotient, remainder = divide_by_hyperplane_class(p)
    assert quotient * (XI - H) + remainder == p
    assert all(mono.e_xi == 0 for mono in remainder.terms)


@given(q_free_polys)
def test_hyperplane_division_detects_multiples(p):
    multiple = (XI - H) * p
    quotient, remainder = divide_by_hyperplane_class(multiple)
    assert remainder.is_zero
    assert quotient == p


def test_hyperplane_division_rejects_q_terms():
    with pytest.raises(ValueError):
        divide_by_hyperplane_class(XI * Q1)


def homogeneous_classes(rng, spec, degree):
    monos = [
        Monomial(l, d, 0, 0)
        for l in range(spec.r)
        for d in range(spec.n + 1)
        if l + d == degree
    ]
    if not monos:
        return None
    terms = [(mono, rng.randint(-3, 3)) for mono in monos]
    p = Polynomial(terms)
    return p if not p.is_zero else None


def test_rule_battery_is_consistent():
    rng = random.Random(99)
    for spec in (GOLDEN, validate_spec(2, [1, 1, 2]), validate_spec(2, [1, 2, 3])):
        queries = 0
        while queries < 150:
            curve = CurveClass(rng.randint(0, 2), rng.randint(0, 2))
            classes = []
            for _ in range(3):
                p = homogeneous_classes(rng, spec, rng.randint(0, spec.dim))
                if p is not None:
                    classes.append(p)
            if len(classes) < 3:
                continue
            query = InvariantQuery(
                spec=spec, curve=curve, alpha=classes[0], beta=classes[1], gamma=classes[2]
            )
            queries += 1
            matches = applicable_rules(query)
            values = {match.value for match in matches}
            assert len(values) <= 1, f"rules disagree on {query}: {matches}"
            answer = evaluate(query)
            if matches:
                assert answer == matches[0]
            else:
                assert answer == UNKNOWN
