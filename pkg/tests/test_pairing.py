import itertools

import pytest

from qbundle import (
    H,
    Monomial,
    NotNormalFormError,
    ONE,
    Polynomial,
    Q1,
    RingKind,
    XI,
    build_presentation,
    compute_pairing,
    dual_basis,
    integrate,
    normal_form,
    pairing_matrix,
    validate_spec,
)

import oracles

GOLDEN = validate_spec(1, [1, 2])


def family():
    specs = []
    for n in range(1, 3):
        for r in range(2, 4):
            for m in itertools.combinations_with_replacement(range(1, 4), r):
                specs.append(validate_spec(n, m))
    return specs


def test_integrate_examples():
    spec = GOLDEN
    top = Polynomial.monomial(Monomial(spec.r - 1, spec.n, 0, 0))
    assert integrate(spec, top) == 1
    classical = build_presentation(spec, RingKind.CLASSICAL)
    nf = normal_form(XI**2, classical)
    assert nf == 3 * XI * H
    assert integrate(spec, nf) == 3
    assert integrate(spec, ONE) == 0  # degree mismatch, n + r - 1 > 0


def test_integrate_rejects_non_normal_forms():
    with pytest.raises(NotNormalFormError):
        integrate(GOLDEN, XI**2)
    with pytest.raises(NotNormalFormError):
        integrate(GOLDEN, H**2)
    with pytest.raises(NotNormalFormError):
        integrate(GOLDEN, Q1)


def test_golden_matrix_and_determinant():
    data = compute_pairing(GOLDEN)
    assert [str(b) for b in data.basis] == ["1", "h", "xi", "xi*h"]
    assert data.matrix == (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 3, 0),
        (1, 0, 0, 0),
    )
    assert abs(data.determinant) == 1
    assert data.determinant == oracles.det([list(row) for row in data.matrix])
    assert pairing_matrix(GOLDEN) == data.matrix


def test_golden_duals():
    data = compute_pairing(GOLDEN)
    by_basis = {str(b): d for b, d in zip(data.basis, data.duals)}
    assert by_basis["1"] == XI * H
    assert by_basis["h"] == XI - 3 * H
    assert by_basis["xi"] == H
    assert by_basis["xi*h"] == ONE
    assert dual_basis(GOLDEN) == data.duals


def test_pairing_properties_across_family():
    for spec in family():
        data = compute_pairing(spec)
        size = len(data.basis)
        assert size == spec.r * (spec.n + 1)
        classical = build_presentation(spec, RingKind.CLASSICAL)

        for i in range(size):
            for j in range(size):
                assert data.matrix[i][j] == data.matrix[j][i]
                bi, bj = data.basis[i], data.basis[j]
                # degree complementarity
                if (bi.e_xi + bi.e_h) + (bj.e_xi + bj.e_h) != spec.dim:
                    assert data.matrix[i][j] == 0
                # independent recomputation of the entry
                product = oracles.mul({tuple(bi): 1}, {tuple(bj): 1})
                reduced = oracles.classical_nf(product, spec.n, spec.m)
                assert data.matrix[i][j] == oracles.integrate(reduced, spec.r, spec.n)

        assert abs(data.determinant) == 1
        assert data.determinant == oracles.det([list(row) for row in data.matrix])

        # biorthogonality straight from the definition
        for i in range(size):
            for j in range(size):
                pairing = integrate(
                    spec,
                    normal_form(
                        Polynomial.monomial(data.basis[i]) * data.duals[j], classical
                    ),
                )
                assert pairing == (1 if i == j else 0)


def test_duals_of_unit_and_top_class():
    for spec in family():
        data = compute_pairing(spec)
        top = Monomial(spec.r - 1, spec.n, 0, 0)
        by_basis = {b: d for b, d in zip(data.basis, data.duals)}
        assert by_basis[Monomial(0, 0, 0, 0)] == Polynomial.monomial(top)
        assert by_basis[top] == ONE
