from fractions import Fraction as F

import numpy as np
import pytest

from conftest import match_multisets
from hypermono.arith import IntPolynomial, cyclotomic_poly
from hypermono.levelt import (
    NonMonic,
    ResonantInput,
    companion,
    integral_exponent_polynomial,
    mb_triple,
    roots_polynomial,
    unipotent_mb_triple,
)
from hypermono.zetaring import FieldMatrix, ZetaElem


def test_companion_examples():
    assert companion(IntPolynomial([-1, 1])) == FieldMatrix([[1]])
    assert companion(IntPolynomial([1, -2, 1])) == FieldMatrix([[0, 1], [-1, 2]])
    c5 = companion(cyclotomic_poly(5))
    assert [c5[3, l] for l in range(4)] == [ZetaElem.rational(-1)] * 4
    assert c5[0, 1] == ZetaElem.one()
    with pytest.raises(NonMonic):
        companion(IntPolynomial([1, 0, 2]))
    with pytest.raises(NonMonic):
        companion([1.0, 0.0, 2.0])


def test_integral_exponent_polynomial():
    assert integral_exponent_polynomial([F(1)] * 3) == IntPolynomial([-1, 1]) * IntPolynomial([-1, 1]) * IntPolynomial([-1, 1])
    assert integral_exponent_polynomial([F(1, 3), F(2, 3)]) == cyclotomic_poly(3)
    assert integral_exponent_polynomial([F(1, 5), F(2, 5)]) is None


def test_quintic_triple_rows():
    trip = unipotent_mb_triple([F(1, 5), F(2, 5), F(3, 5), F(4, 5)])
    assert trip.exact
    diff = trip.m1 - FieldMatrix.identity(4)
    assert [diff[0, l].as_fraction() for l in range(4)] == [0, 5, -5, 5]
    for k in range(1, 4):
        for l in range(4):
            assert diff[k, l].is_zero()
    assert trip.m1.rank_of_difference_from_identity() == 1


def test_exact_relations():
    for alphas in ([F(1, 5), F(2, 5), F(3, 5), F(4, 5)], [F(1, 2)] * 3, [F(1, 6), F(5, 6)]):
        trip = unipotent_mb_triple(alphas)
        n = trip.m0.n
        eye = FieldMatrix.identity(n)
        assert trip.m0 * trip.m1 * trip.minf == eye
        assert trip.m1 == trip.m0.inverse() * trip.minf.inverse()
        # spectra through exact characteristic polynomials
        assert [c.as_fraction() for c in trip.m0.charpoly()] == [
            F(c) for c in trip.b_poly.coeffs
        ]
        assert [c.as_fraction() for c in trip.minf.inverse().charpoly()] == [
            F(c) for c in trip.a_poly.coeffs
        ]


def test_numeric_triple():
    alphas, betas = [F(1, 5), F(2, 5)], [F(1), F(1, 2)]
    trip = mb_triple(alphas, betas)
    assert not trip.exact
    eye = np.eye(2)
    assert np.max(np.abs(trip.m0 @ trip.m1 @ trip.minf - eye)) < 1e-12
    assert np.max(np.abs(trip.m1 - np.linalg.inv(trip.m0) @ np.linalg.inv(trip.minf))) < 1e-12
    # eigenvalues of M0 are the beta polynomial roots
    eig = np.linalg.eigvals(trip.m0)
    expect = [np.exp(-2j * np.pi * float(b)) for b in betas]
    assert match_multisets(eig, expect) < 1e-9
    eig_inf = np.linalg.eigvals(trip.minf)
    expect_inf = [np.exp(2j * np.pi * float(a)) for a in alphas]
    assert match_multisets(eig_inf, expect_inf) < 1e-9
    # rank-one reflection
    assert np.linalg.matrix_rank(trip.m1 - eye, tol=1e-10) == 1


def test_resonant_rejected():
    with pytest.raises(ResonantInput):
        mb_triple([F(1, 2), F(1, 3)], [F(1, 2), F(1)])
    with pytest.raises(ResonantInput):
        mb_triple([F(3, 2)], [F(1, 2)])  # collide mod 1


def test_roots_polynomial_matches_exact():
    alphas = [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]
    coeffs = roots_polynomial(alphas)
    exact = cyclotomic_poly(5).coeffs
    assert max(abs(c - e) for c, e in zip(coeffs, exact)) < 1e-12
