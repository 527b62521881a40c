from fractions import Fraction as F

import pytest

from conftest import identity_case_alphas
from hypermono.cyclo import expand_polynomial, quotient_form
from hypermono.unipotent import (
    BASES,
    MonodromyTriple,
    UnipotentProblem,
    c_coeffs,
    lambda_conjugator,
    m0_unipotent,
    m1_over_C,
    m1_via_T,
    m_infinity,
    monodromy_triple,
    q_matrix,
    t_matrix,
    to_basis,
    u_vector,
    v_jet,
    v_vectors,
    w_form,
    w_form_report,
)
from hypermono.zetaring import FieldMatrix, ZetaElem

QUINTIC = (F(1, 5), F(2, 5), F(3, 5), F(4, 5))
G3 = ZetaElem.generator("g3")


def test_m0_examples():
    assert m0_unipotent(2) == FieldMatrix([[1, 1], [0, 1]])
    m4 = m0_unipotent(4)
    assert [m4[0, l] for l in range(4)] == [
        ZetaElem.one(),
        ZetaElem.one(),
        ZetaElem.rational(F(1, 2)),
        ZetaElem.rational(F(1, 6)),
    ]
    nil = m4 - FieldMatrix.identity(4)
    assert (nil * nil * nil * nil) == FieldMatrix.zero(4)


def test_c_coeffs_examples():
    q = quotient_form(QUINTIC)
    assert c_coeffs(q, 4) == [F(0), F(-5, 6), F(0), F(5)]
    q2 = quotient_form([F(1, 3), F(2, 3)])
    assert c_coeffs(q2, 2) == [F(0), F(3)]
    q3 = quotient_form([F(1, 2)] * 3)
    assert c_coeffs(q3, 3) == [F(-1), F(0), F(8)]


def test_v_vectors_quintic():
    q = quotient_form(QUINTIC)
    v_minus, v_plus = v_vectors(q, 4)
    assert v_minus == [200 * G3, ZetaElem.rational(F(25, 12)), ZetaElem.zero(), ZetaElem.rational(5)]
    assert v_plus == [ZetaElem.one(), ZetaElem.zero(), ZetaElem.rational(F(5, 12)), -40 * G3]


def test_v_vectors_n2():
    for alphas in [(F(1, 2), F(1, 2)), (F(1, 3), F(2, 3)), (F(1, 6), F(5, 6))]:
        q = quotient_form(alphas)
        from hypermono.cyclo import compute_d

        d = compute_d(q)
        v_minus, v_plus = v_vectors(q, 2)
        assert v_minus == [ZetaElem.zero(), ZetaElem.rational(d)]
        assert v_plus == [ZetaElem.one(), ZetaElem.zero()]


def test_m1_n2_and_n3_displays():
    assert m1_over_C(quotient_form([F(1, 2)] * 2), 2) == FieldMatrix(
        [[1, 0], [-4, 1]]
    )
    assert m1_over_C(quotient_form([F(1, 2)] * 3), 3) == FieldMatrix(
        [[0, 0, F(-1, 8)], [0, 1, 0], [-8, 0, 0]]
    )


def test_m1_quintic_entries():
    m1 = m1_over_C(quotient_form(QUINTIC), 4)
    a = -200 * G3
    assert m1[0, 0] == ZetaElem.one() + a
    assert m1[3, 0] == ZetaElem.rational(-5)
    assert m1[0, 3] == a * a / 5
    assert m1[3, 3] == ZetaElem.one() - a


def test_transvection_and_reflection_properties():
    # Parity matters: sum(alpha) = n/2 forces det M1 = (-1)^n, so the
    # rank-one factor pairing v+.v- is 0 for even n (transvection) and
    # 2 for odd n (involution); rank(M1 - I) = 1 always.
    for alphas in identity_case_alphas(extra=4):
        q = quotient_form(alphas)
        n = q.n
        m1 = m1_over_C(q, n)
        diff = m1 - FieldMatrix.identity(n)
        pairing = 0 if n % 2 == 0 else 2
        # M1 - I = -outer(v-, v+), so its square is -(v+.v-) times itself
        assert (diff * diff) == diff * ZetaElem.rational(-pairing)
        assert m1.rank_of_difference_from_identity() == 1
        assert m1.det() == ZetaElem.rational((-1) ** n)
        v_minus, v_plus = v_vectors(q, n)
        dot = sum((a * b for a, b in zip(v_plus, v_minus)), ZetaElem.zero())
        assert dot == ZetaElem.rational(pairing)
        if n % 2 == 1:
            assert m1 * m1 == FieldMatrix.identity(n)


def test_group_relation_and_charpoly():
    for alphas in identity_case_alphas(extra=4):
        q = quotient_form(alphas)
        n = q.n
        m0 = m0_unipotent(n)
        m1 = m1_over_C(q, n)
        minf = m_infinity(q, n)
        assert m0 * m1 * minf == FieldMatrix.identity(n)
        # det Minf = prod e^(2 pi i alpha) = (-1)^n since sum(alpha) = n/2
        assert minf.det() == ZetaElem.rational((-1) ** n)
        cs = minf.inverse().charpoly()
        poly = expand_polynomial(q)
        assert [c.as_fraction() for c in cs] == [F(c) for c in poly.coeffs]


def test_minf_trace_n2():
    # companion comparison: trace of Minf is -A_1 of (X+1)^2 = X^2+2X+1
    minf = m_infinity(quotient_form([F(1, 2)] * 2), 2)
    assert minf.trace() == ZetaElem.rational(-2)


def test_q_matrix_n2():
    assert q_matrix(2) == FieldMatrix([[1, -1], [1, 0]])


def test_q_matrix_zero_power_convention():
    # row k = n/2 has (0)^l entries: 0^0 reads as 1
    m = q_matrix(4)
    assert m[2, 0] == ZetaElem.one()
    assert m[2, 1] == ZetaElem.zero()


def test_route_equivalence():
    for alphas in identity_case_alphas(extra=4):
        q = quotient_form(alphas)
        assert m1_via_T(q, q.n) == m1_over_C(q, q.n)


def test_route_equivalence_raw_basis():
    # the transformation route with the unnormalized jet reproduces the
    # lambda-bearing conjugated reflection
    for alphas in (QUINTIC, (F(1, 2), F(1, 2)), (F(1, 2),) * 3):
        triple = monodromy_triple(alphas)
        raw = to_basis(triple, "frobenius")
        q, n = triple.problem.q, triple.problem.n
        assert m1_via_T(q, n, normalized=False) == raw.m1


def test_u_proportional_to_v_minus():
    # the transformation-route column agrees with the partition-sum
    # column up to one scalar
    q = quotient_form(QUINTIC)
    u = u_vector(t_matrix(q, 4))
    v_minus, _ = v_vectors(q, 4)
    scale = None
    for uu, vv in zip(u, v_minus):
        if vv.is_zero():
            assert uu.is_zero()
            continue
        if scale is None and uu.is_rational() and vv.is_rational():
            scale = uu.as_fraction() / vv.as_fraction()
    assert scale is not None
    for uu, vv in zip(u, v_minus):
        assert uu == vv * scale


def test_v_jet_constant_term():
    # (-1)^n (prod b / prod a) V(0) = 1
    from hypermono.cyclo import compute_d

    for alphas in [QUINTIC, (F(1, 2), F(1, 2)), (F(1, 2),) * 3]:
        q = quotient_form(alphas)
        n = q.n
        jet = v_jet(q, n)
        d = compute_d(q)
        sign = 1 if n % 2 == 0 else -1
        assert jet[0] * sign / d == ZetaElem.one()


def test_w_form_shape_and_report():
    q = quotient_form([F(1, 2)] * 2)
    wf = w_form(q, 2)
    m0 = m0_unipotent(2)
    m1 = m1_over_C(q, 2)
    assert wf == m1 * m0
    reports = [w_form_report(quotient_form(a), quotient_form(a).n) for a in identity_case_alphas(extra=2)]
    assert all(r == reports[0] for r in reports)
    assert reports[0]["M1*M0"] is True


def test_to_basis_identity_and_round_trip():
    triple = monodromy_triple(QUINTIC)
    assert to_basis(triple, "normalized-frobenius") is triple
    for basis in BASES:
        there = to_basis(triple, basis)
        back = to_basis(there, "normalized-frobenius")
        assert back.m0 == triple.m0
        assert back.m1 == triple.m1
        assert back.minf == triple.minf


def test_to_basis_raw_n2():
    triple = monodromy_triple((F(1, 2), F(1, 2)))
    raw = to_basis(triple, "frobenius")
    lam = ZetaElem.generator("lambda")
    assert raw.m1 == FieldMatrix(
        [[1 - 4 * lam, 4 * lam * lam], [ZetaElem.rational(-4), 1 + 4 * lam]]
    )
    assert raw.m0 == triple.m0  # exp(N) commutes with the conjugator
    assert raw.m0 * raw.m1 * raw.minf == FieldMatrix.identity(2)


def test_lambda_conjugator_is_exp():
    lam = ZetaElem.generator("lambda")
    m = lambda_conjugator(3)
    assert m[0, 1] == lam and m[0, 2] == lam * lam / 2
    assert m * m.inverse() == FieldMatrix.identity(3)


def test_generator_support_bound():
    for alphas in identity_case_alphas():
        triple = monodromy_triple(alphas)
        n = triple.problem.n
        allowed = {f"g{k}" for k in range(3, n, 2)}
        for m in triple.matrices().values():
            assert m.support() <= allowed


def test_problem_invariants():
    prob = UnipotentProblem.from_alphas(QUINTIC)
    assert prob.n == 4
    assert prob.C == 3125
    assert isinstance(monodromy_triple(QUINTIC), MonodromyTriple)
    with pytest.raises(ValueError):
        to_basis(monodromy_triple(QUINTIC), "no-such-basis")
