"""Exact monodromy matrices for the maximally unipotent case (all local
exponents at 0 equal to 1), in three bases:

* ``normalized-frobenius``: the log-ladder basis of the rescaled equation
  whose finite singularity sits at 1/C; entries live in Q[g3, g5, ...].
* ``frobenius``: the log-ladder basis of the unrescaled equation; entries
  pick up the extra generator lambda = log(C)/(2 pi i).
* ``mellin-barnes``: the contour-integral basis, in which the matrices
  are integral companion/reflection normal forms.

Two independent constructions of the reflection about the finite
singularity are provided: the partition-sum vectors (``m1_over_C``) and
the transformation-matrix route (``m1_via_T``); they must agree exactly.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from . import cyclo
from .arith import multiplicity_M, partitions
from .zetaring import (
    FieldMatrix,
    Jet,
    ZetaElem,
    outer,
    phiC_jet,
    toeplitz,
    zeta_symbol,
)

BASES = ("normalized-frobenius", "frobenius", "mellin-barnes")


@dataclass(frozen=True)
class UnipotentProblem:
    alphas: tuple[Fraction, ...]
    q: cyclo.QuotientForm
    n: int
    C: int

    @classmethod
    def from_alphas(cls, alphas) -> "UnipotentProblem":
        alphas = cyclo.normalize_alphas(alphas)
        q = cyclo.quotient_form(alphas)
        return cls(alphas, q, q.n, cyclo.compute_C(q))


@dataclass(frozen=True)
class MonodromyTriple:
    """Matrices around 0, around the finite singularity and around
    infinity; their product in this order is the identity."""

    m0: FieldMatrix
    m1: FieldMatrix
    minf: FieldMatrix
    basis: str
    problem: UnipotentProblem

    def matrices(self):
        return {"M0": self.m0, "M1": self.m1, "Minf": self.minf}


def m0_unipotent(n: int) -> FieldMatrix:
    """exp(N) with N the superdiagonal-ones nilpotent: entry (k, l) is
    1/(l-k)! for l >= k."""
    return FieldMatrix(
        [
            [
                Fraction(1, math.factorial(l - k)) if l >= k else 0
                for l in range(n)
            ]
            for k in range(n)
        ]
    )


def c_coeffs(q: cyclo.QuotientForm, n: int) -> list[Fraction]:
    """c_j = d/(n-1)! * j! * [z^j] prod_{m=1}^{n-1} (z - m + n/2)."""
    poly = [Fraction(1)]
    for m in range(1, n):
        shift = Fraction(n, 2) - m
        new = [Fraction(0)] * (len(poly) + 1)
        for i, c in enumerate(poly):
            new[i + 1] += c
            new[i] += shift * c
        poly = new
    d = cyclo.compute_d(q)
    scale = d / math.factorial(n - 1)
    out = []
    for j in range(n):
        coeff = poly[j] if j < len(poly) else Fraction(0)
        out.append(scale * math.factorial(j) * coeff)
    return out


def _partition_sum(q: cyclo.QuotientForm, sign: int, j: int) -> ZetaElem:
    """sum over partitions p of j of c_p^(sign) zeta(p) / ((2 pi i)^p M(p)),
    with both c and the zeta ratio extended multiplicatively over parts."""
    acc = ZetaElem.zero()
    for p in partitions(j):
        term = ZetaElem.one()
        for part in p:
            term = term * (cyclo.c_pm(q, sign, part) * zeta_symbol(part))
            if term.is_zero():
                break
        if not term.is_zero():
            acc = acc + term / multiplicity_M(p)
    return acc


def v_vectors(q: cyclo.QuotientForm, n: int):
    """The two coefficient vectors of the rank-one reflection factor:

    v_minus[j] = sum_{l=0}^{n-1-j} c_{l+j} * (partition sum with c^-, order l)
    v_plus[j]  = partition sum with c^+, order j
    """
    c = c_coeffs(q, n)
    w = [_partition_sum(q, -1, l) for l in range(n)]
    v_minus = []
    for j in range(n):
        acc = ZetaElem.zero()
        for l in range(n - j):
            acc = acc + c[l + j] * w[l]
        v_minus.append(acc)
    v_plus = [_partition_sum(q, +1, j) for j in range(n)]
    return v_minus, v_plus


def m1_over_C(q: cyclo.QuotientForm, n: int) -> FieldMatrix:
    """Reflection about the finite singularity: I - outer(v_minus, v_plus)."""
    v_minus, v_plus = v_vectors(q, n)
    return FieldMatrix.identity(n) - outer(v_minus, v_plus)


def m_infinity(q: cyclo.QuotientForm, n: int) -> FieldMatrix:
    """Monodromy at infinity from the group relation M0 * M1 * Minf = I."""
    return (m0_unipotent(n) * m1_over_C(q, n)).inverse()


def q_matrix(n: int) -> FieldMatrix:
    """Vandermonde-type matrix with entries (k - n/2)^l / l! for
    k, l = 0..n-1; 0^0 is read as 1."""
    rows = []
    for k in range(n):
        base = Fraction(2 * k - n, 2)
        rows.append(
            [base**l / math.factorial(l) for l in range(n)]
        )
    return FieldMatrix(rows)


def phi_jet(q: cyclo.QuotientForm, n: int, normalized: bool = True) -> Jet:
    """Jet of the gamma-quotient function; the unnormalized flavor
    carries the extra factor C^(-s), i.e. exp(-lambda x)."""
    jet = phiC_jet(q, n)
    if not normalized:
        lam = ZetaElem.generator("lambda")
        jet = jet * Jet.exp_linear(-lam, n)
    return jet


def t_matrix(q: cyclo.QuotientForm, n: int, normalized: bool = True) -> FieldMatrix:
    """Transformation matrix from the contour-integral basis to the
    log-ladder basis: Q times the Toeplitz matrix of the phi jet."""
    return q_matrix(n) * toeplitz(phi_jet(q, n, normalized))


def u_vector(t: FieldMatrix) -> list[ZetaElem]:
    """First column of the inverse transformation matrix."""
    tinv = t.inverse()
    return [tinv[j, 0] for j in range(t.n)]


def exponent_polynomial_at_exp_jet(q: cyclo.QuotientForm, n: int) -> Jet:
    """Jet of A(e^x) where A is the expanded quotient-form polynomial:
    coefficient j is sum_k A_k k^j / j!."""
    poly = cyclo.expand_polynomial(q)
    out = []
    for j in range(n):
        acc = Fraction(0)
        for k, a in enumerate(poly.coeffs):
            if a:
                acc += Fraction(a * k**j, math.factorial(j))
        out.append(ZetaElem.rational(acc))
    return Jet(out)


def v_jet(q: cyclo.QuotientForm, n: int, normalized: bool = True) -> Jet:
    """Jet of the reflection row function
    (-1)^n phi(s) e^(-pi i n s) prod_k (e^(2 pi i s) - e^(-2 pi i alpha_k)),
    assembled exactly as phi-jet * exp(-n x / 2) * A(e^x)."""
    sign = 1 if n % 2 == 0 else -1
    jet = phi_jet(q, n, normalized)
    jet = jet * Jet.exp_linear(Fraction(-n, 2), n)
    jet = jet * exponent_polynomial_at_exp_jet(q, n)
    return jet * ZetaElem.rational(sign)


def m1_via_T(q: cyclo.QuotientForm, n: int, normalized: bool = True) -> FieldMatrix:
    """Independent route to the same reflection: I + outer(u, v) with u
    the first column of T^-1 and v the jet of the reflection row
    function."""
    t = t_matrix(q, n, normalized)
    u = u_vector(t)
    v = list(v_jet(q, n, normalized).coeffs)
    return FieldMatrix.identity(n) + outer(u, v)


def w_form(q: cyclo.QuotientForm, n: int) -> FieldMatrix:
    """Candidate matrix exp(N) + outer(u, w), where the w jet multiplies
    the reflection row jet by e^(2 pi i s) and by the sign
    (-1)^n e^(-2 pi i sum(alpha)); since sum(alpha) = n/2 the sign
    factors cancel to +1."""
    t = t_matrix(q, n, normalized=True)
    u = u_vector(t)
    w = v_jet(q, n, normalized=True) * Jet.exp_linear(Fraction(1), n)
    return m0_unipotent(n) + outer(u, list(w.coeffs))


def w_form_report(q: cyclo.QuotientForm, n: int) -> dict[str, bool]:
    """Compare the w-form matrix against the group elements it could
    plausibly represent; returns name -> exact-equality flag."""
    wf = w_form(q, n)
    m0 = m0_unipotent(n)
    m1 = m1_over_C(q, n)
    minf_inv = m_infinity(q, n).inverse()
    return {
        "M1": wf == m1,
        "M0*M1": wf == m0 * m1,
        "M1*M0": wf == m1 * m0,
        "Minf^-1": wf == minf_inv,
    }


def lambda_conjugator(n: int) -> FieldMatrix:
    """Toeplitz matrix of exp(lambda x), i.e. C^(N/(2 pi i))."""
    return toeplitz(Jet.exp_linear(ZetaElem.generator("lambda"), n))


def monodromy_triple(alphas, basis: str = "normalized-frobenius") -> MonodromyTriple:
    """Build the full triple in the requested basis."""
    prob = UnipotentProblem.from_alphas(alphas)
    triple = MonodromyTriple(
        m0=m0_unipotent(prob.n),
        m1=m1_over_C(prob.q, prob.n),
        minf=m_infinity(prob.q, prob.n),
        basis="normalized-frobenius",
        problem=prob,
    )
    return to_basis(triple, basis)


def _conjugate(triple: MonodromyTriple, s: FieldMatrix, basis: str) -> MonodromyTriple:
    sinv = s.inverse()
    return MonodromyTriple(
        m0=s * triple.m0 * sinv,
        m1=s * triple.m1 * sinv,
        minf=s * triple.minf * sinv,
        basis=basis,
        problem=triple.problem,
    )


def to_basis(triple: MonodromyTriple, to: str) -> MonodromyTriple:
    """Simultaneous conjugation between bases.

    With the column conventions used throughout (integral column equals
    T times log-ladder column, unnormalized ladder equals C^(N/2 pi i)
    times normalized ladder) the maps out of the normalized basis are
    M -> Lambda M Lambda^-1 and M -> T_C M T_C^-1.
    """
    if to not in BASES:
        raise ValueError(f"unknown basis {to!r}")
    if triple.basis == to:
        return triple
    prob = triple.problem
    # route everything through the normalized basis
    if triple.basis == "frobenius":
        norm = _conjugate(
            triple, lambda_conjugator(prob.n).inverse(), "normalized-frobenius"
        )
    elif triple.basis == "mellin-barnes":
        norm = _conjugate(
            triple,
            t_matrix(prob.q, prob.n, normalized=True).inverse(),
            "normalized-frobenius",
        )
    else:
        norm = triple
    if to == "normalized-frobenius":
        return norm
    if to == "frobenius":
        return _conjugate(norm, lambda_conjugator(prob.n), to)
    return _conjugate(norm, t_matrix(prob.q, prob.n, normalized=True), to)
