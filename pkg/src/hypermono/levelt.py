"""Companion-form monodromy triples in the contour-integral basis,
built from the local exponents alone.

The matrix around 0 is the companion matrix of the polynomial with roots
e^(-2 pi i beta_k); the matrix around the finite singularity differs from
the identity in its first row only; the matrix around infinity is pinned
by the group relation.  When both exponent multisets are closed under
Galois conjugation the polynomials are integral and everything is exact;
otherwise the triple is computed in complex doubles.
"""

import cmath
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .arith import IntPolynomial, cyclotomic_poly
from .zetaring import FieldMatrix


class NonMonic(ValueError):
    """Companion form needs a monic polynomial."""


class ResonantInput(ValueError):
    """Some alpha collides with some beta mod 1."""


def _mod1(x: Fraction) -> Fraction:
    return x - math.floor(x)


def integral_exponent_polynomial(thetas) -> IntPolynomial | None:
    """The monic integer polynomial with roots e^(-2 pi i theta_k), when
    the multiset is closed under Galois conjugation; None otherwise.

    theta = 0 mod 1 (root 1) is allowed here, unlike in the
    gamma-quotient pipeline.
    """
    by_den: dict[int, Counter] = {}
    for t in thetas:
        t = _mod1(Fraction(t))
        by_den.setdefault(t.denominator, Counter())[t.numerator] += 1
    sides: Counter = Counter()
    for m, counts in by_den.items():
        required = [c for c in range(m) if math.gcd(c, m) == 1] or [0]
        mult = counts[required[0]]
        if mult == 0 or any(counts[c] != mult for c in required):
            return None
        if sum(counts.values()) != mult * len(required):
            return None
        sides[m] += mult
    poly = IntPolynomial([1])
    for m, mult in sides.items():
        for _ in range(mult):
            poly = poly * cyclotomic_poly(m)
    return poly


def companion(poly) -> FieldMatrix | np.ndarray:
    """Companion matrix with the superdiagonal of ones and the negated
    coefficients along the bottom row (constant coefficient leftmost).

    Accepts an IntPolynomial (exact result) or a sequence of complex
    coefficients in ascending degree (complex result).
    """
    if isinstance(poly, IntPolynomial):
        if not poly.is_monic():
            raise NonMonic("companion form needs a monic polynomial")
        n = poly.degree
        rows = [[1 if l == k + 1 else 0 for l in range(n)] for k in range(n - 1)]
        rows.append([-poly.coeffs[l] for l in range(n)])
        return FieldMatrix(rows)
    coeffs = [complex(c) for c in poly]
    if abs(coeffs[-1] - 1) > 1e-12:
        raise NonMonic("companion form needs a monic polynomial")
    n = len(coeffs) - 1
    out = np.zeros((n, n), dtype=complex)
    for k in range(n - 1):
        out[k, k + 1] = 1.0
    out[n - 1, :] = [-c for c in coeffs[:n]]
    return out


def roots_polynomial(thetas) -> list[complex]:
    """Monic complex polynomial with roots e^(-2 pi i theta), ascending
    coefficients."""
    coeffs = [1.0 + 0j]
    for t in thetas:
        root = cmath.exp(-2j * cmath.pi * float(t))
        new = [0j] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= root * c
        coeffs = new
    return coeffs


def check_nonresonant_pair(alphas, betas, tol: float = 1e-9):
    """Reject alpha/beta collisions mod 1 (separation below tol for
    inexact inputs, exact equality for rationals)."""
    for a in alphas:
        for b in betas:
            d = (Fraction(a) - Fraction(b)) % 1
            if d == 0:
                raise ResonantInput(f"{a} equals {b} mod 1")
            if min(float(d), 1.0 - float(d)) < tol:
                raise ResonantInput(f"{a} is within {tol} of {b} mod 1")


@dataclass(frozen=True)
class CompanionTriple:
    """Triple in the contour-integral basis plus the polynomials that
    generated it.  Exact flavor: FieldMatrix; numeric flavor: ndarray."""

    m0: object
    m1: object
    minf: object
    a_poly: object
    b_poly: object
    exact: bool


def mb_triple(alphas, betas) -> CompanionTriple:
    """Monodromy triple in the contour-integral basis.

    M0 is the companion matrix of the beta polynomial; M1 minus the
    identity is supported on the first row with entries
    (A_{n-k} - B_{n-k})/B_n; Minf has top row -A_{n-1-l}/A_n (with
    A_0 = 1) over a shifted identity.
    """
    alphas = list(alphas)
    betas = list(betas)
    if len(alphas) != len(betas):
        raise ValueError("exponent lists must have equal length")
    check_nonresonant_pair(alphas, betas)
    n = len(alphas)
    a_int = integral_exponent_polynomial(alphas)
    b_int = integral_exponent_polynomial(betas)
    if a_int is not None and b_int is not None:
        A = list(a_int.coeffs)  # A[k] multiplies X^k; A[n] = 1
        B = list(b_int.coeffs)
        Bn = Fraction(B[0])
        An = Fraction(A[0])
        m0 = companion(b_int)
        first = [
            (1 if l == 0 else 0) + Fraction(A[l] - B[l], 1) / Bn for l in range(n)
        ]
        m1 = FieldMatrix(
            [first]
            + [[1 if l == k else 0 for l in range(n)] for k in range(1, n)]
        )
        top = [-Fraction(A[l + 1], 1) / An for l in range(n)]
        minf = FieldMatrix(
            [top]
            + [[1 if l == k - 1 else 0 for l in range(n)] for k in range(1, n)]
        )
        return CompanionTriple(m0, m1, minf, a_int, b_int, True)
    A = roots_polynomial(alphas)
    B = roots_polynomial(betas)
    if abs(B[0]) < 1e-12:
        raise ValueError("beta polynomial has vanishing constant term")
    m0 = companion(B)
    m1 = np.eye(n, dtype=complex)
    m1[0, :] += np.array([(A[l] - B[l]) / B[0] for l in range(n)])
    minf = np.zeros((n, n), dtype=complex)
    minf[0, :] = [-A[l + 1] / A[0] for l in range(n)]
    for k in range(1, n):
        minf[k, k - 1] = 1.0
    return CompanionTriple(m0, m1, minf, A, B, False)


def unipotent_mb_triple(alphas) -> CompanionTriple:
    """Exact contour-basis triple for the maximally unipotent case: all
    beta exponents are 1, so the beta polynomial is (X - 1)^n."""
    alphas = list(alphas)
    return mb_triple(alphas, [Fraction(1)] * len(alphas))
