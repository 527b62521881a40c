"""Complex-double monodromy matrices in the power-function Frobenius
basis for the non-resonant case (beta exponents pairwise distinct mod 1
and disjoint from the alpha exponents mod 1).

The matrix around 0 is diagonal; the matrix around 1 is an explicit
rank-one perturbation of the identity built from sine products; the
matrix around infinity follows from the closed-form inverse of a
rank-one perturbation.  The Vandermonde-times-diagonal factorization
connects this basis to the contour-integral basis.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .levelt import ResonantInput, check_nonresonant_pair


class TraceMinusOne(ArithmeticError):
    """Rank-one update with trace -1: the perturbed identity is singular."""


def _mod1_float(x: float) -> float:
    return x - math.floor(x)


def _check_distinct_mod1(values, tol: float = 1e-9, label: str = "exponents"):
    vs = [float(Fraction(v)) if isinstance(v, (Fraction, int)) else float(v) for v in values]
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            d = _mod1_float(vs[i] - vs[j])
            if min(d, 1.0 - d) < tol:
                raise ResonantInput(f"{label} {vs[i]} and {vs[j]} collide mod 1")


@dataclass(frozen=True)
class NonresonantProblem:
    alphas: tuple[Fraction, ...]
    betas: tuple[Fraction, ...]

    def __post_init__(self):
        _check_distinct_mod1(self.betas, label="beta exponents")
        check_nonresonant_pair(self.alphas, self.betas)

    @classmethod
    def make(cls, alphas, betas) -> "NonresonantProblem":
        return cls(
            tuple(Fraction(a) for a in alphas),
            tuple(Fraction(b) for b in betas),
        )

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def c_constant(self) -> complex:
        """2 i (-1)^n e^(pi i sum(beta - alpha))."""
        n = self.n
        s = sum(float(b - a) for a, b in zip(self.alphas, self.betas))
        return 2j * (-1) ** n * cmath.exp(1j * cmath.pi * s)


def _sine_ratio(problem: NonresonantProblem, l: int) -> complex:
    """prod_m sin(pi (beta_l - alpha_m)) / sin(pi (beta_l - beta_m)),
    the m = l factor of the denominator read as 1."""
    bl = float(problem.betas[l])
    num = 1.0 + 0j
    for a in problem.alphas:
        num *= cmath.sin(cmath.pi * (bl - float(a)))
    den = 1.0 + 0j
    for m, b in enumerate(problem.betas):
        if m != l:
            den *= cmath.sin(cmath.pi * (bl - float(b)))
    return num / den


def _gamma_ratio(problem: NonresonantProblem, l: int) -> float:
    """prod_p Gamma(alpha_p - beta_l + 1) / Gamma(beta_p - beta_l + 1);
    all arguments lie in (0, 2), so this is a positive real."""
    bl = float(problem.betas[l])
    out = 1.0
    for a in problem.alphas:
        out *= math.gamma(float(a) - bl + 1.0)
    for b in problem.betas:
        out /= math.gamma(float(b) - bl + 1.0)
    return out


def m0_diag(betas) -> np.ndarray:
    """diag(e^(-2 pi i beta_k))."""
    return np.diag([cmath.exp(-2j * cmath.pi * float(b)) for b in betas])


def _reflection_vectors(problem: NonresonantProblem):
    """Row and column vectors of the rank-one part of the matrix around 1,
    normalized to the power-function basis f_l = z^(1-beta_l)(1 + O(z)):

    M1 - I = outer(u, v),  u_k = ct / G_k,  v_l = G_l * sine ratio(l),

    with G the gamma ratio above and ct = 2i e^(pi i sum(beta - alpha)).
    The gamma ratios drop out of the trace, so 1 + tr(M1 - I) is the
    ratio of the constant polynomial coefficients, as it must be.
    """
    n = problem.n
    ct = (-1) ** n * problem.c_constant  # = 2i e^(pi i sum(beta - alpha))
    u = np.array([ct / _gamma_ratio(problem, k) for k in range(n)])
    v = np.array(
        [_gamma_ratio(problem, l) * _sine_ratio(problem, l) for l in range(n)]
    )
    return u, v


def m1_sine(problem: NonresonantProblem) -> np.ndarray:
    """Monodromy around 1: the identity plus the explicit rank-one sine
    and gamma-ratio outer product."""
    u, v = _reflection_vectors(problem)
    return np.eye(problem.n, dtype=complex) + np.outer(u, v)


def m_infinity_formula(problem: NonresonantProblem) -> np.ndarray:
    """Monodromy around infinity in closed form: the rank-one inverse
    identity applied to the matrix around 1, times the inverse diagonal,
    giving entries

    e^(2 pi i beta_l) (delta_kl + (4/ct) (G_l/G_k) * sine ratio(l))

    with ct = 2i e^(pi i sum(beta - alpha)).
    """
    n = problem.n
    u, v = _reflection_vectors(problem)
    ct = (-1) ** n * problem.c_constant
    scale = 4.0 / ct**2  # = -1/(1 + trace of the rank-one part)
    diag = [cmath.exp(2j * cmath.pi * float(b)) for b in problem.betas]
    out = np.empty((n, n), dtype=complex)
    for k in range(n):
        for l in range(n):
            entry = scale * u[k] * v[l] * diag[l]
            out[k, l] = entry + (diag[l] if k == l else 0.0)
    return out


def rank1_inverse(m: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Closed-form inverse of I + R for rank(R) <= 1:
    (I + R)^-1 = I - R/(1 + tr R).  Requires tr R away from -1."""
    m = np.asarray(m, dtype=complex)
    n = m.shape[0]
    r = m - np.eye(n)
    t = np.trace(r)
    if abs(1.0 + t) < tol:
        raise TraceMinusOne("rank-one update with trace -1 is singular")
    return np.eye(n) - r / (1.0 + t)


def vd_transform(problem: NonresonantProblem):
    """Factorization of the contour-to-power-basis transformation as
    V times D.

    V is the Vandermonde matrix V[k, l] = e^(-2 pi i k beta_l) (the
    k-dependent exponential lives here, not in D), and D is diagonal with

    D[l, l] = (-1)^n (2i)^(1-n) e^(pi i n beta_l)
              * prod_p Gamma(alpha_p - beta_l + 1) / Gamma(beta_p - beta_l + 1)
              * prod_{m != l} 1/sin(pi (beta_m - beta_l)).

    The (-1)^n front factor is forced by the residue expansion of the
    contour integrals (the n = 1 closed form and the quadrature check
    both pin it); it cancels from every conjugation, so only the
    column identity sees it.
    """
    n = problem.n
    v = np.array(
        [
            [cmath.exp(-2j * cmath.pi * k * float(b)) for b in problem.betas]
            for k in range(n)
        ],
        dtype=complex,
    )
    diag = []
    for l in range(n):
        bl = float(problem.betas[l])
        val = (-1) ** n * (2j) ** (1 - n) * cmath.exp(1j * cmath.pi * n * bl)
        val *= _gamma_ratio(problem, l)
        for m, b in enumerate(problem.betas):
            if m != l:
                val /= cmath.sin(cmath.pi * (float(b) - bl))
        diag.append(val)
    return v, np.diag(diag)
