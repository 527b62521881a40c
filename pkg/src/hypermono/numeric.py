"""Numerical oracle: complex gamma, contour quadrature of the
gamma-product integrals, residue series, log-ladder and power-function
series evaluation, and the end-to-end check that the exact
transformation matrix really maps series values to contour values.

All evaluation points carry arg(z) in (0, 2 pi); positive reals are
rejected.  Quadrature runs along a vertical line chosen strictly between
the left and right pole ladders.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import kernels
from .unipotent import UnipotentProblem, t_matrix


class PoleAtNonpositiveInteger(ArithmeticError):
    """Gamma evaluated at (or within 1e-12 of) a nonpositive integer."""


class ContourInvalid(ValueError):
    """No vertical line separates the two pole ladders, or the requested
    abscissa does not."""


class TailNotConverged(ArithmeticError):
    """The contour tail or a quadrature panel refused to converge."""


class TruncationNotConverged(ArithmeticError):
    """A residue series did not settle within the term budget."""


class NotConverged(ArithmeticError):
    """A power series did not settle within the term budget."""


TWO_PI_I = 2j * math.pi


def gamma_complex(z) -> complex:
    """Gamma via the Lanczos kernel, guarded against the poles."""
    zc = complex(z)
    nearest = round(zc.real)
    if nearest <= 0 and abs(zc - nearest) < 1e-12:
        raise PoleAtNonpositiveInteger(f"Gamma pole at {zc}")
    return kernels.gamma(zc)


def zeta_numeric(k: int, terms: int = 100_000) -> float:
    """zeta(k) by direct summation plus tail bound (12+ digits, k >= 2)."""
    if k < 2:
        raise ValueError("zeta_numeric expects k >= 2")
    return kernels.zeta(k, terms)


def log_principal_upper(z) -> complex:
    """log z with the argument taken in (0, 2 pi)."""
    zc = complex(z)
    if zc == 0:
        raise ValueError("log of zero")
    if zc.imag == 0 and zc.real > 0:
        raise ValueError("argument of z must lie strictly inside (0, 2 pi)")
    w = cmath.log(zc)
    if w.imag <= 0:
        w += TWO_PI_I
    return w


def generator_values(n: int, C: int, zeta_terms: int = 100_000) -> dict[str, complex]:
    """Numeric substitutions for the ring generators: g_k maps to
    zeta(k)/(2 pi i)^k, lambda to log(C)/(2 pi i)."""
    vals = {"lambda": cmath.log(C) / TWO_PI_I}
    for k in range(3, max(n, 1), 2):
        vals[f"g{k}"] = zeta_numeric(k, zeta_terms) / TWO_PI_I**k
    return vals


@dataclass(frozen=True)
class ContourSpec:
    """Vertical-line contour: abscissa, truncation height, quadrature
    tolerance.  Leave sigma/t_max as None for automatic choice."""

    sigma: float | None = None
    t_max: float | None = None
    tol: float = 1e-9


def _validate_exponents(alphas, betas):
    af = [float(a) for a in alphas]
    bf = [float(b) for b in betas]
    if len(af) != len(bf) or not af:
        raise ValueError("need equally many alpha and beta exponents")
    if any(not 0.0 < a < 1.0 for a in af):
        raise ValueError("alpha exponents must lie in (0, 1)")
    if any(not 0.0 < b <= 1.0 for b in bf):
        raise ValueError("beta exponents must lie in (0, 1]")
    return af, bf


# Deterministic Gauss-Legendre node pairs for the panel error estimate.
_GL15 = np.polynomial.legendre.leggauss(15)
_GL31 = np.polynomial.legendre.leggauss(31)


def _panel_estimates(f, a: float, b: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    lo = f(mid + half * _GL15[0]) @ _GL15[1] * half
    hi = f(mid + half * _GL31[0]) @ _GL31[1] * half
    return hi, abs(hi - lo)


def _adaptive(f, a: float, b: float, tol_abs: float, depth: int = 0) -> complex:
    val, err = _panel_estimates(f, a, b)
    if err <= tol_abs or (b - a) <= 1e-12:
        return val
    if depth >= 40:
        raise TailNotConverged("quadrature panel refinement stalled")
    mid = 0.5 * (a + b)
    return _adaptive(f, a, mid, 0.5 * tol_abs, depth + 1) + _adaptive(
        f, mid, b, 0.5 * tol_abs, depth + 1
    )


def mb_integral_quadrature(j, z, alphas, betas, contour: ContourSpec | None = None):
    """I_j(z) by adaptive quadrature along the vertical line Re s = sigma.

    The integrand is (-1)^n/(2 pi i)^n times the gamma product
    prod_k Gamma(alpha_k + s) Gamma(1 - beta_k - s) with the twist
    e^((2j - n) pi i s) z^s; the line must keep the ladders -alpha_k - m
    strictly on its left and 1 - beta_k + m strictly on its right.
    """
    af, bf = _validate_exponents(alphas, betas)
    n = len(af)
    if not 0 <= j < n:
        raise ValueError("index j out of range")
    if contour is None:
        contour = ContourSpec()
    lo = max(-a for a in af)
    hi = min(1.0 - b for b in bf)
    if not lo < hi:
        raise ContourInvalid(f"empty separating strip ({lo}, {hi})")
    sigma = contour.sigma if contour.sigma is not None else 0.5 * (lo + hi)
    if not lo < sigma < hi:
        raise ContourInvalid(f"sigma {sigma} outside ({lo}, {hi})")
    log_z = log_principal_upper(z)
    tjn = 2 * j - n
    av = np.array(af)
    bv = np.array(bf)

    def f(ts):
        return kernels.mb_integrand(np.asarray(ts, dtype=float), sigma, av, bv, tjn, log_z)

    scale = max(abs(f(np.array([0.0]))[0]), 1e-300)
    if contour.t_max is not None:
        t_max = contour.t_max
    else:
        t_max = 4.0
        floor = contour.tol * 1e-3 * scale
        while t_max < 400.0:
            ends = f(np.array([-t_max, t_max]))
            if max(abs(ends[0]), abs(ends[1])) < floor:
                break
            t_max *= 1.5
        else:
            raise TailNotConverged("integrand tail still large at t = 400")
    # coarse pass over fixed panels, then refine against the coarse total
    edges = np.linspace(-t_max, t_max, max(2, int(math.ceil(t_max)) + 1))
    coarse = sum(
        _panel_estimates(f, edges[i], edges[i + 1])[0] for i in range(len(edges) - 1)
    )
    tol_abs = contour.tol * max(abs(coarse), scale * 1e-6)
    width = 2.0 * t_max
    total = 0.0 + 0.0j
    for i in range(len(edges) - 1):
        share = (edges[i + 1] - edges[i]) / width
        total += _adaptive(f, edges[i], edges[i + 1], tol_abs * share)
    pref = (-1.0) ** n * (-1j) / TWO_PI_I**n
    return pref * total


def _residues_nonresonant(j, z, af, bf, terms, tol):
    n = len(af)
    log_z = log_principal_upper(z)
    pref = (-1.0) ** n / TWO_PI_I**n * TWO_PI_I
    total = 0.0 + 0.0j
    for l in range(n):
        settled = 0
        part = 0.0 + 0.0j
        inv_fact = 1.0
        for m in range(terms):
            if m:
                inv_fact /= m
            s0 = 1.0 - bf[l] + m
            # simple pole of Gamma(1 - beta_l - s): residue -(-1)^m/m!
            val = -((-1.0) ** m) * inv_fact
            for k in range(n):
                val *= kernels.gamma(af[k] + s0)
            for k in range(n):
                if k != l:
                    val *= kernels.gamma(bf[l] - bf[k] - m)
            val *= cmath.exp((2 * j - n) * 1j * math.pi * s0 + s0 * log_z)
            part += val
            if abs(val) < tol * max(abs(part), 1e-30):
                settled += 1
                if settled >= 3:
                    break
            else:
                settled = 0
        else:
            raise TruncationNotConverged("residue series did not settle")
        total += part
    return pref * total


def mb_integral_residues(j, z, alphas, betas, terms: int = 300, tol: float = 1e-13):
    """I_j(z) for |z| < 1 as the sum of residues to the right of the
    contour.

    Non-resonant exponents give simple poles summed directly from gamma
    values.  The maximally unipotent case has order-n poles; there the
    sum is evaluated through the jet recurrence behind the log-ladder
    series and the exact transformation matrix, which is the same
    function by the residue-shifting identity.
    """
    af, bf = _validate_exponents(alphas, betas)
    n = len(af)
    if not 0 <= j < n:
        raise ValueError("index j out of range")
    if abs(complex(z)) >= 1.0:
        raise ValueError("residue route requires |z| < 1")
    if all(b == 1.0 for b in bf):
        prob = UnipotentProblem.from_alphas([Fraction(a).limit_denominator(10**6) for a in alphas])
        vals = generator_values(prob.n, prob.C)
        traw = t_matrix(prob.q, prob.n, normalized=False).evalf(vals)
        col = frobenius_eval_unipotent(alphas, z, terms=max(terms, 200))
        gamma_prod = 1.0
        for a in af:
            gamma_prod *= kernels.gamma(a).real
        return gamma_prod * (traw @ col)[j]
    # require pairwise-distinct betas for the simple-pole route
    for i in range(n):
        for k in range(i + 1, n):
            d = (bf[i] - bf[k]) % 1.0
            if min(d, 1.0 - d) < 1e-9:
                raise ValueError("beta exponents collide mod 1: use the unipotent route")
    return _residues_nonresonant(j, z, af, bf, terms, tol)


def frobenius_eval_unipotent(
    alphas, z, terms: int = 4000, normalized: bool = False, tol: float = 1e-16
):
    """Values of the log-ladder column (f_{n-1}/(2 pi i)^{n-1}, ..., f_0)
    at z.

    The exponent-jet recurrence A_m(s) = A_{m-1}(s) prod_k (s + m - 1 +
    alpha_k) / (s + m)^n is propagated to order n-1 in s ((C-scaled per
    step when normalized); the log powers are then assembled with
    log z taken in the (0, 2 pi) branch.
    """
    af = [float(a) for a in alphas]
    if any(not 0.0 < a < 1.0 for a in af):
        raise ValueError("alpha exponents must lie in (0, 1)")
    n = len(af)
    zc = complex(z)
    C = 1
    if normalized:
        prob = UnipotentProblem.from_alphas(
            [Fraction(a).limit_denominator(10**6) for a in alphas]
        )
        C = prob.C
    if abs(zc) * C >= 1.0:
        raise ValueError("series requires |C z| < 1")
    log_z = log_principal_upper(zc)
    # jets are plain truncated Taylor polynomials in s, complex coefficients
    A = [1.0 + 0j] + [0j] * (n - 1)
    S = [0j] * n
    S[0] = 1.0 + 0j
    zpow = 1.0 + 0j
    settled = 0
    for m in range(1, terms):
        for a in af:
            c = m - 1 + a
            A = [c * A[0]] + [c * A[ji] + A[ji - 1] for ji in range(1, n)]
        # multiply by 1/(s+m)^n = m^-n sum_j C(n+j-1, j) (-s/m)^j
        inv = [
            math.comb(n + ji - 1, ji) * (-1.0 / m) ** ji / float(m) ** n
            for ji in range(n)
        ]
        A = [
            sum(A[i] * inv[ji - i] for i in range(ji + 1)) for ji in range(n)
        ]
        if normalized:
            A = [C * x for x in A]
        zpow *= zc
        biggest = 0.0
        for ji in range(n):
            contrib = A[ji] * zpow
            S[ji] += contrib
            biggest = max(biggest, abs(contrib))
        if biggest < tol * max(1.0, max(abs(x) for x in S)):
            settled += 1
            if settled >= 4:
                break
        else:
            settled = 0
    else:
        raise NotConverged("log-ladder series did not settle")
    logs = [log_z**i / math.factorial(i) for i in range(n)]
    col = np.empty(n, dtype=complex)
    for l in range(n):
        val = sum(logs[l - ji] * S[ji] for ji in range(l + 1))
        col[n - 1 - l] = val / TWO_PI_I**l
    return col


def frobenius_eval_nonresonant(alphas, betas, z, terms: int = 4000, tol: float = 1e-16):
    """Values of the power-function basis (f_1, ..., f_n) at z:
    f_l = z^(1 - beta_l) * sum_m prod_p (alpha_p - beta_l + 1)_m /
    prod_p (beta_p - beta_l + 1)_m * z^m."""
    af, bf = _validate_exponents(alphas, betas)
    n = len(af)
    zc = complex(z)
    if abs(zc) >= 1.0:
        raise ValueError("series requires |z| < 1")
    log_z = log_principal_upper(zc)
    out = np.empty(n, dtype=complex)
    for l in range(n):
        t = 1.0 + 0j
        acc = 1.0 + 0j
        zpow = 1.0 + 0j
        settled = 0
        for m in range(1, terms):
            num = 1.0
            den = 1.0
            for p in range(n):
                num *= af[p] - bf[l] + m
                den *= bf[p] - bf[l] + m
            t *= num / den
            zpow *= zc
            term = t * zpow
            acc += term
            if abs(term) < tol * max(1.0, abs(acc)):
                settled += 1
                if settled >= 3:
                    break
            else:
                settled = 0
        else:
            raise NotConverged("power-function series did not settle")
        out[l] = cmath.exp((1.0 - bf[l]) * log_z) * acc
    return out


@dataclass(frozen=True)
class VerifyReport:
    n: int
    z: complex
    tol: float
    residual_normalized: float
    residual_raw: float
    passed: bool


def _rel_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    scale = max(float(np.max(np.abs(lhs))), 1e-300)
    return float(np.max(np.abs(lhs - rhs)) / scale)


def verify_T(
    alphas,
    z,
    tol: float = 1e-6,
    quad_tol: float = 1e-9,
    terms: int = 4000,
    zeta_terms: int = 100_000,
) -> VerifyReport:
    """End-to-end oracle for the maximally unipotent cyclotomic case.

    Computes the contour integrals by quadrature, rescales them by the
    gamma product at the exponents, and compares against the exact
    transformation matrix (with the generators replaced by summed zeta
    values) applied to the series values of the log-ladder column.  Both
    the normalized and the unnormalized flavors are checked; the latter
    pins the direction of the C^(N/(2 pi i)) basis change.
    """
    prob = UnipotentProblem.from_alphas(alphas)
    n = prob.n
    zc = complex(z)
    gamma_prod = 1.0
    for a in prob.alphas:
        gamma_prod *= kernels.gamma(float(a)).real
    contour = ContourSpec(tol=quad_tol)
    ihat = np.array(
        [
            mb_integral_quadrature(j, zc, prob.alphas, [1] * n, contour) / gamma_prod
            for j in range(n)
        ]
    )
    vals = generator_values(n, prob.C, zeta_terms)
    t_raw = t_matrix(prob.q, n, normalized=False).evalf(vals)
    f_raw = frobenius_eval_unipotent(prob.alphas, zc, terms=terms)
    residual_raw = _rel_residual(ihat, t_raw @ f_raw)
    t_c = t_matrix(prob.q, n, normalized=True).evalf(vals)
    f_c = frobenius_eval_unipotent(
        prob.alphas, zc / prob.C, terms=terms, normalized=True
    )
    residual_normalized = _rel_residual(ihat, t_c @ f_c)
    return VerifyReport(
        n=n,
        z=zc,
        tol=tol,
        residual_normalized=residual_normalized,
        residual_raw=residual_raw,
        passed=max(residual_normalized, residual_raw) < tol,
    )
