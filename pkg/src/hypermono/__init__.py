"""Monodromy of generalized hypergeometric equations.

Exact monodromy matrices for the maximally unipotent case with
cyclotomic exponent products (entries in Q adjoined odd zeta ratios),
companion-form and non-resonant matrices, and an independent numerical
oracle built on contour integration of gamma products.
"""

from .arith import bernoulli, cyclotomic_poly, mobius, partitions, zeta_even_ratio
from .cyclo import (
    QuotientForm,
    compute_C,
    compute_d,
    f0_coeffs,
    quotient_form,
    recognize_cyclotomic,
    to_quotient_form,
)
from .kernels import IMPL_NAME as kernel_impl
from .levelt import companion, mb_triple, unipotent_mb_triple
from .nonresonant import NonresonantProblem, m0_diag, m1_sine, rank1_inverse, vd_transform
from .numeric import (
    frobenius_eval_nonresonant,
    frobenius_eval_unipotent,
    gamma_complex,
    mb_integral_quadrature,
    mb_integral_residues,
    verify_T,
    zeta_numeric,
)
from .unipotent import (
    MonodromyTriple,
    UnipotentProblem,
    m0_unipotent,
    m1_over_C,
    m1_via_T,
    m_infinity,
    monodromy_triple,
    to_basis,
)
from .zetaring import FieldMatrix, Jet, ZetaElem, phiC_jet, toeplitz, zeta_symbol

__version__ = "0.1.0"
