# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: complex log-gamma, the gamma-product contour
integrand, and direct zeta summation.

Bit-for-bit the same algorithm as the pure-Python reference module; the
selection between the two happens at package import.
"""

import numpy as np

from libc.math cimport log, pow, M_PI

cdef extern from "complex.h" nogil:
    double complex cexp(double complex)
    double complex clog(double complex)
    double cimag(double complex)
    double creal(double complex)

cdef double LANCZOS0 = 0.99999999999980993
cdef double[8] LANCZOS
LANCZOS[0] = 676.5203681218851
LANCZOS[1] = -1259.1392167224028
LANCZOS[2] = 771.32342877765313
LANCZOS[3] = -176.61502916214059
LANCZOS[4] = 12.507343278686905
LANCZOS[5] = -0.13857109526572012
LANCZOS[6] = 9.9843695780195716e-6
LANCZOS[7] = 1.5056327351493116e-7

cdef double HALF_LOG_TWO_PI = 0.5 * log(2.0 * M_PI)
cdef double LOG_PI = log(M_PI)


cdef double complex _log_sin_pi(double complex z) nogil:
    cdef double complex iz = 1j * M_PI * z
    if cimag(z) >= 0.0:
        return clog(1.0 - cexp(2.0 * iz)) - iz + clog(0.5j)
    return clog(1.0 - cexp(-2.0 * iz)) + iz + clog(-0.5j)


cdef double complex _lgamma(double complex z) nogil:
    cdef double complex x, t
    cdef int i
    if creal(z) < 0.5:
        return LOG_PI - _log_sin_pi(z) - _lgamma(1.0 - z)
    z = z - 1.0
    x = LANCZOS0
    for i in range(8):
        x = x + LANCZOS[i] / (z + (i + 1.0))
    t = z + 7.5
    return HALF_LOG_TWO_PI + (z + 0.5) * clog(t) - t + clog(x)


def lgamma(z):
    """log Gamma via Lanczos, reflected onto Re z >= 1/2."""
    return complex(_lgamma(complex(z)))


def gamma(z):
    return complex(cexp(_lgamma(complex(z))))


def mb_integrand(ts, double sigma, alphas, betas, int two_j_minus_n, log_z):
    """Gamma-product integrand along Re s = sigma, in log space."""
    cdef double[::1] tv = np.ascontiguousarray(ts, dtype=np.float64)
    cdef double[::1] av = np.ascontiguousarray(alphas, dtype=np.float64)
    cdef double[::1] bv = np.ascontiguousarray(betas, dtype=np.float64)
    out = np.empty(tv.shape[0], dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef double complex lz = complex(log_z)
    cdef double complex s, w
    cdef Py_ssize_t i, k
    cdef Py_ssize_t m = tv.shape[0]
    cdef Py_ssize_t nk = av.shape[0]
    with nogil:
        for i in range(m):
            s = sigma + 1j * tv[i]
            w = two_j_minus_n * (1j * M_PI) * s + s * lz
            for k in range(nk):
                w = w + _lgamma(av[k] + s) + _lgamma(1.0 - bv[k] - s)
            if creal(w) > -745.0:
                ov[i] = cexp(w)
            else:
                ov[i] = 0.0
    return out


def zeta(int k, int terms=100_000):
    """zeta(k) by direct summation (smallest terms first, compensated)
    plus an Euler-Maclaurin tail."""
    cdef double acc = 0.0
    cdef double comp = 0.0
    cdef double term, y, tmp
    cdef int j
    for j in range(terms - 1, 0, -1):
        term = pow(j, -<double>k)
        y = term - comp
        tmp = acc + y
        comp = (tmp - acc) - y
        acc = tmp
    cdef double n = <double>terms
    cdef double tail = pow(n, 1.0 - k) / (k - 1.0) + 0.5 * pow(n, -<double>k)
    tail += k * pow(n, -<double>k - 1.0) / 12.0
    tail -= k * (k + 1.0) * (k + 2.0) * pow(n, -<double>k - 3.0) / 720.0
    return acc + tail
