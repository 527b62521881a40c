"""Exact integer arithmetic: Mobius function, cyclotomic polynomials,
integer partitions, Bernoulli numbers and even zeta ratios.

Everything here is pure and immutable; memoization uses ``lru_cache``,
which is safe under concurrent use.
"""

import math
from fractions import Fraction
from functools import lru_cache


def factorize(m: int) -> dict[int, int]:
    """Prime factorization {p: exponent} by trial division."""
    if m < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def mobius(m: int) -> int:
    """Mobius function: 0 on non-squarefree m, else (-1)^(number of primes)."""
    if m < 1:
        raise ValueError("mobius expects a positive integer")
    fac = factorize(m)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(m: int) -> int:
    """Euler totient via the factorization product formula."""
    if m < 1:
        raise ValueError("euler_phi expects a positive integer")
    out = m
    for p in factorize(m):
        out = out // p * (p - 1)
    return out


def divisors(m: int) -> list[int]:
    """All positive divisors of m, ascending."""
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d != m // d:
                large.append(m // d)
        d += 1
    return small + large[::-1]


class IntPolynomial:
    """Univariate polynomial with integer coefficients, ascending degree.

    Immutable; the zero polynomial is stored as an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def x_power_minus_one(cls, k: int) -> "IntPolynomial":
        return cls([-1] + [0] * (k - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other):
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other):
        return self + IntPolynomial([-c for c in other.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def divexact(self, other: "IntPolynomial") -> "IntPolynomial":
        """Exact division; raises if the remainder is nonzero.

        A nonzero remainder always signals a logic error upstream, never
        a legitimate input.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        div = other.coeffs
        lead = div[-1]
        qdeg = len(rem) - len(div)
        if qdeg < 0:
            if any(rem):
                raise ArithmeticError("inexact polynomial division")
            return IntPolynomial([])
        quot = [0] * (qdeg + 1)
        for i in range(qdeg, -1, -1):
            c = rem[i + len(div) - 1]
            if c % lead:
                raise ArithmeticError("inexact polynomial division")
            q = c // lead
            quot[i] = q
            if q:
                for j, d in enumerate(div):
                    rem[i + j] -= q * d
        if any(rem):
            raise ArithmeticError("inexact polynomial division")
        return IntPolynomial(quot)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return self.render("X")

    def render(self, var: str = "X") -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                term = f"{mag}{var}" + (f"^{k}" if k > 1 else "")
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """m-th cyclotomic polynomial from the Mobius product over divisors:
    the product of (X^d - 1)^mu(m/d), taken with exact division."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    num = IntPolynomial([1])
    den = IntPolynomial([1])
    for d in divisors(m):
        mu = mobius(m // d)
        if mu == 1:
            num = num * IntPolynomial.x_power_minus_one(d)
        elif mu == -1:
            den = den * IntPolynomial.x_power_minus_one(d)
    return num.divexact(den)


def partitions(j: int) -> list[tuple[int, ...]]:
    """All integer partitions of j as weakly decreasing tuples.

    Ordered lexicographically descending; partitions(0) is [()], the
    single empty partition.
    """
    if j < 0:
        raise ValueError("partitions expects a nonnegative integer")
    out: list[tuple[int, ...]] = []
    prefix: list[int] = []

    def rec(rem, maxpart):
        if rem == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rem, maxpart), 0, -1):
            prefix.append(p)
            rec(rem - p, p)
            prefix.pop()

    rec(j, j)
    return out


def multiplicity_M(p: tuple[int, ...]) -> int:
    """Product of factorials of the part multiplicities; 1 for the empty
    partition."""
    out = 1
    run = 1
    for i in range(1, len(p) + 1):
        if i < len(p) and p[i] == p[i - 1]:
            run += 1
        else:
            out *= math.factorial(run)
            run = 1
    return out


@lru_cache(maxsize=None)
def _bernoulli_any(j: int) -> Fraction:
    # Defining recurrence: sum over i <= m of binom(m+1, i) B_i = 0.
    if j == 0:
        return Fraction(1)
    if j == 1:
        return Fraction(-1, 2)
    if j % 2:
        return Fraction(0)
    acc = Fraction(0)
    for i in range(j):
        acc += math.comb(j + 1, i) * _bernoulli_any(i)
    return -acc / (j + 1)


def bernoulli(k: int) -> Fraction:
    """Bernoulli number B_k for even k >= 2."""
    if k < 2 or k % 2:
        raise ValueError("bernoulli is defined here for even k >= 2 only")
    return _bernoulli_any(k)


def zeta_even_ratio(k: int) -> Fraction:
    """Exact rational value of zeta(k)/(2 pi i)^k for even k >= 2,
    equal to -B_k / (2 * k!)."""
    if k < 2 or k % 2:
        raise ValueError("zeta_even_ratio expects even k >= 2")
    return -bernoulli(k) / (2 * math.factorial(k))
