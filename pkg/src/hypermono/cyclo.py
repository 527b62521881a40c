"""Recognition of cyclotomic exponent sets and the quotient form
prod (X^a_i - 1) / prod (X^b_i - 1), together with the constants C, d
and the c_j^+/- coefficient family derived from it.
"""

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .arith import IntPolynomial, divisors, mobius


class IntegerExponent(ValueError):
    """Some exponent is an integer, so 1 would be a root."""


class NotCyclotomicProduct(ValueError):
    """The exponents do not assemble into full primitive residue classes."""


class NonIntegerC(ArithmeticError):
    """The normalization constant failed to be an integer (internal bug)."""


class NonIntegerCoefficient(ArithmeticError):
    """A rescaled series coefficient failed to be an integer (internal bug)."""


class NonIntegerFactorialRatio(ArithmeticError):
    """The factorial ratio failed to be an integer (internal bug)."""


def normalize_alphas(alphas) -> tuple[Fraction, ...]:
    """Reduce rational exponents mod 1 into (0, 1).

    Monodromy data depends on the exponents mod 1 only, so the exact
    pipeline canonicalizes here; integer exponents are rejected because
    they would put a root at 1.
    """
    out = []
    for a in alphas:
        a = Fraction(a)
        a -= math.floor(a)
        if a == 0:
            raise IntegerExponent(f"exponent {a} is an integer")
        out.append(a)
    return tuple(out)


def recognize_cyclotomic(alphas) -> dict[int, int]:
    """Group exponents into full primitive residue classes.

    Returns {m: multiplicity} such that prod (X - e^(-2 pi i alpha_k))
    equals the product of the m-th cyclotomic polynomials with those
    multiplicities.  Grouping is by reduced denominator: for each
    denominator m, every residue coprime to m must occur, all with the
    same count.
    """
    alphas = normalize_alphas(alphas)
    by_den: dict[int, Counter] = {}
    for a in alphas:
        by_den.setdefault(a.denominator, Counter())[a.numerator] += 1
    out: dict[int, int] = {}
    for m, counts in sorted(by_den.items()):
        required = [c for c in range(1, m + 1) if math.gcd(c, m) == 1]
        mult = counts[required[0]]
        if mult == 0 or any(counts[c] != mult for c in required):
            raise NotCyclotomicProduct(
                f"residues mod {m} do not fill the primitive class evenly"
            )
        if sum(counts.values()) != mult * len(required):
            raise NotCyclotomicProduct(f"stray residues mod {m}")
        out[m] = mult
    return out


@dataclass(frozen=True)
class QuotientForm:
    """Canonical multiset pair (a, b) for prod (X^a_i - 1)/prod (X^b_i - 1).

    Canonical means: common entries cancelled, both sides sorted
    descending.  n is the degree, always sum(a) - sum(b).
    """

    a: tuple[int, ...]
    b: tuple[int, ...]
    n: int

    @classmethod
    def from_sides(cls, a, b) -> "QuotientForm":
        ca, cb = Counter(a), Counter(b)
        common = ca & cb
        ca -= common
        cb -= common
        ta = tuple(sorted(ca.elements(), reverse=True))
        tb = tuple(sorted(cb.elements(), reverse=True))
        return cls(ta, tb, sum(ta) - sum(tb))


def to_quotient_form(cyclo: dict[int, int]) -> QuotientForm:
    """Expand each cyclotomic factor through its Mobius exponents into
    (X^d - 1)^(+-1) factors and merge, cancelling across the fraction."""
    net: Counter = Counter()
    for m, mult in cyclo.items():
        for d in divisors(m):
            net[d] += mobius(m // d) * mult
    a, b = [], []
    for d, e in net.items():
        if e > 0:
            a.extend([d] * e)
        elif e < 0:
            b.extend([d] * (-e))
    return QuotientForm.from_sides(a, b)


def quotient_form(alphas) -> QuotientForm:
    """Convenience: recognize and convert in one step."""
    return to_quotient_form(recognize_cyclotomic(alphas))


def expand_polynomial(q: QuotientForm) -> IntPolynomial:
    """The quotient form expanded as a monic integer polynomial."""
    num = IntPolynomial([1])
    for k in q.a:
        num = num * IntPolynomial.x_power_minus_one(k)
    for k in q.b:
        num = num.divexact(IntPolynomial.x_power_minus_one(k))
    return num


def compute_C(q: QuotientForm) -> int:
    """Normalization constant prod a_i^(a_i) / prod b_i^(b_i), always an
    integer for a valid quotient form."""
    num = 1
    for k in q.a:
        num *= k**k
    den = 1
    for k in q.b:
        den *= k**k
    c, rem = divmod(num, den)
    if rem:
        raise NonIntegerC(f"{num}/{den} is not an integer")
    return c


def compute_d(q: QuotientForm) -> Fraction:
    """prod a_i / prod b_i as an exact rational."""
    return Fraction(math.prod(q.a), math.prod(q.b) if q.b else 1)


def c_pm(q: QuotientForm, sign: int, j: int) -> Fraction:
    """Coefficient family c_j^+ (sign=+1) and c_j^- (sign=-1):
    c_0^+- = 1 and, for j >= 1,
    c_j^+- = (1/j) (+-n - (+-1)^j sum (a_m^j - b_m^j))."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return Fraction(1)
    power_sum = sum(a**j for a in q.a) - sum(b**j for b in q.b)
    return Fraction(sign * q.n - sign**j * power_sum, j)


def f0_coeffs(q: QuotientForm, terms: int) -> list[int]:
    """First ``terms`` Taylor coefficients of the rescaled analytic
    solution at 0: coefficient m is prod (a_i m)! / (prod (b_i m)! m!^n).

    Integrality is a theorem for valid quotient forms, so the exact
    division is asserted.
    """
    out = []
    for m in range(terms):
        num = math.prod(math.factorial(a * m) for a in q.a)
        den = math.prod(math.factorial(b * m) for b in q.b)
        den *= math.factorial(m) ** q.n
        c, rem = divmod(num, den)
        if rem:
            raise NonIntegerCoefficient(f"coefficient {m} is not an integer")
        out.append(c)
    return out


def f0_coeffs_hypergeometric(alphas, C: int, terms: int) -> list[Fraction]:
    """Same coefficients by the independent rising-factorial recurrence:
    t_m = t_(m-1) * C * prod (alpha_k + m - 1) / m^n."""
    alphas = [Fraction(a) for a in alphas]
    n = len(alphas)
    out = [Fraction(1)]
    t = Fraction(1)
    for m in range(1, terms):
        t = t * C * math.prod(a + m - 1 for a in alphas) / Fraction(m) ** n
        out.append(t)
    return out[:terms]


def check_factorial_ratio(q: QuotientForm) -> int:
    """prod a_i! / prod b_i!, an integer whenever the quotient form is a
    polynomial; inexact division signals a bug."""
    num = math.prod(math.factorial(a) for a in q.a)
    den = math.prod(math.factorial(b) for b in q.b)
    c, rem = divmod(num, den)
    if rem:
        raise NonIntegerFactorialRatio(f"{num}/{den} is not an integer")
    return c
