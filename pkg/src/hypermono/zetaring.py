"""Exact arithmetic in the ring Q[g3, g5, ..., lambda], where g_k stands
for zeta(k)/(2 pi i)^k with odd k and lambda for log(C)/(2 pi i).

Even zeta ratios are rational and are reduced away at construction, so
only odd generators ever appear.  On top of the ring the module provides
jets (truncated Taylor data in the scaled variable x = 2 pi i s), their
upper-triangular Toeplitz matrices, and exact linear algebra for square
matrices over the ring.
"""

import math
from fractions import Fraction
from itertools import combinations

from . import cyclo
from .arith import zeta_even_ratio

# Monomials are tuples of (generator, exponent) pairs sorted by _gen_key;
# "lambda" sorts before g3 < g5 < ...
Monomial = tuple[tuple[str, int], ...]


def _gen_key(name: str):
    if name == "lambda":
        return (0, 0)
    if name.startswith("g"):
        return (1, int(name[1:]))
    raise ValueError(f"unknown generator {name!r}")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for g, e in m2:
        acc[g] = acc.get(g, 0) + e
    return tuple(sorted(acc.items(), key=lambda kv: _gen_key(kv[0])))


def _mono_key(m: Monomial):
    # graded ordering: total degree first, then exponents in generator order
    return (sum(e for _, e in m), tuple((_gen_key(g), -e) for g, e in m))


class NonInvertibleJet(ArithmeticError):
    """Jet reciprocal requested but the constant term is not a nonzero
    rational."""


class NonRationalDeterminant(ArithmeticError):
    """The determinant does not reduce to a rational number, so division
    by it is not defined in this ring."""


class SingularMatrix(ArithmeticError):
    """The determinant vanishes."""


class ZetaElem:
    """Sparse ring element: map from monomial to nonzero rational."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Monomial, Fraction]):
        object.__setattr__(
            self, "terms", {m: c for m, c in terms.items() if c != 0}
        )

    def __setattr__(self, *a):
        raise AttributeError("ZetaElem is immutable")

    @classmethod
    def rational(cls, q) -> "ZetaElem":
        return cls({(): Fraction(q)})

    @classmethod
    def generator(cls, name: str) -> "ZetaElem":
        _gen_key(name)
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def zero(cls) -> "ZetaElem":
        return cls({})

    @classmethod
    def one(cls) -> "ZetaElem":
        return cls.rational(1)

    @staticmethod
    def coerce(x) -> "ZetaElem":
        if isinstance(x, ZetaElem):
            return x
        return ZetaElem.rational(x)

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or set(self.terms) == {()}

    def as_fraction(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {()}:
            raise ValueError(f"{self} is not rational")
        return self.terms[()]

    def support(self) -> set[str]:
        return {g for m in self.terms for g, _ in m}

    def degree(self) -> int:
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def __add__(self, other):
        other = ZetaElem.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return ZetaElem(out)

    __radd__ = __add__

    def __neg__(self):
        return ZetaElem({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-ZetaElem.coerce(other))

    def __rsub__(self, other):
        return ZetaElem.coerce(other) - self

    def __mul__(self, other):
        other = ZetaElem.coerce(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return ZetaElem(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not ring operations")
        out = ZetaElem.one()
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        # scalar division only; the ring has no general inverses
        if isinstance(other, ZetaElem):
            other = other.as_fraction()
        q = Fraction(other)
        return ZetaElem({m: c / q for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ZetaElem.rational(other)
        return isinstance(other, ZetaElem) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _mono_key(kv[0]))

    def evalf(self, values: dict[str, complex]) -> complex:
        """Substitute numeric values for the generators."""
        out = 0j
        for m, c in self.terms.items():
            t = complex(c)
            for g, e in m:
                t *= values[g] ** e
            out += t
        return out

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "mono": {g: e for g, e in m}}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data) -> "ZetaElem":
        terms: dict[Monomial, Fraction] = {}
        for item in data:
            mono = tuple(
                sorted(((g, int(e)) for g, e in item["mono"].items()),
                       key=lambda kv: _gen_key(kv[0]))
            )
            terms[mono] = terms.get(mono, Fraction(0)) + Fraction(item["coeff"])
        return cls(terms)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            mono = "*".join(g if e == 1 else f"{g}^{e}" for g, e in m)
            if mono:
                mag = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            else:
                mag = str(abs(c))
            if not parts:
                parts.append(("-" if c < 0 else "") + mag)
            else:
                parts.append(("- " if c < 0 else "+ ") + mag)
        return " ".join(parts)

    def __repr__(self):
        return f"ZetaElem({self})"


def zeta_symbol(k: int) -> ZetaElem:
    """zeta(k)/(2 pi i)^k as a ring element: 0 for k = 1 (by convention),
    an exact rational for even k, the generator g_k for odd k >= 3."""
    if k < 1:
        raise ValueError("zeta_symbol expects k >= 1")
    if k == 1:
        return ZetaElem.zero()
    if k % 2 == 0:
        return ZetaElem.rational(zeta_even_ratio(k))
    return ZetaElem.generator(f"g{k}")


class Jet:
    """Length-n truncated Taylor data of an analytic function at s = 0.

    coeffs[k] represents f^(k)(0) / (k! (2 pi i)^k), i.e. the ordinary
    Taylor coefficients in the scaled variable x = 2 pi i s.  All power
    series operations below are truncations at order n - 1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        object.__setattr__(
            self, "coeffs", tuple(ZetaElem.coerce(c) for c in coeffs)
        )
        if not self.coeffs:
            raise ValueError("a jet needs at least one coefficient")

    def __setattr__(self, *a):
        raise AttributeError("Jet is immutable")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __eq__(self, other):
        return isinstance(other, Jet) and self.coeffs == other.coeffs

    def __repr__(self):
        return "Jet(" + ", ".join(str(c) for c in self.coeffs) + ")"

    @classmethod
    def one(cls, n: int) -> "Jet":
        return cls([1] + [0] * (n - 1))

    @classmethod
    def exp_linear(cls, c, n: int) -> "Jet":
        """Jet of exp(c x): coefficients c^k / k!."""
        c = ZetaElem.coerce(c)
        return cls([c**k / math.factorial(k) for k in range(n)])

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("jet lengths differ")
        return Jet([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.n != other.n:
            raise ValueError("jet lengths differ")
        return Jet([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if not isinstance(other, Jet):
            return Jet([c * other for c in self.coeffs])
        if self.n != other.n:
            raise ValueError("jet lengths differ")
        n = self.n
        out = [ZetaElem.zero() for _ in range(n)]
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Jet(out)

    __rmul__ = __mul__

    def exp(self) -> "Jet":
        """Truncated exponential; requires a vanishing constant term.
        Uses the derivative recurrence e_k = (1/k) sum_{i>=1} i a_i e_{k-i}."""
        if not self.coeffs[0].is_zero():
            raise NonInvertibleJet("jet exponential needs constant term 0")
        n = self.n
        out = [ZetaElem.one()] + [ZetaElem.zero()] * (n - 1)
        for k in range(1, n):
            acc = ZetaElem.zero()
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if not a.is_zero():
                    acc = acc + (i * a) * out[k - i]
            out[k] = acc / k
        return Jet(out)

    def inverse(self) -> "Jet":
        """Truncated reciprocal; the constant term must be a nonzero
        rational (the only units of the coefficient ring)."""
        c0 = self.coeffs[0]
        if not c0.is_rational() or c0.is_zero():
            raise NonInvertibleJet(f"constant term {c0} is not a unit")
        inv0 = Fraction(1) / c0.as_fraction()
        n = self.n
        out = [ZetaElem.rational(inv0)] + [ZetaElem.zero()] * (n - 1)
        for k in range(1, n):
            acc = ZetaElem.zero()
            for i in range(1, k + 1):
                a = self.coeffs[i]
                if not a.is_zero():
                    acc = acc + a * out[k - i]
            out[k] = -acc * inv0
        return Jet(out)


def phi_reciprocal_exponent_jet(q: "cyclo.QuotientForm", n: int, sign: int) -> Jet:
    """Jet of sum_p c_p^(sign) * zeta(p) s^p, the exponent series whose
    exponential gives (for sign -1) the reciprocal of the normalized
    gamma-quotient function."""
    return Jet(
        [ZetaElem.zero()]
        + [cyclo.c_pm(q, sign, p) * zeta_symbol(p) for p in range(1, n)]
    )


def phiC_jet(q: "cyclo.QuotientForm", n: int) -> Jet:
    """Jet of the normalized gamma-quotient function
    phi_C(s) = prod Gamma(a_i s + 1) / prod Gamma(b_i s + 1) * Gamma(1-s)^n,
    computed as the reciprocal of exp(sum_p c_p^- zeta(p) s^p)."""
    return phi_reciprocal_exponent_jet(q, n, -1).exp().inverse()


class FieldMatrix:
    """Square matrix over the ring, with exact inverse and characteristic
    polynomial for the matrices this pipeline needs (rational
    determinants)."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rs = tuple(tuple(ZetaElem.coerce(x) for x in row) for row in rows)
        n = len(rs)
        if any(len(r) != n for r in rs):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, *a):
        raise AttributeError("FieldMatrix is immutable")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, FieldMatrix) and self.rows == other.rows

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"FieldMatrix({body})"

    @classmethod
    def identity(cls, n: int) -> "FieldMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "FieldMatrix":
        return cls([[0] * n for _ in range(n)])

    def __add__(self, other):
        return FieldMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        return FieldMatrix(
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        )

    def __mul__(self, other):
        if isinstance(other, FieldMatrix):
            n = self.n
            if other.n != n:
                raise ValueError("dimension mismatch")
            cols = list(zip(*other.rows))
            out = []
            for row in self.rows:
                out.append(
                    [
                        sum((a * b for a, b in zip(row, col)), ZetaElem.zero())
                        for col in cols
                    ]
                )
            return FieldMatrix(out)
        return FieldMatrix([[x * other for x in row] for row in self.rows])

    __rmul__ = __mul__

    def trace(self) -> ZetaElem:
        return sum((self.rows[i][i] for i in range(self.n)), ZetaElem.zero())

    def charpoly(self) -> list[ZetaElem]:
        """Coefficients [c_n, ..., c_1, 1] (ascending powers) of
        det(X I - M), by the trace recurrence of Faddeev and LeVerrier;
        only divisions by integers occur, which are exact here."""
        n = self.n
        cs = [ZetaElem.one()]  # leading coefficient
        A = self
        c = -A.trace()
        cs.append(c)
        for k in range(2, n + 1):
            A = self * (A + FieldMatrix.identity(n) * c)
            c = -(A.trace() / k)
            cs.append(c)
        return cs[::-1]

    def det(self) -> ZetaElem:
        cs = self.charpoly()
        sign = -1 if self.n % 2 else 1
        return sign * cs[0]

    def inverse(self) -> "FieldMatrix":
        """Exact inverse through the adjugate; requires the determinant
        to reduce to a nonzero rational, which holds for every matrix
        this pipeline inverts and is asserted rather than assumed."""
        n = self.n
        cs = [ZetaElem.one()]
        A = self
        c = -A.trace()
        cs.append(c)
        B = None
        for k in range(2, n + 1):
            B = A + FieldMatrix.identity(n) * c
            A = self * B
            c = -(A.trace() / k)
            cs.append(c)
        det = (-1 if n % 2 else 1) * cs[-1]
        if not det.is_rational():
            raise NonRationalDeterminant(f"determinant {det} is not rational")
        d = det.as_fraction()
        if d == 0:
            raise SingularMatrix("matrix is singular")
        if n == 1:
            return FieldMatrix([[ZetaElem.rational(Fraction(1) / d)]])
        # adjugate is (-1)^(n-1) times the last trace-recurrence matrix
        adj_sign = 1 if (n - 1) % 2 == 0 else -1
        return B * (Fraction(adj_sign) / d)

    def _minor_det(self, rows_idx, cols_idx) -> ZetaElem:
        k = len(rows_idx)
        if k == 1:
            return self.rows[rows_idx[0]][cols_idx[0]]
        acc = ZetaElem.zero()
        r0 = rows_idx[0]
        rest = rows_idx[1:]
        for pos, cj in enumerate(cols_idx):
            x = self.rows[r0][cj]
            if x.is_zero():
                continue
            sub = self._minor_det(rest, cols_idx[:pos] + cols_idx[pos + 1 :])
            term = x * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    def rank(self) -> int:
        """Rank over the fraction field, as the largest k with a nonzero
        k x k minor.  Fine for the small matrices handled here."""
        n = self.n
        for k in range(n, 0, -1):
            for ri in combinations(range(n), k):
                for ci in combinations(range(n), k):
                    if not self._minor_det(ri, ci).is_zero():
                        return k
        return 0

    def rank_of_difference_from_identity(self) -> int:
        return (self - FieldMatrix.identity(self.n)).rank()

    def support(self) -> set[str]:
        return {g for row in self.rows for x in row for g in x.support()}

    def evalf(self, values: dict[str, complex]):
        import numpy as np

        return np.array(
            [[x.evalf(values) for x in row] for row in self.rows],
            dtype=complex,
        )

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, data) -> "FieldMatrix":
        return cls([[ZetaElem.from_json(x) for x in row] for row in data])


def toeplitz(jet: Jet) -> FieldMatrix:
    """Upper-triangular Toeplitz matrix of a jet: entry (k, l) is
    coeffs[l - k] for l >= k.  Jet multiplication turns into matrix
    multiplication under this map."""
    n = jet.n
    return FieldMatrix(
        [
            [jet.coeffs[l - k] if l >= k else ZetaElem.zero() for l in range(n)]
            for k in range(n)
        ]
    )


def outer(u, v) -> FieldMatrix:
    """Outer product of two coefficient vectors."""
    u = [ZetaElem.coerce(x) for x in u]
    v = [ZetaElem.coerce(x) for x in v]
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return FieldMatrix([[a * b for b in v] for a in u])
