"""Exponent lists for the survey tables.

Only the exponents are stored; every tabulated quantity is recomputed
from them."""

from fractions import Fraction as F

TABLE_CASES = {
    2: (
        (F(1, 2), F(1, 2)),
        (F(1, 3), F(2, 3)),
        (F(1, 4), F(3, 4)),
        (F(1, 6), F(5, 6)),
    ),
    3: (
        (F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 3), F(2, 3), F(1, 2)),
        (F(1, 4), F(3, 4), F(1, 2)),
        (F(1, 6), F(5, 6), F(1, 2)),
    ),
    4: (
        (F(1, 5), F(2, 5), F(3, 5), F(4, 5)),
        (F(1, 10), F(3, 10), F(7, 10), F(9, 10)),
        (F(1, 2), F(1, 2), F(1, 2), F(1, 2)),
        (F(1, 3), F(1, 3), F(2, 3), F(2, 3)),
        (F(1, 3), F(1, 2), F(1, 2), F(2, 3)),
        (F(1, 4), F(1, 2), F(1, 2), F(3, 4)),
        (F(1, 8), F(3, 8), F(5, 8), F(7, 8)),
        (F(1, 6), F(1, 3), F(2, 3), F(5, 6)),
        (F(1, 12), F(5, 12), F(7, 12), F(11, 12)),
        (F(1, 4), F(1, 4), F(3, 4), F(3, 4)),
        (F(1, 4), F(1, 3), F(2, 3), F(3, 4)),
        (F(1, 6), F(1, 4), F(3, 4), F(5, 6)),
        (F(1, 6), F(1, 6), F(5, 6), F(5, 6)),
        (F(1, 6), F(1, 2), F(1, 2), F(5, 6)),
    ),
}

ALL_TABLE_ALPHAS = tuple(
    alphas for n in sorted(TABLE_CASES) for alphas in TABLE_CASES[n]
)
