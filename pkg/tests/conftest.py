"""Shared helpers: deterministic randomized case generators."""

import math
import random
from fractions import Fraction

from hypermono.arith import euler_phi
from hypermono.cases import TABLE_CASES


def random_cyclotomic_multisets(count=10, max_n=6, seed=97531):
    """Multisets of cyclotomic indices (each >= 2) with total degree
    between 2 and max_n; deterministic via the seed."""
    rng = random.Random(seed)
    pool = [m for m in range(2, 31) if euler_phi(m) <= max_n]
    out, seen = [], set()
    while len(out) < count:
        target = rng.randint(2, max_n)
        ms, tot, guard = [], 0, 0
        while tot < target and guard < 60:
            m = rng.choice(pool)
            if tot + euler_phi(m) <= target:
                ms.append(m)
                tot += euler_phi(m)
            guard += 1
        key = tuple(sorted(ms))
        if tot != target or key in seen:
            continue
        seen.add(key)
        out.append(key)
    return out


def alphas_from_multiset(ms):
    alphas = []
    for m in ms:
        for c in range(1, m + 1):
            if math.gcd(c, m) == 1:
                alphas.append(Fraction(c, m))
    return tuple(sorted(alphas))


def identity_case_alphas(extra=10, max_n=6, seed=97531):
    """The 22 table exponent lists plus deterministic random cyclotomic
    exponent lists."""
    cases = [alphas for n in sorted(TABLE_CASES) for alphas in TABLE_CASES[n]]
    for ms in random_cyclotomic_multisets(extra, max_n, seed):
        cases.append(alphas_from_multiset(ms))
    return cases


def random_nonresonant_instances(count=5, seed=424242, nmax=4, qmax=12):
    """Admissible (alphas, betas) pairs: all 2n exponents pairwise
    distinct mod 1 (the closed-form matrix around infinity needs the
    alphas distinct too), betas in (0, 1], alphas in (0, 1)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(2, nmax)
        alphas = []
        attempts = 0
        while len(alphas) < n and attempts < 300:
            attempts += 1
            q = rng.randint(2, qmax)
            cand = Fraction(rng.randint(1, q - 1), q)
            if any((cand - a) % 1 == 0 for a in alphas):
                continue
            alphas.append(cand)
        if len(alphas) < n:
            continue
        betas = []
        attempts = 0
        while len(betas) < n and attempts < 300:
            attempts += 1
            if not betas and rng.random() < 0.5:
                cand = Fraction(1)
            else:
                q = rng.randint(2, qmax)
                cand = Fraction(rng.randint(1, q), q)
            if any((cand - b) % 1 == 0 for b in betas):
                continue
            if any((cand - a) % 1 == 0 for a in alphas):
                continue
            betas.append(cand)
        if len(betas) == n:
            out.append((tuple(alphas), tuple(betas)))
    return out


def match_multisets(got, expected) -> float:
    """Greedy closest-pair matching; returns the largest pair distance."""
    got = list(got)
    err = 0.0
    for e in expected:
        best = min(range(len(got)), key=lambda i: abs(got[i] - e))
        err = max(err, float(abs(got[best] - e)))
        got.pop(best)
    return err
