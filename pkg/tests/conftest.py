"""Shared generators for randomized tests. Everything is seeded explicitly."""

import random
from fractions import Fraction

from rlct import ArrangementSpec, NormalizedArrangement, RationalMatrix, normalize, rank


def random_rational(rng: random.Random, span: int = 4, max_den: int = 3) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, max_den))


def random_central_arrangement(
    rng: random.Random,
    max_n: int = 10,
    max_d: int = 5,
    max_mult: int = 4,
    span: int = 4,
    max_den: int = 1,
) -> NormalizedArrangement:
    """A random normalized central arrangement; rows are retried until nonzero."""
    d = rng.randint(1, max_d)
    n = rng.randint(1, max_n)
    rows = []
    for _ in range(n):
        while True:
            row = [Fraction(rng.randint(-span, span), rng.randint(1, max_den)) for _ in range(d)]
            if any(row):
                break
        rows.append(row)
    mults = [rng.randint(1, max_mult) for _ in range(n)]
    return normalize(ArrangementSpec(RationalMatrix(rows, cols=d), mults))


def random_invertible(rng: random.Random, d: int, span: int = 3) -> RationalMatrix:
    while True:
        candidate = RationalMatrix(
            [[Fraction(rng.randint(-span, span)) for _ in range(d)] for _ in range(d)]
        )
        if rank(candidate) == d:
            return candidate
