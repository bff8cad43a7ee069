"""Seeded random exact objects for randomized property suites.

Entries are drawn uniformly from {-2, -1, 0, 1, 2}.  The sparse variants zero
each entry with probability ``zero_prob`` first, which makes identities such
as the O-operator equation hold often enough to exercise both directions of
an equivalence.
"""

from __future__ import annotations

import random

from .scalar_linalg import Matrix, is_invertible
from .tensor_cybe import Tensor2

VALUES = (-2, -1, 0, 1, 2)
DEFAULT_SEED = 20071105


def rng(seed: int | None = None) -> random.Random:
    return random.Random(DEFAULT_SEED if seed is None else seed)


def _entry(r: random.Random, zero_prob: float) -> int:
    if zero_prob and r.random() < zero_prob:
        return 0
    return r.choice(VALUES)


def random_matrix(r: random.Random, rows: int, cols: int, zero_prob: float = 0.0) -> Matrix:
    return Matrix.from_rows([[_entry(r, zero_prob) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_invertible(r: random.Random, n: int, zero_prob: float = 0.0) -> Matrix:
    while True:
        m = random_matrix(r, n, n, zero_prob)
        if is_invertible(m):
            return m


def random_tensor(r: random.Random, n: int, zero_prob: float = 0.0) -> Tensor2:
    return Tensor2.from_rows([[_entry(r, zero_prob) for _ in range(n)] for _ in range(n)])


def random_skew(r: random.Random, n: int, zero_prob: float = 0.0) -> Tensor2:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            x = _entry(r, zero_prob)
            rows[i][j], rows[j][i] = x, -x
    return Tensor2.from_rows(rows)


def random_nondegenerate_skew(r: random.Random, n: int, zero_prob: float = 0.0) -> Tensor2:
    if n % 2:
        raise ValueError("a skew tensor on an odd-dimensional space is always degenerate")
    while True:
        t = random_skew(r, n, zero_prob)
        if is_invertible(t.as_matrix()):
            return t
