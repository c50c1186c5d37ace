"""Seeded random inputs for property tests and the acceptance suite."""

from __future__ import annotations

import random

from .linalg import Matrix


def random_matrix(field, rng: random.Random, lo: int = -5, hi: int = 5) -> Matrix:
    return Matrix.from_rows(field, [[rng.randint(lo, hi) for _ in range(3)]
                                    for _ in range(3)])


def random_full_rank(field, rng: random.Random) -> Matrix:
    while True:
        M = random_matrix(field, rng)
        if M.rank() == 3:
            return M


def random_rank_two(field, rng: random.Random) -> Matrix:
    """Two random independent rows; the third a random combination."""
    while True:
        r1 = [rng.randint(-4, 4) for _ in range(3)]
        r2 = [rng.randint(-4, 4) for _ in range(3)]
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        r3 = [a * x + b * y for x, y in zip(r1, r2)]
        rows = [r1, r2, r3]
        rng.shuffle(rows)
        M = Matrix.from_rows(field, rows)
        if M.rank() == 2:
            return M


def random_rank_one(field, rng: random.Random) -> Matrix:
    while True:
        u = [rng.randint(-4, 4) for _ in range(3)]
        v = [rng.randint(-4, 4) for _ in range(3)]
        M = Matrix.from_rows(field, [[ui * vj for vj in v] for ui in u])
        if M.rank() == 1:
            return M


def random_rank(field, rng: random.Random, rank: int) -> Matrix:
    if rank == 0:
        return Matrix.zero(field, 3, 3)
    if rank == 1:
        return random_rank_one(field, rng)
    if rank == 2:
        return random_rank_two(field, rng)
    return random_full_rank(field, rng)


def random_monomial_matrix(field, rng: random.Random) -> Matrix:
    perm = [0, 1, 2]
    rng.shuffle(perm)
    scalars = [rng.choice([x for x in range(-4, 5) if x != 0]) for _ in range(3)]
    rows = [[scalars[i] if j == perm[i] else 0 for j in range(3)] for i in range(3)]
    return Matrix.from_rows(field, rows)
