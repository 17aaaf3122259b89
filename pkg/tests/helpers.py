"""Golden matrices and small utilities shared across the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from jordanform import Mat, Poly
from jordanform.testkit import BlockSpec, random_similar

# 4x4 nilpotent with a single chain of height 4; e4 generates it.
NILPOTENT_4X4 = Mat([
    [0, 1, 0, 1],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [0, 0, 0, 0],
])

# Mixed spectrum: eigenvalue 2 with blocks {2, 1}, eigenvalue 4 with {1}.
MIXED_4X4 = Mat([
    [2, 0, 2, 1],
    [0, 2, 1, 1],
    [0, 0, 2, 2],
    [0, 0, 0, 4],
])

# The nilpotent part of MIXED_4X4 restricted to its 3-dimensional eigenspace.
SHIFTED_3X3 = Mat([
    [0, 0, 2],
    [0, 0, 1],
    [0, 0, 0],
])

# Two 5x5 strictly upper triangular matrices, both one chain of height 5.
CONJUGATE_5X5_A = Mat([
    [0, 2, 0, 0, 0],
    [0, 0, 1, 0, 0],
    [0, 0, 0, -1, 0],
    [0, 0, 0, 0, -2],
    [0, 0, 0, 0, 0],
])
CONJUGATE_5X5_B = Mat([
    [0, 1, 2, 3, 4],
    [0, 0, 7, 6, 5],
    [0, 0, 0, 8, 9],
    [0, 0, 0, 0, 10],
    [0, 0, 0, 0, 0],
])

# 7x7 nilpotent with blocks {6, 1}.
TWO_BLOCK_7X7 = Mat([
    [0, 1, 4, 5, 6, 7, 8],
    [0, 0, 1, 6, 7, 8, 9],
    [0, 0, 0, 0, 7, 8, 9],
    [0, 0, 0, 0, 0, 10, 11],
    [0, 0, 0, 0, 0, 11, 12],
    [0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0],
])

# Known height-1 generator of the 7x7 case, alongside e7 of height 6.
SEVEN_LOW_GENERATOR = (0, 19, -6, 1, 0, 0, 0)

ROTATION_2X2 = Mat([[0, -1], [1, 0]])


def unit(n: int, i: int) -> tuple[Fraction, ...]:
    """Standard basis vector e_(i+1) in dimension n (0-based index)."""
    return tuple(Fraction(j == i) for j in range(n))


def random_nilpotent(seed: int, max_dim: int = 6) -> tuple[Mat, tuple[int, ...]]:
    """Deterministic random nilpotent matrix and its true block sizes."""
    rng = random.Random(seed)
    dim = rng.randint(1, max_dim)
    sizes = []
    remaining = dim
    while remaining:
        size = rng.randint(1, remaining)
        sizes.append(size)
        remaining -= size
    spec = BlockSpec(pairs=((Fraction(0), tuple(sizes)),))
    a, _ = random_similar(spec, seed + 777)
    return a, tuple(sorted(sizes, reverse=True))


def poly_mat_derivative(coeff):
    return tuple(tuple(p.derivative() for p in row) for row in coeff)


def mat_times_poly_mat(a: Mat, coeff):
    n = len(coeff)
    return tuple(
        tuple(sum((a[i, k] * coeff[k][j] for k in range(n)), Poly()) for j in range(n))
        for i in range(n)
    )


def scale_poly_mat(scalar, coeff):
    return tuple(tuple(scalar * p for p in row) for row in coeff)


def add_poly_mat(x, y):
    return tuple(tuple(p + q for p, q in zip(r1, r2)) for r1, r2 in zip(x, y))


def assert_exp_identities(a: Mat, exp) -> None:
    """Derivative identity per term plus identity value at t = 0."""
    for lam, coeff in exp.terms:
        lhs = add_poly_mat(scale_poly_mat(lam, coeff), poly_mat_derivative(coeff))
        rhs = mat_times_poly_mat(a, coeff)
        assert lhs == rhs
    assert exp.at_zero() == Mat.identity(a.nrows)
