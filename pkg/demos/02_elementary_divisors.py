#!/usr/bin/env python3
"""Determinants and elementary divisors of matrices over W_N.

Run: python demos/02_elementary_divisors.py
"""

import random

from wittlat import (GroupShape, WittMat, identity, minor_valuations,
                     p_power_diagonal, sample_group, snf, witt_ring)

R = witt_ring(2, 3)  # Z/8

# The ring has zero divisors, so elimination pivots on minimal-valuation
# entries.  Determinants stay exact.
A = WittMat.from_ints(R, [[2, 1], [2, 2]])
print("A =", A)
print("det A =", A.det().to_int(), " digits:", A.det_digits())

# snf() returns transforms with left * A * right equal to a pure p-power
# diagonal, sorted descending; units are normalized into the right factor.
B = WittMat.from_ints(R, [[4, 0], [1, 1]])
res = snf(B)
print("\nB =", B)
print("divisors:", res.divisors.exponents)
print("left * B * right =", res.left * B * res.right)

# The divisor type is the complete invariant of the two-sided GL_n action:
# conjugating by random invertible matrices never changes it.
rng = random.Random(1)
gamma = (2, 0)
D = p_power_diagonal(R, gamma)
for _ in range(3):
    x = sample_group(R, 2, GroupShape.FULL, rng)
    y = sample_group(R, 2, GroupShape.FULL, rng)
    print("divisors of x*D*y:", snf(x * D * y).divisors.exponents)

# Cross-check against determinantal minors: the minimal valuation over all
# k x k minors equals the sum of the k smallest exponents (capped at N).
C = WittMat.from_ints(R, [[2, 0, 1], [4, 2, 0], [0, 0, 4]])
print("\nC divisor type:", snf(C).divisors.exponents)
print("minor valuation profile:", minor_valuations(C))

# Subgroup shapes: the Iwahori condition asks for subdiagonal entries
# divisible by p.
from wittlat import in_group
T = WittMat.from_ints(R, [[1, 1], [2, 1]])
print("\nT in B?", in_group(T, GroupShape.B),
      " in B-?", in_group(T, GroupShape.B_MINUS))
print("T * T^-1 == I?", T * T.inverse() == identity(R, 2))
