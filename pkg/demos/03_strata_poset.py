#!/usr/bin/env python3
"""Orbit strata of the matrix cover, dominance order, classification.

Run: python demos/03_strata_poset.py
"""

from wittlat import (WittMat, classify, dominance_leq, enumerate_strata,
                     in_orbit_closure, p_power_diagonal, sample_orbit,
                     valuation_predicate, witt_ring)

# Matrices with det = p^{nr} * unit decompose into two-sided orbits indexed
# by dominant exponent vectors summing to nr; closure order is dominance.
n, r = 3, 1
poset = enumerate_strata(n, r)
print(f"strata for n={n}, r={r} (nr = {n*r}):")
for idx, c in enumerate(poset.strata):
    a = n * r - c.exponents[0]
    print(f"  [{idx}] {c.exponents}  stratum index a = {a}")
print("Hasse covers (lower <- upper):", poset.hasse)
print("dominance (1,1,1) <= (2,1,0)?",
      dominance_leq(poset.strata[-1], poset.strata[1]))

# classify() reports membership, divisor type, corner valuations and the
# deepest subregular index the matrix belongs to.
R = witt_ring(2, n * r + 1)
mu = p_power_diagonal(R, (3, 0, 0))
print("\nclassify(diag(p^3, 1, 1)):", classify(mu, r).to_obj())
gsr = p_power_diagonal(R, (2, 1, 0))
print("classify(diag(p^2, p, 1)):", classify(gsr, r).to_obj())

# Orbit samples classify back to their stratum.
A = sample_orbit(R, poset.strata[1], seed=5)
print("\nsampled from (2,1,0):", classify(A, r).to_obj())

# Caveat worth seeing once: the corner-valuation description of the
# subregular stratum is chart-local.  This matrix satisfies both corner
# conditions at i = 1 but lies in the open stratum, so closure membership
# must be decided by divisor type.
R2 = witt_ring(2, 5)
E = WittMat.from_ints(R2, [[2, 1], [0, 8]])
print("\nE =", E)
print("valuation_predicate(E, 1):", valuation_predicate(E, 1))
print("in_orbit_closure(E, 1):  ", in_orbit_closure(E, 1))
print("classify(E, 2):", classify(E, 2).to_obj())
