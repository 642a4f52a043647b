#!/usr/bin/env python3
"""Exact degeneration witnesses between orbit strata.

Run: python demos/04_degeneration_witnesses.py
"""

from wittlat import (Cochar, deformation_matrix, degeneration_chain,
                     divisor_type, transfer_witness, witt_ring)

R = witt_ring(2, 3)

# The deformed diagonal diag(p^{r1}, p^{rj}) + p^{rj-b} xi(t) at the corner
# has divisor type (r1+b, rj-b) for EVERY t != 0, while the t -> 0 limit is
# the plain diagonal (r1, rj).  That jump is the closure witness.
eta = deformation_matrix(R, (1, 1), 1, 1, (1,))
print("eta(1) =", eta)
print("divisor type of eta(1):", divisor_type(eta).exponents)
print("divisor type of the t=0 diagonal: (1, 1)")

# The witness is an exact four-factor identity with unipotent outer factors.
w = transfer_witness(R, 1, 1, 1, (1,))
for k, f in enumerate(w.factors):
    print(f"factor {k}:", f)
prod = w.factors[0] * w.factors[1] * w.factors[2] * w.factors[3]
print("product == eta(1)?", prod == w.target)

# Chains of single-unit transfers certify any dominance relation.  Each step
# carries an embedded n x n witness, verified at construction.
R7 = witt_ring(2, 7)
steps = degeneration_chain(R7, Cochar(3, (2, 2, 2)), Cochar(3, (4, 2, 0)))
print("\nchain (2,2,2) <- (4,2,0):")
for s in steps:
    print(f"  {s.lower.exponents} <- {s.upper.exponents}"
          f"  (move one unit from slot {s.i} to slot {s.j})")
    print("    x * eta' * y^-1 == eta(t)?",
          s.x * s.eta_prime * s.y.inverse() == s.deformed)

# Moves need not involve the leading slot.
steps = degeneration_chain(R7, Cochar(3, (3, 2, 1)), Cochar(3, (3, 3, 0)))
print("\nchain (3,2,1) <- (3,3,0):",
      [(s.lower.exponents, (s.i, s.j)) for s in steps])
