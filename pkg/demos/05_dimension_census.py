#!/usr/bin/env python3
"""Dimension formulas, the linear stabilizer oracle, and the tiny census.

Run: python demos/05_dimension_census.py
"""

from wittlat import (GroupShape, dim_lattice_orbit, dim_matrix_orbit,
                     dim_report, stabilizer_dim, subregular_cochar,
                     tiny_exhaustive_census)

# The stabilizer condition X gamma = gamma Y decouples entrywise, so its
# solution-space dimension is countable exactly.  The closed forms for the
# subregular strata follow.
n, r = 3, 2
nr, N = n * r, n * r + 1
print(f"n={n}, r={r}: dim Mat = {n*n*N}")
for i in range(nr // 2 + 1):
    g = subregular_cochar(n, r, i)
    stab = stabilizer_dim(g, (GroupShape.FULL, GroupShape.FULL), N)
    orbit = dim_matrix_orbit(g, N)
    lat = dim_lattice_orbit(g, r)
    print(f"  i={i}: gamma={g.exponents}  stab={stab}  orbit={orbit}"
          f"  codim={n*n*N - orbit}  lattice-orbit={lat}")

# Parabolic and Iwahori pairs give the same orbit dimensions.
g = subregular_cochar(n, r, 1)
for shapes, label in [((GroupShape.P, GroupShape.P_MINUS), "P x P-"),
                      ((GroupShape.B, GroupShape.B_MINUS), "B x B-")]:
    print(f"orbit dim via {label}:", dim_matrix_orbit(g, N, shapes))

print("\nfull report at i=1:", dim_report(g, r).to_obj())

# The census enumerates all 4096 2x2 matrices over Z/8 and confirms the
# orbit-stabilizer arithmetic at the group level: orbit size equals
# |G|^2 / #{(x, y) : x gamma = gamma y}.
census = tiny_exhaustive_census()
print("\n|G| =", census.group_order)
print("divisor-type histogram:")
for exps, count in sorted(census.histogram.items()):
    print(f"  {exps}: {count}")
print("stabilizer pair counts:", census.stab_pairs)
print("orbit counts consistent?", census.orbit_counts_ok)
print("cover partition: ", census.histogram[(2, 0)], "+",
      census.histogram[(1, 1)], "=", census.cover_size)
