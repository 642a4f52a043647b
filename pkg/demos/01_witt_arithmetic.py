#!/usr/bin/env python3
"""Tour of the truncated Witt ring W_N(F_{p^m}).

Run: python demos/01_witt_arithmetic.py
"""

import random

from wittlat import witt_ring

# For m = 1 the ring W_N(F_p) is just Z/p^N in disguise: the integer codec
# is exact, and the digit view shows the Teichmueller expansion.
R = witt_ring(2, 3)  # W_3(F_2), i.e. Z/8
print("ring:", R)
for k in (0, 1, 2, 3, 6):
    print(f"  {k} mod 8 has Witt digits {R.from_int(k).digits()}")

# Teichmueller representatives are the multiplicative lifts: in Z/25 the
# lift of 2 is 7, the unique x with x^5 = x and x = 2 (mod 5).
R25 = witt_ring(5, 2)
xi2, xi3 = R25.teichmuller((2,)), R25.teichmuller((3,))
print("\nxi(2) in Z/25 =", xi2.to_int(), " xi(3) =", xi3.to_int())
print("xi(2)*xi(3) == xi(6 mod 5=1)?", xi2 * xi3 == R25.teichmuller((1,)))
print("xi(2)+xi(3) =", (xi2 + xi3).to_int(), "(the lifts sum to zero here)")

# Verschiebung shifts digits right; composed with Frobenius it is
# multiplication by p.
x = R.from_int(3)
print("\ndigits of 3:", x.digits())
print("digits of V(3):", x.verschiebung().digits(), "= digits of", (3 * 2) % 8)
print("F(V(x)) == p*x?", x.verschiebung().frobenius() == R.from_int(2) * x)

# Extension fields work the same way; elements live in the unramified
# extension (Z/p^N)[x]/(Phi) with Phi dividing x^{p^m} - x.
R4 = witt_ring(2, 3, m=2)  # W_3(F_4)
print("\nW_3(F_4) lifted modulus:", R4.phi)
rng = random.Random(0)
a, b = R4.random(rng), R4.random(rng)
print("a      =", a, "digits", a.digits())
print("a*b    =", a * b)
print("aout==a?", R4.from_digits(a.digits()) == a)
print("unit inverse check:", (u := R4.random_unit(rng)) * u.inverse() == R4.one)

# Valuations: index of the first nonzero digit, with the min rule for sums
# of different valuations.
v_demo = [(R.from_int(4), 2), (R.from_int(6), 1), (R.zero, 3)]
print("\nvaluations:", [(e.to_int(), e.valuation()) for e, _ in v_demo])
a, b = R.from_int(4), R.from_int(2)
print("v(4+2) == min(v(4), v(2))?", (a + b).valuation() == min(a.valuation(), b.valuation()))
