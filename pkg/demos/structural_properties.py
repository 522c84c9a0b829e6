#!/usr/bin/env python3
"""Structural facts about the leading coefficients, across all orders.

For orders [k/l] with k + l + 1 = n the numerator is homogeneous of degree
l + 1 in the coordinates and the denominator of degree l, so their degrees
always differ by one.  Whenever k >= 1 the numerator's coefficients sum to
zero (two columns of its defining determinant coincide at x = (1,...,1)),
and likewise for the denominator when l >= 1; at order zero the sum is a
Vandermonde product instead, and provably nonzero.
"""

from fractions import Fraction

from hirotaweb import WebSpec, highest_coefficients, structural_properties

print(f"{'n':>3} {'order':>7} {'deg num':>8} {'deg den':>8} "
      f"{'sum num':>9} {'sum den':>9}  all checks")
for n in range(2, 7):
    for k in range(n):
        l = n - 1 - k
        spec = WebSpec.numeric(n, k, l)
        p_top, q_top = highest_coefficients(spec)
        ones = [Fraction(1)] * n
        checks = structural_properties(spec)
        print(f"{n:>3} {f'[{k}/{l}]':>7} "
              f"{p_top.homogeneous_degree():>8} {q_top.homogeneous_degree():>8} "
              f"{str(p_top.evaluate(ones)):>9} {str(q_top.evaluate(ones)):>9}  "
              f"{'ok' if all(c.ok for c in checks) else 'FAIL'}")

print()
print("The 3D closed form, with the nodes left symbolic:")
spec = WebSpec.symbolic(3, 1, 1)
p_top, q_top = highest_coefficients(spec)
names = spec.names()
print(f"  numerator   {p_top.text(names)}")
print(f"  denominator {q_top.text(names)}")
print("  substituting any pairwise distinct nodes gives a concrete solution;")
print("  the coefficient sums vanish identically in the nodes:")
ones_map = {i: Fraction(1) for i in range(3)}
print(f"  numerator sum   -> {p_top.eliminate(ones_map).text(['l1', 'l2', 'l3'])}")
print(f"  denominator sum -> {q_top.eliminate(ones_map).text(['l1', 'l2', 'l3'])}")
