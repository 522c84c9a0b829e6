#!/usr/bin/env python3
"""Two ways of manufacturing new solutions from old ones.

Restriction: coordinate hyperplanes are leaves of the web, so fixing any
x_i = const in an n-dimensional solution yields a solution of the
(n-1)-dimensional system without that node.  Fractional-linear maps: outer
and per-coordinate inner maps send solutions to solutions of the same
system, and inversion exchanges the numerator and denominator orders.
"""

from fractions import Fraction

from hirotaweb import (Mobius, WebSpec, build_solution, restrict,
                       restricted_nodes, transform, verify_hirota)

sol = build_solution(WebSpec.numeric(4, 2, 1))
print("4D solution, orders [2/1], nodes 1, 2, 3, 4:")
print(f"  f = ({sol.p_top})/({sol.q_top})")
print()

for value in (Fraction(0), Fraction(1)):
    restricted = restrict(sol, 4, value)
    nodes = restricted_nodes(sol.spec, 4)
    report = verify_hirota(restricted, nodes=nodes)
    hom = (restricted.num.homogeneous_degree(), restricted.den.homogeneous_degree())
    sums = (restricted.num.evaluate([1, 1, 1]), restricted.den.evaluate([1, 1, 1]))
    print(f"x4 = {value}:  f -> {restricted}")
    print(f"  3D residual system (nodes {', '.join(str(v) for v in nodes)}): "
          f"{report.summary()}")
    print(f"  homogeneity degrees (num, den): {hom}")
    print(f"  coefficient sums at (1,1,1): num {sums[0]}, den {sums[1]}")
    print()

print("Inversion relates mirror orders: 1/f_[2/1](1/x) equals f_[1/2](x).")
mirror = build_solution(WebSpec.numeric(4, 1, 2))
swapped = transform(sol.f, Mobius.inversion(), [Mobius.inversion()] * 4)
print(f"  exact equality of rational functions: {swapped == mirror.f}")
print()

print("A random fractional-linear dressing of the 3D solution still solves:")
sol3 = build_solution(WebSpec.numeric(3, 1, 1))
outer = Mobius(2, 1, 1, 3)
inner = [Mobius(1, -2, 0, 1), Mobius(3, 0, 1, 1), Mobius(0, 1, 1, 0)]
moved = transform(sol3.f, outer, inner)
print(f"  {verify_hirota(moved, nodes=sol3.nodes()).summary()}")
