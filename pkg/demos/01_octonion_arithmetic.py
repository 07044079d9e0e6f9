"""Octonion arithmetic: the doubled-quaternion table and its laws.

Walks the eight-dimensional multiplication table, shows the laws that
survive the loss of associativity (alternativity, Moufang, norm
composition), and exhibits a nonzero associator.
"""

import numpy as np

from albert import Octonion, associator, e

rng = np.random.default_rng(1)


print("== basis products ==")
print(f"e1 e2 = {e(1) * e(2)}")
print(f"e1 e4 = {e(1) * e(4)}")
print(f"e2 e4 = {e(2) * e(4)}")
print(f"e3 e4 = {e(3) * e(4)}")
print(f"e7 e7 = {e(7) * e(7)}")

print()
print("== anticommutativity of distinct imaginary units ==")
print(f"e2 e5 = {e(2) * e(5)},   e5 e2 = {e(5) * e(2)}")

print()
print("== norm composition |xy| = |x||y| ==")
x = Octonion(rng.uniform(-1, 1, 8))
y = Octonion(rng.uniform(-1, 1, 8))
print(f"|xy| - |x||y| = {(x * y).norm() - x.norm() * y.norm():.3e}")

print()
print("== associativity fails, alternativity holds ==")
print(f"[e1, e2, e4] = (e1 e2) e4 - e1 (e2 e4) = {associator(e(1), e(2), e(4))}")
print(f"[e1, e2, e3] = {associator(e(1), e(2), e(3))}   (quaternionic triple)")
z = Octonion(rng.uniform(-1, 1, 8))
alt = ((x * x) * z - x * (x * z)).norm()
print(f"|(xx)z - x(xz)| = {alt:.3e}   (alternative law, random x, z)")

print()
print("== Moufang identity (x(yx))z = x(y(xz)) ==")
lhs = (x * (y * x)) * z
rhs = x * (y * (x * z))
print(f"residual = {(lhs - rhs).norm():.3e}")

print()
print("== inverses ==")
xi = x.inverse()
print(f"|x x^-1 - 1| = {(x * xi - Octonion.from_real(1.0)).norm():.3e}")
