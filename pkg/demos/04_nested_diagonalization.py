"""Diagonalization by three nested Hermitian reflections.

Conjugating A by reflections M1, M2, M3 -- each with entries confined to a
single complex subalgebra -- drives the off-diagonal entries to zero while
preserving trace, sigma, and determinant at every step.  The nesting
M3(M2(M1 A M1)M2)M3 matters: matrices over different complex subalgebras do
not associate.
"""

import numpy as np

from albert import char_poly, diagonalize, sampling, sandwich, solve_characteristic

rng = np.random.default_rng(4)

A = sampling.random_jordan(rng)
tr0, sg0, dt0 = char_poly(A)
print(f"random octonionic matrix: trace {tr0:.6f}, sigma {sg0:.6f}, det {dt0:.6f}")

result = diagonalize(A)
print(f"reflections applied: {len(result.steps)}")

B = A
for k, M in enumerate(result.steps, start=1):
    B = sandwich(M, B)
    tr, sg, dt = char_poly(B)
    off = max(B.a.norm(), B.b.norm(), B.c.norm())
    print(f"  after M{k}: off-diagonal {off:.3e}, invariant drift "
          f"({tr - tr0:+.1e}, {sg - sg0:+.1e}, {dt - dt0:+.1e})")

print(f"final diagonal: {tuple(round(d, 6) for d in result.diagonal)}")
roots = solve_characteristic(tr0, sg0, dt0)
print(f"cubic roots:    {tuple(round(r, 6) for r in sorted(roots.roots, reverse=True))}")
print(f"largest off-diagonal residual: {result.residual:.3e}")

print()
print("each reflection squares to the identity:")
for k, M in enumerate(result.steps, start=1):
    from albert import JordanMatrix, jordan_product
    dev = (jordan_product(M, M) - JordanMatrix.identity()).norm()
    print(f"  |M{k}^2 - I| = {dev:.3e}")
