"""Null 2x2 momenta, their rank-one factors, and p-square classes.

A 2x2 octonionic Hermitian momentum with zero determinant factors as
P = +/- theta theta'; the solutions of the massless equation P~ psi = 0 are
psi = theta xi for free octonionic xi.  Stacking theta and conj(xi) into a
3-component Psi gives a rank-one 3x3 matrix PP with PP * PP = 0.  The
p-square class counts nonzero eigenvalues of a 3x3 matrix and is invariant
under the diagonalizing reflections.
"""

import numpy as np

from albert import (
    Hermitian2,
    JordanMatrix,
    classify_psquare,
    diagonalize,
    dirac_solve,
    freudenthal_product,
    psi_pack,
    sampling,
    sandwich,
)
from albert.octonion import e

rng = np.random.default_rng(6)


print("== factoring null momenta ==")
P = Hermitian2(s=1.0, t=1.0, z=e(7))
theta, sign = dirac_solve(P)
print(f"P with s = t = 1, z = e7 (det {P.det():.1f}): "
      f"theta = ({theta[0]}, {theta[1]}), sign {sign:+d}")

P, _, _ = sampling.random_null_hermitian2(rng)
theta, sign = dirac_solve(P)
recon = Hermitian2.from_outer(theta) * float(sign)
print(f"random null momentum: reconstruction residual {(P - recon).norm():.3e}")

print()
print("== solutions of the massless equation ==")
xi = sampling.random_octonion(rng)
psi = (theta[0] * xi, theta[1] * xi)
out = P.trace_reversal().apply(psi)
print(f"|P~ (theta xi)| = {np.hypot(out[0].norm(), out[1].norm()):.3e} "
      f"for a random octonionic xi")

print()
print("== packing into a rank-one 3x3 matrix ==")
theta = sampling.random_complex_theta(rng)
Psi, PP = psi_pack(theta, xi)
print(f"PP trace {PP.trace():.6f}, |PP * PP| = "
      f"{freudenthal_product(PP, PP).norm():.3e}")

print()
print("== p-square classes count nonzero eigenvalues ==")
for A, label in (
    (JordanMatrix.identity(), "identity"),
    (JordanMatrix.diag(1, 1, 0), "diag(1,1,0)"),
    (JordanMatrix.diag(1, 0, 0), "diag(1,0,0)"),
    (JordanMatrix.zero(), "zero"),
    (PP, "packed PP"),
):
    print(f"  {label}: class {classify_psquare(A).p}")

A = sampling.random_jordan(rng)
p0 = classify_psquare(A).p
B = A
drift = []
for M in diagonalize(A).steps:
    B = sandwich(M, B)
    drift.append(classify_psquare(B).p)
print(f"random matrix class {p0}; after each reflection step: {drift}")
