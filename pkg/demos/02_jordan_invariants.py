"""Jordan and Freudenthal products on 3x3 octonionic Hermitian matrices.

Builds matrices from diagonal reals and three octonionic entries, computes
the trace / sigma / determinant invariants, and checks the polynomial
identities that make the spectral theory work.  Ends with the rank-one
picture: for real vectors the Jordan and Freudenthal products reduce to dot
and cross products.
"""

import numpy as np

from albert import (
    JordanMatrix,
    Octonion,
    char_poly,
    freudenthal_product,
    jordan_product,
    rank1_from_vector,
    sampling,
)
from albert.jordan import OctVector3

rng = np.random.default_rng(2)


print("== invariants of a simple diagonal matrix ==")
A = JordanMatrix.diag(1, 2, 3)
tr, sigma, det = char_poly(A)
print(f"diag(1,2,3): trace = {tr}, sigma = {sigma}, det = {det}")

print()
print("== the all-ones matrix ==")
one = Octonion.from_real(1.0)
B = JordanMatrix(a=one, b=one, c=one)
tr, sigma, det = char_poly(B)
print(f"trace = {tr}, sigma = {sigma}, det = {det}")
print("characteristic cubic t^3 - 3t - 2 = (t-2)(t+1)^2: eigenvalues 2, -1, -1")

print()
print("== a random octonionic matrix satisfies its characteristic equation ==")
A = sampling.random_jordan(rng)
tr, sigma, det = char_poly(A)
A2 = jordan_product(A, A)
A3 = jordan_product(A2, A)
resid = A3 - A2 * tr + A * sigma - JordanMatrix.identity() * det
print(f"|A^3 - tr A^2 + sigma A - det I| = {resid.norm():.3e}")

print()
print("== square of the adjoint recovers the matrix times its determinant ==")
AxA = freudenthal_product(A, A)
resid = freudenthal_product(AxA, AxA) - A * A.det()
print(f"|(A*A)*(A*A) - det(A) A| = {resid.norm():.3e}")
print(f"det via trace form tr((A*A) o A)/3 - closed form = "
      f"{jordan_product(AxA, A).trace() / 3.0 - A.det():.3e}")

print()
print("== real 3-vectors: the products generalize dot and cross ==")
u = np.array([1.0, 2.0, 0.5])
v = np.array([-1.0, 0.5, 2.0])
U = rank1_from_vector(OctVector3(tuple(Octonion.from_real(x) for x in u)))
V = rank1_from_vector(OctVector3(tuple(Octonion.from_real(x) for x in v)))
print(f"tr(uu' o vv') = {jordan_product(U, V).trace():.6f}, "
      f"(u.v)^2 = {float(np.dot(u, v)) ** 2:.6f}")
cross = np.cross(u, v)
CC = rank1_from_vector(OctVector3(tuple(Octonion.from_real(x) for x in cross)))
print(f"|2 uu' * vv' - (uxv)(uxv)'| = "
      f"{(freudenthal_product(U, V) * 2.0 - CC).norm():.3e}")
