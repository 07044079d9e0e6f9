"""The 24x24 real oracle and the modified characteristic equation.

Left multiplication by a Jordan matrix is a symmetric linear map on the 24
real coordinates of an octonion 3-vector, so it has 24 real eigenvalues --
computable with nothing but plain linear algebra.  Their clusters satisfy
det(A - lambda I) + r = 0 with residuals r that collapse onto at most two
values of opposite sign (or zero); the true Jordan eigenvalues satisfy the
unmodified equation but need not appear among the 24.
"""

import numpy as np

from albert import (
    JordanMatrix,
    char_poly,
    modified_char_check,
    sampling,
    solve_characteristic,
)

rng = np.random.default_rng(5)


def report(A, label):
    print(f"== {label} ==")
    rep = modified_char_check(A)
    print("  lambda        mult   r")
    for lam, mult, r in rep.clusters:
        print(f"  {lam:+10.6f}  {mult:4d}   {r:+.6f}")
    roots = solve_characteristic(*char_poly(A))
    dets = [abs((A - JordanMatrix.identity() * t).det()) for t in roots.roots]
    print(f"  Jordan eigenvalues {tuple(round(r, 6) for r in roots.roots)} "
          f"satisfy the unmodified equation: max |det| = {max(dets):.2e}")
    print(f"  two-sided residual collapse: {'PASS' if rep.passed else 'FAIL'}")
    print()


report(JordanMatrix.diag(1, 2, 3), "real diagonal: residuals all zero")

A = sampling.random_jordan(rng, span=4)
report(A, "quaternionic entries: one residual group zero, one constant offset")
conj = JordanMatrix(p=A.p, m=A.m, n=A.n, a=A.a.conjugate(),
                    b=A.b.conjugate(), c=A.c.conjugate())
print(f"  (the offset equals det of the entrywise conjugate minus det: "
      f"{conj.det() - A.det():+.6f})")
print()

report(sampling.random_jordan(rng), "octonionic entries: two opposite-sign groups")
