"""Spectral decomposition into orthogonal primitive idempotents.

Every 3x3 octonionic Hermitian matrix splits as A = sum lambda_i P_i with
the P_i rank-one idempotents that are mutually orthogonal and complete.
Shows the generic path, the two degenerate branches (double and triple
roots), and how an epsilon-perturbation of a degenerate matrix splits the
repeated eigenvalue without losing the decomposition.
"""

import numpy as np

from albert import JordanMatrix, Octonion, decompose, jordan_product, sampling

rng = np.random.default_rng(3)


def show(dec):
    print(f"  eigenvalues: {tuple(round(v, 6) for v in dec.eigenvalues)}")
    res = dec.residuals
    print(f"  residuals: eigen {max(res['eigen']):.2e}, "
          f"orthogonality {res['orthogonality']:.2e}, "
          f"completeness {res['completeness']:.2e}, "
          f"reconstruction {res['reconstruction']:.2e}")


print("== generic octonionic matrix: three distinct eigenvalues ==")
A = sampling.random_jordan(rng)
dec = decompose(A)
show(dec)
P0 = dec.idempotents[0]
print(f"  first idempotent: trace {P0.trace():.6f}, "
      f"|P o P - P| = {(jordan_product(P0, P0) - P0).norm():.2e}")

print()
print("== double root: the all-ones matrix ==")
one = Octonion.from_real(1.0)
B = JordanMatrix(a=one, b=one, c=one)
dec = decompose(B)
show(dec)
print("  eigenvalue-2 idempotent equals (A + I)/3:",
      dec.idempotents[0].isclose((B + JordanMatrix.identity()) / 3.0))

print()
print("== triple root: a scalar matrix decomposes exactly ==")
dec = decompose(JordanMatrix.identity() * -2.0)
show(dec)

print()
print("== constructed degenerate matrix lambda I + w w' ==")
A, lam, sign, w = sampling.random_double_root_matrix(rng)
dec = decompose(A)
print(f"  built with repeated eigenvalue {lam:.6f}")
show(dec)

print()
print("== epsilon-perturbation splits the double root ==")
eps = 1e-3
E = sampling.random_jordan(rng)
B = A + E * (eps / (1.0 + E.norm()))
dec = decompose(B)
show(dec)
worst = max(
    (jordan_product(A, P) - P * v).norm()
    for v, P in zip(dec.eigenvalues, dec.idempotents)
)
print(f"  perturbed idempotents still nearly split the original: "
      f"max |A o P - lambda P| = {worst:.2e} (eps = {eps})")
