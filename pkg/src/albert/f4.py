"""Diagonalization by nested reflections.

Every Jordan matrix A can be brought to diagonal form by conjugating with
three Hermitian involutions M1, M2, M3, each with entries in a single
complex subalgebra of the octonions.  The conjugations must stay nested,

    M3 (M2 (M1 A M1) M2) M3,

because matrices over different complex subalgebras do not associate; each
individual sandwich M X M is unambiguous (the entries of M associate with
anything), which is what :func:`albert.jordan.sandwich` computes.

The construction follows the eigenvector: given a unit eigenvector
v = (x, y, r) of a simple eigenvalue lambda, phase-aligned so r is real,

    N1^2 = |x|^2 + r^2,    M1 = [[-r, 0, x], [0, N1, 0], [conj(x), 0, r]] / N1
    N2^2 = N1^2 + |y|^2,   M2 = [[N2, 0, 0], [0, -N1, y], [0, conj(y), N1]] / N2

send v to (0, 0, 1), so the conjugated matrix is block diagonal with lambda
in the corner: [[X, 0], [0, lambda]] with X = [[s, z], [conj(z), t]].  When
N1 = 0 (or |y| = 0) the corresponding reflection degenerates to the
identity.  The final reflection diagonalises X using its larger eigenvalue
mu, whose eigenvector is (mu - t, conj(z)):

    N3 = (mu - t)^2 + |z|^2,
    M3 = [[mu - t, z, 0], [conj(z), t - mu, 0], [0, 0, sqrt(N3)]] / sqrt(N3)

with M3 = I when N3 = 0 (X already diagonal).  The result is
diag(mu, tr X - mu, lambda); each step preserves trace, sigma and
determinant, so the diagonal carries the characteristic roots.  The order
in which they appear is a convention, not canonical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .config import tolerances
from .cubic import solve_characteristic
from .exceptions import ZeroVectorError
from .jordan import (
    JordanMatrix,
    OctVector3,
    char_poly,
    extract_vector,
    phase_align,
    sandwich,
)
from .spectral import _purify, idempotent_from_q, q_matrix

__all__ = ["DiagonalizationResult", "build_m1_m2", "diagonalize"]


@dataclass(frozen=True)
class DiagonalizationResult:
    """Reflections in application order, the final diagonal, and the
    largest off-diagonal entry magnitude left after conjugation."""

    steps: tuple[JordanMatrix, ...]
    diagonal: tuple[float, float, float]
    residual: float

    def to_dict(self) -> dict:
        return {
            "steps": [M.to_dict() for M in self.steps],
            "diagonal": [float(d) for d in self.diagonal],
            "residual": float(self.residual),
        }


def build_m1_m2(v: OctVector3) -> tuple[JordanMatrix, JordanMatrix]:
    """Reflections sending the direction of v to (0, 0, 1).

    v must be nonzero and phase-aligned (third component real).  The
    matrices depend only on the direction of v; for unit v the composite
    satisfies M2 (M1 v) = (0, 0, 1).
    """
    vn = v.norm()
    if vn <= tolerances.atol:
        raise ZeroVectorError("cannot build reflections from the zero vector")
    x, y, r = (c * (1.0 / vn) for c in v.components)
    # computed from the coefficients directly: norm2() - real**2 cancels badly
    imag = float(np.linalg.norm(r.coeffs[1:]))
    if imag > tolerances.atol + tolerances.rtol:
        raise ValueError("third component is not real; phase_align the vector first")

    n1 = math.sqrt(x.norm2() + r.real**2)
    if n1 <= tolerances.atol + tolerances.rtol:
        m1 = JordanMatrix.identity()
    else:
        m1 = JordanMatrix(
            p=-r.real / n1, m=1.0, n=r.real / n1, b=x.conjugate() * (1.0 / n1)
        )
    if y.norm() <= tolerances.atol + tolerances.rtol:
        m2 = JordanMatrix.identity()
    else:
        n2 = math.sqrt(n1 * n1 + y.norm2())  # = 1 for unit v
        m2 = JordanMatrix(p=1.0, m=-n1 / n2, n=n1 / n2, c=y * (1.0 / n2))
    return m1, m2


def diagonalize(A: JordanMatrix, mtol: float | None = None) -> DiagonalizationResult:
    """Conjugate A to diagonal form, returning the steps for audit.

    The eigenvalue fed to the reflections is a simple root (the smallest
    when all are distinct); a scalar matrix returns immediately with no
    steps.
    """
    roots = solve_characteristic(*char_poly(A), mtol=mtol)
    if roots.multiplicity == "triple":
        return DiagonalizationResult(
            steps=(), diagonal=A.diagonal(), residual=A.offdiag_norm()
        )
    lam = min(roots.simple)

    P = _purify(idempotent_from_q(q_matrix(A, lam)))
    v = phase_align(extract_vector(P, rank_rtol=tolerances.residual_rtol))
    m1, m2 = build_m1_m2(v)
    b2 = sandwich(m2, sandwich(m1, A))

    # b2 is [[X, 0], [0, lam]] with X = [[s, z], [conj(z), t]] in the upper block.
    s, t, z = b2.p, b2.m, b2.a
    mu = 0.5 * ((s + t) + math.sqrt((s - t) ** 2 + 4.0 * z.norm2()))
    n3 = (mu - t) ** 2 + z.norm2()
    if n3 <= (tolerances.atol + tolerances.rtol * (1.0 + A.norm())) ** 2:
        m3 = JordanMatrix.identity()
    else:
        s3 = math.sqrt(n3)
        m3 = JordanMatrix(p=(mu - t) / s3, m=(t - mu) / s3, n=1.0, a=z * (1.0 / s3))
    b3 = sandwich(m3, b2)

    return DiagonalizationResult(
        steps=(m1, m2, m3),
        diagonal=b3.diagonal(),
        residual=max(b3.a.norm(), b3.b.norm(), b3.c.norm()),
    )
