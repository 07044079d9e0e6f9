"""Spectral decomposition in the Albert algebra.

A Jordan matrix A with characteristic roots lambda_i admits a decomposition

    A = sum_i lambda_i P_i,    P_i o P_j = 0 (i != j),    sum_i P_i = I

into orthogonal primitive idempotents.  For a simple root lambda the
idempotent comes from the cross-product square

    Q_lambda = (A - lambda I) * (A - lambda I),    P = Q_lambda / tr Q_lambda,

using tr Q_lambda = (lambda - mu)(lambda - nu), which vanishes exactly when
the root is repeated.  Repeated roots need their own constructions:

* triple root: A = lambda I and any orthogonal frame works; the diagonal
  unit matrices are returned.
* double root lambda: A - lambda I = +/- w w-dagger is rank one.  One
  eigenmatrix for lambda is built from a vector orthogonal to w, the other
  is the complement I - w w-dagger / |w|^2 - V1.  The pair spans the
  two-dimensional lambda eigenspace; the split is not canonical.

The alternative invariant form for a double root keeps the rank-two piece
whole instead of splitting it: A = mu P + lambda K with P = (A - lambda I)/
tr(A - lambda I) primitive and K = I - P its rank-two complement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import tolerances
from .cubic import CubicRoots, solve_characteristic
from .exceptions import (
    InconsistentError,
    NotAnEigenvalueError,
    NotDoubleRootError,
    ZeroQMatrixError,
)
from .jordan import (
    JordanMatrix,
    OctVector3,
    char_poly,
    extract_vector,
    freudenthal_product,
    jordan_product,
    phase_align,
    rank1_from_vector,
)
from .octonion import Octonion

__all__ = [
    "SpectralDecomposition",
    "q_matrix",
    "idempotent_from_q",
    "double_root_split",
    "invariant_double_decomposition",
    "decompose",
]


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending), matching idempotents and eigenvectors.

    ``residuals`` records the verification data computed during assembly:
    per-pair eigen residuals |A o P - lambda P|, the largest pairwise
    |P_i o P_j|, and the completeness and reconstruction defects.
    """

    eigenvalues: tuple[float, float, float]
    idempotents: tuple[JordanMatrix, JordanMatrix, JordanMatrix]
    eigenvectors: tuple[OctVector3, OctVector3, OctVector3]
    residuals: dict

    def to_dict(self) -> dict:
        return {
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "idempotents": [P.to_dict() for P in self.idempotents],
            "eigenvectors": [v.to_list() for v in self.eigenvectors],
            "residuals": {k: v for k, v in self.residuals.items()},
        }


def q_matrix(A: JordanMatrix, lam: float) -> JordanMatrix:
    """(A - lambda I) * (A - lambda I) for an eigenvalue lambda of A."""
    t, s, d = char_poly(A)
    scale = (1.0 + A.norm() + abs(lam)) ** 3
    value = ((lam - t) * lam + s) * lam - d
    if abs(value) > tolerances.atol + tolerances.rtol * scale:
        raise NotAnEigenvalueError(
            f"characteristic value {value:.3e} at lambda={lam!r} exceeds tolerance"
        )
    B = A - JordanMatrix.identity() * lam
    return freudenthal_product(B, B)


def idempotent_from_q(Q: JordanMatrix) -> JordanMatrix:
    """Normalise Q by its trace; fails when the trace vanishes.

    tr Q = (lambda - mu)(lambda - nu) may be negative (middle eigenvalue);
    only the magnitude is gated.
    """
    t = Q.trace()
    if abs(t) <= tolerances.atol + tolerances.rtol * (1.0 + Q.norm()):
        raise ZeroQMatrixError(
            f"tr Q = {t:.3e} vanishes to tolerance; the eigenvalue is repeated"
        )
    return Q / t


def _cycle(v: OctVector3, shift: int) -> OctVector3:
    c = v.components
    return OctVector3(tuple(c[(i + shift) % 3] for i in range(3)))


def double_root_split(A: JordanMatrix, lam: float) -> tuple[JordanMatrix, JordanMatrix]:
    """Two orthogonal primitive idempotents for a double eigenvalue lambda.

    Requires A - lambda I = +/- w w-dagger of rank one (double root, not
    triple).  The first candidate is built from a vector orthogonal to w:
    writing w = (x, y, r) with r real, v = (|y|^2, -y conj(x), 0) satisfies
    v-dagger w = 0.  When the middle component is (near-)zero the
    coordinates are cyclically permuted until the construction applies.
    """
    B = A - JordanMatrix.identity() * lam
    scale = 1.0 + A.norm() + abs(lam)
    if B.norm() <= tolerances.atol + tolerances.rtol * scale:
        raise NotDoubleRootError("A equals lambda I; the root is triple, not double")
    q_norm = freudenthal_product(B, B).norm()
    if q_norm > tolerances.atol + tolerances.mtol * scale**2:
        raise NotDoubleRootError(
            f"(A - lambda I) is not rank one (|Q| = {q_norm:.3e}); lambda is not a double root"
        )
    tb = B.trace()  # mu - lambda, nonzero for a genuine double root
    if abs(tb) <= tolerances.atol + tolerances.rtol * scale:
        raise NotDoubleRootError("tr(A - lambda I) vanishes; the root is triple, not double")
    sign = 1.0 if tb > 0 else -1.0

    w = extract_vector(B * sign, rank_rtol=tolerances.mtol)
    wn = w.norm()
    v = None
    for shift in range(3):
        wp = phase_align(_cycle(w, shift))
        x, y, _ = wp.components
        if y.norm() > tolerances.atol + tolerances.rtol * wn:
            vp = OctVector3((Octonion.from_real(y.norm2()), -(y * x.conjugate()), Octonion.zero()))
            v = _cycle(vp, -shift % 3)
            break
    if v is None:  # unreachable for w != 0: some cyclic shift has a nonzero middle entry
        raise NotDoubleRootError("could not orient w for the orthogonal construction")

    V1 = rank1_from_vector(v) / v.norm2()
    P_w = B / tb  # w w-dagger / (w-dagger w), independent of the sign
    V2 = JordanMatrix.identity() - P_w - V1

    # Deterministic order: descending trace of the pre-normalisation
    # matrices (v v-dagger versus the complement, which is born with
    # trace one); ties keep the orthogonal-vector construction first.
    t1, t2 = v.norm2(), 1.0
    if t2 > t1 and abs(t1 - t2) > tolerances.atol + tolerances.rtol * max(t1, t2):
        return (V2, V1)
    return (V1, V2)


def invariant_double_decomposition(
    A: JordanMatrix, lam: float
) -> tuple[tuple[float, JordanMatrix], tuple[float, JordanMatrix]]:
    """Basis-free form of the double-root decomposition.

    Returns ((mu, P), (lambda, K)) with P = (A - lambda I)/tr(A - lambda I)
    primitive, K = -(A - lambda I)~/tr(A - lambda I) = I - P of rank two,
    and A = mu P + lambda K.
    """
    B = A - JordanMatrix.identity() * lam
    scale = 1.0 + A.norm() + abs(lam)
    q_norm = freudenthal_product(B, B).norm()
    if q_norm > tolerances.atol + tolerances.mtol * scale**2:
        raise NotDoubleRootError(
            f"(A - lambda I) is not rank one (|Q| = {q_norm:.3e}); lambda is not a double root"
        )
    tb = B.trace()
    if abs(tb) <= tolerances.atol + tolerances.rtol * scale:
        raise NotDoubleRootError("tr(A - lambda I) vanishes; the root is triple, not double")
    mu = A.trace() - 2.0 * lam
    P = B / tb
    K = -(B.trace_reversal()) / tb
    return ((mu, P), (float(lam), K))


def _purify(P: JordanMatrix) -> JordanMatrix:
    """One idempotent-polishing step, P -> 3 P^2 - 2 P^3.

    Exact idempotents are fixed points; a near-idempotent loses its
    deviation quadratically.  Q-route idempotents need this because their
    noise grows like eps / gap^2 as two eigenvalues approach.  Powers of a
    single element associate, so the expression is unambiguous.
    """
    P2 = jordan_product(P, P)
    P3 = jordan_product(P2, P)
    return P2 * 3.0 - P3 * 2.0


def _diag_unit(k: int) -> JordanMatrix:
    vals = [0.0, 0.0, 0.0]
    vals[k] = 1.0
    return JordanMatrix.diag(*vals)


def _basis_vector(k: int) -> OctVector3:
    comps = [Octonion.zero(), Octonion.zero(), Octonion.zero()]
    comps[k] = Octonion.from_real(1.0)
    return OctVector3(tuple(comps))


def decompose(A: JordanMatrix, mtol: float | None = None) -> SpectralDecomposition:
    """Full eigenmatrix decomposition of A with verification residuals.

    Raises :class:`~albert.exceptions.InconsistentError` when the assembled
    pieces fail to reproduce A, and propagates root-multiplicity conflicts
    between the cubic solver and the Q-matrix criterion the same way.
    """
    roots: CubicRoots = solve_characteristic(*char_poly(A), mtol=mtol)
    scale = 1.0 + A.norm()

    if roots.multiplicity == "triple":
        lam = roots.repeated
        eigenvalues = (lam, lam, lam)
        idempotents = tuple(_diag_unit(k) for k in range(3))
        eigenvectors = tuple(_basis_vector(k) for k in range(3))
    elif roots.multiplicity == "double":
        lam = roots.repeated
        mu = roots.simple[0]
        # Cross-check the solver's multiplicity call against tr Q = sigma(A - lam I).
        trq = (A - JordanMatrix.identity() * lam).sigma()
        if abs(trq) > tolerances.mtol * (1.0 + max(abs(r) for r in roots.roots)) ** 2:
            raise InconsistentError(
                f"cubic solver reports a double root but tr Q = {trq:.3e} does not vanish"
            )
        try:
            P_mu = _purify(idempotent_from_q(q_matrix(A, mu)))
        except ZeroQMatrixError as exc:
            raise InconsistentError(
                "cubic solver reports a simple root with a vanishing Q matrix"
            ) from exc
        V1, V2 = double_root_split(A, lam)
        if mu > lam:
            eigenvalues = (mu, lam, lam)
            idempotents = (P_mu, V1, V2)
        else:
            eigenvalues = (lam, lam, mu)
            idempotents = (V1, V2, P_mu)
    else:
        eigenvalues = roots.roots
        try:
            idempotents = tuple(
                _purify(idempotent_from_q(q_matrix(A, lam))) for lam in eigenvalues
            )
        except ZeroQMatrixError as exc:
            raise InconsistentError(
                "cubic solver reports distinct roots with a vanishing Q matrix"
            ) from exc

    if roots.multiplicity != "triple":
        # The idempotents were validated above; extraction uses the looser
        # residual gate because Q-route idempotents inherit noise of order
        # eps / gap^2 near close eigenvalues.
        eigenvectors = tuple(
            extract_vector(P, rank_rtol=tolerances.residual_rtol) for P in idempotents
        )

    eigen_res = [
        (jordan_product(A, P) - P * lam).norm()
        for lam, P in zip(eigenvalues, idempotents)
    ]
    orth = max(
        jordan_product(idempotents[i], idempotents[j]).norm()
        for i in range(3)
        for j in range(i + 1, 3)
    )
    total = idempotents[0] + idempotents[1] + idempotents[2]
    completeness = (total - JordanMatrix.identity()).norm()
    recon = (
        idempotents[0] * eigenvalues[0]
        + idempotents[1] * eigenvalues[1]
        + idempotents[2] * eigenvalues[2]
        - A
    ).norm()
    residuals = {
        "eigen": [float(r) for r in eigen_res],
        "orthogonality": float(orth),
        "completeness": float(completeness),
        "reconstruction": float(recon),
    }
    gate = tolerances.residual_rtol * scale
    if recon > gate or completeness > gate:
        raise InconsistentError(
            f"assembled decomposition fails to reproduce A "
            f"(reconstruction {recon:.3e}, completeness {completeness:.3e})"
        )
    return SpectralDecomposition(
        eigenvalues=tuple(float(v) for v in eigenvalues),
        idempotents=idempotents,
        eigenvectors=eigenvectors,
        residuals=residuals,
    )
