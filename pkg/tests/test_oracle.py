import numpy as np
import pytest

from albert import sampling
from albert.jordan import JordanMatrix, OctVector3, matvec
from albert.octonion import MUL_TENSOR, Octonion, e
from albert.oracle import (
    cluster_values,
    coords_vector,
    embed,
    jacobi_eigenvalues,
    modified_char_check,
    vector_coords,
)


def left_mult(x):
    return np.einsum("b,bac->ca", x.coeffs, MUL_TENSOR)


def entrywise_conjugate(A):
    """Transpose of the Hermitian layout: conjugate every off-diagonal."""
    return JordanMatrix(
        p=A.p, m=A.m, n=A.n,
        a=A.a.conjugate(), b=A.b.conjugate(), c=A.c.conjugate(),
    )


class TestEmbedding:
    def test_identity_embeds_to_identity(self):
        assert np.array_equal(embed(JordanMatrix.identity()), np.eye(24))

    def test_always_symmetric(self):
        rng = np.random.default_rng(60)
        for _ in range(100):
            M = embed(sampling.random_jordan(rng))
            assert np.array_equal(M, M.T)

    def test_diagonal_blocks_scale_identity(self):
        M = embed(JordanMatrix.diag(2, 3, 5))
        expect = np.zeros((24, 24))
        for k, val in enumerate((2.0, 3.0, 5.0)):
            expect[8 * k : 8 * k + 8, 8 * k : 8 * k + 8] = val * np.eye(8)
        assert np.array_equal(M, expect)

    def test_offdiagonal_blocks_are_left_multiplications(self):
        A = JordanMatrix(a=e(1))
        M = embed(A)
        L = left_mult(e(1))
        assert np.array_equal(M[0:8, 8:16], L)
        assert np.array_equal(M[8:16, 0:8], L.T)

    def test_matches_matvec(self):
        rng = np.random.default_rng(61)
        for _ in range(100):
            A = sampling.random_jordan(rng)
            v = sampling.random_vector(rng, span=8)
            lhs = embed(A) @ vector_coords(v)
            rhs = vector_coords(matvec(A, v))
            assert np.allclose(lhs, rhs, atol=1e-13 * (1 + A.norm() * v.norm()))

    def test_coords_round_trip(self):
        rng = np.random.default_rng(62)
        v = sampling.random_vector(rng, span=8)
        assert coords_vector(vector_coords(v)).isclose(v)
        with pytest.raises(ValueError):
            coords_vector(np.zeros(23))


class TestJacobi:
    def test_matches_library_eigenvalues(self):
        rng = np.random.default_rng(63)
        for n in (4, 9, 24):
            for _ in range(20):
                B = rng.uniform(-1, 1, (n, n))
                M = (B + B.T) / 2.0
                mine = jacobi_eigenvalues(M)
                ref = np.sort(np.linalg.eigvalsh(M))[::-1]
                assert np.allclose(mine, ref, atol=1e-9 * (1 + np.linalg.norm(M)))

    def test_zero_matrix(self):
        assert np.array_equal(jacobi_eigenvalues(np.zeros((5, 5))), np.zeros(5))

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            jacobi_eigenvalues(np.zeros((3, 4)))

    def test_descending(self):
        vals = jacobi_eigenvalues(np.diag([1.0, 3.0, 2.0]))
        assert np.array_equal(vals, [3.0, 2.0, 1.0])


class TestClustering:
    def test_groups_by_gap(self):
        vals = np.array([3.0, 3.0 + 1e-9, 2.0, 1.0, 1.0 - 1e-9, 1.0 + 1e-9])
        vals = np.sort(vals)[::-1]
        out = cluster_values(vals, 1e-6)
        assert [c[1] for c in out] == [2, 1, 3]
        assert out[0][0] == pytest.approx(3.0, abs=1e-9)

    def test_singletons(self):
        out = cluster_values(np.array([5.0, 3.0, 1.0]), 1e-6)
        assert out == [(5.0, 1), (3.0, 1), (1.0, 1)]


class TestModifiedCharCheck:
    def test_real_diagonal_all_residuals_zero(self):
        report = modified_char_check(JordanMatrix.diag(1, 2, 3))
        assert report.passed
        assert len(report.clusters) == 3
        assert [mult for _, mult, _ in report.clusters] == [8, 8, 8]
        assert sorted(lam for lam, _, _ in report.clusters) == pytest.approx([1.0, 2.0, 3.0])
        for _, _, r in report.clusters:
            assert abs(r) <= 1e-8

    def test_octonionic_two_sided_collapse(self):
        rng = np.random.default_rng(64)
        for _ in range(30):
            A = sampling.random_jordan(rng)
            report = modified_char_check(A)
            scale = (1.0 + A.norm()) ** 3
            assert report.passed
            assert len(report.clusters) <= 6
            assert sum(m for _, m, _ in report.clusters) == 24
            rs = [r for _, _, r in report.clusters]
            assert max(rs) >= -1e-6 * scale
            assert min(rs) <= 1e-6 * scale

    def test_jordan_eigenvalues_satisfy_unmodified_equation(self):
        from albert.cubic import solve_characteristic
        from albert.jordan import char_poly

        rng = np.random.default_rng(65)
        for _ in range(30):
            A = sampling.random_jordan(rng)
            roots = solve_characteristic(*char_poly(A))
            scale = (1.0 + A.norm()) ** 3
            for lam in roots.roots:
                d = (A - JordanMatrix.identity() * lam).det()
                assert abs(d) <= 1e-8 * scale

    def test_quaternionic_residuals_are_zero_and_conjugate_offset(self):
        # With entries in an associative subalgebra the 24 eigenvalues are
        # the roots of A and of its entrywise conjugate, each four times.
        # Residuals vanish on A's own roots; on the conjugate family they
        # all equal det(conj(A)) - det(A).
        rng = np.random.default_rng(66)
        for _ in range(30):
            A = sampling.random_jordan(rng, span=4)
            delta = entrywise_conjugate(A).det() - A.det()
            scale = (1.0 + A.norm()) ** 3
            report = modified_char_check(A)
            assert report.passed
            assert sum(m for _, m, _ in report.clusters) == 24
            for _, _, r in report.clusters:
                near_zero = abs(r) <= 1e-8 * scale
                near_delta = abs(r - delta) <= 1e-8 * scale
                assert near_zero or near_delta
            # at least one cluster sits on A's own spectrum
            assert any(abs(r) <= 1e-8 * scale for _, _, r in report.clusters)

    def test_conjugate_offset_formula(self):
        # det(conj(A)) - det(A) = -4 (vec a) . (vec b x vec c) over the
        # quaternionic imaginary components e1..e3
        rng = np.random.default_rng(67)
        for _ in range(100):
            A = sampling.random_jordan(rng, span=4)
            delta = entrywise_conjugate(A).det() - A.det()
            va, vb, vc = (x.coeffs[1:4] for x in (A.a, A.b, A.c))
            formula = -4.0 * float(np.dot(va, np.cross(vb, vc)))
            assert abs(delta - formula) <= 1e-10 * (1.0 + A.norm()) ** 3

    def test_report_dict(self):
        d = modified_char_check(JordanMatrix.diag(1, 2, 3)).to_dict()
        assert d["pass"] is True
        assert sorted(d["clusters"][0]) == ["lambda", "mult", "r"]
