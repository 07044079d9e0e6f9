import math

import numpy as np
import pytest

from albert import sampling
from albert.dirac import (
    Hermitian2,
    PSquareClass,
    classify_psquare,
    dirac_solve,
    psi_pack,
)
from albert.exceptions import NonNullMomentumError
from albert.f4 import diagonalize
from albert.jordan import JordanMatrix, freudenthal_product, rank1_from_vector, sandwich
from albert.octonion import Octonion, e


class TestHermitian2:
    def test_construction_and_invariants(self):
        P = Hermitian2(s=3.0, t=1.0, z=e(7) * 2.0)
        assert P.trace() == 4.0
        assert P.det() == pytest.approx(3.0 - 4.0)  # st - |z|^2
        assert P.norm() == pytest.approx(math.sqrt(9 + 1 + 2 * 4))

    def test_trace_reversal(self):
        P = Hermitian2(s=3.0, t=1.0, z=e(2))
        Pt = P.trace_reversal()
        assert (Pt.s, Pt.t) == (-1.0, -3.0)
        assert Pt.z.isclose(P.z)
        # removing the trace twice restores the original
        assert Pt.trace_reversal().isclose(P)
        assert Pt.det() == pytest.approx(P.det())

    def test_arithmetic(self):
        P = Hermitian2.diag(1.0, 2.0)
        Q = Hermitian2(z=e(1))
        R = P + Q
        assert (R.s, R.t) == (1.0, 2.0)
        assert R.z.isclose(e(1))
        assert (P - P).norm() == 0.0
        assert (-P).s == -1.0
        assert (P * 2.0).t == 4.0
        assert (2.0 * P).t == 4.0

    def test_from_outer(self):
        theta = (Octonion.from_real(2.0), e(3))
        P = Hermitian2.from_outer(theta)
        assert P.s == 4.0
        assert P.t == 1.0
        assert P.z.isclose(Octonion.from_real(2.0) * e(3).conjugate())
        assert abs(P.det()) <= 1e-14

    def test_apply(self):
        P = Hermitian2.identity()
        psi = (e(1), e(2))
        out = P.apply(psi)
        assert out[0].isclose(e(1)) and out[1].isclose(e(2))

    def test_dict_round_trip(self):
        P = Hermitian2(s=1.5, t=-0.5, z=e(4) * 0.25)
        Q = Hermitian2.from_dict(P.to_dict())
        assert P.isclose(Q)
        assert sorted(P.to_dict()) == ["s", "t", "z"]

    def test_from_dict_rejects_bad_payload(self):
        with pytest.raises(ValueError):
            Hermitian2.from_dict({"s": 1.0})
        with pytest.raises(ValueError):
            Hermitian2.from_dict({"s": 1.0, "t": 2.0, "z": [1.0, 2.0]})


class TestDiracSolve:
    def test_projection_plus(self):
        theta, sign = dirac_solve(Hermitian2.diag(1.0, 0.0))
        assert sign == 1
        assert theta[0].isclose(Octonion.from_real(1.0))
        assert theta[1].norm() == 0.0

    def test_negative_momentum(self):
        theta, sign = dirac_solve(Hermitian2.diag(-2.0, 0.0))
        assert sign == -1
        assert theta[0].isclose(Octonion.from_real(math.sqrt(2.0)))
        assert theta[1].norm() == 0.0

    def test_off_diagonal_example(self):
        # s = t = 1, z = e7 is null with trace 2
        theta, sign = dirac_solve(Hermitian2(s=1.0, t=1.0, z=e(7)))
        assert sign == 1
        assert theta[0].isclose(Octonion.from_real(1.0))
        assert theta[1].isclose(-e(7))

    def test_zero_momentum(self):
        theta, sign = dirac_solve(Hermitian2())
        assert sign == 1
        assert theta[0].norm() == 0.0 and theta[1].norm() == 0.0

    def test_non_null_rejected(self):
        with pytest.raises(NonNullMomentumError):
            dirac_solve(Hermitian2.identity())

    def test_round_trip_seeded(self):
        rng = np.random.default_rng(70)
        for _ in range(1000):
            P, theta0, sign0 = sampling.random_null_hermitian2(rng)
            theta, sign = dirac_solve(P)
            recon = Hermitian2.from_outer(theta) * float(sign)
            assert (P - recon).norm() <= 1e-10 * (1.0 + P.norm())
            assert sign == sign0

    def test_solution_annihilated_by_trace_reversal(self):
        # psi = theta xi solves P~ psi = 0 for any octonionic xi
        rng = np.random.default_rng(71)
        for _ in range(200):
            P, theta0, sign = sampling.random_null_hermitian2(rng)
            theta, _ = dirac_solve(P)
            xi = sampling.random_octonion(rng)
            psi = (theta[0] * xi, theta[1] * xi)
            out = P.trace_reversal().apply(psi)
            mag = math.hypot(out[0].norm(), out[1].norm())
            assert mag <= 1e-10 * (1.0 + P.norm()) * (1.0 + xi.norm())


class TestPsiPack:
    def test_unit_theta_no_xi_scaling(self):
        Psi, PP = psi_pack((Octonion.from_real(1.0), Octonion.zero()), Octonion.from_real(1.0))
        assert PP.isclose(JordanMatrix.diag(1, 0, 1) + JordanMatrix(b=Octonion.from_real(1.0)))
        assert Psi.components[2].isclose(Octonion.from_real(1.0))

    def test_block_layout(self):
        t1, t2 = Octonion.from_real(0.6), e(1) * 0.8
        xi = e(2)
        Psi, PP = psi_pack((t1, t2), xi)
        assert Psi.components[0].isclose(t1)
        assert Psi.components[1].isclose(t2)
        assert Psi.components[2].isclose(xi.conjugate())
        assert PP.p == pytest.approx(t1.norm2())
        assert PP.m == pytest.approx(t2.norm2())
        assert PP.n == pytest.approx(xi.norm2())
        assert PP.a.isclose(t1 * t2.conjugate())
        assert PP.b.isclose((t1 * xi).conjugate())
        assert PP.c.isclose(t2 * xi)

    def test_rank_one_for_complex_theta(self):
        rng = np.random.default_rng(72)
        for _ in range(1000):
            theta = sampling.random_complex_theta(rng)
            xi = sampling.random_octonion(rng)
            _, PP = psi_pack(theta, xi)
            scale = (1.0 + PP.norm()) ** 2
            assert freudenthal_product(PP, PP).norm() <= 1e-9 * scale

    def test_trace_is_psi_norm(self):
        rng = np.random.default_rng(73)
        theta = sampling.random_complex_theta(rng)
        xi = sampling.random_octonion(rng)
        Psi, PP = psi_pack(theta, xi)
        t1, t2 = theta
        expect = (t1.norm2() + t2.norm2()) + xi.norm2()
        assert PP.trace() == pytest.approx(expect)


class TestClassify:
    def test_examples(self):
        assert classify_psquare(JordanMatrix.identity()).p == 3
        assert classify_psquare(JordanMatrix.diag(1, 1, 0)).p == 2
        assert classify_psquare(JordanMatrix.diag(1, 0, 0)).p == 1
        assert classify_psquare(JordanMatrix.zero()).p == 0

    def test_traceless_rank_two(self):
        A = JordanMatrix.diag(1, -1, 0)
        out = classify_psquare(A)
        assert out.p == 2
        assert out.trace == 0.0

    def test_scale_covariant(self):
        rng = np.random.default_rng(74)
        for _ in range(100):
            A = sampling.random_jordan(rng)
            assert classify_psquare(A * 1000.0).p == classify_psquare(A * 1e-3).p

    def test_matches_nonzero_eigenvalue_count(self):
        from albert.spectral import decompose

        rng = np.random.default_rng(75)
        for _ in range(200):
            draw = rng.uniform()
            if draw < 0.4:
                A = sampling.random_jordan(rng)
            elif draw < 0.7:
                v = sampling.random_vector(rng, span=4)
                A = rank1_from_vector(v)  # rank one
            else:
                A, lam, sign, w = sampling.random_double_root_matrix(rng)
            dec = decompose(A)
            count = sum(1 for lam in dec.eigenvalues if abs(lam) > 1e-7 * (1.0 + A.norm()))
            assert classify_psquare(A).p == count

    def test_invariant_under_diagonalization_steps(self):
        rng = np.random.default_rng(76)
        for _ in range(100):
            A = sampling.random_jordan(rng)
            p0 = classify_psquare(A).p
            B = A
            for M in diagonalize(A).steps:
                B = sandwich(M, B)
                assert classify_psquare(B).p == p0

    def test_result_payload(self):
        out = classify_psquare(JordanMatrix.diag(1, 2, 3))
        assert isinstance(out, PSquareClass)
        d = out.to_dict()
        assert sorted(d) == ["det", "p", "sigma", "trace"]
        assert d["p"] == 3
        assert d["det"] == pytest.approx(6.0)
