import math

import numpy as np
import pytest

from albert import sampling
from albert.exceptions import (
    NonAssociativeComponentsError,
    NotRankOneError,
    ZeroMatrixError,
)
from albert.jordan import (
    JordanMatrix,
    OctVector3,
    char_poly,
    det_via_trace,
    extract_vector,
    freudenthal_product,
    jordan_product,
    matvec,
    offdiag_associator,
    phase_align,
    rank1_from_vector,
    sandwich,
)
from albert.octonion import Octonion, e


def all_ones():
    one = Octonion.from_real(1.0)
    return JordanMatrix(a=one, b=one, c=one)


def real_vec(x, y, z):
    return OctVector3(tuple(Octonion.from_real(float(v)) for v in (x, y, z)))


class TestConstruction:
    def test_diag_identity_zero(self):
        assert JordanMatrix.diag(1, 2, 3).trace() == 6.0
        assert JordanMatrix.identity().isclose(JordanMatrix.diag(1, 1, 1))
        assert JordanMatrix.zero().norm() == 0.0

    def test_array_round_trip(self):
        rng = np.random.default_rng(0)
        A = sampling.random_jordan(rng)
        B = JordanMatrix.from_array(A.to_array())
        assert A.isclose(B)

    def test_from_array_rejects_non_hermitian(self):
        arr = JordanMatrix.identity().to_array().copy()
        arr[0, 1, 0] = 5.0  # break conjugate symmetry
        with pytest.raises(ValueError):
            JordanMatrix.from_array(arr)

    def test_dict_round_trip(self):
        rng = np.random.default_rng(1)
        A = sampling.random_jordan(rng)
        B = JordanMatrix.from_dict(A.to_dict())
        assert A.isclose(B)
        payload = A.to_dict()
        assert sorted(payload) == ["a", "b", "c", "m", "n", "p"]

    def test_from_dict_rejects_bad_payload(self):
        with pytest.raises(ValueError):
            JordanMatrix.from_dict({"p": 1.0})
        with pytest.raises(ValueError):
            JordanMatrix.from_dict({"p": 1, "m": 1, "n": 1, "a": [1, 2], "b": [0] * 8, "c": [0] * 8})

    def test_arithmetic(self):
        A = JordanMatrix.diag(1, 2, 3)
        assert (A + A).isclose(A * 2.0)
        assert (A - A).isclose(JordanMatrix.zero())
        assert (-A).isclose(A * -1.0)
        assert (A / 2.0).isclose(A * 0.5)


class TestInvariants:
    def test_diag_invariants(self):
        tr, sigma, det = char_poly(JordanMatrix.diag(1, 2, 3))
        assert (tr, sigma, det) == (6.0, 11.0, 6.0)

    def test_all_ones_invariants(self):
        A = all_ones()
        tr, sigma, det = char_poly(A)
        assert tr == 0.0
        assert sigma == -3.0
        assert det == 2.0

    def test_det_closed_form_vs_trace_form(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            A = sampling.random_jordan(rng)
            scale = (1.0 + A.norm()) ** 3
            assert abs(A.det() - det_via_trace(A)) <= 1e-10 * scale

    def test_trace_reversal_is_minus_two_freudenthal_with_identity(self):
        rng = np.random.default_rng(3)
        for _ in range(100):
            A = sampling.random_jordan(rng)
            lhs = A.trace_reversal()
            rhs = freudenthal_product(JordanMatrix.identity(), A) * -2.0
            assert lhs.isclose(rhs)

    def test_sigma_is_trace_of_freudenthal_square(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            A = sampling.random_jordan(rng)
            assert abs(freudenthal_product(A, A).trace() - A.sigma()) <= 1e-12 * (1 + A.norm()) ** 2


class TestProducts:
    def test_commutative(self):
        # symmetrization happens via the conjugate transpose, so swapping the
        # operands only reorders the sums: equal to rounding, not bitwise
        rng = np.random.default_rng(5)
        for _ in range(100):
            A, B = sampling.random_jordan(rng), sampling.random_jordan(rng)
            gap = (jordan_product(A, B) - jordan_product(B, A)).norm()
            assert gap <= 1e-14 * (1.0 + A.norm() * B.norm())

    def test_identity_is_neutral(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            A = sampling.random_jordan(rng)
            assert jordan_product(A, JordanMatrix.identity()).isclose(A)

    def test_jordan_identity(self):
        # (A o B) o A^2 = A o (B o A^2)
        rng = np.random.default_rng(7)
        for _ in range(1000):
            A, B = sampling.random_jordan(rng), sampling.random_jordan(rng)
            A2 = jordan_product(A, A)
            lhs = jordan_product(jordan_product(A, B), A2)
            rhs = jordan_product(A, jordan_product(B, A2))
            scale = 1.0 + A.norm() ** 3 * B.norm()
            assert (lhs - rhs).norm() <= 1e-10 * scale

    def test_characteristic_equation(self):
        rng = np.random.default_rng(8)
        for _ in range(300):
            A = sampling.random_jordan(rng)
            tr, sigma, det = char_poly(A)
            A2 = jordan_product(A, A)
            A3 = jordan_product(A2, A)
            resid = A3 - A2 * tr + A * sigma - JordanMatrix.identity() * det
            assert resid.norm() <= 1e-9 * (1.0 + A.norm() ** 3)

    def test_springer_identity(self):
        rng = np.random.default_rng(9)
        for _ in range(300):
            A = sampling.random_jordan(rng)
            AxA = freudenthal_product(A, A)
            resid = freudenthal_product(AxA, AxA) - A * A.det()
            assert resid.norm() <= 1e-9 * (1.0 + A.norm()) ** 4

    def test_trace_reversal_identity(self):
        # (A~ o A) o (A*A) = det(A) A~
        rng = np.random.default_rng(10)
        for _ in range(300):
            A = sampling.random_jordan(rng)
            At = A.trace_reversal()
            lhs = jordan_product(jordan_product(At, A), freudenthal_product(A, A))
            resid = lhs - At * A.det()
            assert resid.norm() <= 1e-9 * (1.0 + A.norm()) ** 4

    def test_polarized_closure(self):
        rng = np.random.default_rng(11)
        for _ in range(300):
            u = sampling.random_vector(rng, span=4)
            w = sampling.random_vector(rng, span=4)
            AxB = freudenthal_product(rank1_from_vector(u), rank1_from_vector(w))
            resid = freudenthal_product(AxB, AxB)
            assert resid.norm() <= 1e-9 * (1.0 + u.norm2() + w.norm2()) ** 4

    def test_trace_inner_product_quaternionic(self):
        # (v^dag w)(w^dag v) = tr(v v^dag o w w^dag)
        rng = np.random.default_rng(12)
        for _ in range(300):
            v = sampling.random_vector(rng, span=4)
            w = sampling.random_vector(rng, span=4)
            vw = v.dagger_dot(w)
            lhs = (vw * vw.conjugate()).real
            rhs = jordan_product(rank1_from_vector(v), rank1_from_vector(w)).trace()
            assert abs(lhs - rhs) <= 1e-10 * (1.0 + v.norm2() * w.norm2())

    def test_trace_inner_product_octonionic_measured(self):
        # Not gated for non-associating columns; measure and report the worst.
        rng = np.random.default_rng(13)
        worst = 0.0
        for _ in range(300):
            v = OctVector3(tuple(sampling.random_octonion(rng) for _ in range(3)))
            w = OctVector3(tuple(sampling.random_octonion(rng) for _ in range(3)))
            vw = v.dagger_dot(w)
            lhs = (vw * vw.conjugate()).real
            Vm = rank1_entries(v)
            Wm = rank1_entries(w)
            rhs = jordan_product(Vm, Wm).trace()
            worst = max(worst, abs(lhs - rhs) / (1.0 + v.norm2() * w.norm2()))
        print(f"octonionic trace-identity worst relative deviation: {worst:.3e}")
        assert math.isfinite(worst)


def rank1_entries(v):
    """v v^dagger assembled entrywise, skipping the associativity gate."""
    v1, v2, v3 = v.components
    return JordanMatrix(
        p=v1.norm2(), m=v2.norm2(), n=v3.norm2(),
        a=v1 * v2.conjugate(), b=v3 * v1.conjugate(), c=v2 * v3.conjugate(),
    )


class TestRealVectorAnalogies:
    def test_jordan_product_generalizes_dot(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            u = real_vec(*rng.uniform(-1, 1, 3))
            v = real_vec(*rng.uniform(-1, 1, 3))
            uu, vv = rank1_from_vector(u), rank1_from_vector(v)
            ua = np.array([c.real for c in u.components])
            va = np.array([c.real for c in v.components])
            dot = float(ua @ va)
            assert abs(jordan_product(uu, vv).trace() - dot**2) <= 1e-12
            # 2 uu^T o vv^T = (u.v)(uv^T + vu^T)
            lhs = jordan_product(uu, vv) * 2.0
            outer = np.outer(ua, va) + np.outer(va, ua)
            rhs = JordanMatrix(
                p=dot * outer[0, 0], m=dot * outer[1, 1], n=dot * outer[2, 2],
                a=Octonion.from_real(dot * outer[0, 1]),
                b=Octonion.from_real(dot * outer[2, 0]),
                c=Octonion.from_real(dot * outer[1, 2]),
            )
            assert lhs.isclose(rhs, atol=1e-12)

    def test_freudenthal_generalizes_cross(self):
        rng = np.random.default_rng(15)
        for _ in range(100):
            u = rng.uniform(-1, 1, 3)
            v = rng.uniform(-1, 1, 3)
            uu = rank1_from_vector(real_vec(*u))
            vv = rank1_from_vector(real_vec(*v))
            cr = rank1_from_vector(real_vec(*np.cross(u, v)))
            lhs = freudenthal_product(uu, vv) * 2.0
            assert lhs.isclose(cr, atol=1e-12)

    def test_det_is_squared_triple_product(self):
        rng = np.random.default_rng(16)
        for _ in range(100):
            u, v, w = (rng.uniform(-1, 1, 3) for _ in range(3))
            S = (rank1_from_vector(real_vec(*u)) + rank1_from_vector(real_vec(*v))
                 + rank1_from_vector(real_vec(*w)))
            triple = float(np.dot(u, np.cross(v, w)))
            assert abs(S.det() - triple**2) <= 1e-12 * (1 + S.norm()) ** 3


class TestRankOne:
    def test_basis_vector_gives_diagonal_unit(self):
        V = rank1_from_vector(real_vec(1, 0, 0))
        assert V.isclose(JordanMatrix.diag(1, 0, 0))

    def test_all_ones_vector(self):
        V = rank1_from_vector(real_vec(1, 1, 1))
        assert V.isclose(all_ones() + JordanMatrix.identity())
        assert V.trace() == 3.0

    def test_rank_one_condition(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            v = sampling.random_vector(rng, span=4)
            V = rank1_from_vector(v)
            assert freudenthal_product(V, V).norm() <= 1e-12 * (1 + V.norm()) ** 2
            assert jordan_product(V, V).isclose(V * V.trace())

    def test_non_associating_components_rejected(self):
        v = OctVector3((e(1), e(2), e(4)))
        with pytest.raises(NonAssociativeComponentsError):
            rank1_from_vector(v)

    def test_extract_examples(self):
        v = extract_vector(JordanMatrix.diag(0, 0, 1))
        assert v.isclose(real_vec(0, 0, 1))
        v = extract_vector(JordanMatrix.diag(2, 0, 0))
        assert v.isclose(real_vec(math.sqrt(2), 0, 0))

    def test_extract_round_trip(self):
        rng = np.random.default_rng(18)
        for _ in range(200):
            v = sampling.random_vector(rng, span=4)
            V = rank1_from_vector(v)
            w = extract_vector(V)
            assert rank1_from_vector(w).isclose(V, atol=1e-10)
            assert abs(w.norm2() - V.trace()) <= 1e-10 * (1 + V.trace())

    def test_extract_rejects_higher_rank(self):
        with pytest.raises(NotRankOneError):
            extract_vector(JordanMatrix.identity())

    def test_extract_rejects_zero(self):
        with pytest.raises(ZeroMatrixError):
            extract_vector(JordanMatrix.zero())

    def test_pivot_tie_takes_first(self):
        V = rank1_from_vector(real_vec(1, 1, 0))
        w = extract_vector(V)
        assert w.components[0].real > 0


class TestVectorsAndAction:
    def test_matvec_identity(self):
        rng = np.random.default_rng(19)
        v = sampling.random_vector(rng, span=8)
        assert matvec(JordanMatrix.identity(), v).isclose(v)

    def test_sandwich_identity(self):
        rng = np.random.default_rng(20)
        A = sampling.random_jordan(rng)
        assert sandwich(JordanMatrix.identity(), A).isclose(A)

    def test_dagger_dot_conjugate_symmetry(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            v = sampling.random_vector(rng, span=8)
            w = sampling.random_vector(rng, span=8)
            assert v.dagger_dot(w).isclose(w.dagger_dot(v).conjugate())
        assert abs(v.dagger_dot(v).real - v.norm2()) <= 1e-12 * (1 + v.norm2())

    def test_phase_align(self):
        rng = np.random.default_rng(22)
        for _ in range(100):
            v = sampling.random_vector(rng, span=4)
            va = phase_align(v)
            r = va.components[2]
            assert float(np.linalg.norm(r.coeffs[1:])) <= 1e-12 * (1 + v.norm2())
            assert r.real >= 0.0
            assert rank1_from_vector(va).isclose(rank1_from_vector(v))

    def test_offdiag_associator_quaternionic_zero(self):
        rng = np.random.default_rng(23)
        A = sampling.random_jordan(rng, span=4)
        assert offdiag_associator(A).norm() <= 1e-13
        B = JordanMatrix(a=e(1), b=e(2), c=e(4))
        assert offdiag_associator(B).norm() > 0
