"""Octonion arithmetic over an exact basis multiplication table.

The octonions are the eight-dimensional normed division algebra obtained by
Cayley-Dickson doubling of the quaternions.  Writing an octonion as a pair of
quaternions, the product convention used throughout this package is::

    (a, b) (c, d) = (a c - conj(d) b,  d a + b conj(c))

with the basis

    e0 = (1, 0)   e1 = (i, 0)   e2 = (j, 0)   e3 = (k, 0)
    e4 = (0, 1)   e5 = (0, i)   e6 = (0, j)   e7 = (0, k)

Every product of two basis elements is a signed basis element, so the full
table is integer-exact.  It is generated once at import time from the
quaternion table and frozen in the module constants ``MUL_SIGN``,
``MUL_INDEX`` and ``MUL_TENSOR``.  In this convention e1 e2 = e3 and
{1, e1, e2, e3} span a quaternionic subalgebra; e1 e4 = e5, e2 e4 = e6,
e3 e4 = e7.

The algebra is alternative but not associative: the associator
(x y) z - x (y z) vanishes whenever two arguments coincide, and the norm is
multiplicative, |x y| = |x| |y|.
"""

from __future__ import annotations

from numbers import Real
from typing import Iterable

import numpy as np

from .config import tolerances

__all__ = [
    "Octonion",
    "MUL_SIGN",
    "MUL_INDEX",
    "MUL_TENSOR",
    "CONJ_SIGNS",
    "e",
    "associator",
    "format_octonion",
]


def _build_table() -> tuple[np.ndarray, np.ndarray]:
    """Generate the 8x8 basis product table by Cayley-Dickson doubling.

    Returns (sign, index) arrays with e_i e_j = sign[i, j] * e_index[i, j].
    All arithmetic is on small integers, so the result is exact.
    """
    # Quaternion table on (1, i, j, k): row = left factor, column = right.
    q_index = np.array(
        [[0, 1, 2, 3],
         [1, 0, 3, 2],
         [2, 3, 0, 1],
         [3, 2, 1, 0]]
    )
    q_sign = np.array(
        [[1, 1, 1, 1],
         [1, -1, 1, -1],
         [1, -1, -1, 1],
         [1, 1, -1, -1]]
    )

    def q_conj(idx: int) -> int:
        return 1 if idx == 0 else -1

    sign = np.zeros((8, 8), dtype=np.int64)
    index = np.zeros((8, 8), dtype=np.int64)
    for i in range(8):
        qi, hi = i % 4, i // 4
        for j in range(8):
            qj, hj = j % 4, j // 4
            if hi == 0 and hj == 0:
                # (a, 0)(c, 0) = (a c, 0)
                s, k, h = q_sign[qi, qj], q_index[qi, qj], 0
            elif hi == 0 and hj == 1:
                # (a, 0)(0, d) = (0, d a)
                s, k, h = q_sign[qj, qi], q_index[qj, qi], 1
            elif hi == 1 and hj == 0:
                # (0, b)(c, 0) = (0, b conj(c))
                s, k, h = q_sign[qi, qj] * q_conj(qj), q_index[qi, qj], 1
            else:
                # (0, b)(0, d) = (-conj(d) b, 0)
                s, k, h = -q_sign[qj, qi] * q_conj(qj), q_index[qj, qi], 0
            sign[i, j] = s
            index[i, j] = k + 4 * h
    return sign, index


#: Signs and target indices of the frozen basis table: e_i e_j = MUL_SIGN[i, j] * e_{MUL_INDEX[i, j]}.
MUL_SIGN, MUL_INDEX = _build_table()

#: Dense structure constants, MUL_TENSOR[i, j, k] = coefficient of e_k in e_i e_j.
MUL_TENSOR = np.zeros((8, 8, 8))
MUL_TENSOR[np.arange(8)[:, None], np.arange(8)[None, :], MUL_INDEX] = MUL_SIGN

#: Componentwise signs of conjugation: conj(x) flips e1..e7.
CONJ_SIGNS = np.array([1.0, -1, -1, -1, -1, -1, -1, -1])


class Octonion:
    """An octonion stored as eight real coefficients on e0..e7.

    The coefficient array is frozen after construction.  Arithmetic accepts
    real scalars wherever another octonion would do, treating them as real
    multiples of e0.  Equality is tolerance-based via the global config.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[float]):
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (8,):
            raise ValueError(f"octonion needs 8 coefficients, got shape {arr.shape}")
        arr.flags.writeable = False
        self.coeffs = arr

    @classmethod
    def from_real(cls, x: float) -> "Octonion":
        arr = np.zeros(8)
        arr[0] = x
        return cls(arr)

    @classmethod
    def zero(cls) -> "Octonion":
        return cls(np.zeros(8))

    @classmethod
    def basis(cls, k: int) -> "Octonion":
        if not 0 <= k <= 7:
            raise ValueError(f"basis index must be in 0..7, got {k}")
        arr = np.zeros(8)
        arr[k] = 1.0
        return cls(arr)

    # -- structure ---------------------------------------------------------

    @property
    def real(self) -> float:
        return float(self.coeffs[0])

    def conjugate(self) -> "Octonion":
        return Octonion(self.coeffs * CONJ_SIGNS)

    def norm2(self) -> float:
        """Squared norm, x conj(x) = sum of squared coefficients."""
        return float(self.coeffs @ self.coeffs)

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def inverse(self) -> "Octonion":
        n2 = self.norm2()
        if n2 <= tolerances.atol:
            raise ZeroDivisionError("octonion has (near-)zero norm")
        return Octonion(self.coeffs * CONJ_SIGNS / n2)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Octonion | None":
        if isinstance(other, Octonion):
            return other
        if isinstance(other, Real):
            return Octonion.from_real(float(other))
        return None

    def __add__(self, other) -> "Octonion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Octonion(self.coeffs + o.coeffs)

    __radd__ = __add__

    def __sub__(self, other) -> "Octonion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Octonion(self.coeffs - o.coeffs)

    def __rsub__(self, other) -> "Octonion":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Octonion(o.coeffs - self.coeffs)

    def __neg__(self) -> "Octonion":
        return Octonion(-self.coeffs)

    def __mul__(self, other) -> "Octonion":
        if isinstance(other, Octonion):
            return Octonion(np.einsum("i,j,ijk->k", self.coeffs, other.coeffs, MUL_TENSOR))
        if isinstance(other, Real):
            return Octonion(self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other) -> "Octonion":
        if isinstance(other, Real):
            return Octonion(self.coeffs * float(other))
        if isinstance(other, Octonion):
            return other.__mul__(self)
        return NotImplemented

    def __truediv__(self, other) -> "Octonion":
        if isinstance(other, Real):
            return Octonion(self.coeffs / float(other))
        if isinstance(other, Octonion):
            return self * other.inverse()
        return NotImplemented

    # -- comparison and display --------------------------------------------

    def isclose(self, other: "Octonion", atol=None, rtol=None) -> bool:
        atol = tolerances.atol if atol is None else atol
        rtol = tolerances.rtol if rtol is None else rtol
        diff = float(np.linalg.norm(self.coeffs - other.coeffs))
        return diff <= atol + rtol * max(self.norm(), other.norm())

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.isclose(o)

    __hash__ = None

    def __repr__(self) -> str:
        return f"Octonion({format_octonion(self)})"

    def __str__(self) -> str:
        return format_octonion(self)


def e(k: int) -> Octonion:
    """The k-th basis octonion (e0 is the identity)."""
    return Octonion.basis(k)


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    """(x y) z - x (y z); zero iff the triple associates."""
    return (x * y) * z - x * (y * z)


def format_octonion(x: Octonion, fmt: str = "%.12g") -> str:
    """Render as 'c0 + c1 e1 + ...' suppressing zero terms."""
    parts = []
    for k, c in enumerate(x.coeffs):
        if c == 0.0:
            continue
        mag = fmt % abs(c)
        term = mag if k == 0 else f"{mag} e{k}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts) if parts else "0"
