from __future__ import annotations

from typing import Iterable, Optional, Sequence

import numpy as np

from utils_ops.errors import HypothesisError


def _frozen(array: np.ndarray) -> np.ndarray:
    array = np.array(array, dtype=np.complex128, copy=True)
    array.setflags(write=False)
    return array


class MatrixPolynomial:
    """
    An m x n complex matrix polynomial of grade d,

        P(lambda) = lambda^d A_d + ... + lambda A_1 + A_0.

    The grade is stored, never inferred: A_d may be zero, and trailing zero
    coefficients are kept. Instances are immutable; the coefficient stack is a
    read-only array of shape (d+1, m, n), ascending powers.

    Attributes:
        m (int): Row count.
        n (int): Column count.
        grade (int): Declared upper bound d on the degree.
        coeffs (np.ndarray): Read-only stack A_0, ..., A_d.
    """

    __slots__ = ("m", "n", "grade", "coeffs")

    def __init__(self, m: int, n: int, grade: int, coeffs: Sequence | np.ndarray):
        if int(m) < 1 or int(n) < 1:
            raise HypothesisError(f"m and n must be positive, got m={m}, n={n}")
        if int(grade) < 0:
            raise HypothesisError(f"grade must be nonnegative, got {grade}")
        m, n, grade = int(m), int(n), int(grade)
        if len(coeffs) != grade + 1:
            raise HypothesisError(f"grade {grade} needs {grade + 1} coefficients, got {len(coeffs)}")
        stack = []
        for i, block in enumerate(coeffs):
            block = np.asarray(block, dtype=np.complex128)
            if block.ndim < 2 and (m == 1 or n == 1) and block.size == m * n:
                block = block.reshape(m, n)
            if block.shape != (m, n):
                raise HypothesisError(f"coefficient A_{i} has shape {block.shape}, expected {(m, n)}")
            stack.append(block)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "grade", grade)
        object.__setattr__(self, "coeffs", _frozen(np.stack(stack)))

    def __setattr__(self, key, value):
        raise AttributeError("MatrixPolynomial is immutable")

    def __repr__(self) -> str:
        return f"MatrixPolynomial(m={self.m}, n={self.n}, grade={self.grade}, degree={self.degree()})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixPolynomial):
            return NotImplemented
        return (self.m, self.n, self.grade) == (other.m, other.n, other.grade) and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self) -> int:
        return hash((self.m, self.n, self.grade, self.coeffs.tobytes()))

    @property
    def shape(self) -> tuple[int, int]:
        return self.m, self.n

    def degree(self) -> Optional[int]:
        """
        Largest i with A_i != 0 (exact comparison).

        Returns:
            Optional[int]: The degree, or None for the zero polynomial.
        """
        for i in range(self.grade, -1, -1):
            if np.any(self.coeffs[i] != 0):
                return i
        return None

    def is_zero(self) -> bool:
        return self.degree() is None

    def evaluate(self, point: complex) -> np.ndarray:
        return evaluate(self, point)

    def reversal(self) -> "MatrixPolynomial":
        return reversal(self)

    def transpose(self) -> "MatrixPolynomial":
        """Transposes every coefficient (no conjugation)."""
        return MatrixPolynomial(self.n, self.m, self.grade, np.transpose(self.coeffs, (0, 2, 1)))

    def norm(self) -> float:
        return norm(self)

    def scaled(self, factor: complex) -> "MatrixPolynomial":
        return MatrixPolynomial(self.m, self.n, self.grade, self.coeffs * factor)

    def with_grade(self, grade: int) -> "MatrixPolynomial":
        """
        Re-declares the grade. Raising it pads zero coefficients; lowering it is
        only allowed over coefficients that are exactly zero.
        """
        if grade >= self.grade:
            pad = np.zeros((grade - self.grade, self.m, self.n), dtype=np.complex128)
            return MatrixPolynomial(self.m, self.n, grade, np.concatenate([self.coeffs, pad]))
        degree = self.degree()
        if degree is not None and degree > grade:
            raise HypothesisError(f"cannot lower grade to {grade} below degree {degree}")
        return MatrixPolynomial(self.m, self.n, grade, self.coeffs[: grade + 1])


def new_polynomial(m: int, n: int, grade: int, coeffs: Sequence | np.ndarray) -> MatrixPolynomial:
    """
    Validates and builds a matrix polynomial.

    Args:
        m (int): Row count.
        n (int): Column count.
        grade (int): Declared grade d.
        coeffs (Sequence): d+1 matrices A_0, ..., A_d of shape (m, n).

    Returns:
        MatrixPolynomial: The validated value.

    Raises:
        HypothesisError: On a wrong list length or a shape mismatch.

    Examples:
        >>> new_polynomial(1, 1, 1, [[[0]], [[1]]]).degree()
        1
    """
    return MatrixPolynomial(m, n, grade, coeffs)


def zero_polynomial(m: int, n: int, grade: int) -> MatrixPolynomial:
    return MatrixPolynomial(m, n, grade, np.zeros((grade + 1, m, n), dtype=np.complex128))


def evaluate(P: MatrixPolynomial, point: complex) -> np.ndarray:
    """
    Horner evaluation of sum_i point^i A_i.

    Args:
        P (MatrixPolynomial): The polynomial.
        point (complex): Where to evaluate.

    Returns:
        np.ndarray: The m x n complex matrix P(point).
    """
    result = np.array(P.coeffs[P.grade], dtype=np.complex128)
    for i in range(P.grade - 1, -1, -1):
        result = result * point + P.coeffs[i]
    return result


def reversal(P: MatrixPolynomial) -> MatrixPolynomial:
    """rev P(lambda) = lambda^d P(1/lambda): same grade, coefficients reversed."""
    return MatrixPolynomial(P.m, P.n, P.grade, P.coeffs[::-1])


def _check_same_space(P: MatrixPolynomial, Q: MatrixPolynomial) -> None:
    if (P.m, P.n, P.grade) != (Q.m, Q.n, Q.grade):
        raise HypothesisError(
            f"polynomials live in different spaces: {(P.m, P.n, P.grade)} vs {(Q.m, Q.n, Q.grade)}"
        )


def distance(P: MatrixPolynomial, Q: MatrixPolynomial) -> float:
    """
    (sum_i ||A_i - A'_i||_F^2)^(1/2). Both polynomials must share m, n and grade.
    """
    _check_same_space(P, Q)
    return float(np.linalg.norm((P.coeffs - Q.coeffs).ravel()))


def norm(P: MatrixPolynomial) -> float:
    """Frobenius norm of the polynomial, i.e. the distance to zero."""
    return float(np.linalg.norm(P.coeffs.ravel()))


class Pencil:
    """
    The m x n pencil lambda A + B. Immutable, like MatrixPolynomial.
    """

    __slots__ = ("A", "B")

    def __init__(self, A: np.ndarray, B: np.ndarray):
        A = np.atleast_2d(np.asarray(A, dtype=np.complex128))
        B = np.atleast_2d(np.asarray(B, dtype=np.complex128))
        if A.shape != B.shape:
            raise HypothesisError(f"pencil parts differ in shape: {A.shape} vs {B.shape}")
        object.__setattr__(self, "A", _frozen(A))
        object.__setattr__(self, "B", _frozen(B))

    def __setattr__(self, key, value):
        raise AttributeError("Pencil is immutable")

    def __repr__(self) -> str:
        return f"Pencil(shape={self.shape})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pencil):
            return NotImplemented
        return np.array_equal(self.A, other.A) and np.array_equal(self.B, other.B)

    def __hash__(self) -> int:
        return hash((self.shape, self.A.tobytes(), self.B.tobytes()))

    @property
    def shape(self) -> tuple[int, int]:
        return self.A.shape

    def as_polynomial(self) -> MatrixPolynomial:
        m, n = self.shape
        return MatrixPolynomial(m, n, 1, [self.B, self.A])

    def evaluate(self, point: complex) -> np.ndarray:
        return point * self.A + self.B

    def transformed(self, Q: np.ndarray, R: np.ndarray) -> "Pencil":
        """Q (lambda A + B) R, a strictly equivalent pencil when Q and R are invertible."""
        return Pencil(Q @ self.A @ R, Q @ self.B @ R)

    def norm(self) -> float:
        return float(np.sqrt(np.linalg.norm(self.A) ** 2 + np.linalg.norm(self.B) ** 2))


def pencil_distance(L: Pencil, M: Pencil) -> float:
    if L.shape != M.shape:
        raise HypothesisError(f"pencils differ in shape: {L.shape} vs {M.shape}")
    return float(np.sqrt(np.linalg.norm(L.A - M.A) ** 2 + np.linalg.norm(L.B - M.B) ** 2))


def direct_sum(pencils: Iterable[Pencil]) -> Pencil:
    """
    Block-diagonal sum. Blocks may have zero rows or zero columns
    (L_0 is 0 x 1, its transpose 1 x 0), which still occupy a column or a row.
    """
    pencils = list(pencils)
    rows = sum(p.shape[0] for p in pencils)
    cols = sum(p.shape[1] for p in pencils)
    A = np.zeros((rows, cols), dtype=np.complex128)
    B = np.zeros((rows, cols), dtype=np.complex128)
    i = j = 0
    for p in pencils:
        h, w = p.shape
        A[i:i + h, j:j + w] = p.A
        B[i:i + h, j:j + w] = p.B
        i += h
        j += w
    return Pencil(A, B)
