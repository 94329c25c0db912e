from __future__ import annotations

import numpy as np

from poly_core.polynomial import MatrixPolynomial, Pencil, pencil_distance
from utils_ops.errors import HypothesisError

FIRST_FORM = 1
SECOND_FORM = 2


class CompanionPencil:
    """
    A Frobenius companion form of an m x n polynomial of grade d.

    The first form has size (m + n(d-1)) x nd, the second md x (n + m(d-1)).
    Only the pencil and the block metadata are kept; the source polynomial can be
    read back from the coefficient blocks.

    Attributes:
        pencil (Pencil): lambda A + B.
        m (int): Rows of the source polynomial.
        n (int): Columns of the source polynomial.
        d (int): Grade of the source polynomial.
        form (int): FIRST_FORM or SECOND_FORM.
    """

    __slots__ = ("pencil", "m", "n", "d", "form")

    def __init__(self, pencil: Pencil, m: int, n: int, d: int, form: int = FIRST_FORM):
        expected = companion_shape(m, n, d, form)
        if pencil.shape != expected:
            raise HypothesisError(f"companion form {form} of an {m}x{n} grade-{d} polynomial is {expected}, got {pencil.shape}")
        object.__setattr__(self, "pencil", pencil)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "form", form)

    def __setattr__(self, key, value):
        raise AttributeError("CompanionPencil is immutable")

    def __repr__(self) -> str:
        return f"CompanionPencil(form={self.form}, m={self.m}, n={self.n}, d={self.d}, shape={self.shape})"

    @property
    def shape(self) -> tuple[int, int]:
        return self.pencil.shape

    @property
    def A(self) -> np.ndarray:
        return self.pencil.A

    @property
    def B(self) -> np.ndarray:
        return self.pencil.B

    def as_polynomial(self) -> MatrixPolynomial:
        return self.pencil.as_polynomial()

    def has_companion_pattern(self) -> bool:
        """
        Bit-exact check that every non-coefficient block is I, -I or 0 where the
        companion layout puts it.
        """
        template = _companion_parts(np.zeros((self.d + 1, self.m, self.n), dtype=np.complex128), self.form)
        mask = _coefficient_mask(self.m, self.n, self.d, self.form)
        A_t, B_t = template
        A_mask, B_mask = mask
        return bool(np.array_equal(self.A[~A_mask], A_t[~A_mask]) and np.array_equal(self.B[~B_mask], B_t[~B_mask]))

    def source_polynomial(self) -> MatrixPolynomial:
        """Reads A_0..A_d back out of the coefficient blocks."""
        m, n, d = self.m, self.n, self.d
        coeffs = np.zeros((d + 1, m, n), dtype=np.complex128)
        if self.form == FIRST_FORM:
            coeffs[d] = self.A[:m, :n]
            for j in range(d):
                coeffs[d - 1 - j] = self.B[:m, j * n:(j + 1) * n]
        else:
            coeffs[d] = self.A[:m, :n]
            for j in range(d):
                coeffs[d - 1 - j] = self.B[j * m:(j + 1) * m, :n]
        return MatrixPolynomial(m, n, d, coeffs)


def companion_shape(m: int, n: int, d: int, form: int = FIRST_FORM) -> tuple[int, int]:
    if form == FIRST_FORM:
        return m + n * (d - 1), n * d
    if form == SECOND_FORM:
        return m * d, n + m * (d - 1)
    raise HypothesisError(f"unknown companion form {form}")


def _companion_parts(coeffs: np.ndarray, form: int) -> tuple[np.ndarray, np.ndarray]:
    d = coeffs.shape[0] - 1
    m, n = coeffs.shape[1:]
    rows, cols = companion_shape(m, n, d, form)
    A = np.zeros((rows, cols), dtype=np.complex128)
    B = np.zeros((rows, cols), dtype=np.complex128)
    A[:m, :n] = coeffs[d]
    if form == FIRST_FORM:
        A[m:, n:] = np.eye(n * (d - 1))
        for j in range(d):
            B[:m, j * n:(j + 1) * n] = coeffs[d - 1 - j]
        for i in range(1, d):
            B[m + (i - 1) * n:m + i * n, (i - 1) * n:i * n] = -np.eye(n)
    else:
        A[m:, n:] = np.eye(m * (d - 1))
        for j in range(d):
            B[j * m:(j + 1) * m, :n] = coeffs[d - 1 - j]
        for i in range(d - 1):
            B[i * m:(i + 1) * m, n + i * m:n + (i + 1) * m] = -np.eye(m)
    return A, B


def _coefficient_mask(m: int, n: int, d: int, form: int) -> tuple[np.ndarray, np.ndarray]:
    # True where a polynomial coefficient sits
    rows, cols = companion_shape(m, n, d, form)
    A_mask = np.zeros((rows, cols), dtype=bool)
    B_mask = np.zeros((rows, cols), dtype=bool)
    A_mask[:m, :n] = True
    if form == FIRST_FORM:
        B_mask[:m, :] = True
    else:
        B_mask[:, :n] = True
    return A_mask, B_mask


def _companion(P: MatrixPolynomial, form: int) -> CompanionPencil:
    if P.grade < 1:
        raise HypothesisError("companion forms need grade d >= 1")
    A, B = _companion_parts(P.coeffs, form)
    return CompanionPencil(Pencil(A, B), P.m, P.n, P.grade, form)


def first_companion(P: MatrixPolynomial) -> CompanionPencil:
    """
    First Frobenius companion form

        lambda diag(A_d, I_n, ..., I_n) + [[A_{d-1} ... A_0], [-I_n 0 ...], ..., [... -I_n 0]]

    of size (m + n(d-1)) x nd. The map P -> C1_P is an isometry for the
    Frobenius distances on both sides.

    Args:
        P (MatrixPolynomial): A polynomial of grade d >= 1.

    Returns:
        CompanionPencil: C1_P.

    Raises:
        HypothesisError: If the grade is 0.
    """
    return _companion(P, FIRST_FORM)


def second_companion(P: MatrixPolynomial) -> CompanionPencil:
    """
    Second Frobenius companion form, size md x (n + m(d-1)): the coefficients
    stacked in the first block column, -I_m on the block superdiagonal.
    """
    return _companion(P, SECOND_FORM)


def companion_distance(C: CompanionPencil, D: CompanionPencil) -> float:
    return pencil_distance(C.pencil, D.pencil)
