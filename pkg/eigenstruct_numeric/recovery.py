from typing import Optional

import numpy as np
from scipy import linalg

from eigenstruct_numeric.minimal_indices import convolution_matrix
from eigenstruct_numeric.rank import singular_values
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.companion import companion_shape
from poly_core.polynomial import MatrixPolynomial, Pencil
from utils_ops.errors import HypothesisError, RecoveryError
from utils_ops.logs import Logger

logger = Logger("CompanionRecovery")


def _fail(message: str, diagnostics: dict) -> RecoveryError:
    logger.log("error", message, params=diagnostics)
    return RecoveryError(message, diagnostics)


def companion_recovery(L: Pencil, m: int, n: int, d: int, tol: Optional[ToleranceProfile] = None) -> MatrixPolynomial:
    """
    Finds P~ with C1_{P~} strictly equivalent to a pencil L close to a first
    companion form.

    The lower n(d-1) rows N(lambda) of L play the role of the [-I lambda I]
    chain. Eliminating them leaves a degree d-1 basis X(lambda) of their right
    kernel, normalized so its constant term ends in I_n, and
    P~(lambda) = L_top(lambda) X(lambda). For L = C1_P, X(lambda) is the column
    [lambda^{d-1} I; ...; lambda I; I] and P~ = P.

    Args:
        L (Pencil): Pencil of size (m + n(d-1)) x nd.
        m (int): Rows of the polynomial.
        n (int): Columns of the polynomial.
        d (int): Grade, at least 1.
        tol (ToleranceProfile, optional): Cutoff for the kernel and the pivot.

    Returns:
        MatrixPolynomial: P~ of grade d.

    Raises:
        HypothesisError: If L has the wrong size.
        RecoveryError: If the kernel of N does not have dimension n in degree
            d - 1, or its normalizing block is numerically singular.
    """
    tol = resolve(tol)
    if d < 1:
        raise HypothesisError("companion recovery needs grade d >= 1")
    if L.shape != companion_shape(m, n, d):
        raise HypothesisError(f"expected a {companion_shape(m, n, d)} pencil, got {L.shape}")
    if d == 1:
        return L.as_polynomial()

    top_A, top_B = L.A[:m], L.B[:m]
    lower = Pencil(L.A[m:], L.B[m:]).as_polynomial()
    K = linalg.null_space(convolution_matrix(lower, d - 1), rcond=tol.rel_rank_tol)
    if K.shape[1] != n:
        raise _fail("lower block rows do not have an n-dimensional kernel of degree d-1", {"kernel_dimension": K.shape[1], "expected": n})

    block = n * d
    pivot = K[block - n:block]
    sv = singular_values(pivot)
    if sv[-1] <= tol.rel_rank_tol * max(sv[0], 1.0):
        raise _fail("normalizing pivot block is numerically singular", {"singular_values": sv.tolist()})
    K = K @ np.linalg.inv(pivot)

    X = [K[k * block:(k + 1) * block] for k in range(d)]
    coeffs = np.zeros((d + 1, m, n), dtype=np.complex128)
    for j in range(d + 1):
        if j < d:
            coeffs[j] += top_B @ X[j]
        if j > 0:
            coeffs[j] += top_A @ X[j - 1]
    return MatrixPolynomial(m, n, d, coeffs)
