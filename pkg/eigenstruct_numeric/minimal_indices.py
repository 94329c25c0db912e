from typing import Optional

import numpy as np

from eigenstruct_numeric.rank import normal_rank, numerical_rank, singular_gap_report
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.polynomial import MatrixPolynomial
from utils_ops.errors import ToleranceError
from utils_ops.logs import Logger

logger = Logger("MinimalIndices")


def convolution_matrix(P: MatrixPolynomial, k: int) -> np.ndarray:
    """
    Block Toeplitz matrix T_k(P) of size (k+d+1)m x (k+1)n whose kernel holds
    the coefficient vectors (x_0, ..., x_k) of the solutions x(lambda) of
    P(lambda) x(lambda) = 0 with deg x <= k. Block (i+j, j) is A_i.
    """
    m, n, d = P.m, P.n, P.grade
    T = np.zeros(((k + d + 1) * m, (k + 1) * n), dtype=np.complex128)
    for j in range(k + 1):
        for i in range(d + 1):
            T[(i + j) * m:(i + j + 1) * m, j * n:(j + 1) * n] = P.coeffs[i]
    return T


def kernel_dimension(P: MatrixPolynomial, k: int, tol: Optional[ToleranceProfile] = None) -> int:
    """nu_k = (k+1)n - rank T_k(P), which equals sum over eps_i <= k of (k - eps_i + 1)."""
    return (k + 1) * P.n - numerical_rank(convolution_matrix(P, k), tol)


def right_minimal_indices(P: MatrixPolynomial, tol: Optional[ToleranceProfile] = None, rank: Optional[int] = None) -> list[int]:
    """
    Right minimal indices from the kernel dimensions of T_0, T_1, ...

    The increments nu_k - nu_{k-1} count the indices <= k, so each new index
    value shows up as a jump of that count. The search stops as soon as
    n - rank indices are found, and fails at k = max(grade * rank, 1), which
    bounds every minimal index.

    Args:
        P (MatrixPolynomial): The polynomial.
        tol (ToleranceProfile, optional): Shared rank profile.
        rank (int, optional): Normal rank when already known.

    Returns:
        list[int]: The indices, ascending.

    Raises:
        ToleranceError: If the counts decrease, overshoot n - rank, or the hard
            stop is reached first.
    """
    tol = resolve(tol)
    rank = normal_rank(P, tol) if rank is None else rank
    target = P.n - rank
    if target == 0:
        return []

    k_max = max(P.grade * rank, 1)
    indices: list[int] = []
    history: list[int] = []
    prev_nu = 0
    prev_count = 0
    for k in range(k_max + 1):
        T = convolution_matrix(P, k)
        nu = (k + 1) * P.n - numerical_rank(T, tol)
        history.append(nu)
        count = nu - prev_nu
        if count < prev_count or count > target:
            diagnostics = {"k": k, "kernel_dimensions": history, "expected_count": target, "gap": singular_gap_report(T, tol)}
            logger.log("error", "inconsistent kernel dimensions", params=diagnostics)
            raise ToleranceError("kernel dimension sequence is not consistent with a minimal index list", diagnostics)
        indices.extend([k] * (count - prev_count))
        if count == target:
            return indices
        prev_nu, prev_count = nu, count

    diagnostics = {"k_max": k_max, "kernel_dimensions": history, "found": indices, "expected_count": target}
    logger.log("error", "minimal index search hit the hard stop", params=diagnostics)
    raise ToleranceError("minimal index search did not converge before the hard stop", diagnostics)


def left_minimal_indices(P: MatrixPolynomial, tol: Optional[ToleranceProfile] = None, rank: Optional[int] = None) -> list[int]:
    # y^T P = 0  <=>  P^T y = 0
    return right_minimal_indices(P.transpose(), tol, rank)
