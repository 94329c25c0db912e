from math import comb
from typing import Optional

import numpy as np

from eigenstruct_numeric.rank import normal_rank, numerical_rank, singular_gap_report
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.polynomial import MatrixPolynomial, reversal
from utils_ops.errors import ToleranceError
from utils_ops.logs import Logger

logger = Logger("Multiplicities")


def taylor_coefficients(P: MatrixPolynomial, point: complex, count: int) -> np.ndarray:
    """
    First `count` coefficients of P(point + mu) in powers of mu, i.e.
    P^(j)(point) / j!. Coefficients past the grade are zero.
    """
    taylor = np.zeros((count, P.m, P.n), dtype=np.complex128)
    for j in range(min(count, P.grade + 1)):
        for i in range(j, P.grade + 1):
            taylor[j] += comb(i, j) * point ** (i - j) * P.coeffs[i]
    return taylor


def weyr_matrix(taylor: np.ndarray, k: int) -> np.ndarray:
    """Lower block-triangular Toeplitz matrix, k blocks deep, block (p, q) = T_{p-q}."""
    _, m, n = taylor.shape
    W = np.zeros((k * m, k * n), dtype=np.complex128)
    for p in range(k):
        for q in range(p + 1):
            W[p * m:(p + 1) * m, q * n:(q + 1) * n] = taylor[p - q]
    return W


def conjugate_partition(parts: list[int]) -> list[int]:
    """Conjugate of a nonincreasing partition, returned ascending."""
    if not parts:
        return []
    return sorted(sum(1 for w in parts if w >= i) for i in range(1, parts[0] + 1))


def partial_multiplicities_at(P: MatrixPolynomial, point: complex, tol: Optional[ToleranceProfile] = None, rank: Optional[int] = None) -> list[int]:
    """
    Partial multiplicities of `point` as an eigenvalue of P.

    The kernel of W_k collects the truncated power series x(mu), deg < k, with
    P(point + mu) x(mu) = O(mu^k). Its dimension is
    sum_i min(delta_i, k) + (n - rank) k, where the second term is the singular
    part. Removing that term, successive increments give the Weyr characteristic
    #{delta_i >= k}, whose conjugate is the multiset of delta_i.

    Args:
        P (MatrixPolynomial): The polynomial.
        point (complex): Candidate eigenvalue.
        tol (ToleranceProfile, optional): Shared rank profile.
        rank (int, optional): Normal rank when already known.

    Returns:
        list[int]: Partial multiplicities ascending; empty if `point` is not an eigenvalue.

    Raises:
        ToleranceError: If the Weyr sequence is negative, increasing, or does
            not terminate by k = rank * grade + 1.
    """
    tol = resolve(tol)
    rank = normal_rank(P, tol) if rank is None else rank
    if rank == 0:
        return []
    if abs(point) > 1:
        # same multiplicities as rev P at 1 / point, where the Taylor scale stays bounded
        return partial_multiplicities_at(reversal(P), 1 / point, tol, rank)

    k_max = rank * P.grade + 1
    taylor = taylor_coefficients(P, point, k_max)
    # cutoffs relative to P near the point, W_1 = P(point) alone may be pure roundoff
    scale = float(np.linalg.norm(taylor))
    singular_part = P.n - rank
    weyr: list[int] = []
    history: list[int] = []
    prev_kernel = 0
    for k in range(1, k_max + 1):
        W = weyr_matrix(taylor, k)
        kernel = k * P.n - numerical_rank(W, tol, scale)
        history.append(kernel)
        w = kernel - prev_kernel - singular_part
        if w < 0 or w > rank or (weyr and w > weyr[-1]):
            diagnostics = {"point": complex(point), "k": k, "kernel_dimensions": history, "gap": singular_gap_report(W, tol, scale)}
            logger.log("error", "non-monotone Weyr sequence", params=diagnostics)
            raise ToleranceError("Weyr characteristic is not a partition", diagnostics)
        if w == 0:
            return conjugate_partition(weyr)
        weyr.append(w)
        prev_kernel = kernel

    diagnostics = {"point": complex(point), "k_max": k_max, "weyr": weyr}
    logger.log("error", "Weyr sequence did not terminate", params=diagnostics)
    raise ToleranceError("Weyr characteristic did not terminate before the hard stop", diagnostics)


def infinite_multiplicities(P: MatrixPolynomial, tol: Optional[ToleranceProfile] = None, rank: Optional[int] = None) -> list[int]:
    """Partial multiplicities at infinity: those of rev P at zero (grade-relative)."""
    return partial_multiplicities_at(reversal(P), 0.0, tol, rank)
