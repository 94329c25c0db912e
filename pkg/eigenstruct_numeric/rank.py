from typing import Any, Optional

import numpy as np
from scipy import linalg

from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.polynomial import MatrixPolynomial, evaluate


def singular_values(M: np.ndarray) -> np.ndarray:
    if M.size == 0:
        return np.zeros(0)
    return linalg.svdvals(M)


def numerical_rank(M: np.ndarray, tol: Optional[ToleranceProfile] = None, reference: float = 0.0) -> int:
    """
    Counts the singular values above rel_rank_tol * max(sigma_max, reference).

    Args:
        M (np.ndarray): Any complex matrix, possibly with a zero dimension.
        tol (ToleranceProfile, optional): Defaults to DEFAULT_TOLERANCE.
        reference (float, optional): Scale of the object M was built from. A matrix
            that is roundoff next to it has rank 0.

    Returns:
        int: The numerical rank, 0 for the zero matrix.

    Examples:
        >>> numerical_rank(np.diag([1.0, 1e-12]))
        1
    """
    tol = resolve(tol)
    s = singular_values(M)
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.count_nonzero(s > tol.rel_rank_tol * max(s[0], reference)))


def singular_gap_report(M: np.ndarray, tol: Optional[ToleranceProfile] = None, reference: float = 0.0) -> dict[str, Any]:
    """
    The singular values on both sides of the cutoff, for error diagnostics.
    """
    tol = resolve(tol)
    s = singular_values(M)
    if s.size == 0:
        return {"shape": M.shape, "sigma_max": 0.0}
    cutoff = tol.rel_rank_tol * max(s[0], reference)
    kept = s[s > cutoff]
    dropped = s[s <= cutoff]
    return {
        "shape": M.shape,
        "sigma_max": float(s[0]),
        "cutoff": float(cutoff),
        "smallest_kept": float(kept[-1]) if kept.size else None,
        "largest_dropped": float(dropped[0]) if dropped.size else None,
    }


def probe_points(count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return np.exp(2j * np.pi * rng.random(count))


def normal_rank(P: MatrixPolynomial, tol: Optional[ToleranceProfile] = None) -> int:
    """
    Rank of P over the rational functions, taken as the largest numerical rank
    of P at probe_count random points of the unit circle. The rank only drops
    on the finite eigenvalues, so random points hit it with probability 1.

    Args:
        P (MatrixPolynomial): The polynomial.
        tol (ToleranceProfile, optional): Supplies the cutoff, probe count and seed.

    Returns:
        int: The normal rank.
    """
    tol = resolve(tol)
    if P.is_zero():
        return 0
    return max(numerical_rank(evaluate(P, z), tol) for z in probe_points(tol.probe_count, tol.seed))
