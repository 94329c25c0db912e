"""
Finite eigenvalue candidates of a possibly singular polynomial.

The first companion pencil lambda A + B (p x q, normal rank rho) is bordered
with random constant blocks X, Y, Z,

    lambda [[A, 0], [0, 0]] + [[B, X], [Y, Z]],

into a square pencil of size p + q - rho. For generic borders it is regular, and
every finite eigenvalue of the polynomial is one of its eigenvalues; the rest
depend on the borders. Two independent borderings therefore agree on the true
eigenvalues only, and whatever survives is still re-validated by the caller.

Eigenvalues are handled as homogeneous pairs (alpha, beta), lambda = alpha / beta,
and compared in the chordal metric, so the roots a perturbed Jordan block at
infinity splits into form one cluster whose mean is infinity again.
"""

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy import linalg

from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.companion import first_companion
from poly_core.polynomial import MatrixPolynomial, Pencil
from poly_core.sampling import complex_gaussian
from utils_ops.logs import Logger

logger = Logger("Candidates")


def homogeneous_eigenvalues(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """
    Rows (alpha, beta) of unit norm with det(alpha A + beta B) = 0. Pairs with
    alpha and beta both at roundoff level are indeterminate and dropped.
    """
    # det(lambda A + B) = 0  <=>  B v = lambda (-A) v
    alpha, beta = linalg.eigvals(B, -A, homogeneous_eigvals=True)
    pairs = np.stack([alpha, beta], axis=1)
    norms = np.linalg.norm(pairs, axis=1)
    floor = 1e3 * np.finfo(float).eps * max(np.linalg.norm(A), np.linalg.norm(B), 1.0)
    keep = norms > floor
    if not keep.all():
        logger.log("warning", f"defective bordering: {int((~keep).sum())} indeterminate eigenvalues dropped", params={"size": A.shape[0]})
    return pairs[keep] / norms[keep, None]


def chordal_distance(u: np.ndarray, v: np.ndarray) -> float:
    return float(abs(u[0] * v[1] - u[1] * v[0]))


def bordered_eigenvalues(pencil: Pencil, rank: int, rng: np.random.Generator) -> np.ndarray:
    """Homogeneous eigenvalues of one random bordering of `pencil` to a square regular pencil."""
    p, q = pencil.shape
    extra_rows, extra_cols = q - rank, p - rank
    if extra_rows == 0 and extra_cols == 0:
        return homogeneous_eigenvalues(pencil.A, pencil.B)

    scale = max(pencil.norm(), 1.0) / np.sqrt(max(p * q, 1))
    size = p + extra_rows
    A = np.zeros((size, size), dtype=np.complex128)
    B = np.zeros((size, size), dtype=np.complex128)
    A[:p, :q] = pencil.A
    B[:p, :q] = pencil.B
    B[:p, q:] = scale * complex_gaussian(rng, (p, extra_cols))
    B[p:, :q] = scale * complex_gaussian(rng, (extra_rows, q))
    B[p:, q:] = scale * complex_gaussian(rng, (extra_rows, extra_cols))
    return homogeneous_eigenvalues(A, B)


def _finite(z: np.ndarray) -> complex:
    return complex(z[0] / z[1])


def _chart_mean(cluster: list[np.ndarray]) -> np.ndarray:
    # average in the chart of the first member: lambda for |lambda| <= 1, 1/lambda beyond
    center = cluster[0]
    if abs(center[0]) <= abs(center[1]):
        mean = np.array([np.mean([z[0] / z[1] for z in cluster]), 1.0])
    else:
        mean = np.array([1.0, np.mean([z[1] / z[0] for z in cluster])])
    return mean / np.linalg.norm(mean)


def chordal_clusters(pairs: np.ndarray, radius: float) -> list[list[np.ndarray]]:
    """
    Greedy chordal clustering. A defective eigenvalue of size j splits into j
    roots around it, their mean is accurate to first order.
    """
    clusters: list[list[np.ndarray]] = []
    for z in pairs:
        for cluster in clusters:
            if chordal_distance(cluster[0], z) <= radius:
                cluster.append(z)
                break
        else:
            clusters.append([z])
    return clusters


@dataclass(frozen=True)
class EigenvalueCandidate:
    """
    A cluster mean and the cluster members both borderings share. The caller
    validates `point` first and falls back to the members, which resolves
    distinct eigenvalues closer than cluster_tol.
    """

    point: complex
    members: tuple[complex, ...] = ()


def eigenvalue_candidates(P: MatrixPolynomial, rank: int, tol: Optional[ToleranceProfile] = None) -> list[EigenvalueCandidate]:
    """
    Candidate finite eigenvalues of P from two independent random borderings
    of its first companion form.

    The first bordering's eigenvalues are clustered. A cluster with a finite
    mean is kept when the mean appears in the second bordering up to a chordal
    distance of sqrt(rel_rank_tol), and so are those of its members that appear
    there. Pairs with |beta| <= rel_rank_tol * |alpha| count as infinite; every
    other value is left to local validation, however large.

    Args:
        P (MatrixPolynomial): Polynomial of grade >= 1.
        rank (int): Its normal rank.
        tol (ToleranceProfile, optional): Supplies the seed and the cluster radius.

    Returns:
        list[EigenvalueCandidate]: One entry per shared cluster with a finite mean.
    """
    tol = resolve(tol)
    if P.grade < 1 or rank == 0:
        return []
    C = first_companion(P).pencil
    companion_rank = rank + P.n * (P.grade - 1)
    rng = np.random.default_rng(tol.seed)
    radius = float(np.sqrt(tol.rel_rank_tol))

    def finite(z: np.ndarray) -> bool:
        return abs(z[1]) > tol.rel_rank_tol * abs(z[0])

    first = chordal_clusters(bordered_eigenvalues(C, companion_rank, rng), tol.cluster_tol)
    second_pairs: Optional[np.ndarray] = None
    second_means: Optional[list[np.ndarray]] = None
    p, q = C.shape
    if not p == q == companion_rank:
        second_pairs = bordered_eigenvalues(C, companion_rank, rng)
        second_means = [_chart_mean(cluster) for cluster in chordal_clusters(second_pairs, tol.cluster_tol)]
        if len(first) != len(second_means):
            logger.log("info", "borderings disagree on the number of clusters", params={"first": len(first), "second": len(second_means)})

    def shared(z: np.ndarray, others: Optional[Sequence[np.ndarray]]) -> bool:
        return others is None or any(chordal_distance(z, w) <= radius for w in others)

    candidates = []
    for cluster in first:
        mean = _chart_mean(cluster)
        if not finite(mean) or not shared(mean, second_means):
            continue
        members = tuple(_finite(z) for z in cluster if len(cluster) > 1 and finite(z) and shared(z, second_pairs))
        candidates.append(EigenvalueCandidate(_finite(mean), members))
    logger.log("debug", f"{len(first)} clusters, {len(candidates)} finite candidates", params={"shape": P.shape, "grade": P.grade})
    return candidates
