from poly_core.companion import companion_shape
from eigenstruct_numeric.kcf import KCFSpec
from generic_model.families import FullRankStructure, GenericStructure, generic_full_rank_pencil, generic_pencil_structures
from generic_model.hypotheses import check_bounded_rank
from utils_ops.errors import LinearizationMismatch


def companion_structure_of(K: GenericStructure) -> KCFSpec:
    """
    KCF of the first companion form of any polynomial in K_a:
    L_{alpha+d} x s, L_{alpha+d-1} x (n-r-s), L^T_{beta+1} x t, L^T_beta x (m-r-t).
    """
    d = K.d
    right = [K.alpha + d] * K.s + [K.alpha + d - 1] * (K.n - K.r - K.s)
    left = [K.beta + 1] * K.t + [K.beta] * (K.m - K.r - K.t)
    spec = KCFSpec.singular(right=right, left=left)
    if spec.shape != companion_shape(K.m, K.n, d):
        raise LinearizationMismatch(f"companion KCF {spec} has shape {spec.shape}, expected {companion_shape(K.m, K.n, d)}")
    return spec


def pencil_index(K: GenericStructure) -> int:
    """a1 = n(d-1) + r - rd + a."""
    return K.n * (K.d - 1) + K.r - K.r * K.d + K.a


def match_linearization(K: GenericStructure) -> int:
    """
    Index a1 of the generic pencil family of size (m + n(d-1)) x nd and rank
    r + n(d-1) that contains the first companion forms of K_a.

    Raises:
        LinearizationMismatch: If the blocks of the two disagree.
    """
    m1, n1 = companion_shape(K.m, K.n, K.d)
    r1 = K.r + K.n * (K.d - 1)
    a1 = pencil_index(K)
    family = generic_pencil_structures(m1, n1, r1)[a1]
    companion = companion_structure_of(K)
    if family.kcf != companion:
        raise LinearizationMismatch(f"K_{K.a} of {(K.m, K.n, K.r, K.d)}: companion {companion} != pencil family {a1}: {family.kcf}")
    return a1


def inadmissible_pencil_indices(m: int, n: int, r: int, d: int) -> list[int]:
    """
    Pencil families a1 < (n-r)(d-1): some L block is smaller than L_{d-1}, which
    no first companion form can have, so they match no polynomial.
    """
    check_bounded_rank(m, n, r, d)
    return list(range((n - r) * (d - 1)))


def match_full_rank_linearization(m: int, n: int, d: int) -> KCFSpec:
    """
    KCF of the first companion form of the generic full-rank polynomial, checked
    against the generic full-rank pencil of the companion size.

    Raises:
        LinearizationMismatch: If the two disagree.
    """
    structure = FullRankStructure(m, n, d)
    predicted = KCFSpec.singular(right=[e + d - 1 for e in structure.right], left=structure.left)
    pencil = generic_full_rank_pencil(*companion_shape(m, n, d))
    if predicted != pencil:
        raise LinearizationMismatch(f"full-rank {(m, n, d)}: companion {predicted} != generic pencil {pencil}")
    return pencil
