from collections import defaultdict
from itertools import combinations

from eigenstruct_numeric.kcf import BlockKind, KCFSpec
from generic_model.hypotheses import check_bounded_rank
from utils_ops.errors import LinearizationMismatch


def codim_simplified(m: int, n: int, r: int, d: int, a: int) -> int:
    return (n - r) * (m * (d + 1) - r) + a * (m - n)


def codim_pencil_level(m: int, n: int, r: int, d: int, a: int) -> int:
    """Codimension of the matching pencil family, written in the companion sizes."""
    a1 = n * (d - 1) + r - r * d + a
    return (n - r) * (2 * m + n * (d - 1) - r) + a1 * (m - n)


def codim_generic(m: int, n: int, r: int, d: int, a: int) -> int:
    """
    Codimension of the orbit of K_a, i.e. of the orbit of its first companion
    form inside the space of first companion pencils.

    Raises:
        HypothesisError: Outside m, n >= 2, d >= 1, 1 <= r < min(m, n), 0 <= a <= rd.
        LinearizationMismatch: If the two expressions disagree.
    """
    check_bounded_rank(m, n, r, d, a)
    value = codim_simplified(m, n, r, d, a)
    pencil_value = codim_pencil_level(m, n, r, d, a)
    if value != pencil_value:
        raise LinearizationMismatch(f"codimension {value} != pencil-level {pencil_value} at {(m, n, r, d, a)}")
    return value


def _pair_term(indices: list[int]) -> int:
    return sum(abs(x - y) - 1 for x, y in combinations(indices, 2) if x != y)


def pencil_orbit_codim(spec: KCFSpec) -> int:
    """
    Codimension of the strict equivalence orbit of a pencil in KCF `spec`.

    Sums five contributions:
        Jordan: per eigenvalue (infinity included), sizes q1 >= q2 >= ... weighted 1, 3, 5, ...
        right pairs: sum over eps_i > eps_j of (eps_i - eps_j - 1); left pairs likewise
        regular x singular: regular size times the number of L and L^T blocks
        singular: sum over all (eps_i, eta_j) of (eps_i + eta_j + 2)

    Eigenvalues are grouped by exact value.
    """
    by_eigenvalue: dict = defaultdict(list)
    for b in spec.blocks:
        if b.kind is BlockKind.JORDAN:
            by_eigenvalue[b.mu].append(b.size)
        elif b.kind is BlockKind.JORDAN_INF:
            by_eigenvalue[None].append(b.size)
    jordan = sum(
        (2 * i + 1) * q
        for sizes in by_eigenvalue.values()
        for i, q in enumerate(sorted(sizes, reverse=True))
    )
    right, left = spec.right, spec.left
    regular_singular = spec.regular_size * (len(right) + len(left))
    singular = sum(e + h + 2 for e in right for h in left)
    return jordan + _pair_term(right) + _pair_term(left) + regular_singular + singular
