"""
Generic complete eigenstructures.

An m x n polynomial of grade d and rank at most r < min(m, n) is generically in
one of rd + 1 families K_a, a = 0..rd. K_a has no elementary divisors; its right
minimal indices are as equal as possible and sum to a, its left ones sum to rd - a.
"""

from dataclasses import dataclass
from typing import Any, Optional

from eigenstruct_numeric.kcf import KCFSpec
from eigenstruct_numeric.signature import StructureSignature
from generic_model.codim import codim_generic, pencil_orbit_codim
from generic_model.hypotheses import check_bounded_rank, check_full_rank, check_pencil


def balanced_indices(total: int, count: int) -> list[int]:
    """`count` integers summing to `total`, differing by at most one, ascending."""
    if count == 0:
        return []
    q, rem = divmod(total, count)
    return [q] * (count - rem) + [q + 1] * rem


@dataclass(frozen=True)
class GenericStructure:
    """
    The family K_a of m x n polynomials of grade d and rank r.

    Attributes:
        m, n, r, d, a (int): Sizes, rank, grade and the right index sum.
    """

    m: int
    n: int
    r: int
    d: int
    a: int

    def __post_init__(self):
        check_bounded_rank(self.m, self.n, self.r, self.d, self.a)

    @property
    def alpha(self) -> int:
        return self.a // (self.n - self.r)

    @property
    def s(self) -> int:
        return self.a % (self.n - self.r)

    @property
    def beta(self) -> int:
        return (self.r * self.d - self.a) // (self.m - self.r)

    @property
    def t(self) -> int:
        return (self.r * self.d - self.a) % (self.m - self.r)

    @property
    def right(self) -> list[int]:
        return [self.alpha] * (self.n - self.r - self.s) + [self.alpha + 1] * self.s

    @property
    def left(self) -> list[int]:
        return [self.beta] * (self.m - self.r - self.t) + [self.beta + 1] * self.t

    @property
    def signature(self) -> StructureSignature:
        return StructureSignature(m=self.m, n=self.n, grade=self.d, rank=self.r, right=self.right, left=self.left)

    @property
    def codim(self) -> int:
        return codim_generic(self.m, self.n, self.r, self.d, self.a)

    def matches(self, signature: StructureSignature) -> bool:
        return signature == self.signature

    def to_dict(self) -> dict[str, Any]:
        payload = self.signature.to_dict()
        payload.update({"a": self.a, "alpha": self.alpha, "s": self.s, "beta": self.beta, "t": self.t, "codim": self.codim})
        return payload


def generic_structures(m: int, n: int, r: int, d: int) -> list[GenericStructure]:
    """
    The rd + 1 generic structures K_0, ..., K_rd.

    Raises:
        HypothesisError: Outside m, n >= 2, d >= 1, 1 <= r <= min(m, n) - 1.
    """
    check_bounded_rank(m, n, r, d)
    return [GenericStructure(m, n, r, d, a) for a in range(r * d + 1)]


@dataclass(frozen=True)
class FullRankStructure:
    """
    Generic structure of full-rank m x n polynomials of grade d.

    For m < n only right minimal indices, summing to md; for m > n only left ones,
    summing to nd. For m = n the generic polynomial is regular with nd simple
    eigenvalues, a class rather than one signature, so `signature` is None.
    """

    m: int
    n: int
    d: int

    def __post_init__(self):
        check_full_rank(self.m, self.n, self.d)

    @property
    def rank(self) -> int:
        return min(self.m, self.n)

    @property
    def regular(self) -> bool:
        return self.m == self.n

    @property
    def right(self) -> list[int]:
        return balanced_indices(self.m * self.d, self.n - self.m) if self.m < self.n else []

    @property
    def left(self) -> list[int]:
        return balanced_indices(self.n * self.d, self.m - self.n) if self.m > self.n else []

    @property
    def a(self) -> int:
        return sum(self.right)

    @property
    def signature(self) -> Optional[StructureSignature]:
        if self.regular:
            return None
        return StructureSignature(m=self.m, n=self.n, grade=self.d, rank=self.rank, right=self.right, left=self.left)

    @property
    def description(self) -> str:
        if self.regular:
            return f"regular, {self.n * self.d} simple eigenvalues"
        return f"right {self.right}" if self.m < self.n else f"left {self.left}"

    def matches(self, signature: StructureSignature) -> bool:
        if not self.regular:
            return signature == self.signature
        return (
            (signature.m, signature.n, signature.grade, signature.rank) == (self.m, self.n, self.d, self.n)
            and not signature.infinite
            and len(signature.finite) == self.n * self.d
            and all(mults == (1,) for _, mults in signature.finite)
        )

    def to_dict(self) -> dict[str, Any]:
        payload = {"rank": self.rank, "right": self.right, "left": self.left, "finite": [], "infinite": []}
        payload.update({"a": self.a, "regular": self.regular, "description": self.description})
        return payload


def generic_full_rank(m: int, n: int, d: int) -> FullRankStructure:
    return FullRankStructure(m, n, d)


@dataclass(frozen=True)
class PencilGenericStructure:
    """
    The generic pencil family K_{a1} of m1 x n1 pencils of rank r1:
    L_{alpha1+1} x s1, L_{alpha1} x (n1-r1-s1), L^T_{beta1+1} x t1, L^T_{beta1} x (m1-r1-t1).
    """

    m1: int
    n1: int
    r1: int
    a1: int

    def __post_init__(self):
        check_pencil(self.m1, self.n1, self.r1, self.a1)

    @property
    def alpha1(self) -> int:
        return self.a1 // (self.n1 - self.r1)

    @property
    def s1(self) -> int:
        return self.a1 % (self.n1 - self.r1)

    @property
    def beta1(self) -> int:
        return (self.r1 - self.a1) // (self.m1 - self.r1)

    @property
    def t1(self) -> int:
        return (self.r1 - self.a1) % (self.m1 - self.r1)

    @property
    def kcf(self) -> KCFSpec:
        return KCFSpec.singular(
            right=balanced_indices(self.a1, self.n1 - self.r1),
            left=balanced_indices(self.r1 - self.a1, self.m1 - self.r1),
        )

    @property
    def codim(self) -> int:
        return pencil_orbit_codim(self.kcf)


def generic_pencil_structures(m1: int, n1: int, r1: int) -> list[PencilGenericStructure]:
    """
    The r1 + 1 generic pencil families.

    Raises:
        HypothesisError: Outside m1, n1 >= 2, 1 <= r1 <= min(m1, n1) - 1.
    """
    check_pencil(m1, n1, r1)
    return [PencilGenericStructure(m1, n1, r1, a1) for a1 in range(r1 + 1)]


def generic_full_rank_pencil(m1: int, n1: int) -> KCFSpec:
    """
    KCF of the generic full-rank m1 x n1 pencil: only L blocks (m1 < n1), only
    L^T blocks (m1 > n1), or no singular blocks at all when square.
    """
    structure = FullRankStructure(m1, n1, 1)
    return KCFSpec.singular(right=structure.right, left=structure.left)
