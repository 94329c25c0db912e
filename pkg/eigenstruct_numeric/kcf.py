"""
Kronecker canonical form of a pencil as a multiset of blocks.

    E_j(mu)   = lambda I_j + J_j(mu)      j x j, eigenvalue -mu
    E_j(inf)  = lambda J_j(0) + I_j       j x j
    L_k       = lambda F_k + G_k          k x (k+1), F_k = [I_k 0], G_k = [0 I_k]
    L_k^T     = lambda F_k^T + G_k^T      (k+1) x k

L_0 is the empty 0 x 1 block and L_0^T the empty 1 x 0 block; they still add a
column (a row) to the direct sum.
"""

from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

import numpy as np

from eigenstruct_numeric.engine import complete_eigenstructure
from eigenstruct_numeric.signature import StructureSignature
from eigenstruct_numeric.tolerance import ToleranceProfile
from poly_core.polynomial import Pencil, direct_sum
from utils_ops.errors import HypothesisError


class BlockKind(Enum):
    JORDAN = "jordan"
    JORDAN_INF = "jordan_inf"
    RIGHT = "right"
    LEFT = "left"


_KIND_ORDER = {BlockKind.RIGHT: 0, BlockKind.LEFT: 1, BlockKind.JORDAN_INF: 2, BlockKind.JORDAN: 3}


@dataclass(frozen=True)
class KCFBlock:
    kind: BlockKind
    size: int
    mu: complex = 0j

    def __post_init__(self):
        minimum = 0 if self.kind in (BlockKind.RIGHT, BlockKind.LEFT) else 1
        if self.size < minimum:
            raise HypothesisError(f"{self.kind.value} block of size {self.size}")
        object.__setattr__(self, "size", int(self.size))
        object.__setattr__(self, "mu", complex(self.mu) if self.kind is BlockKind.JORDAN else 0j)

    @property
    def shape(self) -> tuple[int, int]:
        if self.kind is BlockKind.RIGHT:
            return self.size, self.size + 1
        if self.kind is BlockKind.LEFT:
            return self.size + 1, self.size
        return self.size, self.size

    @property
    def eigenvalue(self) -> Optional[complex]:
        return -self.mu if self.kind is BlockKind.JORDAN else None

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.mu.real, self.mu.imag, self.size)

    def __str__(self) -> str:
        if self.kind is BlockKind.RIGHT:
            return f"L_{self.size}"
        if self.kind is BlockKind.LEFT:
            return f"L_{self.size}^T"
        if self.kind is BlockKind.JORDAN_INF:
            return f"E_{self.size}(inf)"
        return f"E_{self.size}({self.mu:g})"


def jordan(mu: complex, size: int) -> KCFBlock:
    return KCFBlock(BlockKind.JORDAN, size, mu)


def jordan_inf(size: int) -> KCFBlock:
    return KCFBlock(BlockKind.JORDAN_INF, size)


def right_block(k: int) -> KCFBlock:
    return KCFBlock(BlockKind.RIGHT, k)


def left_block(k: int) -> KCFBlock:
    return KCFBlock(BlockKind.LEFT, k)


@dataclass(frozen=True)
class KCFSpec:
    """
    Multiset of canonical blocks, stored in canonical order so that two specs of
    the same orbit with identical eigenvalues compare equal.
    """

    blocks: tuple[KCFBlock, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(sorted(self.blocks, key=KCFBlock.sort_key)))

    @classmethod
    def singular(cls, right: Iterable[int] = (), left: Iterable[int] = ()) -> "KCFSpec":
        return cls(tuple(right_block(k) for k in right) + tuple(left_block(k) for k in left))

    @property
    def shape(self) -> tuple[int, int]:
        return sum(b.shape[0] for b in self.blocks), sum(b.shape[1] for b in self.blocks)

    def of_kind(self, kind: BlockKind) -> list[KCFBlock]:
        return [b for b in self.blocks if b.kind is kind]

    @property
    def right(self) -> list[int]:
        return [b.size for b in self.of_kind(BlockKind.RIGHT)]

    @property
    def left(self) -> list[int]:
        return [b.size for b in self.of_kind(BlockKind.LEFT)]

    @property
    def regular_size(self) -> int:
        return sum(b.size for b in self.blocks if b.kind in (BlockKind.JORDAN, BlockKind.JORDAN_INF))

    @property
    def rank(self) -> int:
        """Normal rank of the pencil: every block except the L_k / L_k^T deficiency."""
        return sum(self.right) + sum(self.left) + self.regular_size

    def matches(self, other: "KCFSpec", eig_tol: float = 1e-6) -> bool:
        """Same orbit, eigenvalues compared up to eig_tol * max(1, |lambda|)."""
        return self.shape == other.shape and signature_of_kcf(self).same_structure(signature_of_kcf(other), eig_tol)

    def __str__(self) -> str:
        return " + ".join(str(b) for b in self.blocks) or "0"


def _jordan_matrix(mu: complex, size: int) -> np.ndarray:
    return mu * np.eye(size, dtype=np.complex128) + np.eye(size, k=1, dtype=np.complex128)


def block_pencil(block: KCFBlock) -> Pencil:
    k = block.size
    if block.kind is BlockKind.JORDAN:
        return Pencil(np.eye(k), _jordan_matrix(block.mu, k))
    if block.kind is BlockKind.JORDAN_INF:
        return Pencil(_jordan_matrix(0, k), np.eye(k))
    F = np.eye(k, k + 1)
    G = np.eye(k, k + 1, k=1)
    if block.kind is BlockKind.RIGHT:
        return Pencil(F.reshape(k, k + 1), G.reshape(k, k + 1))
    return Pencil(F.T.reshape(k + 1, k), G.T.reshape(k + 1, k))


def materialize_kcf(spec: KCFSpec) -> Pencil:
    """Exact direct sum of the canonical blocks, in canonical order."""
    return direct_sum(block_pencil(b) for b in spec.blocks)


def signature_of_kcf(spec: KCFSpec) -> StructureSignature:
    m, n = spec.shape
    finite: dict[complex, list[int]] = defaultdict(list)
    for b in spec.of_kind(BlockKind.JORDAN):
        finite[b.eigenvalue].append(b.size)
    return StructureSignature(
        m=m,
        n=n,
        grade=1,
        rank=spec.rank,
        right=spec.right,
        left=spec.left,
        finite=list(finite.items()),
        infinite=[b.size for b in spec.of_kind(BlockKind.JORDAN_INF)],
    )


def kcf_from_signature(signature: StructureSignature) -> KCFSpec:
    blocks = [right_block(e) for e in signature.right]
    blocks += [left_block(h) for h in signature.left]
    blocks += [jordan_inf(g) for g in signature.infinite]
    blocks += [jordan(-eig, j) for eig, mults in signature.finite for j in mults]
    return KCFSpec(tuple(blocks))


def kcf_of_pencil(pencil: Pencil, tol: Optional[ToleranceProfile] = None) -> KCFSpec:
    """
    KCF of a pencil, read off its complete eigenstructure.

    Raises:
        ToleranceError, BalanceError: As complete_eigenstructure.
    """
    return kcf_from_signature(complete_eigenstructure(pencil, tol))
