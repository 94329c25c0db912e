from dataclasses import dataclass
from typing import Any, Iterable

from utils_ops.errors import HypothesisError


def _eigen_key(item: tuple[complex, tuple[int, ...]]) -> tuple[float, float]:
    return (item[0].real, item[0].imag)


@dataclass(frozen=True)
class StructureSignature:
    """
    Complete eigenstructure of an m x n polynomial of a given grade: normal rank,
    right and left minimal indices, finite eigenvalues with their partial
    multiplicities, and the partial multiplicities at infinity.

    All multisets are stored as ascending tuples and the finite eigenvalues are
    ordered by (real, imag), so equal structures compare equal field by field.
    """

    m: int
    n: int
    grade: int
    rank: int
    right: tuple[int, ...] = ()
    left: tuple[int, ...] = ()
    finite: tuple[tuple[complex, tuple[int, ...]], ...] = ()
    infinite: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "right", tuple(sorted(int(e) for e in self.right)))
        object.__setattr__(self, "left", tuple(sorted(int(e) for e in self.left)))
        object.__setattr__(self, "infinite", tuple(sorted(int(g) for g in self.infinite)))
        finite = tuple(sorted(((complex(eig) + 0j, tuple(sorted(int(x) for x in mults))) for eig, mults in self.finite), key=_eigen_key))
        object.__setattr__(self, "finite", finite)
        if len(self.right) != self.n - self.rank or len(self.left) != self.m - self.rank:
            raise HypothesisError(
                f"rank {self.rank} of an {self.m}x{self.n} polynomial needs {self.n - self.rank} right and "
                f"{self.m - self.rank} left indices, got {len(self.right)} and {len(self.left)}"
            )

    @property
    def minimal_index_sum(self) -> int:
        return sum(self.right) + sum(self.left)

    @property
    def finite_degree(self) -> int:
        return sum(sum(mults) for _, mults in self.finite)

    def has_elementary_divisors(self) -> bool:
        return bool(self.finite or self.infinite)

    def balance_residual(self) -> int:
        """sum(eps) + sum(eta) + finite degrees + sum(gamma) - rank * grade; zero when balanced."""
        return self.minimal_index_sum + self.finite_degree + sum(self.infinite) - self.rank * self.grade

    def same_structure(self, other: "StructureSignature", eig_tol: float = 1e-6) -> bool:
        """Equality with eigenvalues compared up to eig_tol * max(1, |lambda|)."""
        if (self.m, self.n, self.grade, self.rank, self.right, self.left, self.infinite) != (
            other.m, other.n, other.grade, other.rank, other.right, other.left, other.infinite
        ):
            return False
        if len(self.finite) != len(other.finite):
            return False
        unmatched = list(other.finite)
        for eig, mults in self.finite:
            hit = next(
                (i for i, (e, mu) in enumerate(unmatched) if mu == mults and abs(e - eig) <= eig_tol * max(1.0, abs(eig))),
                None,
            )
            if hit is None:
                return False
            unmatched.pop(hit)
        return True

    def companion_prediction(self, form: int = 1) -> "StructureSignature":
        """
        Signature the first (form=1) or second (form=2) companion pencil must have:
        same elementary divisors, right (resp. left) minimal indices raised by
        grade - 1, the other side unchanged.
        """
        d = self.grade
        if form == 1:
            return StructureSignature(
                m=self.m + self.n * (d - 1), n=self.n * d, grade=1, rank=self.rank + self.n * (d - 1),
                right=[e + d - 1 for e in self.right], left=self.left, finite=self.finite, infinite=self.infinite,
            )
        return StructureSignature(
            m=self.m * d, n=self.n + self.m * (d - 1), grade=1, rank=self.rank + self.m * (d - 1),
            right=self.right, left=[e + d - 1 for e in self.left], finite=self.finite, infinite=self.infinite,
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "rank": self.rank,
            "right": list(self.right),
            "left": list(self.left),
            "finite": [{"eig": [eig.real, eig.imag], "mults": list(mults)} for eig, mults in self.finite],
            "infinite": list(self.infinite),
        }

    @classmethod
    def from_dict(cls, payload: dict[str, Any], m: int, n: int, grade: int) -> "StructureSignature":
        return cls(
            m=m,
            n=n,
            grade=grade,
            rank=int(payload["rank"]),
            right=payload.get("right", ()),
            left=payload.get("left", ()),
            finite=[(complex(*item["eig"]), item["mults"]) for item in payload.get("finite", ())],
            infinite=payload.get("infinite", ()),
        )


def index_list(values: Iterable[int]) -> str:
    """Semicolon-joined indices, the CSV cell format."""
    return ";".join(str(v) for v in values)
