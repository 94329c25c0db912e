from typing import Any, Optional, Union

from eigenstruct_numeric.candidates import eigenvalue_candidates
from eigenstruct_numeric.minimal_indices import left_minimal_indices, right_minimal_indices
from eigenstruct_numeric.multiplicities import infinite_multiplicities, partial_multiplicities_at
from eigenstruct_numeric.rank import normal_rank
from eigenstruct_numeric.signature import StructureSignature
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.companion import CompanionPencil
from poly_core.polynomial import MatrixPolynomial, Pencil
from utils_ops.errors import BalanceError
from utils_ops.logs import Logger

Analyzable = Union[MatrixPolynomial, Pencil, CompanionPencil]


def as_polynomial(obj: Analyzable) -> MatrixPolynomial:
    if isinstance(obj, MatrixPolynomial):
        return obj
    return obj.as_polynomial()


class EigenstructureAnalyzer:
    """
    Computes complete eigenstructures with one shared ToleranceProfile.

    Attributes:
        tol (ToleranceProfile): Cutoffs, probe count and seed used by every rank decision.
        logger (Logger): Component logger.

    Methods:
    -------
        analyze(P) -> StructureSignature:
            Rank, minimal indices, finite and infinite structure, then the balance check.
    """

    def __init__(self, tol: Optional[ToleranceProfile] = None):
        self.tol = resolve(tol)
        self.logger = Logger("EigenstructureAnalyzer")

    def __call__(self, *args: Any, **kwds: Any) -> StructureSignature:
        """
        Calls the `analyze` method with the provided arguments.
        """
        return self.analyze(*args, **kwds)

    def finite_structure(self, P: MatrixPolynomial, rank: int) -> list[tuple[complex, list[int]]]:
        """
        Validates every bordering candidate locally. A rejected cluster mean is
        retried member by member; candidates with no partial multiplicity are dropped.
        """
        finite = []
        for candidate in eigenvalue_candidates(P, rank, self.tol):
            mults = partial_multiplicities_at(P, candidate.point, self.tol, rank)
            if mults:
                finite.append((candidate.point, mults))
                continue
            self.logger.log("debug", "rejected eigenvalue candidate", params={"point": candidate.point, "members": len(candidate.members)})
            for point in candidate.members:
                mults = partial_multiplicities_at(P, point, self.tol, rank)
                if mults:
                    finite.append((point, mults))
        return finite

    def analyze(self, obj: Analyzable) -> StructureSignature:
        """
        Assembles the complete eigenstructure of a polynomial or pencil.

        Args:
            obj (Analyzable): A MatrixPolynomial, a Pencil or a CompanionPencil.

        Returns:
            StructureSignature: The computed structure.

        Raises:
            ToleranceError: From the index or multiplicity searches.
            BalanceError: If the parts do not add up to rank * grade.
        """
        P = as_polynomial(obj)
        rank = normal_rank(P, self.tol)
        signature = StructureSignature(
            m=P.m,
            n=P.n,
            grade=P.grade,
            rank=rank,
            right=right_minimal_indices(P, self.tol, rank),
            left=left_minimal_indices(P, self.tol, rank),
            finite=self.finite_structure(P, rank),
            infinite=infinite_multiplicities(P, self.tol, rank),
        )
        residual = signature.balance_residual()
        if residual != 0:
            diagnostics = {"residual": residual, "signature": signature.to_dict(), "tol": self.tol}
            self.logger.log("error", "index-sum balance violated", params=diagnostics)
            raise BalanceError("index-sum balance violated", diagnostics)
        return signature


def complete_eigenstructure(obj: Analyzable, tol: Optional[ToleranceProfile] = None) -> StructureSignature:
    return EigenstructureAnalyzer(tol).analyze(obj)
