from typing import Optional, Sequence, Union

import numpy as np

from eigenstruct_numeric.engine import complete_eigenstructure
from eigenstruct_numeric.rank import numerical_rank
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from generic_model.families import FullRankStructure, GenericStructure
from poly_core.polynomial import MatrixPolynomial, norm
from poly_core.sampling import SeedLike, balanced_split, random_bounded_rank, random_polynomial
from utils_ops.errors import BalanceError, HypothesisError, RealizationError, ToleranceError
from utils_ops.logs import Logger
from utils_ops.retry import retry

logger = Logger("Realize")

Realizable = Union[GenericStructure, FullRankStructure]


def column_degrees_for(K: GenericStructure, split: Optional[Sequence[int]] = None) -> list[int]:
    """
    Column degrees delta_j of the left factor: r integers in [0, d] summing to
    rd - a. Balanced unless an explicit composition is given.
    """
    total = K.r * K.d - K.a
    if split is None:
        return balanced_split(total, K.r, K.d)
    split = [int(delta) for delta in split]
    if len(split) != K.r or sum(split) != total or any(not 0 <= delta <= K.d for delta in split):
        raise HypothesisError(f"split {split} is not a composition of {total} into {K.r} parts in [0, {K.d}]")
    return split


def _draw(K: Realizable, rng: np.random.Generator, split: Optional[Sequence[int]]) -> MatrixPolynomial:
    if isinstance(K, FullRankStructure):
        return random_polynomial(K.m, K.n, K.d, rng)
    return random_bounded_rank(K.m, K.n, K.r, K.d, column_degrees_for(K, split), rng)


def realize(K: Realizable, seed: SeedLike = None, tol: Optional[ToleranceProfile] = None, split: Optional[Sequence[int]] = None) -> MatrixPolynomial:
    """
    Draws a polynomial of the family K and verifies it.

    A draw is accepted when its computed eigenstructure is exactly K and its
    leading coefficient has rank r (degree exactly d). Each failed draw is
    followed by a fresh one, tol.max_retry draws in total.

    Args:
        K (GenericStructure | FullRankStructure): Target family.
        seed (SeedLike): Seeds the draws.
        tol (ToleranceProfile, optional): Used for the verification.
        split (Sequence[int], optional): Column degrees instead of the balanced ones.

    Returns:
        MatrixPolynomial: The verified polynomial.

    Raises:
        HypothesisError: If `split` does not fit K.
        RealizationError: If no draw verifies. Carries the last signature and the tolerance profile.
    """
    tol = resolve(tol)
    rng = np.random.default_rng(seed)
    if isinstance(K, GenericStructure):
        column_degrees_for(K, split)
        rank = K.r
    else:
        rank = K.rank

    def warn(attempt: int, error: BaseException) -> None:
        logger.log("warning", f"draw {attempt + 1} of {tol.max_retry} rejected", error)

    @retry(retries=tol.max_retry - 1, exceptions=(RealizationError,), on_retry=warn)
    def attempt() -> MatrixPolynomial:
        P = _draw(K, rng, split)
        try:
            signature = complete_eigenstructure(P, tol)
        except (ToleranceError, BalanceError) as e:
            raise RealizationError(f"analysis of the draw failed: {e.args[0]}", {"target": K.to_dict(), **e.diagnostics}) from e
        leading_rank = numerical_rank(P.coeffs[P.grade], tol, norm(P))
        if not K.matches(signature) or leading_rank != rank:
            raise RealizationError(
                "drawn polynomial does not have the requested structure",
                {"target": K.to_dict(), "computed": signature.to_dict(), "leading_rank": leading_rank, "tol": tol},
            )
        return P

    return attempt()
