from __future__ import annotations

from typing import Sequence, Union

import numpy as np

from poly_core.polynomial import MatrixPolynomial
from utils_ops.errors import HypothesisError

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator, None]


def complex_gaussian(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    # E|z|^2 = 1, rotation invariant
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2.0)


def random_polynomial(m: int, n: int, d: int, seed: SeedLike = None) -> MatrixPolynomial:
    """
    Draws a polynomial with i.i.d. standard complex Gaussian entries in every
    coefficient. Deterministic for a given seed.

    Args:
        m (int): Row count.
        n (int): Column count.
        d (int): Grade.
        seed (SeedLike): Anything numpy.random.default_rng accepts.

    Returns:
        MatrixPolynomial: The sample; its squared norm has expectation (d+1)mn.
    """
    rng = np.random.default_rng(seed)
    return MatrixPolynomial(m, n, d, complex_gaussian(rng, (d + 1, m, n)))


def balanced_split(total: int, parts: int, cap: int) -> list[int]:
    """
    Composition of `total` into `parts` integers in [0, cap], as equal as
    possible, larger parts first.

    Raises:
        HypothesisError: If no such composition exists.
    """
    if parts < 1 or total < 0 or total > parts * cap:
        raise HypothesisError(f"cannot split {total} into {parts} parts within [0, {cap}]")
    q, rem = divmod(total, parts)
    return [q + 1] * rem + [q] * (parts - rem)


def random_bounded_rank(m: int, n: int, r: int, d: int, col_degrees: Sequence[int], seed: SeedLike = None) -> MatrixPolynomial:
    """
    Samples E(lambda) F(lambda), a grade-d polynomial of rank at most r.

    E is m x r, its column j a random vector polynomial of grade delta_j; F is
    r x n, its row j of grade d - delta_j. Every rank-one term e_j f_j^T then has
    grade exactly d. For generic draws the left minimal indices sum to
    sum(delta_j) and the right ones to rd - sum(delta_j).

    Args:
        m (int): Row count.
        n (int): Column count.
        r (int): Rank bound, at most min(m, n).
        d (int): Grade.
        col_degrees (Sequence[int]): r integers delta_j with 0 <= delta_j <= d.
        seed (SeedLike): Anything numpy.random.default_rng accepts.

    Returns:
        MatrixPolynomial: The product, grade d.

    Raises:
        HypothesisError: If r is out of range or some delta_j is.
    """
    if r < 0 or r > min(m, n):
        raise HypothesisError(f"rank bound r={r} outside 0..{min(m, n)}")
    col_degrees = [int(delta) for delta in col_degrees]
    if len(col_degrees) != r:
        raise HypothesisError(f"need {r} column degrees, got {len(col_degrees)}")
    if any(delta < 0 or delta > d for delta in col_degrees):
        raise HypothesisError(f"column degrees {col_degrees} must lie in [0, {d}]")

    rng = np.random.default_rng(seed)
    coeffs = np.zeros((d + 1, m, n), dtype=np.complex128)
    for delta in col_degrees:
        e = complex_gaussian(rng, (delta + 1, m))
        f = complex_gaussian(rng, (d - delta + 1, n))
        # coefficient of lambda^k in e(lambda) f(lambda)^T
        for i in range(delta + 1):
            coeffs[i:i + d - delta + 1] += e[i][None, :, None] * f[:, None, :]
    return MatrixPolynomial(m, n, d, coeffs)
