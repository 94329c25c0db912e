from typing import Optional

from utils_ops.errors import HypothesisError


def check_bounded_rank(m: int, n: int, r: int, d: int, a: Optional[int] = None) -> None:
    """m, n >= 2, d >= 1, 1 <= r <= min(m, n) - 1 and, when given, 0 <= a <= rd."""
    if m < 2 or n < 2:
        raise HypothesisError(f"need m, n >= 2, got {m}x{n}")
    if d < 1:
        raise HypothesisError(f"need grade d >= 1, got {d}")
    if not 1 <= r <= min(m, n) - 1:
        raise HypothesisError(f"need 1 <= r <= {min(m, n) - 1} for {m}x{n}, got r={r}; use the full-rank families for r = min(m, n)")
    if a is not None and not 0 <= a <= r * d:
        raise HypothesisError(f"need 0 <= a <= {r * d}, got a={a}")


def check_pencil(m1: int, n1: int, r1: int, a1: Optional[int] = None) -> None:
    if m1 < 2 or n1 < 2:
        raise HypothesisError(f"need m1, n1 >= 2, got {m1}x{n1}")
    if not 1 <= r1 <= min(m1, n1) - 1:
        raise HypothesisError(f"need 1 <= r1 <= {min(m1, n1) - 1} for {m1}x{n1}, got r1={r1}")
    if a1 is not None and not 0 <= a1 <= r1:
        raise HypothesisError(f"need 0 <= a1 <= {r1}, got a1={a1}")


def check_full_rank(m: int, n: int, d: int) -> None:
    if m < 1 or n < 1 or d < 1:
        raise HypothesisError(f"need m, n, d >= 1, got m={m}, n={n}, d={d}")
