from dataclasses import dataclass, replace

from utils_ops.errors import HypothesisError

DEFAULT_REL_RANK_TOL = 1e-8
DEFAULT_PROBE_COUNT = 5
DEFAULT_MAX_RETRY = 3
DEFAULT_CLUSTER_TOL = 1e-2


@dataclass(frozen=True)
class ToleranceProfile:
    """
    Every rank decision of one analysis reads the same profile, so the
    decisions are consistent with each other.

    Attributes:
        rel_rank_tol (float): Singular values above rel_rank_tol * sigma_max count toward the rank.
        probe_count (int): Random unit-modulus points used for the normal rank.
        max_retry (int): Number of draws `realize` may spend.
        seed (int): Seeds the probe points and the random borderings.
        cluster_tol (float): Chordal radius inside which bordered eigenvalues are
            treated as one split eigenvalue.
    """

    rel_rank_tol: float = DEFAULT_REL_RANK_TOL
    probe_count: int = DEFAULT_PROBE_COUNT
    max_retry: int = DEFAULT_MAX_RETRY
    seed: int = 0
    cluster_tol: float = DEFAULT_CLUSTER_TOL

    def __post_init__(self):
        if not self.rel_rank_tol > 0 or not self.cluster_tol > 0:
            raise HypothesisError(f"tolerances must be positive: {self}")
        if self.probe_count < 1 or self.max_retry < 1:
            raise HypothesisError(f"probe_count and max_retry must be positive: {self}")

    def with_seed(self, seed: int) -> "ToleranceProfile":
        return replace(self, seed=int(seed))


DEFAULT_TOLERANCE = ToleranceProfile()


def resolve(tol: "ToleranceProfile | None") -> ToleranceProfile:
    return DEFAULT_TOLERANCE if tol is None else tol
