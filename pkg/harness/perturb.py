from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from eigenstruct_numeric.recovery import companion_recovery
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from poly_core.companion import companion_distance, companion_shape, first_companion
from poly_core.polynomial import Pencil
from poly_core.sampling import complex_gaussian, random_polynomial
from utils_ops.errors import HypothesisError, RecoveryError
from utils_ops.logs import Logger

logger = Logger("Perturb")


def recovery_threshold(d: int) -> float:
    """Largest perturbation for which recovery is guaranteed: pi / (12 d^{3/2})."""
    return float(np.pi / (12 * d ** 1.5))


def recovery_bound(d: int, norm: float) -> float:
    """4d(1 + ||P||_F)."""
    return 4 * d * (1 + norm)


@dataclass
class PerturbReport:
    """
    Companion recovery under random perturbations of size delta.

    Attributes:
        parameters (dict): m, n, d, delta, trials and seed.
        ratios (list[float]): d(C1_P, C1_P~) / delta per recovered trial; 0 when delta = 0.
        bound (float): Largest 4d(1 + ||P||_F) over the trials.
        failures (list[dict]): Trials where recovery raised.
        above_threshold (bool): delta is not below pi / (12 d^{3/2}).
    """

    parameters: dict[str, Any]
    ratios: list[float] = field(default_factory=list)
    bound: float = 0.0
    failures: list[dict[str, Any]] = field(default_factory=list)
    above_threshold: bool = False

    @property
    def max_ratio(self) -> float:
        return max(self.ratios, default=0.0)

    def within_bound(self) -> bool:
        return self.max_ratio <= self.bound

    def to_dict(self) -> dict[str, Any]:
        return {
            "parameters": self.parameters,
            "max_ratio": self.max_ratio,
            "bound": self.bound,
            "within_bound": self.within_bound(),
            "failures": len(self.failures),
            "failure_details": self.failures,
            "above_threshold": self.above_threshold,
        }


def run_perturb(m: int, n: int, d: int, delta: float, trials: int, seed: int, tol: Optional[ToleranceProfile] = None) -> PerturbReport:
    """
    For each trial draws P with ||P||_F = 1 and a pencil E with ||E||_F = 1,
    recovers P~ from L = C1_P + delta E and records d(C1_P, C1_P~) / delta.

    Raises:
        HypothesisError: If trials < 1, delta < 0 or d < 1.
    """
    tol = resolve(tol)
    if trials < 1 or delta < 0 or d < 1:
        raise HypothesisError(f"need trials >= 1, delta >= 0 and d >= 1, got {trials}, {delta}, {d}")
    report = PerturbReport(parameters={"m": m, "n": n, "d": d, "delta": delta, "trials": trials, "seed": seed})
    if delta >= recovery_threshold(d):
        report.above_threshold = True
        logger.log("warning", "perturbation is not below the recovery threshold", params={"delta": delta, "threshold": recovery_threshold(d)})

    shape = companion_shape(m, n, d)
    for trial in range(trials):
        rng = np.random.default_rng(seed + trial)
        P = random_polynomial(m, n, d, rng)
        P = P.scaled(1.0 / P.norm())
        E = Pencil(complex_gaussian(rng, shape), complex_gaussian(rng, shape))
        E = Pencil(E.A / E.norm(), E.B / E.norm())
        C = first_companion(P)
        L = Pencil(C.A + delta * E.A, C.B + delta * E.B)
        report.bound = max(report.bound, recovery_bound(d, P.norm()))
        try:
            recovered = companion_recovery(L, m, n, d, tol)
        except RecoveryError as e:
            report.failures.append({"trial": trial, "message": e.args[0], "diagnostics": e.diagnostics})
            continue
        ratio = companion_distance(C, first_companion(recovered)) / delta if delta > 0 else 0.0
        report.ratios.append(ratio)
    return report
