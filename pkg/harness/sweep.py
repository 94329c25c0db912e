import multiprocessing
import concurrent.futures as futures
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

import numpy as np
import pandas as pd

from eigenstruct_numeric.engine import complete_eigenstructure
from eigenstruct_numeric.signature import StructureSignature, index_list
from eigenstruct_numeric.tolerance import ToleranceProfile, resolve
from generic_model.families import FullRankStructure, GenericStructure, generic_full_rank, generic_structures
from generic_model.realize import column_degrees_for
from poly_core.polynomial import MatrixPolynomial
from poly_core.sampling import random_bounded_rank, random_polynomial
from utils_ops.envHandler import getint
from utils_ops.errors import NumericalDiagnosticError
from utils_ops.logs import Logger

CORE_MULTIPLIER = 2
SWEEP_COLUMNS = ["trial", "a_classified", "right_indices", "left_indices", "residual_balance"]
UNMATCHED = -1


def default_workers() -> int:
    return getint("POLYRANK_WORKERS", min(32, multiprocessing.cpu_count() * CORE_MULTIPLIER))


@dataclass
class SweepReport:
    """
    Outcome of a genericity sweep.

    Attributes:
        parameters (dict): m, n, r, d, split, trials, seed and the full-rank flag.
        rows (list[dict]): One CSV row per trial, in trial order.
        histogram (Counter): Classified family index a -> count.
        unmatched (int): Analyzed trials that match no generic family.
        failures (list[dict]): Trials whose analysis raised, with the diagnostics.
    """

    parameters: dict[str, Any]
    rows: list[dict[str, Any]] = field(default_factory=list)
    histogram: Counter = field(default_factory=Counter)
    unmatched: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)

    @property
    def trials(self) -> int:
        return self.parameters["trials"]

    def is_conserved(self) -> bool:
        return sum(self.histogram.values()) + self.unmatched + len(self.failures) == self.trials

    def fraction(self, a: int) -> float:
        return self.histogram.get(a, 0) / self.trials

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=SWEEP_COLUMNS)

    def to_csv(self) -> str:
        return self.to_frame().to_csv(index=False, lineterminator="\n")

    def to_dict(self) -> dict[str, Any]:
        return {
            "parameters": self.parameters,
            "histogram": {str(a): self.histogram[a] for a in sorted(self.histogram)},
            "unmatched": self.unmatched,
            "failures": self.failures,
        }


class Sweeper:
    """
    Samples bounded-rank (or full-rank) polynomials, analyzes each one and
    classifies its signature against the generic families.

    Trial i uses seed + i for both the draw and the analysis, so the result does
    not depend on how many workers run the trials.
    """

    def __init__(self, m: int, n: int, r: int, d: int, split: Optional[Sequence[int]] = None, full_rank: bool = False, tol: Optional[ToleranceProfile] = None, workers: Optional[int] = None):
        self.m, self.n, self.r, self.d = m, n, r, d
        self.full_rank = full_rank
        self.tol = resolve(tol)
        self.workers = workers or default_workers()
        self.logger = Logger("Sweeper")
        if full_rank:
            self.families: list = [generic_full_rank(m, n, d)]
            self.split = None
        else:
            self.families = generic_structures(m, n, r, d)
            self.split = None if split is None else column_degrees_for(GenericStructure(m, n, r, d, r * d - sum(split)), split)

    def __call__(self, *args: Any, **kwds: Any) -> SweepReport:
        return self.run(*args, **kwds)

    def sample(self, rng: np.random.Generator) -> MatrixPolynomial:
        if self.full_rank:
            return random_polynomial(self.m, self.n, self.d, rng)
        # without a fixed split every delta_j is uniform on 0..d
        split = self.split if self.split is not None else rng.integers(0, self.d + 1, size=self.r)
        return random_bounded_rank(self.m, self.n, self.r, self.d, split, rng)

    def classify(self, signature: StructureSignature) -> int:
        for K in self.families:
            if K.matches(signature):
                return K.a
        return UNMATCHED

    def trial(self, index: int, seed: int) -> dict[str, Any]:
        trial_seed = seed + index
        P = self.sample(np.random.default_rng(trial_seed))
        try:
            signature = complete_eigenstructure(P, self.tol.with_seed(trial_seed))
        except NumericalDiagnosticError as e:
            return {"trial": index, "error": type(e).__name__, "message": e.args[0], "diagnostics": e.diagnostics}
        return {
            "trial": index,
            "a_classified": self.classify(signature),
            "right_indices": index_list(signature.right),
            "left_indices": index_list(signature.left),
            "residual_balance": signature.balance_residual(),
        }

    def run(self, trials: int, seed: int) -> SweepReport:
        """
        Runs `trials` independent trials on a thread pool.

        Returns:
            SweepReport: Rows in trial order regardless of completion order.
        """
        report = SweepReport(parameters={
            "m": self.m, "n": self.n, "r": self.r, "d": self.d,
            "split": None if self.split is None else list(self.split),
            "full_rank": self.full_rank, "trials": trials, "seed": seed,
        })
        with futures.ThreadPoolExecutor(max_workers=self.workers) as executor:
            results = list(executor.map(lambda i: self.trial(i, seed), range(trials)))

        for result in results:
            if "error" in result:
                report.failures.append(result)
                report.rows.append({"trial": result["trial"], "a_classified": UNMATCHED, "right_indices": "", "left_indices": "", "residual_balance": ""})
                continue
            report.rows.append(result)
            if result["a_classified"] == UNMATCHED:
                report.unmatched += 1
                self.logger.log("warning", "signature matches no generic family", params={k: result[k] for k in ("trial", "right_indices", "left_indices")})
            else:
                report.histogram[result["a_classified"]] += 1
        return report


def run_sweep(m: int, n: int, r: int, d: int, trials: int, seed: int, split: Optional[Sequence[int]] = None, full_rank: bool = False, tol: Optional[ToleranceProfile] = None, workers: Optional[int] = None) -> SweepReport:
    return Sweeper(m, n, r, d, split, full_rank, tol, workers).run(trials, seed)
