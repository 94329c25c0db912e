from typing import Any, Optional


class PolyRankError(Exception):
    """Root of every error raised by the toolkit."""


class HypothesisError(PolyRankError, ValueError):
    """
    A parameter or contract violation: wrong shapes, wrong coefficient count,
    r outside 1..min(m,n)-1, malformed polynomial files and the like.
    """


class NumericalDiagnosticError(PolyRankError, ArithmeticError):
    """
    Base for failures of tolerance-based decisions.

    Attributes:
        diagnostics (dict): Whatever the failing step knew at the time, typically
            the singular values around the cutoff and the sequence being built.
    """

    def __init__(self, message: str, diagnostics: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}

    def __str__(self) -> str:
        base = super().__str__()
        if not self.diagnostics:
            return base
        return f"{base} | Diagnostics: {self.diagnostics}"


class ToleranceError(NumericalDiagnosticError):
    """Kernel or Weyr sequence inconsistent with the rank tolerance."""


class BalanceError(NumericalDiagnosticError):
    """Index-sum balance violated by an otherwise completed analysis."""


class RecoveryError(NumericalDiagnosticError):
    """A pivot block of the companion recovery is numerically singular."""


class RealizationError(NumericalDiagnosticError):
    """No draw verified against the requested structure within the retry bound."""


class LinearizationMismatch(PolyRankError, AssertionError):
    """The companion KCF and the pencil family disagree. Indicates a bug."""
