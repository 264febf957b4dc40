"""Uniform result record returned by every numerical evaluation path."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["EvalResult"]


@dataclass(frozen=True)
class EvalResult:
    """Value plus a posteriori error estimate and provenance.

    Attributes:
        value: the computed complex value.
        err_estimate: non-negative absolute error estimate.  Estimates are
            honest but not certified bounds.
        strategy: short tag naming the code path that actually ran
            (e.g. ``"hurwitz/euler-maclaurin"``), so cross-checks can verify
            two routes really were different.
        work: number of elementary kernel/term evaluations consumed.
    """

    value: complex
    err_estimate: float
    strategy: str
    work: int

    def __post_init__(self) -> None:
        if not (self.err_estimate >= 0.0) or math.isnan(self.err_estimate):
            raise ValueError("err_estimate must be non-negative")
        if self.work < 0:
            raise ValueError("work must be non-negative")

    def to_dict(self) -> dict:
        """JSON-friendly form; complex values become {"re": .., "im": ..}."""
        return {
            "value": {"re": self.value.real, "im": self.value.imag},
            "err_estimate": self.err_estimate,
            "strategy": self.strategy,
            "work": self.work,
        }
