"""Expansions, recurrences, sign-pattern checks and sweeps over spherical families."""

from spherikit.analysis.expand import (
    LinearizationExpansion,
    RecurrenceTriple,
    linearize,
    recurrence,
)
from spherikit.analysis.sweep import run_sweep

__all__ = ["LinearizationExpansion", "RecurrenceTriple", "linearize", "recurrence", "run_sweep"]
