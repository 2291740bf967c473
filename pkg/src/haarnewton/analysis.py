"""Convergence diagnostics: empirical order, asymptotic error constants."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Outcome, Status, Trace

# Windows keeping the diagnostics in the asymptotic regime: third-order
# methods hit roundoff within a handful of steps, so pre-asymptotic and
# roundoff-dominated errors must be excluded or they dominate the estimate.
COC_ERROR_MIN = 1e-13
COC_ERROR_MAX = 1.0
CONSTANT_ERROR_MIN = 1e-10
CONSTANT_ERROR_MAX = 1e-2
CONSTANT_NEXT_MIN = 1e-16


@dataclass(frozen=True)
class ConvergenceReport:
    coc: float
    error_constant_empirical: float
    error_constant_theoretical: float
    usable_triples: int


def _errors(trace: Trace, root: float) -> list[float]:
    return [x - root for x in trace.iterates]


def _usable_triples(errors: list[float]) -> list[tuple[float, float, float]]:
    triples = []
    for i in range(1, len(errors) - 1):
        window = errors[i - 1 : i + 2]
        if all(COC_ERROR_MIN < abs(e) < COC_ERROR_MAX for e in window):
            triples.append(tuple(window))
    return triples


def coc(trace: Trace, root: float) -> float:
    """Computational order of convergence from the last clean iterate triple.

    Uses rho = ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}| with e_n measured against
    ``root``. Returns NaN when no triple has all three errors inside the
    usable window (roundoff-dominated or diverged runs).
    """
    if len(trace.iterates) < 4:
        raise ValueError("need at least 4 iterates to estimate an order")
    if not math.isfinite(root):
        raise ValueError("root must be finite")
    for e0, e1, e2 in reversed(_usable_triples(_errors(trace, root))):
        denom = math.log(abs(e1 / e0))
        if denom != 0.0:
            return math.log(abs(e2 / e1)) / denom
    return math.nan


def usable_triple_count(trace: Trace, root: float) -> int:
    """How many consecutive iterate triples fall inside the usable window."""
    return len(_usable_triples(_errors(trace, root)))


def theoretical_error_constant(c2: float, c3: float, n_points: int) -> float:
    """Leading cubic error coefficient c2^2 - c3/(4 N^2) for an N-node run."""
    if n_points < 1:
        raise ValueError("n_points must be >= 1")
    return c2 * c2 - c3 / (4.0 * n_points * n_points)


def empirical_error_constant(trace: Trace, root: float) -> float:
    """Observed |e_{n+1}| / |e_n|^3 from the last usable error pair.

    Only pairs with e_n inside [1e-10, 1e-2] and e_{n+1} above roundoff
    qualify; returns NaN when the trace has no such pair.
    """
    if len(trace.iterates) < 2:
        raise ValueError("need at least 2 iterates")
    if not math.isfinite(root):
        raise ValueError("root must be finite")
    errors = _errors(trace, root)
    for i in reversed(range(len(errors) - 1)):
        e_n, e_next = abs(errors[i]), abs(errors[i + 1])
        if CONSTANT_ERROR_MIN < e_n <= CONSTANT_ERROR_MAX and e_next > CONSTANT_NEXT_MIN:
            return e_next / e_n**3
    return math.nan


def convergence_report(
    trace: Trace,
    root: float,
    c2: float | None = None,
    c3: float | None = None,
    n_points: int = 2,
) -> ConvergenceReport:
    """Bundle the diagnostics; the theoretical constant needs analytic c2, c3."""
    theoretical = math.nan
    if c2 is not None and c3 is not None:
        theoretical = theoretical_error_constant(c2, c3, n_points)
    return ConvergenceReport(
        coc=coc(trace, root) if len(trace.iterates) >= 4 else math.nan,
        error_constant_empirical=empirical_error_constant(trace, root),
        error_constant_theoretical=theoretical,
        usable_triples=usable_triple_count(trace, root),
    )


def format_significant(x: float, digits: int = 15) -> str:
    """Format with a fixed number of significant digits, keeping trailing zeros."""
    if x == 0.0:
        return "0.0"
    if not math.isfinite(x):
        return "nan" if math.isnan(x) else ("inf" if x > 0 else "-inf")
    exponent = math.floor(math.log10(abs(x)))
    if -5 < exponent < digits:
        return f"{x:.{max(digits - 1 - exponent, 0)}f}"
    return f"{x:.{digits - 1}e}"


DIVERGED_LABEL = "Diverse"  # the label used by the reference comparison table
BREAKDOWN_LABEL = "Breakdown"


def classify(outcome: Outcome) -> str:
    """Map an outcome to its comparison-table cell text."""
    if outcome.status is Status.CONVERGED:
        return format_significant(outcome.root)
    if outcome.status is Status.DERIVATIVE_BREAKDOWN:
        return BREAKDOWN_LABEL
    return DIVERGED_LABEL
