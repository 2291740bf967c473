"""Iterative method steps and the shared iteration driver.

Each step function performs a fixed number of f/f' evaluations, so the
total evaluation count of a run is cost-per-step times the iteration
count. The driver keeps that identity exact by reusing the f value it
needs for the residual test as the first evaluation of the next step.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import (
    DerivativeBreakdownError,
    EvalCounters,
    Outcome,
    Problem,
    Status,
    StopCriteria,
    Trace,
    evaluate_df,
    evaluate_f,
    evaluate_uncounted,
)


class FsVariant(enum.Enum):
    """Inner-point convention for the midpoint-family step.

    AS_PRINTED uses x - 2f/f' as the inner point (as published in the
    comparison we reproduce); STANDARD_MIDPOINT uses the usual x - f/(2f').
    """

    AS_PRINTED = "as-printed"
    STANDARD_MIDPOINT = "standard-midpoint"


METHOD_TAGS = ("newton", "wf", "fs", "oz", "klw", "new")


@dataclass(frozen=True)
class MethodId:
    """Identifies a method plus its per-method knobs.

    ``haar_points`` only matters for tag "new"; ``fs_variant`` only for "fs".
    """

    tag: str
    haar_points: int = 2
    fs_variant: FsVariant = FsVariant.AS_PRINTED

    def __post_init__(self) -> None:
        if self.tag not in METHOD_TAGS:
            raise ValueError(f"unknown method tag {self.tag!r}; expected one of {METHOD_TAGS}")
        if self.haar_points < 1:
            raise ValueError("haar_points must be >= 1")

    @property
    def step_cost(self) -> int:
        """f plus f' evaluations per iteration."""
        if self.tag == "newton":
            return 2
        if self.tag == "new":
            return 2 + self.haar_points
        return 3

    @property
    def label(self) -> str:
        if self.tag == "new" and self.haar_points != 2:
            return f"new[P={self.haar_points}]"
        if self.tag == "fs" and self.fs_variant is FsVariant.STANDARD_MIDPOINT:
            return "fs(std)"
        return self.tag


def _require(value: float) -> float:
    if value == 0.0 or not math.isfinite(value):
        raise DerivativeBreakdownError
    return value


def _newton_from(problem: Problem, x: float, fx: float, counters: EvalCounters) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    return x - fx / dfx


def _wf_from(problem: Problem, x: float, fx: float, counters: EvalCounters) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    z = x - fx / dfx
    denom = _require(evaluate_df(problem, z, counters) + dfx)
    return x - 2.0 * fx / denom


def _fs_from(
    problem: Problem,
    x: float,
    fx: float,
    counters: EvalCounters,
    variant: FsVariant,
) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    d = fx / dfx
    if variant is FsVariant.AS_PRINTED:
        inner = x - 2.0 * d
    else:
        # same arithmetic path as the P=1 wavelet step: x - d * 0.5
        inner = x - d * 0.5
    d_inner = _require(evaluate_df(problem, inner, counters))
    return x - fx / d_inner


def _oz_from(problem: Problem, x: float, fx: float, counters: EvalCounters) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    z = x - fx / dfx
    dz = _require(evaluate_df(problem, z, counters))
    return x - (fx / 2.0) * (1.0 / dfx + 1.0 / dz)


def _klw_from(problem: Problem, x: float, fx: float, counters: EvalCounters) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    shifted = evaluate_f(problem, x + fx / dfx, counters)
    if not math.isfinite(shifted):
        raise DerivativeBreakdownError
    return x - (shifted - fx) / dfx


def _haar_from(
    problem: Problem, x: float, fx: float, counters: EvalCounters, points: int
) -> float:
    dfx = _require(evaluate_df(problem, x, counters))
    d = fx / dfx
    total = 0.0
    for k in range(1, points + 1):
        total += evaluate_df(problem, x - d * ((k - 0.5) / points), counters)
    _require(total)
    return x - (points * fx) / total


def newton_step(problem: Problem, x: float, counters: EvalCounters) -> float:
    """Classic quadratic step x - f/f'. Cost: 1 f, 1 f'."""
    return _newton_from(problem, x, evaluate_f(problem, x, counters), counters)


def wf_step(problem: Problem, x: float, counters: EvalCounters) -> float:
    """Trapezoid-average third-order step. Cost: 1 f, 2 f'."""
    return _wf_from(problem, x, evaluate_f(problem, x, counters), counters)


def fs_step(
    problem: Problem,
    x: float,
    counters: EvalCounters,
    variant: FsVariant = FsVariant.AS_PRINTED,
) -> float:
    """Midpoint-family step in either inner-point convention. Cost: 1 f, 2 f'."""
    return _fs_from(problem, x, evaluate_f(problem, x, counters), counters, variant)


def oz_step(problem: Problem, x: float, counters: EvalCounters) -> float:
    """Arithmetic-mean-of-inverses third-order step. Cost: 1 f, 2 f'."""
    return _oz_from(problem, x, evaluate_f(problem, x, counters), counters)


def klw_step(problem: Problem, x: float, counters: EvalCounters) -> float:
    """Difference-quotient third-order step. Cost: 2 f, 1 f'."""
    return _klw_from(problem, x, evaluate_f(problem, x, counters), counters)


def haar_newton_step(
    problem: Problem, x: float, counters: EvalCounters, points: int = 2
) -> float:
    """Wavelet-quadrature modified Newton step with P nodes. Cost: 1 f, 1+P f'."""
    if points < 1:
        raise ValueError("points must be >= 1")
    return _haar_from(problem, x, evaluate_f(problem, x, counters), counters, points)


def _step_from(
    method: MethodId, problem: Problem, x: float, fx: float, counters: EvalCounters
) -> float:
    if method.tag == "newton":
        return _newton_from(problem, x, fx, counters)
    if method.tag == "wf":
        return _wf_from(problem, x, fx, counters)
    if method.tag == "fs":
        return _fs_from(problem, x, fx, counters, method.fs_variant)
    if method.tag == "oz":
        return _oz_from(problem, x, fx, counters)
    if method.tag == "klw":
        return _klw_from(problem, x, fx, counters)
    return _haar_from(problem, x, fx, counters, method.haar_points)


def iterate(
    method: MethodId,
    problem: Problem,
    x0: float,
    criteria: StopCriteria = StopCriteria(),
) -> Outcome:
    """Run a method from x0 until a stopping condition triggers.

    Never raises for numerical trouble: breakdowns and divergence are
    reported through the outcome status so benchmark grids always complete.
    Final-iterate residuals used only for the convergence test are recorded
    in the trace but excluded from the evaluation count.
    """
    if not math.isfinite(x0):
        raise ValueError("x0 must be finite")

    counters = EvalCounters()
    x = x0
    fx = evaluate_f(problem, x, counters)
    trace = Trace(iterates=[x], residuals=[fx], counters=counters)
    status = Status.MAX_ITER
    reused_residual = False

    for _ in range(criteria.max_iter):
        if reused_residual:
            # the previous residual evaluation becomes this step's f(x_n)
            counters.n_f += 1
        try:
            x_new = _step_from(method, problem, x, fx, counters)
        except DerivativeBreakdownError:
            status = Status.DERIVATIVE_BREAKDOWN
            break

        residual = evaluate_uncounted(problem, x_new)
        trace.iterates.append(x_new)
        trace.residuals.append(residual)

        if not math.isfinite(x_new) or abs(x_new) > criteria.escape_radius:
            x = x_new
            status = Status.DIVERGED
            break
        if abs(x_new - x) <= criteria.step_tol or abs(residual) <= criteria.residual_tol:
            x = x_new
            status = Status.CONVERGED
            break

        reused_residual = True
        x, fx = x_new, residual

    return Outcome(
        status=status,
        root=x,
        iterations=len(trace.iterates) - 1,
        nfe=counters.total,
        trace=trace,
    )
