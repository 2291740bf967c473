"""Scalar nonlinear-equation solvers built around a wavelet-quadrature
modified Newton method, with third-order competitors, convergence
diagnostics, and a benchmark comparison grid."""

from .analysis import (
    ConvergenceReport,
    classify,
    coc,
    convergence_report,
    empirical_error_constant,
    format_significant,
    theoretical_error_constant,
)
from .bench import (
    ComparisonTable,
    SuiteEntry,
    TableRow,
    builtin_suite,
    format_table,
    run_comparison,
    suite_entry,
)
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
)
from .methods import (
    FsVariant,
    MethodId,
    fs_step,
    haar_newton_step,
    iterate,
    klw_step,
    newton_step,
    oz_step,
    wf_step,
)
from .quadrature import Resolution, haar_indefinite_integral, resolution_points

__all__ = [
    "ComparisonTable",
    "ConvergenceReport",
    "DerivativeBreakdownError",
    "EvalCounters",
    "FsVariant",
    "MethodId",
    "Outcome",
    "Problem",
    "Resolution",
    "Status",
    "StopCriteria",
    "SuiteEntry",
    "TableRow",
    "Trace",
    "builtin_suite",
    "classify",
    "coc",
    "convergence_report",
    "empirical_error_constant",
    "evaluate_df",
    "evaluate_f",
    "format_significant",
    "format_table",
    "fs_step",
    "haar_indefinite_integral",
    "haar_newton_step",
    "iterate",
    "klw_step",
    "newton_step",
    "oz_step",
    "resolution_points",
    "run_comparison",
    "suite_entry",
    "theoretical_error_constant",
    "wf_step",
]
