#!/usr/bin/env python3
"""Convergence-order and error-constant diagnostics for the wavelet method."""

import math

from haarnewton.analysis import (
    coc,
    empirical_error_constant,
    theoretical_error_constant,
)
from haarnewton.bench import builtin_suite
from haarnewton.core import Problem, Status
from haarnewton.methods import MethodId, iterate


def main() -> None:
    method = MethodId("new", haar_points=2)
    print("suite convergence orders (wavelet method, P = 2):")
    for entry in builtin_suite():
        outcome = iterate(method, entry.problem, entry.x0)
        if outcome.status is not Status.CONVERGED or len(outcome.trace.iterates) < 4:
            print(f"  {entry.problem.name}: {outcome.status.value}")
            continue
        rho = coc(outcome.trace, outcome.root)
        print(f"  {entry.problem.name}: IT={outcome.iterations}  rho={rho:.3f}")

    print()
    print("asymptotic error constant check on e^x - 1 (c2=1/2, c3=1/6):")
    problem = Problem("expm1", lambda x: math.exp(x) - 1.0, math.exp)
    outcome = iterate(method, problem, 0.05)
    observed = empirical_error_constant(outcome.trace, outcome.root)
    predicted = theoretical_error_constant(0.5, 1.0 / 6.0, 2)
    print(f"  empirical:   {observed:.6f}")
    print(f"  theoretical: {predicted:.6f}  (23/96)")


if __name__ == "__main__":
    main()
