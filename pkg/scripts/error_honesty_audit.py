#!/usr/bin/env python3
"""Audit the error estimates and domination verdicts across the catalog.

For every grid point with a closed form, compare the true error of the
direct quadrature against the reported estimate; the headline number is
the worst true/estimate ratio (honesty demands it stay below 10 on
converged results).  Then run the standard domination windows and print
the verdicts with their envelope-integral estimates.

    python scripts/error_honesty_audit.py
"""

import math
import sys

from paramint import QuadStatus, domination_scan, eval_direct
from paramint import catalog

WINDOWS = [
    ("ex1", (0.5, 2.0)),
    ("ex3_beta", (0.0, 2.0)),
    ("ex4", (0.0, 0.9)),
    ("ex1", (0.0, 1.0)),
]


def main() -> int:
    print(f"{'entry':<10} {'alpha':>8} {'true err':>12} {'estimate':>12} "
          f"{'ratio':>8}  status")
    worst = 0.0
    worst_converged = 0.0
    for entry in catalog.entries():
        P = entry.parametric
        for alpha in entry.verification_grid:
            res = eval_direct(P, alpha)
            true_err = abs(res.value - P.solution_closed(alpha))
            ratio = true_err / res.abs_err_est if res.abs_err_est > 0 else 0.0
            worst = max(worst, ratio)
            if res.status is QuadStatus.CONVERGED:
                worst_converged = max(worst_converged, ratio)
            print(f"{entry.id:<10} {alpha:>8g} {true_err:>12.3e} "
                  f"{res.abs_err_est:>12.3e} {ratio:>8.2f}  {res.status.value}")

    print(f"\nworst true/estimate ratio (converged): {worst_converged:.3f}")
    print(f"worst true/estimate ratio (all):       {worst:.3f}")

    print("\ndomination windows:")
    for entry_id, window in WINDOWS:
        rep = domination_scan(catalog.get(entry_id).parametric, window)
        est = rep.envelope_integral_estimate
        est_s = f"{est:.6g}" if math.isfinite(est) else str(est)
        print(f"  {entry_id:<10} alpha in [{window[0]:g}, {window[1]:g}]"
              f"  -> {rep.verdict.value:<18} envelope integral ~ {est_s}")

    return 0 if worst_converged <= 10.0 else 1


if __name__ == "__main__":
    raise SystemExit(main())
