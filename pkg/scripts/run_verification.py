#!/usr/bin/env python3
"""Run the full verification grid for every catalog entry and print a table.

Exits nonzero if any point fails, so this doubles as a smoke gate:

    python scripts/run_verification.py
    python scripts/run_verification.py --tol-direct 1e-6 --entries ex2 ex4
"""

import argparse
import math
import sys

from paramint import catalog, verify

# grid points where the integrand is endpoint-singular or the direct
# kernel is honest only to ~1e-6; the CLI applies the same split
LOOSE = {("ex2", 1.0), ("ex3_alpha", 0.0), ("ex4", 0.99), ("ex4", 1.0)}


def fmt(v, width=22):
    if v is None or (isinstance(v, float) and not math.isfinite(v)):
        return " " * (width - 1) + "-"
    return f"{v:>{width}.14g}"


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--entries", nargs="*", default=None,
                    help="subset of entry ids (default: all)")
    ap.add_argument("--tol-direct", type=float, default=None,
                    help="uniform direct tolerance (default: 1e-7, loose 1e-5)")
    ap.add_argument("--tol-recon", type=float, default=1e-6)
    args = ap.parse_args(argv)

    wanted = args.entries or [e.id for e in catalog.entries()]
    all_ok = True
    for entry_id in wanted:
        entry = catalog.get(entry_id)
        print(f"\n== {entry.id}: {entry.title}")
        print(f"{'alpha':>8} {'direct':>22} {'reconstructed':>22} "
              f"{'closed':>22} {'|d-c|':>10} {'|r-d|':>10}  ok")
        for alpha in entry.verification_grid:
            if args.tol_direct is not None:
                tol_d = args.tol_direct
            else:
                tol_d = 1e-5 if (entry.id, alpha) in LOOSE else 1e-7
            rep = verify(entry.parametric, [alpha],
                         tol_direct=tol_d, tol_reconstruct=args.tol_recon)
            p = rep.points[0]
            all_ok &= p.passed
            print(f"{alpha:>8g} {fmt(p.direct)} {fmt(p.reconstructed)} "
                  f"{fmt(p.closed_form)} {fmt(p.disc_direct_closed, 10)} "
                  f"{fmt(p.disc_recon_direct, 10)}  {'yes' if p.passed else 'NO'}"
                  + (f"  [{p.note}]" if p.note else ""))

    print(f"\noverall: {'pass' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
