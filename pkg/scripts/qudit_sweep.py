#!/usr/bin/env python3
"""Sweep the qudit dimension and tabulate Bell-map/equivalence errors and timing.

Usage: python scripts/qudit_sweep.py [d_max]
"""

import sys
import time

import numpy as np

from bellgate import qudit


def main() -> None:
    d_max = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    print(f"{'d':>3} {'bell_map':>12} {'equivalence':>12} {'gram':>12} {'time_s':>8}")
    for d in range(2, d_max + 1):
        t0 = time.perf_counter()
        gs = qudit.make_gateset(d)
        bell = qudit.bell_map_max_error(gs)
        equiv = np.abs(qudit.v_from_bell_basis(gs) - gs.V).max()
        gram = qudit.orthonormality_max_error(gs) / d
        dt = time.perf_counter() - t0
        print(f"{d:>3} {bell:>12.3e} {equiv:>12.3e} {gram:>12.3e} {dt:>8.3f}")


if __name__ == "__main__":
    main()
