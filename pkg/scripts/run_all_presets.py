#!/usr/bin/env python3
"""Run every built-in figure preset and write its CSV, with timing.

Usage: python3 scripts/run_all_presets.py [--out DIR] [--workers N]
"""
import argparse
import sys
import time
from pathlib import Path

from optomech.presets import PRESETS
from optomech.sweep import run_sweep, write_csv


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("out"))
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    total = 0.0
    for name in sorted(PRESETS):
        pre = PRESETS[name]
        t0 = time.perf_counter()
        rows = run_sweep(pre.params, pre.sweep, workers=args.workers)
        dt = time.perf_counter() - t0
        total += dt
        path = args.out / f"{name}.csv"
        with open(path, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh, spec=pre.sweep, n_modes=pre.params.n_modes,
                      preset=name)
        n_unstable = sum(1 for r in rows if not r.values["stable"])
        note = f", {n_unstable} unstable" if n_unstable else ""
        print(f"{name:<6} {len(rows):>4} points in {dt:6.2f} s{note} -> {path}")
    print(f"total {total:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
