#!/usr/bin/env python3
"""Benchmark the GF(q) matrix kernels: JIT backend vs interpreted fallback.

Runs itself once per backend in a subprocess (the backend is chosen at import
time from EQCODES_BACKEND), then prints a side-by-side table.

    python benchmarks/bench_kernels.py            # compare both backends
    python benchmarks/bench_kernels.py --reps 50  # more repetitions
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = [
    # (label, p, m, rows, cols)
    ("rref GF(2) 48x48", 2, 1, 48, 48),
    ("rref GF(3) 32x32", 3, 1, 32, 32),
    ("rref GF(64) 24x24", 2, 6, 24, 24),
    ("det GF(5) 32x32", 5, 1, 32, 32),
    ("matmul GF(2) 32x32", 2, 1, 32, 32),
]


def run_current(reps: int) -> None:
    import numpy as np

    from eqcodes import kernels
    from eqcodes.gf import field_new

    rng = np.random.default_rng(0)
    results = {"backend": kernels.BACKEND}
    kernels.warmup()
    for label, p, m, rows, cols in WORKLOADS:
        ctx = field_new(p, m)
        exp, log = ctx.tables()
        mats = [rng.integers(0, ctx.q, size=(rows, cols)).astype(np.int64)
                for _ in range(reps)]
        op = label.split()[0]
        t0 = time.perf_counter()
        if op == "rref":
            for a in mats:
                kernels.rref(a.copy(), p, m, ctx.q, exp, log)
        elif op == "det":
            for a in mats:
                kernels.det(a.copy(), p, m, ctx.q, exp, log)
        else:
            for a in mats:
                kernels.matmul(a, a, p, m, ctx.q, exp, log)
        results[label] = (time.perf_counter() - t0) / reps
    print(json.dumps(results))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reps", type=int, default=20)
    parser.add_argument("--run-current", action="store_true",
                        help="time the backend selected by EQCODES_BACKEND and emit JSON")
    args = parser.parse_args()

    if args.run_current:
        run_current(args.reps)
        return

    rows = {}
    for backend in ("numba", "python"):
        env = dict(os.environ, EQCODES_BACKEND=backend)
        proc = subprocess.run(
            [sys.executable, __file__, "--run-current", "--reps", str(args.reps)],
            capture_output=True, text=True, env=env)
        if proc.returncode != 0:
            print(f"{backend} run failed:\n{proc.stderr}", file=sys.stderr)
            continue
        rows[backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    if not rows:
        sys.exit(1)
    print(f"{'workload':24s} " + " ".join(f"{b + ' (ms)':>14s}" for b in rows)
          + ("   speedup" if len(rows) == 2 else ""))
    for label, *_ in WORKLOADS:
        cells = [rows[b][label] * 1e3 for b in rows]
        line = f"{label:24s} " + " ".join(f"{c:14.3f}" for c in cells)
        if len(cells) == 2 and cells[0] > 0:
            line += f"   {cells[1] / cells[0]:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
