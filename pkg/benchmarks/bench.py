"""Compare the jitted kernels against the plain-Python fallback.

Each workload runs in a fresh subprocess (so module import picks one path or
the other via LRPICTURES_NO_NUMBA), does one warmup pass, then reports the
best of three timed passes. Run from the repository root:

    python3 benchmarks/bench.py
"""

from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time


def work_fillings():
    from lrpictures.diagram import SkewShape
    from lrpictures.tableau import _fillings

    shape = SkewShape((5, 4, 3), (1,))
    _fillings.cache_clear()
    out = _fillings(shape, 5, 5)
    return f"{out.shape[0]} fillings of (5,4,3)/(1) over 5 letters"


def work_pictures():
    from lrpictures.diagram import SkewShape
    from lrpictures.picture import enumerate_pictures
    from lrpictures.reading import middle_eastern

    x = SkewShape((4, 4, 3, 1))
    # a fully disconnected codomain maximizes the search space
    y = SkewShape(tuple(range(12, 0, -1)), tuple(range(11, 0, -1)))
    pics = enumerate_pictures(x, y, middle_eastern(y), middle_eastern(x))
    return f"{len(pics)} pictures into a 12-cell antichain"


def work_coefficients():
    from lrpictures import lr, sweeps
    from lrpictures.tableau import _fillings

    # the enumerators memoize; clear so every pass measures real work
    _fillings.cache_clear()
    lr._glr_lr.cache_clear()
    lr._glmn_lr.cache_clear()
    records = sweeps.run_sweep(
        sweeps.straight_triples(6), specs=("ME",), roundtrips=False, identity=False
    )
    bad = sum(not sweeps.record_ok(r) for r in records)
    return f"{len(records)} triples to size 6, {bad} mismatches"


WORKLOADS = {
    "fillings": work_fillings,
    "pictures": work_pictures,
    "coefficients": work_coefficients,
}


def run_worker(name: str) -> None:
    fn = WORKLOADS[name]
    detail = fn()  # warmup: jit compilation and caches
    best = min(_timed(fn) for _ in range(3))
    print(f"{best:.4f} {detail}")


def _timed(fn) -> float:
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


def run_table() -> int:
    rows = []
    for name in WORKLOADS:
        times = {}
        detail = ""
        for label, flag in (("numba", "0"), ("plain", "1")):
            env = dict(os.environ, LRPICTURES_NO_NUMBA=flag)
            proc = subprocess.run(
                [sys.executable, __file__, "--worker", name],
                env=env,
                capture_output=True,
                text=True,
            )
            if proc.returncode != 0:
                print(proc.stderr, file=sys.stderr)
                return 1
            first, _, detail = proc.stdout.strip().partition(" ")
            times[label] = float(first)
        rows.append((name, times["numba"], times["plain"], detail))
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'numba':>9}  {'plain':>9}  {'speedup':>8}  result")
    for name, jit, plain, detail in rows:
        ratio = plain / jit if jit > 0 else float("inf")
        print(f"{name:<{width}}  {jit:>8.4f}s  {plain:>8.4f}s  {ratio:>7.1f}x  {detail}")
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--worker", choices=sorted(WORKLOADS))
    args = parser.parse_args()
    if args.worker:
        run_worker(args.worker)
        return 0
    return run_table()


if __name__ == "__main__":
    sys.exit(main())
