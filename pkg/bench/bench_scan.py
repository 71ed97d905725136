#!/usr/bin/env python3
"""Benchmark the compiled scan kernels against the pure-Python fallback.

Usage: python bench/bench_scan.py [--quick]

Runs identical candidate ranges through both backends, checks the outputs
match, and reports throughput plus speedup.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hfpc import _scan_py  # noqa: E402

try:
    from hfpc import _scan as _compiled
except ImportError:
    _compiled = None


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_case(name, pure_fn, compiled_fn, args):
    out_p, dt_p = _time(pure_fn, *args)
    if compiled_fn is None:
        print(f"{name:28s} pure: {dt_p:8.3f}s   (no compiled backend)")
        return
    out_c, dt_c = _time(compiled_fn, *args)
    if out_p != out_c:
        raise SystemExit(f"{name}: backend outputs differ!")
    examined = out_p[1][0]
    rate_c = examined / dt_c / 1e6 if dt_c else float("inf")
    print(
        f"{name:28s} pure: {dt_p:8.3f}s   compiled: {dt_c:7.3f}s   "
        f"speedup: {dt_p / dt_c:6.1f}x   ({rate_c:7.1f} M cand/s compiled)"
    )


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="smaller ranges")
    opts = ap.parse_args()

    cases = [
        ("2t22u t=4 (full)", (1, 4, 0, 1 << 16, False)),
        ("2t4u  t=6 (full)", (2, 6, 0, 1 << 24, False)),
    ]
    qcases = [("tqu t=5 (full)", (5, 0, 1 << 20, False))]
    if not opts.quick:
        cases.append(("2t4u  t=8 (1/64 slice)", (2, 8, 0, 1 << 26, False)))
        qcases.append(("tqu t=7 (1/16 slice)", (7, 0, 1 << 24, False)))

    print("two-generator scan")
    for name, args in cases:
        bench_case(
            name,
            _scan_py.scan_two_generator,
            _compiled.scan_two_generator if _compiled else None,
            args,
        )
    print("quaternion scan")
    for name, args in qcases:
        bench_case(
            name,
            _scan_py.scan_quaternion,
            _compiled.scan_quaternion if _compiled else None,
            args,
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
