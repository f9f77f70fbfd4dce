"""Compare the compiled and pure-Python kernel paths on fixed workloads.

The kernels are written once and either JIT-compiled or executed as plain
Python depending on the LEAFSPAN_JIT environment flag read at import time.
This script runs the same workloads in two child processes, one per path,
checks that both produce identical results, and reports the timings.

Usage:
    python3 benchmarks/bench_kernels.py           # table on stdout
    python3 benchmarks/bench_kernels.py --json    # machine-readable report
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    """Name -> zero-argument callable returning a result checksum.

    Imports happen inside so the child process controls LEAFSPAN_JIT before
    the kernels module is first loaded.
    """
    import numpy as np

    from leafspan import ExtremalParams, build_extremal, build_matrix
    from leafspan import _kernels
    from leafspan.spectra import MatrixKind

    def enumerate_connected_n6():
        masks = _kernels.connected_masks(6)
        return [int(masks.shape[0]), int(np.sum(masks) % 2**31)]

    def leaf_degree_batch_n5():
        masks = _kernels.connected_masks(5)
        cond, tree = _kernels.batch_leaf_degree(5, masks, 1, 10**8)
        return [int(np.sum(cond)), int(np.sum(tree))]

    def leaf_distance_batch_n5():
        masks = _kernels.connected_masks(5)
        cond, tree = _kernels.batch_leaf_distance(5, masks, 2, 2, 4, 10**8)
        return [int(np.sum(cond)), int(np.sum(tree))]

    def violation_scan_n6():
        masks = _kernels.connected_masks(6)
        agree = _kernels.batch_condition_agreement(6, masks[:4000], 2, 1)
        return [int(np.sum(agree))]

    def tree_search_dense():
        g = build_extremal(ExtremalParams(9, 2))
        adj = _kernels.adj_int64(g)
        total = 0
        for _ in range(200):
            status, parent, nodes = _kernels.tree_search(g.n, adj, 0, 4, 10**8)
            total += int(status) + int(nodes)
        return [total]

    def power_radius_distance():
        m = build_matrix(build_extremal(ExtremalParams(40, 2)), MatrixKind.DISTANCE)
        acc = 0.0
        for _ in range(50):
            rho, _its = _kernels.power_radius(m, 1e-10, 2_000_000)
            acc += rho
        return [round(acc, 6)]

    return {
        "enumerate_connected_n6": enumerate_connected_n6,
        "leaf_degree_batch_n5": leaf_degree_batch_n5,
        "leaf_distance_batch_n5": leaf_distance_batch_n5,
        "violation_scan_n6": violation_scan_n6,
        "tree_search_dense": tree_search_dense,
        "power_radius_distance": power_radius_distance,
    }


def _run_child() -> None:
    from leafspan import _kernels

    results = {"using_jit": bool(_kernels.USING_JIT), "workloads": {}}
    for name, fn in _workloads().items():
        fn()  # warm-up: compilation (jit path) and caches
        start = time.perf_counter()
        checksum = fn()
        elapsed = time.perf_counter() - start
        results["workloads"][name] = {"seconds": elapsed, "checksum": checksum}
    json.dump(results, sys.stdout)


def _spawn(jit: bool) -> dict:
    env = os.environ.copy()
    env["LEAFSPAN_JIT"] = "1" if jit else "0"
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--child"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    report = json.loads(proc.stdout)
    if report["using_jit"] != jit:
        raise RuntimeError(
            f"child reported using_jit={report['using_jit']} for requested jit={jit}; "
            "is numba importable in this environment?"
        )
    return report


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    parser.add_argument("--json", action="store_true", help="emit a JSON report")
    args = parser.parse_args(argv)
    if args.child:
        _run_child()
        return 0

    compiled = _spawn(jit=True)
    pure = _spawn(jit=False)

    rows = []
    mismatches = []
    for name in compiled["workloads"]:
        c = compiled["workloads"][name]
        p = pure["workloads"][name]
        if c["checksum"] != p["checksum"]:
            mismatches.append(name)
        rows.append(
            {
                "workload": name,
                "compiled_s": c["seconds"],
                "pure_s": p["seconds"],
                "speedup": p["seconds"] / c["seconds"] if c["seconds"] > 0 else None,
                "results_match": c["checksum"] == p["checksum"],
            }
        )

    if args.json:
        json.dump({"rows": rows, "mismatches": mismatches}, sys.stdout, indent=2)
        print()
    else:
        width = max(len(r["workload"]) for r in rows)
        print(f"{'workload':<{width}}  {'compiled':>10}  {'pure':>10}  {'speedup':>8}  match")
        for r in rows:
            print(
                f"{r['workload']:<{width}}  {r['compiled_s']:>9.4f}s  {r['pure_s']:>9.4f}s  "
                f"{r['speedup']:>7.1f}x  {'yes' if r['results_match'] else 'NO'}"
            )
    if mismatches:
        print(f"RESULT MISMATCH in: {', '.join(mismatches)}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
