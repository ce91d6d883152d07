"""Run the frozen golden cases and print each computed value next to its verdict.

    python scripts/reproduce_goldens.py [--verbose]
"""

from __future__ import annotations

import argparse
import time

from germforge.goldens import CASES


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--verbose", action="store_true", help="print the computed value of every case")
    args = ap.parse_args()
    failed = 0
    for case in CASES:
        t0 = time.perf_counter()
        ok, detail = case.run()
        dt = time.perf_counter() - t0
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} {case.name:45s} {dt:6.3f}s")
        if args.verbose or not ok:
            for line in detail.splitlines():
                print(f"     {line}")
    print(f"{len(CASES) - failed}/{len(CASES)} golden cases pass")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
