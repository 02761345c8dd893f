"""Run the full machine verification for a Hecke rank and time each item.

The five checks are the ones behind `srw hecke verify`: natural squares
are decreasing, every critical pair has a decreasing chosen diagram, the
commutation subsystem is convergent, attractor loops only commute letters,
and every chosen diagram class is derivable from the small base family of
relation squares.  The script prints one line per check plus wall times,
so regressions in either correctness or cost are visible at a glance.

Usage:
    python3 scripts/coherence_report.py --rank 3
    python3 scripts/coherence_report.py --rank 4 --bound 200000
"""

import argparse
import time

from srw.hecke import (
    _verify_attractor_loops,
    _verify_c_subsystem,
    _verify_coherence,
    _verify_criticals,
    _verify_naturals,
    hecke_system,
)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rank", type=int, default=3)
    ap.add_argument("--bound", type=int, default=100000,
                    help="substitution budget for the derivability search")
    ap.add_argument("--context", type=int, default=3,
                    help="separator length for natural squares")
    ap.add_argument("--attractor-len", type=int, default=6,
                    help="word length cap for the attractor sweep")
    args = ap.parse_args()

    sys = hecke_system(args.rank, "rfull")
    checks = [
        lambda: _verify_naturals(sys, args.context),
        lambda: _verify_criticals(sys),
        lambda: _verify_c_subsystem(sys),
        lambda: _verify_attractor_loops(sys, args.attractor_len),
        lambda: _verify_coherence(sys, args.bound),
    ]
    worst = "PASS"
    total = 0.0
    for check in checks:
        t0 = time.monotonic()
        item = check()
        dt = time.monotonic() - t0
        total += dt
        print(f"{item.name:35s} {item.status:7s} {dt:7.2f}s  {item.detail}")
        if item.status == "FAIL" or (item.status == "UNKNOWN" and worst == "PASS"):
            worst = item.status
    print(f"{'VERDICT':35s} {worst:7s} {total:7.2f}s")


if __name__ == "__main__":
    main()
