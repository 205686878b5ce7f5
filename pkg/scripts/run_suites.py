"""Run every property suite over the standard population and write a JSON report.

Exhaustive for A1-A5, B2-B4, C2-C4, D4-D5, F4, G2, E6; seeded samples for E7, E8.

Usage: python3 scripts/run_suites.py [--samples 1000] [--seed 0] [--workers 4] [--out report.json]
"""
from __future__ import annotations

import argparse
import json
import sys

from invlift.verify import SuiteConfig, run_suite

TYPES = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "F4", "G2", "E6", "E7", "E8"]


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--suites", default="r,b,tits,frobenius")
    ap.add_argument("--types", default=",".join(TYPES))
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--prime", type=int, default=3)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    cfg = SuiteConfig(samples=args.samples, seed=args.seed, prime=args.prime, workers=args.workers)
    reports = []
    for suite in args.suites.split(","):
        for label in args.types.split(","):
            rep = run_suite(suite, label, cfg)
            print(rep.summary(), flush=True)
            reports.append(rep.to_dict())
    if args.out:
        with open(args.out, "w") as fh:
            json.dump({"config": vars(args), "reports": reports}, fh, indent=1)
    return 0 if all(r["ok"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
