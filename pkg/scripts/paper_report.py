#!/usr/bin/env python3
"""Run the full verification registry and print a compact table.

Usage: python3 scripts/paper_report.py [--seed N] [--json out.json] [--only PREFIX]
"""

import argparse
import json
import sys

from nilrig.liealg import DEFAULT_SEED
from nilrig.report import run_claims


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--json", default=None)
    ap.add_argument("--only", default=None)
    args = ap.parse_args()

    doc = run_claims(seed=args.seed, only=args.only)
    width = max(len(r["id"]) for r in doc["claims"])
    for r in doc["claims"]:
        mark = "PASS" if r["pass"] else "FAIL"
        line = f"{r['id']:<{width}}  {mark}  {r['computed']}"
        if not r["pass"]:
            line += f"   [recorded target: {r['expected']}]"
        print(line)
    s = doc["summary"]
    print(f"\n{s['passed']}/{s['total']} claims match their recorded targets "
          f"(seed {doc['seed']})")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1, default=str)
            fh.write("\n")
        print(f"wrote {args.json}")
    return 0 if s["failed"] == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
