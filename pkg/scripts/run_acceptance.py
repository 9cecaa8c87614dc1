"""Run the acceptance criteria and print one line per criterion."""
from __future__ import annotations

import argparse
import importlib.util
import json
import sys
import time
from pathlib import Path

from walled_brauer.config import AcceptanceConfig

SUITE = Path(__file__).resolve().parents[1] / "tests" / "test_acceptance.py"


def load_criteria():
    spec = importlib.util.spec_from_file_location("acceptance_suite", SUITE)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module.CRITERIA


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--only", type=int, nargs="+", help="criterion numbers")
    ap.add_argument("--json", action="store_true", help="print a JSON summary instead of text")
    args = ap.parse_args()
    cfg = AcceptanceConfig(tuple(args.only)) if args.only else AcceptanceConfig()
    criteria = load_criteria()
    results = {}
    for number in cfg.criteria:
        start = time.perf_counter()
        ok, _ = criteria[number]()
        results[number] = {"pass": bool(ok), "seconds": round(time.perf_counter() - start, 2)}
        if not args.json:
            print(f"criterion {number}: {'PASS' if ok else 'FAIL'} ({results[number]['seconds']}s)")
    if args.json:
        print(json.dumps(results, separators=(",", ":")))
    return 0 if all(v["pass"] for v in results.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
