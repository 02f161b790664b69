#!/usr/bin/env python3
"""Run the whole identity registry and print a summary table.

Usage: python scripts/run_identity_suite.py [report.json] [max_n]

With a file argument the JSON report is also written there; an integer
second argument clamps every index grid (handy for a quick pass).
"""

import json
import sys
import time

from delannoy_jacobi.identities import SuiteConfig, run_all


def main() -> int:
    out_path = sys.argv[1] if len(sys.argv) > 1 else None
    max_n = int(sys.argv[2]) if len(sys.argv) > 2 else None
    config = SuiteConfig(max_n=max_n)

    start = time.perf_counter()
    reports = run_all(config)
    elapsed = time.perf_counter() - start

    for report in reports:
        print(f"{report.status.upper():4s} {report.id:26s} "
              f"cases={report.cases_run:<6d} {report.millis:5d}ms")
        if report.counterexample is not None:
            print(f"     counterexample: {report.counterexample}")
        if report.notes:
            print(f"     note: {report.notes}")

    failed = [r.id for r in reports if r.status == "fail"]
    print(f"\n{len(reports)} identities in {elapsed:.2f}s: "
          f"{len(reports) - len(failed)} passed, {len(failed)} failed")
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            json.dump([r.to_dict() for r in reports], handle, indent=2)
            handle.write("\n")
        print(f"report written to {out_path}")
    return 3 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
